#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crf/curve.hpp"
#include "crf/parser.hpp"
#include "generators.hpp"

using namespace crf;

namespace {

const VariableList kXY{"x", "y"};
const VariableList kXYZ{"x", "y", "z"};

RationalFunction R(const std::string& text, const VariableList& vars = kXY) { return parse_expression(text, vars); }

template <class T>
EvalStatus<T> at(const RationalFunction& f, std::vector<T> point) {
    return rf_eval(f, std::span<const T>(point));
}

} // namespace

TEST_CASE("reduction and normal form") {
    CHECK(R("x/(x)") == R("1"));
    RationalFunction f = R("x^3/(x^2+y^2)");
    CHECK(f.num().to_string() == "x^3");
    CHECK(f.den().to_string() == "x^2 + y^2");
    CHECK(f.to_string() == "x^3 / (x^2 + y^2)");
    CHECK(R("(x^2 - y^2)/(2*x + 2*y)") == R("x/2 - y/2"));
    CHECK(R("1/(-2*x)").den().to_string() == "x");
    CHECK(R("1/(-2*x)").num().to_string() == "-1/2");
    CHECK_THROWS_AS(rf_make(Polynomial::variable("x"), Polynomial(kXY)), MathError);
}

TEST_CASE("field operations") {
    RationalFunction a = R("1/x"), b = R("1/y");
    CHECK(a + b == R("(x + y)/(x*y)"));
    CHECK(a * b / a == b);
    CHECK((a - a).is_zero());
    CHECK(R("x/y").pow(3) == R("x^3/y^3"));
    CHECK_THROWS_AS(a / R("0"), MathError);
}

TEST_CASE("evaluation statuses") {
    RationalFunction f = R("x^3/(x^2+y^2)");
    CHECK(at<Rational>(f, {Rational(0), Rational(0)}).kind == EvalStatus<Rational>::Kind::IndeterminateZeroOverZero);
    auto v = at<Rational>(f, {Rational(1), Rational(1)});
    REQUIRE(v.defined());
    CHECK(*v.value == Rational(1, 2));
    CHECK(at<Rational>(R("1/x", {"x"}), {Rational(0)}).kind == EvalStatus<Rational>::Kind::Pole);
    auto d = at<double>(f, {1.0, 1.0});
    REQUIRE(d.defined());
    CHECK(*d.value == doctest::Approx(0.5));
    std::vector<PadicNumber> p{PadicNumber::from_rational(Rational(1), 5, 10),
                               PadicNumber::from_rational(Rational(2), 5, 10)};
    auto pv = f.evaluate(p, 5, 10);
    REQUIRE(pv.defined());
    CHECK(pv.value->agrees_with(PadicNumber::from_rational(Rational(1, 5), 5, 10)));
}

TEST_CASE("restriction to curves and exact limits") {
    Curve cusp = parse_curve("(t^3, t^2)");
    CHECK(restrict_to_curve(R("y^2/x"), cusp) == R("t", {"t"}));

    RationalFunction f4 = R("(y^2*x/(x^2+(x^2-y^3)^2)) * (x^4/(x^4+(x^2-y^3)^2))");
    CHECK(restrict_to_curve(f4, cusp) == R("t", {"t"}));
    RationalFunction f2 = R("(y^2*x/(x^2+(x^2-y^3)^2)) * (x^2/(x^2+(x^2-y^3)^2))");
    Curve parabola = parse_curve("(t^2, t)");
    CHECK(limit_along(f2, parabola, "p").limit == LimitResult{LimitResult::Kind::Finite, Rational(1), 0});
    CHECK(limit_along(f4, parabola, "p").limit->is_finite(Rational(0)));

    CurveLimit pole = limit_along(R("1/x"), parse_curve("(0, t)"), "y-axis");
    CHECK_FALSE(pole.limit);
    CHECK(pole.error.find("pole locus") != std::string::npos);

    const VariableList t{"t"};
    CHECK(limit_at_zero(R("1/t", t)).kind == LimitResult::Kind::Infinite);
    CHECK(limit_at_zero(R("-1/t^2", t)) == LimitResult{LimitResult::Kind::SignedInfinite, Rational(0), -1});
    CHECK(limit_at_zero(R("1/t^2", t), LimitMode::Padic).kind == LimitResult::Kind::Infinite);
    CHECK(limit_at_zero(R("(3*t + t^2)/(2*t - t^3)", t)).is_finite(Rational(3, 2)));
}

TEST_CASE("successive restriction depends on the order") {
    RationalFunction f = R("x^2*z/(x^2+y^2)", kXYZ);
    CHECK(successive_restriction(f, {"x", "y"}) == R("0", kXYZ));
    CHECK(successive_restriction(f, {"y", "x"}) == R("z", kXYZ));
    try {
        successive_restriction(R("x/y", kXYZ), {"y"});
        FAIL("expected restriction error");
    } catch (const MathError& e) {
        CHECK(e.code() == ErrorCode::RestrictionUndefined);
    }
    CHECK(successive_restriction(R("(x*y + x^2)/(x*y + x)", kXYZ), {"x"}) == R("y/(y+1)", kXYZ));
}

TEST_CASE("composition matches pointwise evaluation") {
    std::mt19937_64 rng(21);
    const VariableList uv{"u", "v"};
    for (int i = 0; i < 50; ++i) {
        Polynomial p = crf::testing::random_polynomial(rng, kXY, 4, 4);
        Polynomial q = crf::testing::random_nonconstant(rng, kXY, 3, 3);
        RationalFunction f = rf_make(p, q);
        std::vector<RationalFunction> images{
            rf_make(crf::testing::random_polynomial(rng, uv, 2, 3), crf::testing::random_nonconstant(rng, uv, 1, 2)),
            RationalFunction(crf::testing::random_polynomial(rng, uv, 2, 3))};
        RationalFunction g;
        try {
            g = compose(f, images, uv);
        } catch (const MathError&) {
            continue;
        }
        auto pt = random_rational_point(rng, 2, 20);
        std::vector<Rational> inner;
        bool ok = true;
        for (const auto& img : images) {
            auto s = img.evaluate(pt);
            if (!s.defined()) ok = false;
            else inner.push_back(*s.value);
        }
        if (!ok) continue;
        auto lhs = g.evaluate(pt);
        auto rhs = f.evaluate(inner);
        if (lhs.defined() && rhs.defined()) CHECK(*lhs.value == *rhs.value);
    }
}

TEST_CASE("exact limits agree with float evaluation along the curve") {
    RationalFunction f = R("x^3/(x^2+y^2) + 2*x*y/(x^2+y^2+x)");
    for (const char* c : {"(t, t)", "(2*t, -t)", "(t^2, t)", "(t, t^3)"}) {
        Curve curve = parse_curve(c);
        auto lim = limit_along(f, curve, c).limit;
        REQUIRE(lim);
        REQUIRE(lim->is_finite());
        const double v = lim->value.to_double();
        double previous = INFINITY;
        for (int k = 2; k <= 6; ++k) {
            auto x = curve.at(std::pow(10.0, -k));
            auto s = f.evaluate(std::span<const double>(x));
            REQUIRE(s.defined());
            double err = std::fabs(*s.value - v);
            if (k >= 3) CHECK(err <= previous + 1e-15);
            previous = err;
        }
        CHECK(previous < 1e-4);
    }
}
