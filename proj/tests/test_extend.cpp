#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crf/extension.hpp"
#include "crf/parser.hpp"

using namespace crf;

namespace {

const VariableList kXY{"x", "y"};
const VariableList kXYZ{"x", "y", "z"};

Polynomial P(const std::string& text, const VariableList& vars = kXYZ) { return parse_polynomial(text, vars); }

SubvarietyData z_axis(const std::vector<Rational>& zs) {
    SubvarietyData data;
    data.ambient = kXYZ;
    data.defining_eqs = {P("x"), P("y")};
    data.local_fractions = {{P("1"), P("1 + z^2")}};
    for (const auto& z : zs) data.z_points.push_back({Rational(0), Rational(0), z});
    return data;
}

} // namespace

TEST_CASE("G_r tower for t^2 + 1") {
    Polynomial g = P("t^2 + 1", {"t"});
    GrBasis b3 = build_gr(g, 3);
    const VariableList x{"x1", "x2", "x3"};
    CHECK(b3.G == P("x1^4 + 2*x1^2*x2^2 + x2^4 + x3^2", x));
    REQUIRE(b3.parts.size() == 3);
    CHECK(b3.parts[0] == P("x1^3 + 2*x1*x2^2", x));
    CHECK(b3.parts[1] == P("x2^3", x));
    CHECK(b3.parts[2] == P("x3", x));
    CHECK(build_gr(g, 1).G == P("x1", {"x1"}));
    CHECK_THROWS_AS(build_gr(g, 0), MathError);
    CHECK_THROWS_AS(build_gr(P("2*t^2 + 1", {"t"}), 2), MathError);
}

TEST_CASE("G_r decomposition identity and no nonzero rational zeros") {
    std::mt19937_64 rng(13);
    for (const FieldSpec& field : {FieldSpec::real(), FieldSpec::padic(5)}) {
        for (unsigned r = 1; r <= 5; ++r) {
            GrBasis b = build_gr(default_root_free(field), r);
            Polynomial sum(b.variables);
            for (unsigned i = 0; i < r; ++i) sum += b.parts[i] * Polynomial::variable(b.variables[i], b.variables);
            CHECK(sum == b.G);
            for (int k = 0; k < 50; ++k) {
                auto pt = random_rational_point(rng, r, 30);
                bool origin = std::all_of(pt.begin(), pt.end(), [](const Rational& q) { return q.is_zero(); });
                CHECK(b.G.evaluate(pt).is_zero() == origin);
            }
        }
    }
}

TEST_CASE("default root-free polynomials") {
    CHECK(default_root_free(FieldSpec::real()) == P("t^2 + 1", {"t"}));
    CHECK(default_root_free(FieldSpec::padic(5)) == P("t^2 - 5", {"t"}));
    CHECK(homogenize(default_root_free(FieldSpec::padic(5)), "x1", "x2") == P("x1^2 - 5*x2^2", {"x1", "x2"}));
}

TEST_CASE("regular extension from the z-axis, real") {
    RegularExtension ext = extend_regular(z_axis({Rational(0), Rational(2), Rational(-1, 3)}), P("t^2 + 1", {"t"}));
    RationalFunction on_axis = compose(ext.F,
                                       std::vector<RationalFunction>{Polynomial({"z"}), Polynomial({"z"}),
                                                                     Polynomial::variable("z", {"z"})},
                                       {"z"});
    CHECK(on_axis == rf_make(P("1", {"z"}), P("1 + z^2", {"z"})));
    CHECK(ext.generators.size() == 3);
}

TEST_CASE("regular extension from the z-axis, 5-adic") {
    RegularExtensionOptions opts{FieldSpec::padic(5), 0, 200};
    RegularExtension ext = extend_regular(z_axis({Rational(0), Rational(5)}), P("t^2 - 5", {"t"}), opts);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        PadicNumber z = random_padic(5, 24, rng, -2, 4);
        std::vector<PadicNumber> pt{PadicNumber(5), PadicNumber(5), z};
        auto v = ext.F.evaluate(pt, 5, 24);
        REQUIRE(v.defined());
        PadicNumber one = PadicNumber::from_rational(Rational(1), 5, 24);
        CHECK(v.value->agrees_with(one / (one + z * z)));
    }
}

TEST_CASE("regular extension errors") {
    SubvarietyData bad = z_axis({Rational(0)});
    bad.local_fractions.push_back({P("2"), P("1 + z^2")});
    try {
        extend_regular(bad, P("t^2 + 1", {"t"}));
        FAIL("expected inconsistent fractions");
    } catch (const MathError& e) {
        CHECK(e.code() == ErrorCode::InconsistentFractions);
    }

    SubvarietyData common = z_axis({Rational(0)});
    common.local_fractions = {{P("1"), P("z")}};
    try {
        extend_regular(common, P("t^2 + 1", {"t"}));
        FAIL("expected common zero");
    } catch (const MathError& e) {
        CHECK(e.code() == ErrorCode::CommonZero);
    }

    CHECK_THROWS_AS(extend_regular(z_axis({}), P("t^2 - 1", {"t"})), MathError);
    CHECK_THROWS_AS(extend_regular(z_axis({}), P("t^2 + 1", {"t"}), {FieldSpec::padic(5), 0, 10}), MathError);
    SubvarietyData off = z_axis({});
    off.z_points.push_back({Rational(1), Rational(0), Rational(0)});
    CHECK_THROWS_AS(extend_regular(off, P("t^2 + 1", {"t"})), MathError);
}

TEST_CASE("sum of squares denominator") {
    CHECK(sum_of_squares_denominator({P("x", kXY), P("x^2 - y^3", kXY)}) == P("x^2 + (x^2 - y^3)^2", kXY));
    CHECK_THROWS_AS(sum_of_squares_denominator({}), MathError);
}

TEST_CASE("continuous extension family for the cusp") {
    ExtensionProblem prob{P("y^2", kXY), P("x", kXY), P("x^2 - y^3", kXY)};
    ExtensionResult f2 = extend_continuous(prob, 1);
    CHECK(f2.F == parse_expression("(y^2*x/(x^2+(x^2-y^3)^2)) * (x^2/(x^2+(x^2-y^3)^2))", kXY));
    ExtensionResult f4 = extend_continuous(prob, 2, {{"parabola", parse_curve("(t^2, t)")}});
    REQUIRE(f4.diagnostics.size() == 1);
    CHECK(f4.diagnostics[0].limit->is_finite(Rational(0)));
    CHECK(restrict_to_curve(f4.F, parse_curve("(t^3, t^2)")) == parse_expression("t", {"t"}));

    for (unsigned n = 1; n <= 4; ++n) {
        RationalFunction F = extend_continuous(prob, n).F;
        CHECK(restriction_identity_holds(prob, F, parse_curve("((t + 1)^3, (t + 1)^2)")));
    }
    CHECK_THROWS_AS(restriction_identity_holds(prob, f4.F, parse_curve("(t, t)")), MathError);
    CHECK_THROWS_AS(extend_continuous(prob, 0), MathError);
    try {
        extend_continuous({P("x", kXY), P("0", kXY), P("0", kXY)}, 1);
        FAIL("expected degenerate denominator");
    } catch (const MathError& e) {
        CHECK(e.code() == ErrorCode::DegenerateDenominator);
    }
}
