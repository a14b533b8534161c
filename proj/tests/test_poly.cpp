#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crf/parser.hpp"
#include "crf/polynomial.hpp"
#include "generators.hpp"

using namespace crf;
using crf::testing::random_nonconstant;
using crf::testing::random_polynomial;

namespace {

const VariableList kXY{"x", "y"};
const VariableList kXYZ{"x", "y", "z"};

Polynomial P(const std::string& text, const VariableList& vars = kXYZ) { return parse_polynomial(text, vars); }

} // namespace

TEST_CASE("canonical form and printing") {
    Polynomial f = P("(x^2 + y^2)^2", kXY);
    CHECK(f.to_string() == "x^4 + 2*x^2*y^2 + y^4");
    CHECK(P("y - x", kXY).to_string() == "-x + y");
    CHECK(P("x/2 - 3", kXY).to_string() == "1/2*x - 3");
    CHECK(P("x - x", kXY).is_zero());
    CHECK(P("0", kXY).to_string() == "0");
    CHECK(f.total_degree() == 4);
    CHECK(f.leading_monomial() == Monomial{4, 0});
    CHECK(P("x*y^2 + x^3", kXY).leading_monomial() == Monomial{3, 0});
}

TEST_CASE("arithmetic aligns variable lists") {
    Polynomial x = Polynomial::variable("x");
    Polynomial y = Polynomial::variable("y");
    Polynomial s = x + y;
    CHECK(s.variables() == VariableList{"x", "y"});
    CHECK((s * s - x * x - y * y) == Rational(2) * x * y);
    CHECK(P("x", kXY) == P("x", kXYZ));
    CHECK(P("x + z").with_variables({"z", "x"}).variables() == VariableList{"z", "x"});
    CHECK_THROWS_AS(P("x + z").with_variables({"x"}), MathError);
}

TEST_CASE("substitution") {
    Polynomial cusp = P("x^2 - y^3", kXY);
    const VariableList t{"t"};
    Polynomial tt = Polynomial::variable("t", t);
    CHECK(cusp.substitute({{"x", tt.pow(3)}, {"y", tt.pow(2)}}).is_zero());

    const VariableList uv{"u", "v"};
    Polynomial u = Polynomial::variable("u", uv), v = Polynomial::variable("v", uv);
    Polynomial f = P("x^2 + (x^2 - y^3)^2", kXY);
    Polynomial composite = f.substitute({{"x", u.pow(3)}, {"y", u.pow(2) * v}});
    Polynomial expected = u.pow(6) * (Polynomial::constant(Rational(1), uv) +
                                      u.pow(6) * (Polynomial::constant(Rational(1), uv) - v.pow(3)).pow(2));
    CHECK(composite == expected);

    // Unassigned variables stay.
    CHECK(P("x + y", kXY).substitute({{"x", tt}}) == tt + Polynomial::variable("y"));
}

TEST_CASE("evaluation") {
    Polynomial f = P("x^2 + 1", {"x"});
    std::vector<Rational> at2{Rational(2)};
    CHECK(f.evaluate(at2) == Rational(5));
    std::vector<PadicNumber> p2{PadicNumber::from_rational(Rational(2), 5, 10)};
    PadicNumber v = f.evaluate(p2, 5, 10);
    CHECK(v.valuation() == 1);
    CHECK(v.unit() == 1);
    std::vector<double> d{0.5};
    CHECK(f.evaluate(d) == doctest::Approx(1.25));
    std::vector<Rational> wrong{Rational(1), Rational(2)};
    CHECK_THROWS_AS(f.evaluate(wrong), MathError);
}

TEST_CASE("gcd on small cases") {
    CHECK(poly_gcd(P("x^2 + y^2", kXY), P("x", kXY)) == P("1", kXY));
    CHECK(poly_gcd(P("x^2 - y^2", kXY), P("x^2 + 2*x*y + y^2", kXY)) == P("x + y", kXY));
    CHECK(poly_gcd(P("6*x^2*y"), P("4*x*y^3")) == P("x*y"));
    CHECK(poly_gcd(P("0"), P("-2*x + 4")) == P("x - 2"));
    CHECK_THROWS_AS(poly_gcd(P("0"), P("0")), MathError);
    CHECK(normalize_primitive(P("-x/2 + y/3")) == P("3*x - 2*y"));
    CHECK(primitive_scale(P("-x/2 + y/3")) == Rational(-1, 6));
}

TEST_CASE("gcd recovers planted common factors") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
        const VariableList& vars = i % 2 ? kXY : kXYZ;
        Polynomial g = random_nonconstant(rng, vars, 2, 3);
        Polynomial a = random_nonconstant(rng, vars, 2, 3);
        Polynomial b = random_nonconstant(rng, vars, 2, 3);
        Polynomial A = a * g, B = b * g;
        Polynomial d = poly_gcd(A, B);
        // Multiplication is the oracle: d must divide A and B, and g must divide d.
        auto qa = divide_exact(A, d), qb = divide_exact(B, d), qg = divide_exact(d, g);
        REQUIRE(qa);
        REQUIRE(qb);
        REQUIRE(qg);
        CHECK(*qa * d == A);
        CHECK(*qb * d == B);
        CHECK(*qg * g == d);
        CHECK(d == normalize_primitive(d));
    }
}

TEST_CASE("homogenization") {
    Polynomial g = P("t^2 + 1", {"t"});
    CHECK(homogenize(g, "x1", "x2").to_string() == "x1^2 + x2^2");
    CHECK(homogenize(P("t^2 - 5", {"t"}), "x1", "x2").to_string() == "x1^2 - 5*x2^2");
    CHECK(homogenize(P("t^3 - 2*t + 7", {"t"}), "a", "b").to_string() == "a^3 - 2*a*b^2 + 7*b^3");
    CHECK_THROWS_AS(homogenize(P("2*t^2 + 1", {"t"}), "a", "b"), MathError);
    CHECK_THROWS_AS(homogenize(P("t + 1", {"t"}), "a", "b"), MathError);
}

TEST_CASE("parser round-trips printed polynomials") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        VariableList vars(kXYZ.begin(), kXYZ.begin() + 1 + i % 3);
        Polynomial p = random_polynomial(rng, vars, 8, 6);
        CHECK(parse_polynomial(p.to_string(), vars) == p);
    }
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_expression("x + w", kXY), ParseError);
    CHECK_THROWS_AS(parse_expression("x +", kXY), ParseError);
    CHECK_THROWS_AS(parse_expression("x^-1", kXY), ParseError);
    CHECK_THROWS_AS(parse_expression("1/(x - x)", kXY), MathError);
    CHECK_THROWS_AS(parse_polynomial("1/x", kXY), MathError);
    try {
        parse_expression("x + $", kXY);
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK(parse_variable_list("x, y ,z") == kXYZ);
    CHECK(parse_point("3, -1/2, 0") == std::vector<Rational>{Rational(3), Rational(-1, 2), Rational(0)});
    CHECK(split_top_level("(a,b), c", ',') == std::vector<std::string>{"(a,b)", "c"});
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(500);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = random_polynomial(rng, kXYZ, 4, 4);
        Polynomial g = random_polynomial(rng, kXYZ, 4, 4);
        auto pt = random_rational_point(rng, 3, 10);
        CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
        auto pp = random_padic_point(rng, 3, 5, 20, 0, 3);
        CHECK((f * g).evaluate(pp, 5, 20).agrees_with(f.evaluate(pp, 5, 20) * g.evaluate(pp, 5, 20)));
    }
}
