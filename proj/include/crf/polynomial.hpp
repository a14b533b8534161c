#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crf/padic.hpp"
#include "crf/rational.hpp"

namespace crf {

/// Exponent vector, positional against the owning polynomial's variable list.
using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order: total degree first, then lexicographic with the
/// first variable most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using VariableList = std::vector<std::string>;

/// Ordered union: the variables of `a` followed by the new ones from `b`.
VariableList merge_variables(const VariableList& a, const VariableList& b);

/// Sparse multivariate polynomial over Q.
///
/// Terms live in a map keyed by exponent vectors in graded-lex order and no
/// stored coefficient is zero, so the representation is canonical for a given
/// variable list. Equality compares values, aligning variable lists first.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(VariableList variables);

    static Polynomial constant(const Rational& c, VariableList variables = {});
    static Polynomial variable(const std::string& name, VariableList variables = {});
    static Polynomial from_terms(VariableList variables,
                                 const std::vector<std::pair<Monomial, Rational>>& terms);

    const VariableList& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    unsigned total_degree() const;

    std::optional<std::size_t> index_of(const std::string& name) const;
    unsigned degree_in(std::size_t var) const;
    unsigned degree_in(const std::string& name) const;
    /// Smallest exponent of the variable over all terms (0 for the zero polynomial).
    unsigned order_in(std::size_t var) const;
    bool uses(std::size_t var) const { return degree_in(var) > 0; }
    VariableList used_variables() const;

    /// Leading term in graded-lex order. Requires a nonzero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    /// Same polynomial over another variable list; every used variable must be
    /// present in `target`.
    Polynomial with_variables(const VariableList& target) const;

    /// Coefficients with respect to one variable: f = sum_k c_k * var^k.
    /// Each c_k keeps this polynomial's variable list.
    std::map<unsigned, Polynomial> coefficients_in(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    Polynomial pow(unsigned exponent) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Composition f(sigma(x)). Unassigned variables are left in place.
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment) const;

    /// Specializes one variable to a rational value; the variable stays in the
    /// variable list but no longer occurs.
    Polynomial set_variable(std::size_t var, const Rational& value) const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;
    /// p-adic evaluation; `prime` and `precision` fix the ring of the
    /// coefficients when the point is empty.
    PadicNumber evaluate(std::span<const PadicNumber> point, long prime,
                         int precision = PadicNumber::kDefaultPrecision) const;

    /// Generic evaluation in any ring T; `lift` maps a rational coefficient into T.
    template <class T, class Lift>
    T evaluate_with(std::span<const T> point, Lift lift) const;

    /// Canonical text form, e.g. "x^4 + 2*x^2*y^2 + y^4".
    std::string to_string() const;

  private:
    void add_term(const Monomial& m, const Rational& c);

    VariableList variables_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

/// Pair of polynomials rewritten over the merged variable list.
std::pair<Polynomial, Polynomial> align(const Polynomial& a, const Polynomial& b);

/// Scales by a nonzero rational so that coefficients are coprime integers and
/// the graded-lex leading coefficient is positive. Zero maps to zero.
Polynomial normalize_primitive(const Polynomial& p);

/// The rational c with p = c * normalize_primitive(p). Requires p nonzero.
Rational primitive_scale(const Polynomial& p);

/// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalized by normalize_primitive. Computed by a
/// primitive pseudo-remainder sequence in the last occurring variable, with
/// contents handled recursively over the remaining variables.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Binary form x1^d + a1 x1^(d-1) x2 + ... + ad x2^d of a monic univariate g
/// of degree d > 1.
Polynomial homogenize(const Polynomial& g, const std::string& x1, const std::string& x2);

template <class T, class Lift>
T Polynomial::evaluate_with(std::span<const T> point, Lift lift) const {
    if (point.size() != variables_.size())
        throw MathError(ErrorCode::InvalidArgument,
                        "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                            std::to_string(variables_.size()) + " variables");
    // powers[i][k] = point[i]^k, filled lazily up to the degree in variable i.
    std::vector<std::vector<T>> powers(variables_.size());
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        unsigned d = degree_in(i);
        if (d == 0) continue;
        powers[i].reserve(d + 1);
        powers[i].push_back(point[i]);
        for (unsigned k = 1; k < d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    std::optional<T> total;
    for (const auto& [m, c] : terms_) {
        T term = lift(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * powers[i][m[i] - 1];
        total = total ? *total + term : term;
    }
    return total ? *total : lift(Rational(0));
}

} // namespace crf
