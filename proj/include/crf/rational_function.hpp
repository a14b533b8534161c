#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crf/polynomial.hpp"

namespace crf {

/// Outcome of evaluating p/q at a point.
template <class T>
struct EvalStatus {
    enum class Kind { Defined, IndeterminateZeroOverZero, Pole };

    Kind kind = Kind::Defined;
    std::optional<T> value;

    bool defined() const { return kind == Kind::Defined; }

    static EvalStatus make_defined(T v) { return {Kind::Defined, std::move(v)}; }
    static EvalStatus indeterminate() { return {Kind::IndeterminateZeroOverZero, std::nullopt}; }
    static EvalStatus pole() { return {Kind::Pole, std::nullopt}; }
};

const char* to_string(EvalStatus<Rational>::Kind kind);

/// Reduced quotient num/den of polynomials over a shared variable list.
///
/// Invariants: den != 0, gcd(num, den) = 1, den has coprime integer
/// coefficients and a positive graded-lex leading coefficient. Every
/// constructor path goes through rf_make, so equal functions compare equal.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
    RationalFunction(const Polynomial& p);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VariableList& variables() const { return num_.variables(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction with_variables(const VariableList& target) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction pow(unsigned exponent) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    EvalStatus<Rational> evaluate(std::span<const Rational> point) const;
    EvalStatus<double> evaluate(std::span<const double> point) const;
    EvalStatus<PadicNumber> evaluate(std::span<const PadicNumber> point, long prime,
                                     int precision = PadicNumber::kDefaultPrecision) const;

    /// "num" when den = 1, otherwise "num / den" with parentheses around
    /// multi-term operands, e.g. "x^3 / (x^2 + y^2)".
    std::string to_string() const;

  private:
    friend RationalFunction rf_make(const Polynomial& num, const Polynomial& den);
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Builds num/den in lowest terms. Throws DivisionByZero for den = 0.
RationalFunction rf_make(const Polynomial& num, const Polynomial& den);

template <class T, class... Extra>
EvalStatus<T> rf_eval(const RationalFunction& f, std::span<const T> point, Extra... extra) {
    return f.evaluate(point, extra...);
}

/// Composite of a polynomial with rational maps x_i -> a_i / b_i, returned as
/// an unreduced pair (numerator, denominator) over `target` variables. Uses
/// one common denominator prod b_i^deg_i(p) instead of rational arithmetic.
std::pair<Polynomial, Polynomial> compose_fraction(const Polynomial& p,
                                                   std::span<const RationalFunction> images,
                                                   const VariableList& target);

/// f(images): throws CurveInPoleLocus when the composed denominator vanishes
/// identically.
RationalFunction compose(const RationalFunction& f, std::span<const RationalFunction> images,
                         const VariableList& target);

} // namespace crf
