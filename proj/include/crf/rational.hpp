#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "crf/error.hpp"

namespace crf {

/// Exact rational number, always kept in canonical form
/// (gcd(|num|, den) = 1, den > 0, zero is 0/1).
class Rational {
  public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(value) {}
    Rational(const mpz_class& value) : q_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "a", "-a" or "a/b" in base 10.
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational abs() const;
    Rational inverse() const;
    Rational pow(long exponent) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    double to_double() const { return q_.get_d(); }
    std::string to_string() const;

    const mpq_class& raw() const { return q_; }

  private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithOp { Add, Sub, Mul, Div };

/// Field operation dispatch; throws MathError(DivisionByZero) for x / 0.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

} // namespace crf
