#pragma once

#include <gmpxx.h>

#include <limits>
#include <random>
#include <string>

#include "crf/rational.hpp"

namespace crf {

/// Element of Q_p with fixed relative precision.
///
/// A nonzero value is p^valuation * unit, where the unit is an integer in
/// [1, p^precision) coprime to p and known modulo p^precision. The value is
/// therefore known modulo p^(valuation + precision), its absolute precision.
///
/// Zero carries only an absolute precision: "0 mod p^k". Exact zero (from an
/// exact rational 0) has absolute precision kInfinity and valuation kInfinity.
/// A zero produced by cancellation has valuation kInfinity but a finite
/// absolute precision, which keeps later additions sound.
class PadicNumber {
  public:
    static constexpr long kInfinity = std::numeric_limits<long>::max();
    static constexpr int kDefaultPrecision = 24;

    /// Exact zero in Q_p.
    explicit PadicNumber(long prime);

    static PadicNumber from_rational(const Rational& value, long prime,
                                     int precision = kDefaultPrecision);
    static PadicNumber from_parts(long prime, long valuation, const mpz_class& unit, int precision);
    static PadicNumber zero(long prime, long absolute_precision = kInfinity);

    long prime() const { return prime_; }
    long valuation() const { return is_zero() ? kInfinity : valuation_; }
    const mpz_class& unit() const { return unit_; }
    /// Number of significant base-p digits; 0 for zero.
    int precision() const { return precision_; }
    long absolute_precision() const;

    bool is_zero() const { return unit_ == 0; }
    bool is_exact_zero() const { return is_zero() && zero_absolute_ == kInfinity; }

    PadicNumber operator-() const;
    PadicNumber& operator+=(const PadicNumber& rhs) { return *this = *this + rhs; }
    PadicNumber& operator-=(const PadicNumber& rhs) { return *this = *this - rhs; }
    PadicNumber& operator*=(const PadicNumber& rhs) { return *this = *this * rhs; }
    PadicNumber& operator/=(const PadicNumber& rhs) { return *this = *this / rhs; }

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    PadicNumber pow(unsigned long exponent) const;

    /// |x|_p = p^(-valuation), and 0 for zero.
    Rational abs() const;

    /// Whether the value is a square in Q_p. Decided by valuation parity and
    /// the residue of the unit (Euler criterion for odd p, unit = 1 mod 8 for
    /// p = 2). Throws InsufficientPrecision when the unit digits do not
    /// determine the answer.
    bool is_square() const;

    /// The rational p^valuation * unit that this value is stored as.
    Rational representative() const;

    /// True when the difference is zero to the smaller absolute precision.
    bool agrees_with(const PadicNumber& other) const;

    /// "p^v * u mod p^N"; zero prints as "0" or "0 mod p^k".
    std::string to_string() const;

    friend bool operator==(const PadicNumber& a, const PadicNumber& b) = default;

  private:
    PadicNumber(long prime, long valuation, mpz_class unit, int precision, long zero_absolute);

    long prime_;
    long valuation_ = 0;
    mpz_class unit_ = 0;
    int precision_ = 0;
    long zero_absolute_ = kInfinity;
};

/// Throws PrimeMismatch unless both operands live in the same Q_p.
void require_same_prime(const PadicNumber& a, const PadicNumber& b);

PadicNumber padic_arith(const PadicNumber& a, const PadicNumber& b, ArithOp op);

/// p-adic valuation of a nonzero integer.
long valuation_of(const mpz_class& value, long prime);

bool is_prime(long n);

/// Random element p^v * u with v uniform in [min_valuation, max_valuation]
/// and u a uniformly random unit mod p^precision.
PadicNumber random_padic(long prime, int precision, std::mt19937_64& rng,
                         long min_valuation = 0, long max_valuation = 0);

} // namespace crf
