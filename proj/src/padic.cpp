#include "crf/padic.hpp"

#include <algorithm>
#include <sstream>

namespace crf {

namespace {

mpz_class power_of(long prime, long exponent) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(prime),
                  static_cast<unsigned long>(exponent));
    return out;
}

mpz_class mod_floor(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class inverse_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw MathError(ErrorCode::DivisionByZero, "unit not invertible modulo p^N");
    return inv;
}

long add_saturating(long a, long b) {
    if (a == PadicNumber::kInfinity || b == PadicNumber::kInfinity) return PadicNumber::kInfinity;
    return a + b;
}

} // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long valuation_of(const mpz_class& value, long prime) {
    if (value == 0) return PadicNumber::kInfinity;
    mpz_class p = prime;
    mpz_class rest = value;
    long v = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

PadicNumber::PadicNumber(long prime) : prime_(prime) {
    if (!is_prime(prime))
        throw MathError(ErrorCode::InvalidArgument, "p-adic prime must be prime, got " + std::to_string(prime));
}

PadicNumber::PadicNumber(long prime, long valuation, mpz_class unit, int precision, long zero_absolute)
    : prime_(prime), valuation_(valuation), unit_(std::move(unit)), precision_(precision),
      zero_absolute_(zero_absolute) {}

PadicNumber PadicNumber::zero(long prime, long absolute_precision) {
    PadicNumber z(prime);
    z.zero_absolute_ = absolute_precision;
    return z;
}

PadicNumber PadicNumber::from_parts(long prime, long valuation, const mpz_class& unit, int precision) {
    if (!is_prime(prime)) throw MathError(ErrorCode::InvalidArgument, "p-adic prime must be prime");
    if (precision < 1) throw MathError(ErrorCode::InvalidArgument, "p-adic precision must be positive");
    mpz_class u = mod_floor(unit, power_of(prime, precision));
    mpz_class p = prime;
    if (u == 0 || mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t()))
        throw MathError(ErrorCode::InvalidArgument, "p-adic unit digits must be coprime to p");
    return PadicNumber(prime, valuation, u, precision, kInfinity);
}

PadicNumber PadicNumber::from_rational(const Rational& value, long prime, int precision) {
    if (!is_prime(prime)) throw MathError(ErrorCode::InvalidArgument, "p-adic prime must be prime");
    if (precision < 1) throw MathError(ErrorCode::InvalidArgument, "p-adic precision must be positive");
    if (value.is_zero()) return PadicNumber(prime);
    mpz_class num = value.numerator();
    mpz_class den = value.denominator();
    long vn = valuation_of(num, prime);
    long vd = valuation_of(den, prime);
    num /= power_of(prime, vn);
    den /= power_of(prime, vd);
    mpz_class modulus = power_of(prime, precision);
    mpz_class unit = mod_floor(num * inverse_mod(mod_floor(den, modulus), modulus), modulus);
    return PadicNumber(prime, vn - vd, unit, precision, kInfinity);
}

long PadicNumber::absolute_precision() const {
    if (is_zero()) return zero_absolute_;
    return valuation_ + precision_;
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero()) return *this;
    mpz_class modulus = power_of(prime_, precision_);
    return PadicNumber(prime_, valuation_, modulus - unit_, precision_, kInfinity);
}

void require_same_prime(const PadicNumber& a, const PadicNumber& b) {
    if (a.prime() != b.prime())
        throw MathError(ErrorCode::PrimeMismatch, "p-adic operands over different primes: " +
                                                      std::to_string(a.prime()) + " vs " +
                                                      std::to_string(b.prime()));
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    require_same_prime(a, b);
    const long p = a.prime_;
    const long absolute = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.is_zero() && b.is_zero()) return PadicNumber::zero(p, absolute);

    long low = PadicNumber::kInfinity;
    if (!a.is_zero()) low = std::min(low, a.valuation_);
    if (!b.is_zero()) low = std::min(low, b.valuation_);
    if (absolute <= low) return PadicNumber::zero(p, absolute);

    mpz_class sum = 0;
    if (!a.is_zero()) sum += a.unit_ * power_of(p, a.valuation_ - low);
    if (!b.is_zero()) sum += b.unit_ * power_of(p, b.valuation_ - low);
    sum = mod_floor(sum, power_of(p, absolute - low));
    if (sum == 0) return PadicNumber::zero(p, absolute);

    long shift = valuation_of(sum, p);
    sum /= power_of(p, shift);
    long valuation = low + shift;
    return PadicNumber(p, valuation, sum, static_cast<int>(absolute - valuation), PadicNumber::kInfinity);
}

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    require_same_prime(a, b);
    const long p = a.prime_;
    if (a.is_zero() || b.is_zero()) {
        if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber(p);
        long lhs = a.is_zero() ? a.zero_absolute_ : a.valuation_;
        long rhs = b.is_zero() ? b.zero_absolute_ : b.valuation_;
        return PadicNumber::zero(p, add_saturating(lhs, rhs));
    }
    int precision = std::min(a.precision_, b.precision_);
    mpz_class unit = mod_floor(a.unit_ * b.unit_, power_of(p, precision));
    return PadicNumber(p, a.valuation_ + b.valuation_, unit, precision, PadicNumber::kInfinity);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    require_same_prime(a, b);
    const long p = a.prime_;
    if (b.is_zero()) throw MathError(ErrorCode::DivisionByZero, "p-adic division by zero");
    if (a.is_zero()) {
        if (a.is_exact_zero()) return PadicNumber(p);
        return PadicNumber::zero(p, a.zero_absolute_ - b.valuation_);
    }
    int precision = std::min(a.precision_, b.precision_);
    mpz_class modulus = power_of(p, precision);
    mpz_class unit = mod_floor(a.unit_ * inverse_mod(b.unit_, modulus), modulus);
    return PadicNumber(p, a.valuation_ - b.valuation_, unit, precision, PadicNumber::kInfinity);
}

PadicNumber PadicNumber::pow(unsigned long exponent) const {
    PadicNumber result = PadicNumber::from_rational(Rational(1), prime_,
                                                    is_zero() ? kDefaultPrecision : precision_);
    PadicNumber base = *this;
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Rational PadicNumber::abs() const {
    if (is_zero()) return Rational(0);
    return Rational(prime_).pow(-valuation_);
}

bool PadicNumber::is_square() const {
    if (is_zero()) throw MathError(ErrorCode::InvalidArgument, "square test needs a nonzero p-adic number");
    if (valuation_ % 2 != 0) return false;
    if (prime_ == 2) {
        if (precision_ < 3)
            throw MathError(ErrorCode::InsufficientPrecision,
                            "2-adic square test needs at least 3 unit digits");
        mpz_class residue = mod_floor(unit_, 8);
        return residue == 1;
    }
    if (precision_ < 1)
        throw MathError(ErrorCode::InsufficientPrecision, "p-adic square test needs a unit digit");
    mpz_class p = prime_;
    mpz_class residue = mod_floor(unit_, p);
    mpz_class euler;
    mpz_powm_ui(euler.get_mpz_t(), residue.get_mpz_t(), static_cast<unsigned long>((prime_ - 1) / 2),
                p.get_mpz_t());
    return euler == 1;
}

Rational PadicNumber::representative() const {
    if (is_zero()) return Rational(0);
    return Rational(unit_) * Rational(prime_).pow(valuation_);
}

bool PadicNumber::agrees_with(const PadicNumber& other) const { return (*this - other).is_zero(); }

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (is_zero()) {
        os << "0";
        if (zero_absolute_ != kInfinity) os << " mod " << prime_ << "^" << zero_absolute_;
        return os.str();
    }
    os << prime_ << "^" << valuation_ << " * " << unit_.get_str() << " mod " << prime_ << "^" << precision_;
    return os.str();
}

PadicNumber padic_arith(const PadicNumber& a, const PadicNumber& b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    throw MathError(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

PadicNumber random_padic(long prime, int precision, std::mt19937_64& rng, long min_valuation,
                         long max_valuation) {
    std::uniform_int_distribution<long> valuation(min_valuation, max_valuation);
    // Build a uniform residue mod p^N digit by digit, forcing a nonzero first digit.
    std::uniform_int_distribution<long> digit(0, prime - 1);
    std::uniform_int_distribution<long> lead(1, prime - 1);
    mpz_class unit = lead(rng);
    mpz_class place = prime;
    for (int i = 1; i < precision; ++i) {
        unit += place * digit(rng);
        place *= prime;
    }
    long v = valuation(rng);
    return PadicNumber::from_parts(prime, v, unit, precision);
}

} // namespace crf
