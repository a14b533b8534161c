#include "crf/rational.hpp"

#include <cctype>

namespace crf {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::PrimeMismatch: return "prime_mismatch";
    case ErrorCode::InsufficientPrecision: return "insufficient_precision";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::CurveInPoleLocus: return "curve_in_pole_locus";
    case ErrorCode::RestrictionUndefined: return "restriction_undefined";
    case ErrorCode::InconsistentFractions: return "inconsistent_fractions";
    case ErrorCode::CommonZero: return "common_zero";
    case ErrorCode::DegenerateDenominator: return "degenerate_denominator";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::ParseError: return "parse_error";
    }
    return "unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw MathError(ErrorCode::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw MathError(ErrorCode::InvalidArgument, "not a rational literal: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    return Rational(mpz_class(num, 10), mpz_class(den, 10));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw MathError(ErrorCode::DivisionByZero, "rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    throw MathError(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

} // namespace crf
