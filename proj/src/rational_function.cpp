#include "crf/rational_function.hpp"

namespace crf {

const char* to_string(EvalStatus<Rational>::Kind kind) {
    using Kind = EvalStatus<Rational>::Kind;
    switch (kind) {
    case Kind::Defined: return "defined";
    case Kind::IndeterminateZeroOverZero: return "indeterminate_0_over_0";
    case Kind::Pole: return "pole";
    }
    return "unknown";
}

RationalFunction::RationalFunction(const Polynomial& p)
    : num_(p), den_(Polynomial::constant(Rational(1), p.variables())) {}

RationalFunction rf_make(const Polynomial& num_in, const Polynomial& den_in) {
    if (den_in.is_zero()) throw MathError(ErrorCode::DivisionByZero, "rational function with zero denominator");
    auto [num, den] = align(num_in, den_in);
    if (num.is_zero()) return RationalFunction(num, Polynomial::constant(Rational(1), den.variables()));
    if (!den.is_constant()) {
        Polynomial g = poly_gcd(num, den);
        if (!g.is_constant()) {
            num = *divide_exact(num, g);
            den = *divide_exact(den, g);
        }
    }
    Rational scale = primitive_scale(den);
    if (scale != Rational(1)) {
        Rational inv = scale.inverse();
        num *= inv;
        den *= inv;
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::with_variables(const VariableList& target) const {
    return RationalFunction(num_.with_variables(target), den_.with_variables(target));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return rf_make(a.num_ + b.num_, a.den_);
    if (a.is_polynomial() && b.is_polynomial()) return rf_make(a.num_ + b.num_, a.den_ * b.den_);
    return rf_make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return rf_make(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw MathError(ErrorCode::DivisionByZero, "division by the zero rational function");
    return rf_make(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
    // Powers of a reduced fraction stay reduced.
    return RationalFunction(num_.pow(exponent), den_.pow(exponent));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

namespace {

template <class T, class IsZero, class Divide>
EvalStatus<T> classify(const T& n, const T& d, IsZero is_zero, Divide divide) {
    if (!is_zero(d)) return EvalStatus<T>::make_defined(divide(n, d));
    if (is_zero(n)) return EvalStatus<T>::indeterminate();
    return EvalStatus<T>::pole();
}

} // namespace

EvalStatus<Rational> RationalFunction::evaluate(std::span<const Rational> point) const {
    return classify<Rational>(num_.evaluate(point), den_.evaluate(point),
                              [](const Rational& x) { return x.is_zero(); },
                              [](const Rational& x, const Rational& y) { return x / y; });
}

EvalStatus<double> RationalFunction::evaluate(std::span<const double> point) const {
    return classify<double>(num_.evaluate(point), den_.evaluate(point), [](double x) { return x == 0.0; },
                            [](double x, double y) { return x / y; });
}

EvalStatus<PadicNumber> RationalFunction::evaluate(std::span<const PadicNumber> point, long prime,
                                                   int precision) const {
    return classify<PadicNumber>(num_.evaluate(point, prime, precision), den_.evaluate(point, prime, precision),
                                 [](const PadicNumber& x) { return x.is_zero(); },
                                 [](const PadicNumber& x, const PadicNumber& y) { return x / y; });
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    auto wrap = [](const Polynomial& p) {
        return p.term_count() > 1 || p.leading_coefficient().sign() < 0 ? "(" + p.to_string() + ")"
                                                                         : p.to_string();
    };
    return wrap(num_) + " / " + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

std::pair<Polynomial, Polynomial> compose_fraction(const Polynomial& p, std::span<const RationalFunction> images,
                                                   const VariableList& target) {
    const std::size_t n = p.variables().size();
    if (images.size() != n)
        throw MathError(ErrorCode::InvalidArgument, "composition needs " + std::to_string(n) + " images, got " +
                                                        std::to_string(images.size()));
    // num_pow[i][k] = a_i^k and den_pow[i][k] = b_i^k for k <= deg_i(p).
    // Reduced denominators are primitive, so a constant b_i is exactly 1.
    std::vector<std::vector<Polynomial>> num_pow(n), den_pow(n);
    std::vector<unsigned> degree(n);
    Polynomial one = Polynomial::constant(Rational(1), target);
    Polynomial common_den = one;
    for (std::size_t i = 0; i < n; ++i) {
        degree[i] = p.degree_in(i);
        Polynomial a = images[i].num().with_variables(target);
        Polynomial b = images[i].den().with_variables(target);
        num_pow[i].push_back(one);
        den_pow[i].push_back(one);
        for (unsigned k = 0; k < degree[i]; ++k) {
            num_pow[i].push_back(num_pow[i].back() * a);
            den_pow[i].push_back(den_pow[i].back() * b);
        }
        common_den *= den_pow[i][degree[i]];
    }
    Polynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(c, target);
        for (std::size_t i = 0; i < n; ++i) {
            if (degree[i] == 0) continue;
            if (m[i] > 0) term *= num_pow[i][m[i]];
            if (!den_pow[i][degree[i] - m[i]].is_constant()) term *= den_pow[i][degree[i] - m[i]];
        }
        out += term;
    }
    return {out, common_den};
}

RationalFunction compose(const RationalFunction& f, std::span<const RationalFunction> images,
                         const VariableList& target) {
    auto [num_top, num_bottom] = compose_fraction(f.num(), images, target);
    auto [den_top, den_bottom] = compose_fraction(f.den(), images, target);
    if (den_top.is_zero())
        throw MathError(ErrorCode::CurveInPoleLocus, "composed denominator vanishes identically");
    return rf_make(num_top * den_bottom, den_top * num_bottom);
}

} // namespace crf
