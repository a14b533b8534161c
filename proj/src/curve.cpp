#include "crf/curve.hpp"

#include <limits>
#include <sstream>

namespace crf {

Curve::Curve(std::vector<RationalFunction> components, std::string parameter)
    : parameter_(std::move(parameter)) {
    const VariableList params{parameter_};
    components_.reserve(components.size());
    for (auto& c : components) {
        for (const auto& name : c.num().used_variables())
            if (name != parameter_)
                throw MathError(ErrorCode::InvalidArgument,
                                "curve component uses '" + name + "' besides the parameter " + parameter_);
        for (const auto& name : c.den().used_variables())
            if (name != parameter_)
                throw MathError(ErrorCode::InvalidArgument,
                                "curve component uses '" + name + "' besides the parameter " + parameter_);
        components_.push_back(c.with_variables(params));
    }
    const Rational origin[] = {Rational(0)};
    for (const auto& c : components_) {
        auto status = c.evaluate(std::span<const Rational>(origin));
        if (!status.defined())
            throw MathError(ErrorCode::InvalidArgument,
                            "curve component " + c.to_string() + " is not defined at " + parameter_ + " = 0");
        base_point_.push_back(*status.value);
    }
}

Curve Curve::from_polynomials(const std::vector<Polynomial>& components, std::string parameter) {
    std::vector<RationalFunction> rf(components.begin(), components.end());
    return Curve(std::move(rf), std::move(parameter));
}

std::vector<double> Curve::at(double t) const {
    std::vector<double> out;
    const double arg[] = {t};
    for (const auto& c : components_) {
        auto status = c.evaluate(std::span<const double>(arg));
        out.push_back(status.defined() ? *status.value : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

std::vector<Rational> Curve::at(const Rational& t) const {
    std::vector<Rational> out;
    const Rational arg[] = {t};
    for (const auto& c : components_) {
        auto status = c.evaluate(std::span<const Rational>(arg));
        if (!status.defined())
            throw MathError(ErrorCode::DivisionByZero, "curve component has a pole at " + t.to_string());
        out.push_back(*status.value);
    }
    return out;
}

std::string Curve::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < components_.size(); ++i) os << (i ? ", " : "") << components_[i].to_string();
    os << ")";
    return os.str();
}

RationalFunction restrict_to_curve(const RationalFunction& f, const Curve& curve) {
    if (f.variables().size() != curve.dimension())
        throw MathError(ErrorCode::InvalidArgument,
                        "function has " + std::to_string(f.variables().size()) + " variables, curve has " +
                            std::to_string(curve.dimension()) + " components");
    try {
        return compose(f, curve.components(), {curve.parameter()});
    } catch (const MathError& e) {
        if (e.code() == ErrorCode::CurveInPoleLocus)
            throw MathError(ErrorCode::CurveInPoleLocus, "curve lies in pole locus: " + curve.to_string());
        throw;
    }
}

std::string LimitResult::to_string() const {
    switch (kind) {
    case Kind::Finite: return value.to_string();
    case Kind::Infinite: return "infinite";
    case Kind::SignedInfinite: return sign > 0 ? "+infinity" : "-infinity";
    }
    return "?";
}

namespace {

// Lowest-order coefficient and order of a polynomial in at most one variable.
std::pair<unsigned, Rational> lowest_term(const Polynomial& p) {
    unsigned order = ~0U;
    Rational coeff;
    for (const auto& [m, c] : p.terms()) {
        unsigned d = total_degree(m);
        if (d < order) {
            order = d;
            coeff = c;
        }
    }
    return {order, coeff};
}

} // namespace

LimitResult limit_at_zero(const RationalFunction& f, LimitMode mode) {
    if (f.num().used_variables().size() > 1 || f.den().used_variables().size() > 1 ||
        merge_variables(f.num().used_variables(), f.den().used_variables()).size() > 1)
        throw MathError(ErrorCode::InvalidArgument, "limit_at_zero expects a univariate function: " + f.to_string());
    if (f.is_zero()) return {LimitResult::Kind::Finite, Rational(0), 0};
    auto [num_order, num_coeff] = lowest_term(f.num());
    auto [den_order, den_coeff] = lowest_term(f.den());
    if (num_order > den_order) return {LimitResult::Kind::Finite, Rational(0), 0};
    if (num_order == den_order) return {LimitResult::Kind::Finite, num_coeff / den_coeff, 0};
    if (mode == LimitMode::Padic) return {LimitResult::Kind::Infinite, Rational(0), 0};
    // Leading behaviour c * t^-(k); both sides agree in sign iff k is even.
    unsigned pole_order = den_order - num_order;
    if (pole_order % 2 == 1) return {LimitResult::Kind::Infinite, Rational(0), 0};
    return {LimitResult::Kind::SignedInfinite, Rational(0), (num_coeff / den_coeff).sign()};
}

CurveLimit limit_along(const RationalFunction& f, const Curve& curve, std::string label, LimitMode mode) {
    CurveLimit out{std::move(label), curve.to_string(), std::nullopt, ""};
    try {
        out.limit = limit_at_zero(restrict_to_curve(f, curve), mode);
    } catch (const MathError& e) {
        if (e.code() != ErrorCode::CurveInPoleLocus) throw;
        out.error = e.what();
    }
    return out;
}

RationalFunction successive_restriction(const RationalFunction& f, const std::vector<std::string>& order) {
    RationalFunction current = rf_make(f.num(), f.den());
    for (const auto& name : order) {
        auto idx = current.num().index_of(name);
        if (!idx)
            throw MathError(ErrorCode::InvalidArgument, "restriction variable '" + name + "' is not a variable of f");
        Polynomial num = current.num().set_variable(*idx, Rational(0));
        Polynomial den = current.den().set_variable(*idx, Rational(0));
        if (den.is_zero())
            throw MathError(ErrorCode::RestrictionUndefined,
                            "restriction undefined along this chain: " + name + " divides the denominator of " +
                                current.to_string());
        current = rf_make(num, den);
    }
    return current;
}

} // namespace crf
