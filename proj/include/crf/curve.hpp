#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crf/rational_function.hpp"

namespace crf {

/// Rational arc t -> (x_1(t), ..., x_N(t)) with every component defined at
/// t = 0; base_point() is the value at t = 0.
class Curve {
  public:
    Curve(std::vector<RationalFunction> components, std::string parameter = "t");
    static Curve from_polynomials(const std::vector<Polynomial>& components, std::string parameter = "t");

    const std::vector<RationalFunction>& components() const { return components_; }
    const std::vector<Rational>& base_point() const { return base_point_; }
    const std::string& parameter() const { return parameter_; }
    std::size_t dimension() const { return components_.size(); }

    /// Point on the curve at parameter value t (double arithmetic).
    std::vector<double> at(double t) const;
    std::vector<Rational> at(const Rational& t) const;

    std::string to_string() const;

  private:
    std::vector<RationalFunction> components_;
    std::vector<Rational> base_point_;
    std::string parameter_;
};

/// f restricted to the curve, as a reduced rational function of the curve
/// parameter. Variables of f are matched to components by position.
RationalFunction restrict_to_curve(const RationalFunction& f, const Curve& curve);

struct LimitResult {
    enum class Kind { Finite, Infinite, SignedInfinite };

    Kind kind = Kind::Finite;
    Rational value;   // meaningful for Finite
    int sign = 0;     // +1 / -1 for SignedInfinite

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_finite(const Rational& v) const { return kind == Kind::Finite && value == v; }
    std::string to_string() const;

    friend bool operator==(const LimitResult&, const LimitResult&) = default;
};

enum class LimitMode { Real, Padic };

/// Exact limit of a univariate rational function as its variable tends to 0,
/// by cancelling the lowest powers of the variable. In real mode an infinite
/// limit carries a sign when both one-sided limits agree (even pole order).
LimitResult limit_at_zero(const RationalFunction& f, LimitMode mode = LimitMode::Real);

/// Exact limit of f along one labelled curve. A curve inside the pole locus
/// yields no limit and an error message instead of throwing.
struct CurveLimit {
    std::string label;
    std::string curve;
    std::optional<LimitResult> limit;
    std::string error;
};

CurveLimit limit_along(const RationalFunction& f, const Curve& curve, std::string label,
                       LimitMode mode = LimitMode::Real);

/// Sets the variables in `order` to zero one at a time, reducing after each
/// step. Throws RestrictionUndefined when a step kills the denominator.
RationalFunction successive_restriction(const RationalFunction& f, const std::vector<std::string>& order);

} // namespace crf
