#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crf/curve.hpp"
#include "crf/extension.hpp"

namespace crf {

/// Labelled test curves into a bad set W.
struct CurveSuite {
    std::vector<Curve> curves;
    std::vector<std::string> labels;

    /// Appends unless a curve with the same printed form is already present.
    void add(std::string label, Curve curve);
    std::size_t size() const { return curves.size(); }

    /// Throws InvalidArgument when some base point is not a zero of every
    /// polynomial in `w_equations`.
    void validate(const std::vector<Polynomial>& w_equations) const;
};

/// Curves through `base`: both directions of every axis, the pairwise
/// diagonals e_i +- e_j, the full diagonal, and on every coordinate pair the
/// monomial arcs (+-t^a, t^b) for 1 <= a, b <= 4.
CurveSuite default_suite(const std::vector<Rational>& base);

/// Marker for probe_curve_limits: compare against f's value at the base point.
struct ValueAtBase {};
using LimitTarget = std::variant<Rational, ValueAtBase>;

struct CurveProbeEntry {
    CurveLimit limit;
    std::optional<Rational> target;
    bool matches = false;
};

struct CurveProbeReport {
    std::vector<CurveProbeEntry> entries;  // sorted by label
    bool consistent = true;
    std::optional<std::size_t> witness;    // first mismatching entry
};

/// Exact limits of f along every curve compared with the target. Curves in
/// the pole locus of f are listed with their error and do not decide the
/// verdict.
CurveProbeReport probe_curve_limits(const RationalFunction& f, const CurveSuite& suite, const LimitTarget& target,
                                    LimitMode mode = LimitMode::Real);

/// One scale of an approach sequence.
template <class Point>
struct ApproachLevel {
    double scale;  // nominal distance to W; for p-adic levels the exponent k of p^k
    std::vector<Point> points;
};

struct SamplingLevelStat {
    double scale = 0;
    double max_deviation = 0;
    std::size_t used = 0;
    std::size_t poles = 0;
};

struct SamplingReport {
    std::vector<SamplingLevelStat> levels;
    double max_deviation = 0;
    /// Deviation at the last level is neither below the first level's nor below 1e-12.
    bool nonvanishing = false;
};

using FloatPoint = std::vector<double>;
using FloatTarget = std::function<double(const FloatPoint&)>;

/// max |f(x) - target(x)| per level. Points where f is not defined are
/// counted as poles; throws InvalidArgument when every point is one.
SamplingReport probe_sampling(const RationalFunction& f, const FloatTarget& target,
                              const std::vector<ApproachLevel<FloatPoint>>& levels);

using PadicPoint = std::vector<PadicNumber>;
using PadicTarget = std::function<PadicNumber(const PadicPoint&)>;

/// Same with deviations measured by the p-adic absolute value.
SamplingReport probe_sampling(const RationalFunction& f, const PadicTarget& target,
                              const std::vector<ApproachLevel<PadicPoint>>& levels, long prime, int precision);

/// Levels k = 1..K, each holding base + p^k * d for every direction d.
std::vector<ApproachLevel<PadicPoint>> padic_approach(const std::vector<Rational>& base,
                                                      const std::vector<std::vector<Rational>>& directions,
                                                      long prime, int precision, int levels = 12);

struct BoundCheck {
    std::size_t checked = 0;
    std::size_t skipped = 0;      // points where f is not defined
    std::size_t violations = 0;
    double worst_ratio = 0;       // max |f| / bound over points with bound > 0
    std::optional<FloatPoint> first_violation;
};

/// Checks |f(x)| <= bound(x) at every point, with a relative slack of 1e-12.
BoundCheck check_bound(const RationalFunction& f, const FloatTarget& bound, const std::vector<FloatPoint>& points);

struct ExponentSearch {
    bool found = false;
    unsigned n = 0;
    ExtensionResult result;       // for n when found, otherwise for n_max
    std::optional<CurveLimit> worst;
};

/// Smallest n <= n_max such that F_{2n} has the right limit along every curve:
/// 0 where Q vanishes at the base point, F_{2n}(base) elsewhere.
ExponentSearch find_extension_exponent(const ExtensionProblem& problem, const CurveSuite& suite, unsigned n_max);

struct Box {
    std::vector<std::pair<Rational, Rational>> bounds;
};

struct LojasiewiczQuery {
    RationalFunction phi;
    RationalFunction psi;
    Box region;
    unsigned n_max = 16;
};

struct LojasiewiczEstimate {
    bool found = false;
    unsigned n = 0;
    double bound = 0;                // max |psi|^n / |phi| over all samples, for n
    std::vector<double> log_max;     // per n = 1..n_max, natural log of the sample max
    std::size_t samples = 0;
    std::size_t phi_zero = 0;        // excluded samples
    std::size_t containment_violations = 0;  // phi = 0 but psi != 0
    std::size_t poles = 0;
    std::string method;
};

/// Heuristic exponent estimate. Half the samples approach the zero set to
/// about 1e-3, the other half to about 1e-6; n is accepted when the full
/// maximum exceeds the first half's by less than a factor 10.
LojasiewiczEstimate lojasiewicz_estimate(const LojasiewiczQuery& query, std::size_t samples,
                                         std::uint64_t seed = 0);

struct Stratum {
    std::string label;
    VariableList parameters;
    std::vector<RationalFunction> chart;
};

struct Stratification {
    std::vector<Stratum> strata;  // smallest first
};

enum class StratumVerdict { Regular, NotRegular, Indeterminate };
const char* to_string(StratumVerdict v);

struct StratumReport {
    std::string label;
    StratumVerdict verdict = StratumVerdict::Regular;
    std::optional<RationalFunction> restriction;  // in the chart parameters
    std::string detail;
};

struct HereditaryReport {
    std::vector<StratumReport> strata;
    bool all_regular = true;
    std::string caveat;
};

/// Composes f with each chart. A composite that is 0/0 identically is
/// retried by successive restriction when the chain fixes the order in which
/// coordinates become zero (one new zero coordinate per step); otherwise the
/// stratum is Indeterminate.
HereditaryReport check_hereditary(const RationalFunction& f, const Stratification& strat, std::uint64_t seed = 0,
                                  std::size_t samples = 50);

} // namespace crf
