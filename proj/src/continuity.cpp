#include "crf/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace crf {

void CurveSuite::add(std::string label, Curve curve) {
    const std::string printed = curve.to_string();
    for (const auto& c : curves)
        if (c.to_string() == printed) return;
    curves.push_back(std::move(curve));
    labels.push_back(std::move(label));
}

void CurveSuite::validate(const std::vector<Polynomial>& w_equations) const {
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& base = curves[i].base_point();
        for (const auto& eq : w_equations) {
            if (eq.variables().size() != base.size())
                throw MathError(ErrorCode::InvalidArgument, "W equation " + eq.to_string() + " has " +
                                                                std::to_string(eq.variables().size()) +
                                                                " variables, curves have " +
                                                                std::to_string(base.size()));
            if (!eq.evaluate(base).is_zero())
                throw MathError(ErrorCode::InvalidArgument, "curve '" + labels[i] + "' starts outside W: " +
                                                                eq.to_string() + " != 0 at its base point");
        }
    }
}

CurveSuite default_suite(const std::vector<Rational>& base) {
    const std::size_t d = base.size();
    if (d == 0) throw MathError(ErrorCode::InvalidArgument, "default suite needs at least one coordinate");
    const VariableList tv{"t"};
    const Polynomial t = Polynomial::variable("t", tv);
    auto make = [&](const std::vector<Polynomial>& offsets) {
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < d; ++i) comps.push_back(Polynomial::constant(base[i], tv) + offsets[i]);
        return Curve::from_polynomials(comps);
    };
    const Polynomial zero(tv);
    CurveSuite suite;
    for (std::size_t i = 0; i < d; ++i) {
        for (int s : {1, -1}) {
            std::vector<Polynomial> off(d, zero);
            off[i] = t * Rational(s);
            suite.add("axis " + std::to_string(i + 1) + (s > 0 ? "+" : "-"), make(off));
        }
    }
    suite.add("diagonal", make(std::vector<Polynomial>(d, t)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const std::string pair = std::to_string(i + 1) + "," + std::to_string(j + 1);
            for (int s : {1, -1}) {
                std::vector<Polynomial> off(d, zero);
                off[i] = t;
                off[j] = t * Rational(s);
                suite.add("diagonal " + pair + (s > 0 ? "+" : "-"), make(off));
            }
            for (unsigned a = 1; a <= 4; ++a) {
                for (unsigned b = 1; b <= 4; ++b) {
                    for (int s : {1, -1}) {
                        std::vector<Polynomial> off(d, zero);
                        off[i] = t.pow(a) * Rational(s);
                        off[j] = t.pow(b);
                        suite.add("arc " + pair + " (" + (s > 0 ? "" : "-") + "t^" + std::to_string(a) + ",t^" +
                                      std::to_string(b) + ")",
                                  make(off));
                    }
                }
            }
        }
    }
    return suite;
}

namespace {

std::vector<std::size_t> label_order(const CurveSuite& suite) {
    std::vector<std::size_t> idx(suite.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return suite.labels[a] < suite.labels[b]; });
    return idx;
}

} // namespace

CurveProbeReport probe_curve_limits(const RationalFunction& f, const CurveSuite& suite, const LimitTarget& target,
                                    LimitMode mode) {
    CurveProbeReport report;
    for (std::size_t i : label_order(suite)) {
        const Curve& curve = suite.curves[i];
        CurveProbeEntry entry{limit_along(f, curve, suite.labels[i], mode), std::nullopt, false};
        if (std::holds_alternative<Rational>(target)) {
            entry.target = std::get<Rational>(target);
        } else {
            auto value = f.evaluate(std::span<const Rational>(curve.base_point()));
            if (value.defined()) entry.target = *value.value;
        }
        if (entry.limit.limit) {
            entry.matches = entry.target && entry.limit.limit->is_finite(*entry.target);
            if (!entry.matches && !report.witness) report.witness = report.entries.size();
            if (!entry.matches) report.consistent = false;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

SamplingReport finish(std::vector<SamplingLevelStat> levels) {
    SamplingReport out;
    std::size_t used = 0;
    for (const auto& l : levels) {
        used += l.used;
        out.max_deviation = std::max(out.max_deviation, l.max_deviation);
    }
    if (used == 0) throw MathError(ErrorCode::InvalidArgument, "every sample point is a pole of the function");
    const double first = levels.front().max_deviation;
    const double last = levels.back().max_deviation;
    out.nonvanishing = levels.size() > 1 && last > 1e-12 && !(last < first);
    out.levels = std::move(levels);
    return out;
}

} // namespace

SamplingReport probe_sampling(const RationalFunction& f, const FloatTarget& target,
                              const std::vector<ApproachLevel<FloatPoint>>& levels) {
    if (levels.empty()) throw MathError(ErrorCode::InvalidArgument, "sampling needs at least one level");
    std::vector<SamplingLevelStat> stats;
    for (const auto& level : levels) {
        SamplingLevelStat s{level.scale, 0, 0, 0};
        for (const auto& x : level.points) {
            auto v = f.evaluate(std::span<const double>(x));
            if (!v.defined() || !std::isfinite(*v.value)) {
                ++s.poles;
                continue;
            }
            ++s.used;
            s.max_deviation = std::max(s.max_deviation, std::fabs(*v.value - target(x)));
        }
        stats.push_back(s);
    }
    return finish(std::move(stats));
}

SamplingReport probe_sampling(const RationalFunction& f, const PadicTarget& target,
                              const std::vector<ApproachLevel<PadicPoint>>& levels, long prime, int precision) {
    if (levels.empty()) throw MathError(ErrorCode::InvalidArgument, "sampling needs at least one level");
    std::vector<SamplingLevelStat> stats;
    for (const auto& level : levels) {
        SamplingLevelStat s{level.scale, 0, 0, 0};
        for (const auto& x : level.points) {
            auto v = f.evaluate(std::span<const PadicNumber>(x), prime, precision);
            if (!v.defined()) {
                ++s.poles;
                continue;
            }
            ++s.used;
            s.max_deviation = std::max(s.max_deviation, (*v.value - target(x)).abs().to_double());
        }
        stats.push_back(s);
    }
    return finish(std::move(stats));
}

std::vector<ApproachLevel<PadicPoint>> padic_approach(const std::vector<Rational>& base,
                                                      const std::vector<std::vector<Rational>>& directions,
                                                      long prime, int precision, int levels) {
    std::vector<ApproachLevel<PadicPoint>> out;
    for (int k = 1; k <= levels; ++k) {
        const Rational step = Rational(prime).pow(k);
        ApproachLevel<PadicPoint> level{static_cast<double>(k), {}};
        for (const auto& dir : directions) {
            if (dir.size() != base.size())
                throw MathError(ErrorCode::InvalidArgument, "direction and base point differ in dimension");
            PadicPoint x;
            for (std::size_t i = 0; i < base.size(); ++i)
                x.push_back(PadicNumber::from_rational(base[i] + step * dir[i], prime, precision));
            level.points.push_back(std::move(x));
        }
        out.push_back(std::move(level));
    }
    return out;
}

BoundCheck check_bound(const RationalFunction& f, const FloatTarget& bound, const std::vector<FloatPoint>& points) {
    BoundCheck out;
    for (const auto& x : points) {
        auto v = f.evaluate(std::span<const double>(x));
        if (!v.defined()) {
            ++out.skipped;
            continue;
        }
        ++out.checked;
        const double lhs = std::fabs(*v.value);
        const double rhs = bound(x);
        if (rhs > 0) out.worst_ratio = std::max(out.worst_ratio, lhs / rhs);
        if (lhs > rhs * (1 + 1e-12) + 1e-300) {
            ++out.violations;
            if (!out.first_violation) out.first_violation = x;
        }
    }
    return out;
}

namespace {

// Larger is worse: infinite limits first, then distance from the target.
double badness(const CurveLimit& c, const Rational& target) {
    if (!c.limit) return -1;
    if (!c.limit->is_finite()) return std::numeric_limits<double>::infinity();
    return (c.limit->value - target).abs().to_double();
}

} // namespace

ExponentSearch find_extension_exponent(const ExtensionProblem& problem, const CurveSuite& suite, unsigned n_max) {
    if (n_max == 0) throw MathError(ErrorCode::InvalidArgument, "n_max must be positive");
    ExponentSearch out;
    for (unsigned n = 1; n <= n_max; ++n) {
        ExtensionResult result = extend_continuous(problem, n);
        const VariableList& vars = result.F.variables();
        const Polynomial Q = problem.Q.with_variables(vars);
        bool ok = true;
        std::optional<CurveLimit> worst;
        double worst_badness = -1;
        for (std::size_t i : label_order(suite)) {
            const Curve& curve = suite.curves[i];
            CurveLimit lim = limit_along(result.F, curve, suite.labels[i]);
            Rational target(0);
            if (!Q.evaluate(curve.base_point()).is_zero())
                target = *result.F.evaluate(std::span<const Rational>(curve.base_point())).value;
            if (lim.limit && !lim.limit->is_finite(target)) {
                ok = false;
                double b = badness(lim, target);
                if (b > worst_badness) {
                    worst_badness = b;
                    worst = lim;
                }
            }
            result.diagnostics.push_back(std::move(lim));
        }
        out.result = std::move(result);
        out.worst = std::move(worst);
        if (ok) {
            out.found = true;
            out.n = n;
            return out;
        }
    }
    return out;
}

const char* to_string(StratumVerdict v) {
    switch (v) {
    case StratumVerdict::Regular: return "REGULAR";
    case StratumVerdict::NotRegular: return "NOT_REGULAR";
    case StratumVerdict::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

namespace {

std::set<std::size_t> zero_coordinates(const Stratum& s) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < s.chart.size(); ++i)
        if (s.chart[i].is_zero()) out.insert(i);
    return out;
}

// Order in which coordinates vanish walking down the chain from the ambient
// space to stratum `index`, or nullopt when some step zeroes several at once.
std::optional<std::vector<std::size_t>> restriction_order(const Stratification& strat, std::size_t index) {
    std::vector<std::size_t> order;
    std::set<std::size_t> previous;
    for (std::size_t k = strat.strata.size(); k-- > index;) {
        std::set<std::size_t> current = zero_coordinates(strat.strata[k]);
        if (!std::includes(current.begin(), current.end(), previous.begin(), previous.end())) return std::nullopt;
        std::vector<std::size_t> fresh;
        std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(),
                            std::back_inserter(fresh));
        if (fresh.size() > 1) return std::nullopt;
        order.insert(order.end(), fresh.begin(), fresh.end());
        previous = std::move(current);
    }
    return order;
}

void validate(const RationalFunction& f, const Stratification& strat) {
    if (strat.strata.empty()) throw MathError(ErrorCode::InvalidArgument, "stratification has no strata");
    for (std::size_t i = 0; i < strat.strata.size(); ++i) {
        const Stratum& s = strat.strata[i];
        if (s.chart.size() != f.variables().size())
            throw MathError(ErrorCode::InvalidArgument, "chart of stratum '" + s.label + "' has " +
                                                            std::to_string(s.chart.size()) + " components, f has " +
                                                            std::to_string(f.variables().size()) + " variables");
        if (i > 0 && s.parameters.size() < strat.strata[i - 1].parameters.size())
            throw MathError(ErrorCode::InvalidArgument, "stratum parameter counts must be nondecreasing");
        for (const auto& c : s.chart)
            for (const auto& name : merge_variables(c.num().used_variables(), c.den().used_variables()))
                if (std::find(s.parameters.begin(), s.parameters.end(), name) == s.parameters.end())
                    throw MathError(ErrorCode::InvalidArgument,
                                    "chart of stratum '" + s.label + "' uses undeclared parameter '" + name + "'");
    }
}

} // namespace

HereditaryReport check_hereditary(const RationalFunction& f, const Stratification& strat, std::uint64_t seed,
                                  std::size_t samples) {
    validate(f, strat);
    HereditaryReport report;
    report.caveat = "sampled evidence only";
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < strat.strata.size(); ++i) {
        const Stratum& s = strat.strata[i];
        StratumReport entry{s.label, StratumVerdict::Regular, std::nullopt, ""};

        auto [num, num_den] = compose_fraction(f.num(), s.chart, s.parameters);
        auto [den, den_den] = compose_fraction(f.den(), s.chart, s.parameters);
        std::optional<RationalFunction> composite;
        if (!den.is_zero()) {
            composite = rf_make(num * den_den, den * num_den);
        } else if (!num.is_zero()) {
            entry.verdict = StratumVerdict::NotRegular;
            entry.detail = "denominator vanishes on the whole stratum";
        } else if (auto order = restriction_order(strat, i)) {
            std::vector<std::string> names;
            for (std::size_t k : *order) names.push_back(f.variables()[k]);
            try {
                RationalFunction h = successive_restriction(f, names);
                composite = compose(h, s.chart, s.parameters);
                entry.detail = "0/0 on the stratum; restricted successively";
            } catch (const MathError& e) {
                if (e.code() != ErrorCode::RestrictionUndefined && e.code() != ErrorCode::CurveInPoleLocus) throw;
                entry.verdict = StratumVerdict::Indeterminate;
                entry.detail = std::string("0/0 on the stratum and successive restriction fails: ") + e.what();
            }
        } else {
            entry.verdict = StratumVerdict::Indeterminate;
            entry.detail = "0/0 on the stratum; the chain does not fix a restriction order";
        }

        if (composite) {
            entry.restriction = composite;
            std::size_t vanishing = 0;
            for (std::size_t k = 0; k < samples; ++k) {
                auto point = random_rational_point(rng, s.parameters.size());
                if (composite->den().evaluate(point).is_zero()) ++vanishing;
            }
            if (vanishing > 0) {
                entry.verdict = StratumVerdict::NotRegular;
                entry.detail = "denominator vanishes at " + std::to_string(vanishing) + " of " +
                               std::to_string(samples) + " sampled parameters";
            }
        }
        if (entry.verdict != StratumVerdict::Regular) report.all_regular = false;
        report.strata.push_back(std::move(entry));
    }
    return report;
}

} // namespace crf
