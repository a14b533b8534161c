#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "crf/continuity.hpp"

namespace crf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Point in the box, each coordinate either uniform or pulled towards an
// anchor (0 when inside the box, or an endpoint) by a factor 10^(-U*depth).
std::vector<double> sample_point(std::mt19937_64& rng, const Box& box, double depth) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> choice(0, 3);
    std::vector<double> x;
    for (const auto& [lo_q, hi_q] : box.bounds) {
        const double lo = lo_q.to_double(), hi = hi_q.to_double();
        const double uniform = lo + (hi - lo) * unit(rng);
        double anchor = uniform;
        switch (choice(rng)) {
        case 0: anchor = (lo <= 0 && 0 <= hi) ? 0.0 : uniform; break;
        case 1: anchor = lo; break;
        case 2: anchor = hi; break;
        default: break;
        }
        double value = uniform;
        if (anchor != uniform) {
            const double shrink = std::pow(10.0, -depth * (1.0 - unit(rng)));
            value = std::clamp(anchor + (2 * unit(rng) - 1) * shrink * (hi - lo), lo, hi);
        }
        x.push_back(value);
    }
    return x;
}

} // namespace

LojasiewiczEstimate lojasiewicz_estimate(const LojasiewiczQuery& query, std::size_t samples, std::uint64_t seed) {
    if (query.n_max == 0) throw MathError(ErrorCode::InvalidArgument, "n_max must be positive");
    if (samples < 2) throw MathError(ErrorCode::InvalidArgument, "need at least two samples");
    const VariableList vars = merge_variables(query.phi.variables(), query.psi.variables());
    if (query.region.bounds.size() != vars.size())
        throw MathError(ErrorCode::InvalidArgument, "region has " + std::to_string(query.region.bounds.size()) +
                                                        " intervals, functions have " +
                                                        std::to_string(vars.size()) + " variables");
    for (const auto& [lo, hi] : query.region.bounds)
        if (hi < lo) throw MathError(ErrorCode::InvalidArgument, "empty region interval");
    const RationalFunction phi = query.phi.with_variables(vars);
    const RationalFunction psi = query.psi.with_variables(vars);

    LojasiewiczEstimate out;
    out.samples = samples;
    out.method = "heuristic: factor-10 stabilization between half and full sample maxima";
    std::mt19937_64 rng(seed);
    const std::size_t half = samples / 2;
    std::vector<double> half_max(query.n_max, kNegInf), full_max(query.n_max, kNegInf);
    std::size_t usable = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        auto x = sample_point(rng, query.region, s < half ? 3.0 : 6.0);
        auto fv = phi.evaluate(std::span<const double>(x));
        auto gv = psi.evaluate(std::span<const double>(x));
        if (!fv.defined() || !gv.defined()) {
            ++out.poles;
            continue;
        }
        const double a = std::fabs(*fv.value), b = std::fabs(*gv.value);
        if (a == 0) {
            ++out.phi_zero;
            if (b != 0) ++out.containment_violations;
            continue;
        }
        ++usable;
        if (b == 0) continue;
        for (unsigned n = 1; n <= query.n_max; ++n) {
            const double lr = n * std::log(b) - std::log(a);
            full_max[n - 1] = std::max(full_max[n - 1], lr);
            if (s < half) half_max[n - 1] = std::max(half_max[n - 1], lr);
        }
    }
    if (usable == 0) throw MathError(ErrorCode::InvalidArgument, "phi vanishes at every sampled point of the region");

    out.log_max = full_max;
    for (unsigned n = 1; n <= query.n_max; ++n) {
        const double full = full_max[n - 1], part = half_max[n - 1];
        const bool stable = full == kNegInf || (part != kNegInf && full - part < std::log(10.0));
        if (stable) {
            out.found = true;
            out.n = n;
            out.bound = full == kNegInf ? 0.0 : std::exp(full);
            break;
        }
    }
    return out;
}

} // namespace crf
