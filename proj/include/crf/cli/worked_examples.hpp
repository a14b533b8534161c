#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crf/cli/report.hpp"

namespace crf::cli {

struct ExampleOptions {
    std::uint64_t seed = 0;
    unsigned grid = 64;
    unsigned n_max = 16;
    int precision = PadicNumber::kDefaultPrecision;
};

/// "1.1", "1.2", "1.3", "1.4", "1.5", "2.5", "3.1-demo".
const std::vector<std::string>& worked_example_ids();

/// Scripted reproduction of one worked example; each assertion becomes a
/// verdict. Throws InvalidArgument for an unknown id.
Report run_worked_example(const std::string& id, const ExampleOptions& options = {});

/// The largest value of v^2 / (1 + (1 - v^3)^2) over an even grid on [lo, hi].
double cusp_bound_constant(double lo = -4, double hi = 4, std::size_t steps = 800000);

} // namespace crf::cli
