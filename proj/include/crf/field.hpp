#pragma once

#include <random>
#include <string>
#include <vector>

#include "crf/padic.hpp"
#include "crf/rational.hpp"

namespace crf {

/// Which completion of Q a computation targets.
struct FieldSpec {
    enum class Kind { Real, Padic };

    Kind kind = Kind::Real;
    long prime = 0;
    int precision = PadicNumber::kDefaultPrecision;

    static FieldSpec real() { return {}; }
    static FieldSpec padic(long p, int n = PadicNumber::kDefaultPrecision);

    /// Accepts "real", "padic:p" and "padic:p:N".
    static FieldSpec parse(const std::string& text, int default_precision = PadicNumber::kDefaultPrecision);

    bool is_real() const { return kind == Kind::Real; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Random rational with |numerator| <= height and 1 <= denominator <= height.
Rational random_rational(std::mt19937_64& rng, long height = 100);

std::vector<Rational> random_rational_point(std::mt19937_64& rng, std::size_t dim, long height = 100);

/// Random point of Q_p^dim with coordinate valuations in [min_val, max_val].
std::vector<PadicNumber> random_padic_point(std::mt19937_64& rng, std::size_t dim, long prime, int precision,
                                            long min_val = -2, long max_val = 4);

std::vector<PadicNumber> to_padic(const std::vector<Rational>& point, long prime, int precision);

} // namespace crf
