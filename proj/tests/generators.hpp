#pragma once

#include <random>

#include "crf/field.hpp"
#include "crf/polynomial.hpp"

namespace crf::testing {

/// Random polynomial over `vars` with at most `terms` terms of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, const VariableList& vars, unsigned max_degree,
                                    unsigned terms, long height = 20) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
    std::vector<std::pair<Monomial, Rational>> out;
    for (unsigned k = 0; k < terms; ++k) {
        Monomial m(vars.size(), 0);
        unsigned d = deg(rng);
        for (unsigned j = 0; j < d && !vars.empty(); ++j) ++m[pick(rng)];
        Rational c = random_rational(rng, height);
        if (!c.is_zero()) out.emplace_back(m, c);
    }
    return Polynomial::from_terms(vars, out);
}

inline Polynomial random_nonconstant(std::mt19937_64& rng, const VariableList& vars, unsigned max_degree,
                                     unsigned terms) {
    for (;;) {
        Polynomial p = random_polynomial(rng, vars, max_degree, terms);
        if (!p.is_constant()) return p;
    }
}

} // namespace crf::testing
