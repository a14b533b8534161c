#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crf/curve.hpp"
#include "crf/field.hpp"
#include "crf/rational_function.hpp"

namespace crf {

/// Tower of polynomials G_r(x_1..x_r) whose only zero on K^r is the origin,
/// built from a root-free monic g by homogenizing and iterating
/// G_{r+1} = G_2(G_r, x_{r+1}); parts[i] satisfy G_r = sum_i parts[i] * x_i.
struct GrBasis {
    Polynomial g;
    unsigned r = 0;
    VariableList variables;
    Polynomial G;
    std::vector<Polynomial> parts;
};

/// Each monomial of G_r is assigned to the lowest-index variable it contains,
/// which is then factored out.
GrBasis build_gr(const Polynomial& g, unsigned r, const std::string& prefix = "x");

/// t^2 + 1 over R, t^2 - p over Q_p (no root by valuation parity).
Polynomial default_root_free(const FieldSpec& field);

/// Data of the regular-extension construction: a subvariety Z cut out by
/// defining_eqs and local fractions p_i / q_i all representing f on Z.
struct SubvarietyData {
    VariableList ambient;
    std::vector<Polynomial> defining_eqs;
    std::vector<std::pair<Polynomial, Polynomial>> local_fractions;
    /// Rational points of Z used for the consistency check.
    std::vector<std::vector<Rational>> z_points;
};

struct RegularExtensionOptions {
    FieldSpec field;
    std::uint64_t seed = 0;
    std::size_t samples = 200;
};

struct RegularExtension {
    RationalFunction F;
    Polynomial numerator;     // sum_i G_ri(q) * p_i, unreduced
    Polynomial denominator;   // G_r(q), unreduced
    std::vector<Polynomial> generators;  // q_1..q_r
    GrBasis basis;
};

/// F = sum_i G_ri(q_1..q_r) p_i / G_r(q_1..q_r), where q lists the fraction
/// denominators followed by the defining equations (whose p_i = q_i).
/// Throws InvalidArgument for an empty fraction list, InconsistentFractions
/// when p_i q_j != p_j q_i at a supplied point of Z, and CommonZero when the
/// generators vanish together at a supplied point of Z or a sampled point.
RegularExtension extend_regular(const SubvarietyData& data, const Polynomial& basis_g,
                                const RegularExtensionOptions& options = {});

/// phi_1^2 + ... + phi_r^2.
Polynomial sum_of_squares_denominator(const std::vector<Polynomial>& generators);

/// P, Q, H on the ambient space: Q cuts out the bad set W, H cuts out Z, and
/// P/Q restricts to the function being extended.
struct ExtensionProblem {
    Polynomial P;
    Polynomial Q;
    Polynomial H;
};

struct ExtensionResult {
    unsigned n = 0;
    RationalFunction F;
    std::vector<CurveLimit> diagnostics;
};

/// F_{2n} = (P Q / (Q^2 + H^2)) * (Q^{2n} / (Q^{2n} + H^2)), reduced.
/// Throws DegenerateDenominator when Q^2 + H^2 = 0.
ExtensionResult extend_continuous(const ExtensionProblem& problem, unsigned n);

/// As above, additionally recording exact limits along the labelled curves.
ExtensionResult extend_continuous(const ExtensionProblem& problem, unsigned n,
                                  const std::vector<std::pair<std::string, Curve>>& curves);

/// Checks F o c = (P/Q) o c for a curve c inside Z \ W (H o c = 0, Q o c != 0).
/// Throws InvalidArgument when the curve is not of that kind.
bool restriction_identity_holds(const ExtensionProblem& problem, const RationalFunction& F, const Curve& curve);

} // namespace crf
