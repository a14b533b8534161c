#include "crf/extension.hpp"

#include <random>

namespace crf {

namespace {

void require_root_free_shape(const Polynomial& g) {
    if (g.used_variables().size() > 1)
        throw MathError(ErrorCode::InvalidArgument, "root-free polynomial must be univariate: " + g.to_string());
    if (g.total_degree() < 2)
        throw MathError(ErrorCode::InvalidArgument, "root-free polynomial needs degree >= 2: " + g.to_string());
    if (g.leading_coefficient() != Rational(1))
        throw MathError(ErrorCode::InvalidArgument, "root-free polynomial must be monic: " + g.to_string());
}

// Coefficients c_0..c_d of a univariate polynomial.
std::vector<Rational> univariate_coefficients(const Polynomial& g) {
    std::vector<Rational> out(g.total_degree() + 1);
    for (const auto& [m, c] : g.terms()) out[total_degree(m)] = c;
    return out;
}

} // namespace

GrBasis build_gr(const Polynomial& g, unsigned r, const std::string& prefix) {
    require_root_free_shape(g);
    if (r == 0) throw MathError(ErrorCode::InvalidArgument, "G_r needs r >= 1");

    GrBasis basis;
    basis.g = g;
    basis.r = r;
    for (unsigned i = 1; i <= r; ++i) basis.variables.push_back(prefix + std::to_string(i));

    // '#' cannot appear in parsed names, so these never clash with the tower variables.
    const Polynomial g2 = homogenize(g, "#a", "#b");
    Polynomial G = Polynomial::variable(basis.variables[0], basis.variables);
    for (unsigned k = 1; k < r; ++k) {
        G = g2.substitute({{"#a", G}, {"#b", Polynomial::variable(basis.variables[k], basis.variables)}})
                .with_variables(basis.variables);
    }
    basis.G = G;

    basis.parts.assign(r, Polynomial(basis.variables));
    for (const auto& [m, c] : G.terms()) {
        std::size_t lowest = 0;
        while (lowest < m.size() && m[lowest] == 0) ++lowest;
        if (lowest == m.size()) throw MathError(ErrorCode::InvalidArgument, "G_r has a constant term");
        Monomial rest = m;
        --rest[lowest];
        basis.parts[lowest] += Polynomial::from_terms(basis.variables, {{rest, c}});
    }
    return basis;
}

Polynomial default_root_free(const FieldSpec& field) {
    const VariableList t{"t"};
    Polynomial t2 = Polynomial::variable("t", t).pow(2);
    if (field.is_real()) return t2 + Polynomial::constant(Rational(1), t);
    return t2 - Polynomial::constant(Rational(field.prime), t);
}

namespace {

// For quadratic g decides root-freeness exactly (negative discriminant over R,
// non-square discriminant over Q_p); higher degrees are taken on trust.
void certify_root_free(const Polynomial& g, const FieldSpec& field) {
    if (g.total_degree() != 2) return;
    auto c = univariate_coefficients(g);
    Rational disc = c[1] * c[1] - Rational(4) * c[0] * c[2];
    bool has_root = false;
    if (field.is_real()) {
        has_root = disc.sign() >= 0;
    } else {
        has_root = disc.is_zero() || PadicNumber::from_rational(disc, field.prime, field.precision).is_square();
    }
    if (has_root)
        throw MathError(ErrorCode::InvalidArgument,
                        g.to_string() + " has a root over " + field.to_string() + "; G_r would have extra zeros");
}

} // namespace

RegularExtension extend_regular(const SubvarietyData& data, const Polynomial& basis_g,
                                const RegularExtensionOptions& options) {
    if (data.local_fractions.empty())
        throw MathError(ErrorCode::InvalidArgument, "extend_regular needs at least one local fraction");
    certify_root_free(basis_g, options.field);
    const VariableList& ambient = data.ambient;

    std::vector<Polynomial> ps, qs;
    for (const auto& [p, q] : data.local_fractions) {
        if (q.is_zero()) throw MathError(ErrorCode::DivisionByZero, "local fraction with zero denominator");
        ps.push_back(p.with_variables(ambient));
        qs.push_back(q.with_variables(ambient));
    }
    for (const auto& eq : data.defining_eqs) {
        ps.push_back(eq.with_variables(ambient));
        qs.push_back(eq.with_variables(ambient));
    }

    for (const auto& z : data.z_points) {
        for (const auto& eq : data.defining_eqs)
            if (!eq.with_variables(ambient).evaluate(z).is_zero())
                throw MathError(ErrorCode::InvalidArgument, "supplied point is not on Z: " + eq.to_string() + " != 0");
        const std::size_t m = data.local_fractions.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (ps[i].evaluate(z) * qs[j].evaluate(z) != ps[j].evaluate(z) * qs[i].evaluate(z))
                    throw MathError(ErrorCode::InconsistentFractions,
                                    "fractions " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                        " disagree at a point of Z");
    }

    RegularExtension out;
    out.generators = qs;
    out.basis = build_gr(basis_g, static_cast<unsigned>(qs.size()));
    std::map<std::string, Polynomial> assignment;
    for (std::size_t i = 0; i < qs.size(); ++i) assignment.emplace(out.basis.variables[i], qs[i]);

    out.denominator = out.basis.G.substitute(assignment).with_variables(ambient);
    out.numerator = Polynomial(ambient);
    for (std::size_t i = 0; i < qs.size(); ++i)
        out.numerator += out.basis.parts[i].substitute(assignment).with_variables(ambient) * ps[i];
    out.numerator = out.numerator.with_variables(ambient);

    for (const auto& z : data.z_points)
        if (out.denominator.evaluate(z).is_zero())
            throw MathError(ErrorCode::CommonZero, "generators q_i vanish together at a supplied point of Z");
    std::mt19937_64 rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
        bool vanishes = false;
        if (options.field.is_real()) {
            vanishes = out.denominator.evaluate(random_rational_point(rng, ambient.size())).is_zero();
        } else {
            auto x = random_padic_point(rng, ambient.size(), options.field.prime, options.field.precision);
            vanishes = out.denominator.evaluate(x, options.field.prime, options.field.precision).is_zero();
        }
        if (vanishes)
            throw MathError(ErrorCode::CommonZero, "generators q_i vanish together at a sampled point");
    }

    out.F = rf_make(out.numerator, out.denominator);
    return out;
}

Polynomial sum_of_squares_denominator(const std::vector<Polynomial>& generators) {
    if (generators.empty()) throw MathError(ErrorCode::InvalidArgument, "sum of squares of an empty list");
    Polynomial out(generators.front().variables());
    for (const auto& phi : generators) out += phi * phi;
    return out;
}

ExtensionResult extend_continuous(const ExtensionProblem& problem, unsigned n) {
    if (n == 0) throw MathError(ErrorCode::InvalidArgument, "extend_continuous needs n >= 1");
    const VariableList vars =
        merge_variables(merge_variables(problem.P.variables(), problem.Q.variables()), problem.H.variables());
    const Polynomial P = problem.P.with_variables(vars);
    const Polynomial Q = problem.Q.with_variables(vars);
    const Polynomial H = problem.H.with_variables(vars);
    const Polynomial H2 = H * H;
    const Polynomial base_den = Q * Q + H2;
    if (base_den.is_zero())
        throw MathError(ErrorCode::DegenerateDenominator, "Q^2 + H^2 is the zero polynomial");
    const Polynomial Q2n = Q.pow(2 * n);
    return {n, rf_make(P * Q * Q2n, base_den * (Q2n + H2)), {}};
}

ExtensionResult extend_continuous(const ExtensionProblem& problem, unsigned n,
                                  const std::vector<std::pair<std::string, Curve>>& curves) {
    ExtensionResult out = extend_continuous(problem, n);
    for (const auto& [label, curve] : curves) out.diagnostics.push_back(limit_along(out.F, curve, label));
    return out;
}

bool restriction_identity_holds(const ExtensionProblem& problem, const RationalFunction& F, const Curve& curve) {
    const VariableList& vars = F.variables();
    if (!restrict_to_curve(RationalFunction(problem.H.with_variables(vars)), curve).is_zero())
        throw MathError(ErrorCode::InvalidArgument, "curve " + curve.to_string() + " does not lie in Z (H != 0)");
    RationalFunction q_on_curve = restrict_to_curve(RationalFunction(problem.Q.with_variables(vars)), curve);
    if (q_on_curve.is_zero())
        throw MathError(ErrorCode::InvalidArgument, "curve " + curve.to_string() + " lies in W (Q = 0)");
    RationalFunction target = rf_make(problem.P.with_variables(vars), problem.Q.with_variables(vars));
    return restrict_to_curve(F, curve) == restrict_to_curve(target, curve);
}

} // namespace crf
