#include "crf/cli/worked_examples.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "crf/continuity.hpp"
#include "crf/parser.hpp"

namespace crf::cli {

namespace {

const VariableList kXY{"x", "y"};
const VariableList kXYZ{"x", "y", "z"};

RationalFunction R(const std::string& text, const VariableList& vars) { return parse_expression(text, vars); }
Polynomial P(const std::string& text, const VariableList& vars) { return parse_polynomial(text, vars); }

Report start(const std::string& id, const ExampleOptions& o) {
    Report r;
    r.command = "paper-example";
    r.args["id"] = id;
    r.args["seed"] = std::to_string(o.seed);
    return r;
}

Report example_1_1(const ExampleOptions& o) {
    Report r = start("1.1", o);
    r.inputs["f"] = "x/y";
    r.inputs["surface"] = "x^3 - (1 + z^2)*y^3";
    const RationalFunction g = R("x^2*z/(x^2 + y^2)", kXYZ);
    r.inputs["g"] = g.to_string();

    RationalFunction xy = successive_restriction(g, {"x", "y"});
    RationalFunction yx = successive_restriction(g, {"y", "x"});
    r.exact("g restricted x then y", xy.to_string());
    r.exact("g restricted y then x", yx.to_string());
    r.check("restriction x then y is 0", xy.is_zero(), xy.to_string());
    r.check("restriction y then x is z", yx == R("z", kXYZ), yx.to_string());

    const RationalFunction f = R("x/y", kXYZ);
    for (int z : {0, 1, 2}) {
        const double c = std::cbrt(1.0 + z * z);
        std::vector<ApproachLevel<FloatPoint>> levels;
        for (int k = 1; k <= 6; ++k) {
            const double y = std::pow(10.0, -k);
            levels.push_back({y, {{y * c, y, double(z)}}});
        }
        SamplingReport s = probe_sampling(f, [c](const FloatPoint&) { return c; }, levels);
        const std::string tag = "z=" + std::to_string(z);
        r.number("x/y - cbrt(1+z^2) at y=1e-6, " + tag, s.levels.back().max_deviation);
        r.check("x/y tends to cbrt(1+z^2) on the surface, " + tag, s.levels.back().max_deviation < 1e-6);
    }

    Stratification strat{{{"z-axis", {"t"}, {R("0", {"t"}), R("0", {"t"}), R("t", {"t"})}},
                          {"space", kXYZ, {R("x", kXYZ), R("y", kXYZ), R("z", kXYZ)}}}};
    HereditaryReport h = check_hereditary(f, strat, o.seed);
    for (const auto& s : h.strata) r.text("stratum " + s.label, to_string(s.verdict));
    r.check("z-axis stratum flagged INDETERMINATE", h.strata[0].verdict == StratumVerdict::Indeterminate,
            h.strata[0].detail);
    return r;
}

Report example_1_2(const ExampleOptions& o) {
    Report r = start("1.2", o);
    const VariableList ambient{"x", "y", "z", "t"};
    const VariableList chart{"x1", "y1", "z1", "t"};
    const Polynomial X = P("(x^3 - (1 + t^2)*y^3)^2 + z^6 + y^7", ambient);
    const Polynomial Xp = P("(x1^3 - (1 + t^2))^2 + z1^6 + y1", chart);
    r.inputs["X"] = X.to_string();
    r.inputs["chart"] = "x = x1*y1, y = y1, z = z1*y1, t = t";
    const std::vector<RationalFunction> pi{R("x1*y1", chart), R("y1", chart), R("z1*y1", chart), R("t", chart)};

    auto [pulled, one] = compose_fraction(X, pi, chart);
    const Polynomial y1 = Polynomial::variable("y1", chart);
    r.exact("X pulled back", pulled.to_string());
    r.check("pull-back of X is y1^6 times the smooth 3-fold", pulled == y1.pow(6) * Xp && one.is_constant());

    RationalFunction fpi = compose(R("x/y", ambient), pi, chart);
    r.exact("f o pi", fpi.to_string());
    r.check("f o pi = x1 is regular", fpi == R("x1", chart));

    double worst = 0;
    for (int t : {0, 1, 2, 3}) {
        std::vector<double> pt{std::cbrt(1.0 + t * t), 0.0, 0.0, double(t)};
        worst = std::max(worst, std::fabs(Xp.evaluate(std::span<const double>(pt))));
    }
    r.number("max |X'| at (cbrt(1+t^2), 0, 0, t)", worst);
    r.check("preimage of (0,0,0,t) is (cbrt(1+t^2), 0, 0, t)", worst < 1e-12);
    return r;
}

Report example_1_3(const ExampleOptions& o) {
    Report r = start("1.3", o);
    const RationalFunction f = R("z^2*(x^2 + y^2*z^2 - y^3)/(x^2 + y^2*z^2 + y^4)", kXYZ);
    r.inputs["f"] = f.to_string();
    r.inputs["S"] = "x^2 + y^2*z^2 - y^3";

    CurveSuite lines;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, -1}}) {
        const std::string c = "(" + std::to_string(a) + "*t, " + std::to_string(b) + "*t, 3)";
        lines.add(c, parse_curve(c));
    }
    CurveProbeReport probe = probe_curve_limits(f, lines, Rational(9));
    for (const auto& e : probe.entries)
        r.exact("limit along " + e.limit.label, e.limit.limit ? e.limit.limit->to_string() : e.limit.error);
    r.check("limits into (0,0,3) all equal 9", probe.consistent && probe.entries.size() == 4);

    // Points of S* near the origin: 0 < y <= scale, z^2 < y, x = +-sqrt(y^3 - y^2 z^2).
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<ApproachLevel<FloatPoint>> levels;
    for (int k = 1; k <= 4; ++k) {
        const double scale = std::pow(10.0, -k);
        ApproachLevel<FloatPoint> level{scale, {}};
        for (unsigned i = 0; i < o.grid; ++i) {
            const double y = scale * (0.5 + 0.5 * unit(rng));
            const double z = std::sqrt(y) * (2 * unit(rng) - 1) * 0.999;
            const double x = (i % 2 ? 1 : -1) * std::sqrt(std::max(0.0, y * y * y - y * y * z * z));
            level.points.push_back({x, y, z});
        }
        levels.push_back(std::move(level));
    }
    SamplingReport s = probe_sampling(f, [](const FloatPoint&) { return 0.0; }, levels);
    for (const auto& l : s.levels) r.number("max |f| on S* at scale " + format_double(l.scale), l.max_deviation);
    r.check("f vanishes on S* (max |f| < 1e-6 at scale 1e-4)", s.levels.back().max_deviation < 1e-6);
    return r;
}

Report example_1_4(const ExampleOptions& o) {
    Report r = start("1.4", o);
    const RationalFunction f = R("x^3/(x^2 + y^2)", kXY);
    r.inputs["f"] = f.to_string();
    const std::vector<std::pair<int, int>> fan{{1, 0},  {2, 1},   {1, 1},   {1, 2},  {0, 1},  {-1, 2},
                                               {-1, 1}, {-2, 1},  {-1, 0},  {-2, -1}, {-1, -1}, {-1, -2},
                                               {0, -1}, {1, -2},  {1, -1},  {2, -1}};
    CurveSuite lines;
    for (auto [a, b] : fan) {
        const std::string c = "(" + std::to_string(a) + "*t, " + std::to_string(b) + "*t)";
        lines.add(c, parse_curve(c));
    }
    CurveProbeReport probe = probe_curve_limits(f, lines, Rational(0));
    std::size_t zero = 0;
    for (const auto& e : probe.entries)
        if (e.matches) ++zero;
    r.text("lines with limit 0", std::to_string(zero) + " of " + std::to_string(probe.entries.size()));
    r.check("limits along 16 lines into the origin are 0", probe.consistent && zero == 16);

    const VariableList uv{"u", "v"};
    RationalFunction chart1 = compose(f, std::vector<RationalFunction>{R("u", uv), R("u*v", uv)}, uv);
    RationalFunction chart2 = compose(f, std::vector<RationalFunction>{R("u*v", uv), R("v", uv)}, uv);
    r.exact("f on chart (u, u*v)", chart1.to_string());
    r.exact("f on chart (u*v, v)", chart2.to_string());
    // The exceptional curve is u = 0 in the first chart and v = 0 in the second.
    r.check("pull-back of f^c vanishes on the exceptional curve of (u, u*v)",
            successive_restriction(chart1, {"u"}).is_zero());
    r.check("pull-back of f^c vanishes on the exceptional curve of (u*v, v)",
            successive_restriction(chart2, {"v"}).is_zero());
    return r;
}

Report example_1_5(const ExampleOptions& o) {
    Report r = start("1.5", o);
    r.inputs["equation"] = "x1^3*x2*y1 + (x1^3 - (1 + x3^2)*x2^3)*y2 = x1^4";
    r.inputs["y1"] = "(1 + x3^2)^(1/3)";
    r.inputs["y2"] = "x1^3 / (x1^2 + c*x1*x2 + c^2*x2^2), c = (1 + x3^2)^(1/3)";
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    double residual = 0, ratio = 0;
    std::size_t bound_failures = 0;
    const int samples = 1000;
    for (int i = 0; i < samples; ++i) {
        const double x1 = box(rng), x2 = box(rng), x3 = box(rng);
        const double c = std::cbrt(1 + x3 * x3);
        const double y1 = c;
        const double y2 = x1 * x1 * x1 / (x1 * x1 + c * x1 * x2 + c * c * x2 * x2);
        const double lhs = x1 * x1 * x1 * x2 * y1 + (x1 * x1 * x1 - (1 + x3 * x3) * x2 * x2 * x2) * y2;
        residual = std::max(residual, std::fabs(lhs - x1 * x1 * x1 * x1));
        if (std::fabs(y2) > 2 * std::fabs(x1)) ++bound_failures;
        if (x1 != 0) ratio = std::max(ratio, std::fabs(y2) / std::fabs(x1));
    }
    r.number("max residual", residual);
    r.number("max |y2|/|x1|", ratio);
    r.check("semialgebraic pair solves the equation (residual < 1e-9, 1000 points)", residual < 1e-9);
    r.check("|y2| <= 2|x1| at every sampled point", bound_failures == 0,
            std::to_string(bound_failures) + " violations");
    return r;
}

Report example_2_5(const ExampleOptions& o) {
    Report r = start("2.5", o);
    const ExtensionProblem prob{P("y^2", kXY), P("x", kXY), P("x^2 - y^3", kXY)};
    r.inputs["P"] = prob.P.to_string();
    r.inputs["Q"] = prob.Q.to_string();
    r.inputs["H"] = prob.H.to_string();

    const RationalFunction f4 = extend_continuous(prob, 2).F;
    const RationalFunction f2 = extend_continuous(prob, 1).F;
    r.exact("F4", f4.to_string());

    RationalFunction on_cusp = restrict_to_curve(f4, parse_curve("(t^3, t^2)"));
    r.exact("F4 on (t^3, t^2)", on_cusp.to_string());
    r.check("F4(t^3, t^2) = t", on_cusp == R("t", {"t"}));

    CurveLimit witness = limit_along(f2, parse_curve("(t^2, t)"), "(t^2, t)");
    r.exact("limit of F2 along (t^2, t)", witness.limit ? witness.limit->to_string() : witness.error);
    r.check("F2 limit along (t^2, t) is 1", witness.limit && witness.limit->is_finite(Rational(1)));

    ExponentSearch search = find_extension_exponent(prob, default_suite({Rational(0), Rational(0)}), o.n_max);
    r.text("exponent search", search.found ? "n = " + std::to_string(search.n) : "not found");
    r.check("smallest n on the default suite is 2", search.found && search.n == 2);

    const VariableList uv{"u", "v"};
    RationalFunction pulled = compose(f4, std::vector<RationalFunction>{R("u^3", uv), R("u^2*v", uv)}, uv);
    RationalFunction expected = R("u*v^2 / ((1 + u^6*(1 - v^3)^2)*(1 + (1 - v^3)^2))", uv);
    r.check("F4(u^3, u^2 v) = u v^2 / ((1 + u^6 (1 - v^3)^2)(1 + (1 - v^3)^2))", pulled == expected);

    const double C = cusp_bound_constant();
    r.number("C", C);
    std::vector<FloatPoint> grid;
    const unsigned n = o.grid;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            grid.push_back({-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1)});
    BoundCheck bound =
        check_bound(f4, [C](const FloatPoint& x) { return C * std::cbrt(std::fabs(x[0])); }, grid);
    r.number("max |F4| / (C |x|^(1/3))", bound.worst_ratio);
    r.check("|F4| <= C |x|^(1/3) on the " + std::to_string(n) + "x" + std::to_string(n) + " grid",
            bound.violations == 0 && bound.checked + bound.skipped == grid.size(),
            std::to_string(bound.checked) + " points checked, " + std::to_string(bound.skipped) + " undefined");
    return r;
}

Report example_3_1(const ExampleOptions& o) {
    Report r = start("3.1-demo", o);
    SubvarietyData data;
    data.ambient = kXYZ;
    data.defining_eqs = {P("x", kXYZ), P("y", kXYZ)};
    data.local_fractions = {{P("1", kXYZ), P("1 + z^2", kXYZ)}};
    for (int z : {-2, 0, 1, 3}) data.z_points.push_back({Rational(0), Rational(0), Rational(z)});
    r.inputs["Z"] = "x = y = 0";
    r.inputs["f"] = "1/(1 + z^2)";

    const VariableList zv{"z"};
    const std::vector<RationalFunction> axis{Polynomial(zv), Polynomial(zv), Polynomial::variable("z", zv)};
    const RationalFunction target = R("1/(1 + z^2)", zv);

    // Over R with g = t^2 + 1.
    RegularExtension real = extend_regular(data, default_root_free(FieldSpec::real()), {FieldSpec::real(), o.seed});
    r.exact("F over R", real.F.to_string());
    r.check("real: F(0,0,z) = 1/(1+z^2)", compose(real.F, axis, zv) == target);
    std::mt19937_64 rng(o.seed);
    std::size_t nonpositive = 0;
    for (int i = 0; i < 1000; ++i)
        if (real.denominator.evaluate(random_rational_point(rng, 3)).sign() <= 0) ++nonpositive;
    r.check("real: G_3(q) > 0 at 1000 random rational points", nonpositive == 0);

    // Over Q_5 with g = t^2 - 5.
    const FieldSpec q5 = FieldSpec::padic(5, o.precision);
    r.field = q5.to_string();
    RegularExtension padic = extend_regular(data, default_root_free(q5), {q5, o.seed});
    r.exact("F over Q5", padic.F.to_string());
    std::size_t vanishing = 0;
    for (int i = 0; i < 1000; ++i) {
        auto x = random_padic_point(rng, 3, 5, o.precision);
        if (padic.denominator.evaluate(x, 5, o.precision).is_zero()) ++vanishing;
    }
    r.check("5-adic: G_3(q) != 0 at 1000 random points", vanishing == 0);
    std::size_t mismatches = 0;
    const PadicNumber one = PadicNumber::from_rational(Rational(1), 5, o.precision);
    for (int i = 0; i < 100; ++i) {
        PadicNumber z = random_padic(5, o.precision, rng, -2, 4);
        std::vector<PadicNumber> pt{PadicNumber(5), PadicNumber(5), z};
        auto v = padic.F.evaluate(pt, 5, o.precision);
        if (!v.defined() || !v.value->agrees_with(one / (one + z * z))) ++mismatches;
    }
    r.check("5-adic: F = f at 100 points of Z", mismatches == 0);

    bool identity = true;
    for (const FieldSpec& field : {FieldSpec::real(), q5}) {
        for (unsigned k = 1; k <= 5; ++k) {
            GrBasis b = build_gr(default_root_free(field), k);
            Polynomial sum(b.variables);
            for (unsigned i = 0; i < k; ++i) sum += b.parts[i] * Polynomial::variable(b.variables[i], b.variables);
            identity = identity && sum == b.G;
        }
    }
    r.check("sum_i G_ri x_i = G_r for r = 1..5", identity);
    return r;
}

const std::map<std::string, std::function<Report(const ExampleOptions&)>>& registry() {
    static const std::map<std::string, std::function<Report(const ExampleOptions&)>> table{
        {"1.1", example_1_1}, {"1.2", example_1_2}, {"1.3", example_1_3},      {"1.4", example_1_4},
        {"1.5", example_1_5}, {"2.5", example_2_5}, {"3.1-demo", example_3_1},
    };
    return table;
}

} // namespace

const std::vector<std::string>& worked_example_ids() {
    static const std::vector<std::string> ids{"1.1", "1.2", "1.3", "1.4", "1.5", "2.5", "3.1-demo"};
    return ids;
}

Report run_worked_example(const std::string& id, const ExampleOptions& options) {
    auto it = registry().find(id);
    if (it == registry().end()) throw MathError(ErrorCode::InvalidArgument, "unknown example id '" + id + "'");
    return it->second(options);
}

double cusp_bound_constant(double lo, double hi, std::size_t steps) {
    double best = 0;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double v = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps);
        const double w = 1 - v * v * v;
        best = std::max(best, v * v / (1 + w * w));
    }
    return best;
}

} // namespace crf::cli
