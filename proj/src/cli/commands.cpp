#include "crf/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "crf/cli/report.hpp"
#include "crf/cli/worked_examples.hpp"
#include "crf/continuity.hpp"
#include "crf/parser.hpp"

namespace crf::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runs an input-parsing step; library errors there are the caller's mistake.
template <class F>
auto usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const MathError& e) {
        throw UsageError(e.what());
    }
}

struct Options {
    std::string field = "real";
    std::uint64_t seed = 0;
    unsigned n_max = 16;
    unsigned grid = 64;
    int precision = PadicNumber::kDefaultPrecision;
    std::string format = "json";
    bool timings = false;

    std::string expr, vars, at, target, order, g, phi, psi, box, P, Q, H, base, id, param = "t";
    std::vector<std::string> curves, eqs, fractions, z_points, strata;
    unsigned n = 0;
    std::size_t samples = 0;
    bool sample = false;
};

struct Context {
    const Options& opt;
    FieldSpec field;
    Report& report;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string join(const std::vector<Rational>& point) {
    std::vector<std::string> parts;
    for (const auto& q : point) parts.push_back(q.to_string());
    return join(parts);
}

template <class Kind>
const char* kind_name(Kind k) {
    switch (k) {
    case Kind::Defined: return "defined";
    case Kind::IndeterminateZeroOverZero: return "indeterminate 0/0";
    case Kind::Pole: return "pole";
    }
    return "?";
}

VariableList resolve_vars(const Options& o, const std::vector<std::string>& expressions) {
    if (!o.vars.empty()) return usage([&] { return parse_variable_list(o.vars); });
    return infer_variables(expressions);
}

RationalFunction parse_rf(const std::string& text, const VariableList& vars) {
    return usage([&] { return parse_expression(text, vars); });
}

Polynomial parse_poly(const std::string& text, const VariableList& vars) {
    return usage([&] { return parse_polynomial(text, vars); });
}

std::vector<Rational> parse_pt(const std::string& text, std::size_t dim) {
    auto pt = usage([&] { return parse_point(text); });
    if (pt.size() != dim)
        throw UsageError("point '" + text + "' has " + std::to_string(pt.size()) + " coordinates, expected " +
                         std::to_string(dim));
    return pt;
}

CurveSuite build_suite(const Options& o, std::size_t dim) {
    CurveSuite suite;
    if (!o.curves.empty()) {
        for (const auto& c : o.curves) {
            Curve curve = usage([&] { return parse_curve(c, o.param); });
            if (curve.dimension() != dim)
                throw UsageError("curve " + c + " has " + std::to_string(curve.dimension()) +
                                 " components, expected " + std::to_string(dim));
            suite.add(c, std::move(curve));
        }
        return suite;
    }
    std::vector<Rational> base(dim, Rational(0));
    if (!o.base.empty()) base = parse_pt(o.base, dim);
    return default_suite(base);
}

LimitTarget parse_target(const std::string& text) {
    if (text == "base") return ValueAtBase{};
    return usage([&] { return Rational::from_string(text); });
}

LimitMode mode_of(const FieldSpec& f) { return f.is_real() ? LimitMode::Real : LimitMode::Padic; }

std::string limit_text(const CurveLimit& c) { return c.limit ? c.limit->to_string() : "undefined: " + c.error; }

void cmd_eval(Context& ctx) {
    const Options& o = ctx.opt;
    const VariableList vars = resolve_vars(o, {o.expr});
    const RationalFunction f = parse_rf(o.expr, vars);
    const auto pt = parse_pt(o.at, vars.size());
    Report& r = ctx.report;
    r.inputs["f"] = f.to_string();
    r.inputs["variables"] = join(vars);
    r.inputs["point"] = join(pt);
    if (ctx.field.is_real()) {
        auto s = f.evaluate(pt);
        r.text("status", kind_name(s.kind));
        if (s.defined()) r.exact("value", *s.value);
    } else {
        const long p = ctx.field.prime;
        const int n = ctx.field.precision;
        auto s = f.evaluate(to_padic(pt, p, n), p, n);
        r.text("status", kind_name(s.kind));
        if (s.defined()) r.padic("value", *s.value);
    }
}

CurveProbeReport limits_report(Context& ctx, const RationalFunction& f, const CurveSuite& suite,
                               const LimitTarget& target) {
    CurveProbeReport probe = probe_curve_limits(f, suite, target, mode_of(ctx.field));
    for (const auto& e : probe.entries) ctx.report.exact("limit along " + e.limit.label, limit_text(e.limit));
    return probe;
}

void add_probe_verdict(Report& r, const CurveProbeReport& probe) {
    std::string detail = "all curves agree";
    if (probe.witness) {
        const auto& w = probe.entries[*probe.witness];
        detail = "witness " + w.limit.label + ": limit " + limit_text(w.limit) + ", target " +
                 (w.target ? w.target->to_string() : std::string("undefined"));
    }
    r.check("limits equal the target", probe.consistent, detail);
}

void cmd_limit(Context& ctx) {
    const Options& o = ctx.opt;
    const VariableList vars = resolve_vars(o, {o.expr});
    const RationalFunction f = parse_rf(o.expr, vars);
    const CurveSuite suite = build_suite(o, vars.size());
    std::optional<LimitTarget> target;
    if (!o.target.empty()) target = parse_target(o.target);
    ctx.report.inputs["f"] = f.to_string();
    ctx.report.inputs["variables"] = join(vars);
    CurveProbeReport probe = limits_report(ctx, f, suite, target ? *target : LimitTarget{ValueAtBase{}});
    if (target) add_probe_verdict(ctx.report, probe);
}

void sample_along_curves(Context& ctx, const RationalFunction& f, const CurveSuite& suite,
                         const CurveProbeReport& probe) {
    Report& r = ctx.report;
    for (const auto& e : probe.entries) {
        if (!e.target) continue;
        std::size_t idx = 0;
        while (suite.labels[idx] != e.limit.label) ++idx;
        const Curve& curve = suite.curves[idx];
        try {
            SamplingReport s;
            if (ctx.field.is_real()) {
                std::vector<ApproachLevel<FloatPoint>> levels;
                for (int k = 1; k <= 6; ++k) {
                    const double t = std::pow(10.0, -k);
                    levels.push_back({t, {curve.at(t)}});
                }
                const double v = e.target->to_double();
                s = probe_sampling(f, [v](const FloatPoint&) { return v; }, levels);
            } else {
                const long p = ctx.field.prime;
                const int n = ctx.field.precision;
                std::vector<ApproachLevel<PadicPoint>> levels;
                for (int k = 1; k <= 12; ++k)
                    levels.push_back({double(k), {to_padic(curve.at(Rational(p).pow(k)), p, n)}});
                const PadicNumber v = PadicNumber::from_rational(*e.target, p, n);
                s = probe_sampling(f, [v](const PadicPoint&) { return v; }, levels, p, n);
            }
            r.number("sampled deviation along " + e.limit.label, s.levels.back().max_deviation);
            if (s.nonvanishing) r.text("sampling along " + e.limit.label, "NONVANISHING");
        } catch (const MathError& err) {
            r.text("sampling along " + e.limit.label, err.what());
        }
    }
}

void cmd_probe(Context& ctx) {
    const Options& o = ctx.opt;
    const VariableList vars = resolve_vars(o, {o.expr});
    const RationalFunction f = parse_rf(o.expr, vars);
    const CurveSuite suite = build_suite(o, vars.size());
    const LimitTarget target = parse_target(o.target.empty() ? "base" : o.target);
    ctx.report.inputs["f"] = f.to_string();
    ctx.report.inputs["variables"] = join(vars);
    CurveProbeReport probe = limits_report(ctx, f, suite, target);
    if (o.sample) sample_along_curves(ctx, f, suite, probe);
    add_probe_verdict(ctx.report, probe);
}

void cmd_restrict(Context& ctx) {
    const Options& o = ctx.opt;
    const VariableList vars = resolve_vars(o, {o.expr});
    const RationalFunction f = parse_rf(o.expr, vars);
    if (o.order.empty() && o.curves.empty()) throw UsageError("restrict needs --order or --curve");
    Report& r = ctx.report;
    r.inputs["f"] = f.to_string();
    r.inputs["variables"] = join(vars);
    if (!o.order.empty()) {
        const VariableList order = usage([&] { return parse_variable_list(o.order); });
        try {
            r.exact("restriction along " + join(order), successive_restriction(f, order).to_string());
        } catch (const MathError& e) {
            if (e.code() != ErrorCode::RestrictionUndefined) throw;
            r.text("restriction along " + join(order), e.what());
        }
    }
    const CurveSuite suite = o.curves.empty() ? CurveSuite{} : build_suite(o, vars.size());
    for (std::size_t i = 0; i < suite.size(); ++i) {
        try {
            r.exact("on " + suite.labels[i], restrict_to_curve(f, suite.curves[i]).to_string());
        } catch (const MathError& e) {
            if (e.code() != ErrorCode::CurveInPoleLocus) throw;
            r.text("on " + suite.labels[i], e.what());
        }
    }
}

void cmd_extend_regular(Context& ctx) {
    const Options& o = ctx.opt;
    std::vector<std::string> texts = o.eqs;
    texts.insert(texts.end(), o.fractions.begin(), o.fractions.end());
    const VariableList vars = resolve_vars(o, texts);
    SubvarietyData data;
    data.ambient = vars;
    for (const auto& e : o.eqs) data.defining_eqs.push_back(parse_poly(e, vars));
    for (const auto& fr : o.fractions) {
        RationalFunction q = parse_rf(fr, vars);
        data.local_fractions.push_back({q.num(), q.den()});
    }
    for (const auto& z : o.z_points) data.z_points.push_back(parse_pt(z, vars.size()));
    Polynomial g = default_root_free(ctx.field);
    if (!o.g.empty()) {
        const VariableList gv = infer_variables({o.g});
        if (gv.size() > 1) throw UsageError("--g must be univariate");
        g = parse_poly(o.g, gv.empty() ? VariableList{"t"} : gv);
    }
    Report& r = ctx.report;
    r.inputs["variables"] = join(vars);
    r.inputs["g"] = g.to_string();
    for (std::size_t i = 0; i < data.defining_eqs.size(); ++i)
        r.inputs["equation " + std::to_string(i + 1)] = data.defining_eqs[i].to_string();
    for (std::size_t i = 0; i < o.fractions.size(); ++i)
        r.inputs["fraction " + std::to_string(i + 1)] = parse_rf(o.fractions[i], vars).to_string();

    const std::size_t samples = o.samples ? o.samples : 200;
    RegularExtension ext = extend_regular(data, g, {ctx.field, o.seed, samples});
    r.exact("F", ext.F.to_string());
    r.exact("G_r", ext.basis.G.to_string());
    std::vector<std::string> gens;
    for (const auto& q : ext.generators) gens.push_back(q.to_string());
    r.exact("generators", join(gens, "; "));

    std::size_t mismatches = 0;
    for (const auto& z : data.z_points) {
        auto v = ext.F.evaluate(z);
        for (const auto& [p, q] : data.local_fractions) {
            const Rational qz = q.evaluate(z);
            if (qz.is_zero()) continue;
            if (!v.defined() || *v.value != p.evaluate(z) / qz) ++mismatches;
        }
    }
    r.check("F matches the local fractions at the supplied points of Z", mismatches == 0,
            std::to_string(data.z_points.size()) + " points, " + std::to_string(mismatches) + " mismatches");
    r.check("G_r(q) nonvanishing at sampled points", true, std::to_string(samples) + " samples");
}

void cmd_extend_continuous(Context& ctx) {
    const Options& o = ctx.opt;
    const VariableList vars = resolve_vars(o, {o.P, o.Q, o.H});
    const ExtensionProblem prob{parse_poly(o.P, vars), parse_poly(o.Q, vars), parse_poly(o.H, vars)};
    Report& r = ctx.report;
    r.inputs["P"] = prob.P.to_string();
    r.inputs["Q"] = prob.Q.to_string();
    r.inputs["H"] = prob.H.to_string();
    r.inputs["variables"] = join(vars);
    const CurveSuite suite = build_suite(o, vars.size());

    if (o.n > 0) {
        std::vector<std::pair<std::string, Curve>> curves;
        for (std::size_t i = 0; i < suite.size(); ++i) curves.push_back({suite.labels[i], suite.curves[i]});
        ExtensionResult res = extend_continuous(prob, o.n, curves);
        r.exact("F", res.F.to_string());
        for (const auto& d : res.diagnostics) r.exact("limit along " + d.label, limit_text(d));
        return;
    }
    ExponentSearch search = find_extension_exponent(prob, suite, o.n_max);
    if (search.found) r.exact("n", std::to_string(search.n));
    r.exact("F", search.result.F.to_string());
    for (const auto& d : search.result.diagnostics) r.exact("limit along " + d.label, limit_text(d));
    std::string detail = search.found ? "n = " + std::to_string(search.n) + " on " + std::to_string(suite.size()) +
                                            " curves"
                                      : "not found up to n = " + std::to_string(o.n_max);
    if (!search.found && search.worst) detail += "; worst curve " + search.worst->label + " with limit " +
                                                 limit_text(*search.worst);
    r.check("exponent found", search.found, detail);
}

void cmd_loja(Context& ctx) {
    const Options& o = ctx.opt;
    const VariableList vars = resolve_vars(o, {o.phi, o.psi});
    LojasiewiczQuery q{parse_rf(o.phi, vars), parse_rf(o.psi, vars), {}, o.n_max};
    if (o.box.empty()) {
        q.region.bounds.assign(vars.size(), {Rational(-1), Rational(1)});
    } else {
        for (const auto& part : split_top_level(o.box, ',')) {
            auto colon = part.find(':');
            if (colon == std::string::npos) throw UsageError("box interval '" + part + "' must be lo:hi");
            q.region.bounds.push_back(usage([&] {
                return std::pair{Rational::from_string(part.substr(0, colon)),
                                 Rational::from_string(part.substr(colon + 1))};
            }));
        }
    }
    Report& r = ctx.report;
    r.inputs["phi"] = q.phi.to_string();
    r.inputs["psi"] = q.psi.to_string();
    r.inputs["variables"] = join(vars);
    std::vector<std::string> box;
    for (const auto& [lo, hi] : q.region.bounds) box.push_back(lo.to_string() + ":" + hi.to_string());
    r.inputs["box"] = join(box);

    const std::size_t samples = o.samples ? o.samples : std::size_t(o.grid) * o.grid;
    LojasiewiczEstimate est = usage([&] { return lojasiewicz_estimate(q, samples, o.seed); });
    if (est.found) {
        r.exact("n", std::to_string(est.n));
        r.number("bound", est.bound);
    }
    for (unsigned n = 1; n <= est.log_max.size(); ++n)
        r.number("max |psi|^" + std::to_string(n) + "/|phi|", std::exp(est.log_max[n - 1]));
    r.text("samples", std::to_string(est.samples));
    r.text("phi zero samples", std::to_string(est.phi_zero));
    r.text("containment violations", std::to_string(est.containment_violations));
    r.text("pole samples", std::to_string(est.poles));
    r.text("method", est.method);
    r.check("exponent estimate found within n_max", est.found,
            est.found ? "n = " + std::to_string(est.n) : "no n <= " + std::to_string(o.n_max) + " stabilized");
}

Stratum parse_stratum(const std::string& text) {
    auto first = text.find(':');
    auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos) throw UsageError("stratum '" + text + "' must be label:params:(chart)");
    Stratum s;
    s.label = text.substr(0, first);
    const std::string params = text.substr(first + 1, second - first - 1);
    if (!params.empty()) s.parameters = usage([&] { return parse_variable_list(params); });
    std::string chart = text.substr(second + 1);
    auto l = chart.find('('), rp = chart.rfind(')');
    if (l == std::string::npos || rp == std::string::npos || rp < l)
        throw UsageError("chart of stratum '" + s.label + "' must be parenthesized");
    for (const auto& c : split_top_level(chart.substr(l + 1, rp - l - 1), ','))
        s.chart.push_back(parse_rf(c, s.parameters));
    return s;
}

void cmd_hereditary(Context& ctx) {
    const Options& o = ctx.opt;
    const VariableList vars = resolve_vars(o, {o.expr});
    const RationalFunction f = parse_rf(o.expr, vars);
    Stratification strat;
    for (const auto& s : o.strata) strat.strata.push_back(parse_stratum(s));
    Report& r = ctx.report;
    r.inputs["f"] = f.to_string();
    r.inputs["variables"] = join(vars);
    for (std::size_t i = 0; i < o.strata.size(); ++i) r.inputs["stratum " + std::to_string(i + 1)] = o.strata[i];
    HereditaryReport h = usage([&] { return check_hereditary(f, strat, o.seed); });
    for (const auto& s : h.strata) {
        r.text("stratum " + s.label, to_string(s.verdict));
        if (s.restriction) r.exact("restriction to " + s.label, s.restriction->to_string());
        if (!s.detail.empty()) r.text("detail " + s.label, s.detail);
    }
    r.text("caveat", h.caveat);
}

void cmd_example(Context& ctx) {
    const Options& o = ctx.opt;
    const auto& ids = worked_example_ids();
    if (std::find(ids.begin(), ids.end(), o.id) == ids.end())
        throw UsageError("unknown example id '" + o.id + "'; known: " + join(ids, ", "));
    Report out = run_worked_example(o.id, {o.seed, o.grid, o.n_max, o.precision});
    out.args = ctx.report.args;
    ctx.report = std::move(out);
}

void record_args(const CLI::App& app, std::map<std::string, std::string>& args) {
    for (const CLI::Option* opt : app.get_options()) {
        if (opt->count() == 0) continue;
        std::string name = opt->get_name();
        if (name == "--help" || name == "-h") continue;
        args[name] = join(opt->results(), ";");
    }
}

} // namespace

std::vector<std::string> infer_variables(const std::vector<std::string>& expressions,
                                         const std::vector<std::string>& exclude) {
    std::set<std::string> names;
    for (const auto& text : expressions) {
        for (std::size_t i = 0; i < text.size();) {
            const unsigned char c = static_cast<unsigned char>(text[i]);
            if (std::isalpha(c) || c == '_') {
                std::size_t j = i;
                while (j < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                    ++j;
                names.insert(text.substr(i, j - i));
                i = j;
            } else if (std::isdigit(c)) {
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            } else {
                ++i;
            }
        }
    }
    for (const auto& e : exclude) names.erase(e);
    return {names.begin(), names.end()};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations with continuous rational functions", "crf"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", o.field, "real | padic:p[:N]");
    app.add_option("--seed", o.seed, "seed for all random sampling");
    app.add_option("--n-max", o.n_max, "largest exponent tried by searches");
    app.add_option("--grid", o.grid, "sampling resolution");
    app.add_option("--precision", o.precision, "p-adic relative precision N");
    app.add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timings", o.timings, "include wall-clock timings in the report");

    auto vars_opt = [&](CLI::App* sub) {
        sub->add_option("--vars", o.vars, "variables in order, e.g. x,y,z (default: sorted names in use)");
    };
    auto curve_opts = [&](CLI::App* sub) {
        sub->add_option("--curve", o.curves, "parametrized curve, e.g. \"(t^2, t)\"");
        sub->add_option("--base", o.base, "base point for the default curve suite");
        sub->add_option("--param", o.param, "curve parameter name");
    };

    std::map<std::string, std::function<void(Context&)>> handlers;
    std::vector<CLI::App*> subs;

    auto* eval = app.add_subcommand("eval", "evaluate f at a point");
    eval->add_option("expr", o.expr)->required();
    eval->add_option("--at", o.at, "comma separated rationals")->required();
    vars_opt(eval);
    handlers["eval"] = cmd_eval;

    auto* limit = app.add_subcommand("limit", "exact limits along curves");
    limit->add_option("expr", o.expr)->required();
    limit->add_option("--target", o.target, "rational or 'base'");
    vars_opt(limit);
    curve_opts(limit);
    handlers["limit"] = cmd_limit;

    auto* restrict = app.add_subcommand("restrict", "successive restriction or restriction to a curve");
    restrict->add_option("expr", o.expr)->required();
    restrict->add_option("--order", o.order, "variables set to 0 in turn, e.g. x,y");
    vars_opt(restrict);
    restrict->add_option("--curve", o.curves, "parametrized curve");
    restrict->add_option("--param", o.param, "curve parameter name");
    handlers["restrict"] = cmd_restrict;

    auto* ext_reg = app.add_subcommand("extend-regular", "regular extension from a subvariety");
    ext_reg->add_option("--eq", o.eqs, "defining equation of Z (repeatable)");
    ext_reg->add_option("--fraction", o.fractions, "local fraction p/q of f on Z (repeatable)")->required();
    ext_reg->add_option("--z-point", o.z_points, "rational point of Z (repeatable)");
    ext_reg->add_option("--g", o.g, "root-free monic univariate polynomial");
    ext_reg->add_option("--samples", o.samples, "random points for the nonvanishing check");
    vars_opt(ext_reg);
    handlers["extend-regular"] = cmd_extend_regular;

    auto* ext_cont = app.add_subcommand("extend-continuous", "F_2n extension and exponent search");
    ext_cont->add_option("--P", o.P)->required();
    ext_cont->add_option("--Q", o.Q)->required();
    ext_cont->add_option("--H", o.H)->required();
    ext_cont->add_option("--n", o.n, "fixed exponent; omit to search 1..n-max");
    vars_opt(ext_cont);
    curve_opts(ext_cont);
    handlers["extend-continuous"] = cmd_extend_continuous;

    auto* probe = app.add_subcommand("probe", "continuity probe along test curves");
    probe->add_option("expr", o.expr)->required();
    probe->add_option("--target", o.target, "rational or 'base' (default)");
    probe->add_flag("--sample", o.sample, "also sample numerically along each curve");
    vars_opt(probe);
    curve_opts(probe);
    handlers["probe"] = cmd_probe;

    auto* loja = app.add_subcommand("loja", "estimate n with |psi|^n <= C |phi|");
    loja->add_option("--phi", o.phi)->required();
    loja->add_option("--psi", o.psi)->required();
    loja->add_option("--box", o.box, "lo:hi per variable, comma separated (default [-1,1]^d)");
    loja->add_option("--samples", o.samples, "sample count (default grid^2)");
    vars_opt(loja);
    handlers["loja"] = cmd_loja;

    auto* hered = app.add_subcommand("hereditary", "regularity of f on the strata of a stratification");
    hered->add_option("expr", o.expr)->required();
    hered->add_option("--stratum", o.strata, "label:params:(chart), smallest stratum first")->required();
    vars_opt(hered);
    handlers["hereditary"] = cmd_hereditary;

    auto* example = app.add_subcommand("paper-example", "run a scripted worked example");
    example->add_option("--id", o.id, join(worked_example_ids(), ", "))->required();
    handlers["paper-example"] = cmd_example;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return kExitOk;
        err << app.help();
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Report report;
    report.command = chosen->get_name();
    record_args(app, report.args);
    record_args(*chosen, report.args);
    const auto start = std::chrono::steady_clock::now();
    try {
        FieldSpec field = usage([&] { return FieldSpec::parse(o.field, o.precision); });
        report.field = field.to_string();
        Context ctx{o, field, report};
        handlers.at(report.command)(ctx);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        report.check("computation", false, std::string(to_string(e.code())) + ": " + e.what());
    }
    if (o.timings) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report.timings = std::map<std::string, double>{
            {"total_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
    }
    out << emit_report(report, o.format == "text" ? Format::Text : Format::Json);
    return report.all_passed() ? kExitOk : kExitFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"crf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace crf::cli
