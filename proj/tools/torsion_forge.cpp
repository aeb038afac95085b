#include "torsionforge/anomaly.hpp"
#include "torsionforge/catalog.hpp"
#include "torsionforge/cohomology.hpp"
#include "torsionforge/connection.hpp"
#include "torsionforge/errors.hpp"
#include "torsionforge/holonomy.hpp"
#include "torsionforge/reference_tables.hpp"
#include "torsionforge/su3.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace torsionforge;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 3;

int env_threads() {
    if (const char* v = std::getenv("TORSION_FORGE_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return static_cast<int>(n);
    }
    return 0;
}

Rational rat(const std::string& text) { return rational_from_string(text); }

std::vector<std::string> algebras_for(const std::string& selector) {
    if (selector == "all") return {"h3", "sl2c", "g7"};
    return {selector};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
    if (!out) throw Error("write to '" + path + "' failed");
}

// One named boolean outcome; every subcommand that certifies anything
// accumulates these and derives its exit code from the failures.
struct CheckLine {
    std::string name;
    bool ok;
};

class CheckSet {
public:
    void record(const std::string& name, bool ok) {
        lines_.push_back({name, ok});
        std::cout << (ok ? "PASS  " : "FAIL  ") << name << "\n";
    }
    bool all_ok() const {
        for (const auto& line : lines_) {
            if (!line.ok) return false;
        }
        return true;
    }
    int passed() const {
        int n = 0;
        for (const auto& line : lines_) n += line.ok ? 1 : 0;
        return n;
    }
    const std::vector<CheckLine>& lines() const { return lines_; }
    ordered_json to_json() const {
        ordered_json failures = ordered_json::array();
        for (const auto& line : lines_) {
            if (!line.ok) failures.push_back(line.name);
        }
        ordered_json out;
        out["checks"] = static_cast<int>(lines_.size());
        out["passed"] = passed();
        out["failed"] = std::move(failures);
        return out;
    }

private:
    std::vector<CheckLine> lines_;
};

int finish(const CheckSet& checks, bool json) {
    if (json) std::cout << checks.to_json().dump(2) << "\n";
    if (checks.all_ok()) {
        std::cout << "all " << checks.passed() << " checks passed\n";
        return kExitPass;
    }
    std::cout << (checks.lines().size() - checks.passed()) << " of " << checks.lines().size()
              << " checks failed\n";
    return kExitMismatch;
}

// d(a ^ b) = da ^ b + (-1)^deg(a) a ^ db on pseudo-random sparse forms.
int leibniz_failures(const Model& m, int trials) {
    std::mt19937 rng(91u);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick_da(1, 3);
    int bad = 0;
    for (int n = 0; n < trials; ++n) {
        const int da = pick_da(rng);
        std::uniform_int_distribution<int> pick_db(1, std::min(3, 5 - da));
        const int db = pick_db(rng);
        KForm a(m.ring, da);
        KForm b(m.ring, db);
        for (const auto& tup : basis_tuples(da))
            if (int v = coeff(rng); v != 0) a.add_term(tup, Scalar::constant(m.ring, Rational(v)));
        for (const auto& tup : basis_tuples(db))
            if (int v = coeff(rng); v != 0) b.add_term(tup, Scalar::constant(m.ring, Rational(v)));
        KForm lhs = m.algebra->d(wedge(a, b));
        KForm sign_db = wedge(a, m.algebra->d(b));
        if (da % 2 == 1) sign_db = Scalar::constant(m.ring, Rational(-1)) * sign_db;
        if (lhs != wedge(m.algebra->d(a), b) + sign_db) ++bad;
    }
    return bad;
}

// nabla^{eps,rho} J = -2 (eps + rho - 1/2) nabla^{LC} J, all parameters
// symbolic.
bool family_nabla_j_relation(const Model& m) {
    Scalar eps = Scalar::var(m.ring, "eps");
    Scalar rho = Scalar::var(m.ring, "rho");
    Tensor3 family = nabla_J(family_connection(*m.structure, eps, rho));
    Scalar factor = Scalar::constant(m.ring, Rational(-2))
                    * (eps + rho - Scalar::constant(m.ring, Rational(1, 2)));
    return family == factor * nabla_J(levi_civita(*m.structure));
}

void run_identity_suite(const std::string& name, CheckSet& checks) {
    Model m = builtin(name);
    bool d2 = true;
    for (int k = 1; k <= 6; ++k) d2 = d2 && m.algebra->d(m.algebra->d_basis(k)).is_zero();
    checks.record(name + " d^2 = 0 on basis covectors", d2);
    checks.record(name + " Leibniz law on 100 random pairs", leibniz_failures(m, 100) == 0);
    checks.record(name + " family nabla J proportional to Levi-Civita nabla J",
                  family_nabla_j_relation(m));
    checks.record(name + " balanced: d(F^2) = 0", balanced_check(*m.structure));
    checks.record(name + " volume form closed", psi_closed_check(*m.structure));
}

void run_appendix_suite(const std::string& name, CheckSet& checks) {
    std::vector<std::pair<std::string, BuiltinOptions>> runs;
    if (name == "g7") {
        runs.push_back({name + " curvature table, delta symbolic", {}});
        BuiltinOptions plus;
        plus.delta = 1;
        runs.push_back({name + " curvature table, delta = +1", plus});
        BuiltinOptions minus;
        minus.delta = -1;
        runs.push_back({name + " curvature table, delta = -1", minus});
    } else {
        runs.push_back({name + " curvature table", {}});
    }
    for (const auto& [label, options] : runs) {
        FixtureReport report = check_curvature_fixtures(name, options);
        if (report.ok()) {
            checks.record(label + " (" + std::to_string(report.passed.size()) + " forms)", true);
        } else {
            checks.record(label + ": first mismatch " + report.failed.front(), false);
        }
    }
}

struct VerifyArgs {
    std::string algebra = "all";
    std::string suite = "all";
    std::string file;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    CheckSet checks;
    if (!args.file.empty()) {
        if (args.algebra == "all")
            throw Error("--file needs a single --algebra to compare against");
        Model parsed = parse_model(read_file(args.file));
        FixtureReport report = check_model_curvature(parsed, args.algebra);
        if (report.ok()) {
            checks.record(args.file + " matches the " + args.algebra + " curvature table ("
                              + std::to_string(report.passed.size()) + " forms)",
                          true);
        } else {
            checks.record(args.file + ": first mismatch " + report.failed.front(), false);
        }
        checks.record(args.file + " balanced: d(F^2) = 0", balanced_check(*parsed.structure));
        checks.record(args.file + " volume form closed", psi_closed_check(*parsed.structure));
        return finish(checks, args.json);
    }
    for (const std::string& name : algebras_for(args.algebra)) {
        if (args.suite == "appendix" || args.suite == "all") run_appendix_suite(name, checks);
        if (args.suite == "identities" || args.suite == "all") run_identity_suite(name, checks);
    }
    return finish(checks, args.json);
}

std::string status_name(AnomalyStatus s) {
    switch (s) {
        case AnomalyStatus::Unique: return "unique";
        case AnomalyStatus::NoSolution: return "no_solution";
        default: return "underdetermined";
    }
}

std::optional<int> constant_sign(const Scalar& v) {
    if (!v.is_constant()) return std::nullopt;
    return sign_of(v.eval({}));
}

// Everything the anomaly pipeline produces for one gauge choice.
struct PipelineResult {
    AnomalyResult anomaly;
    bool gauge_is_instanton;
    bool gauge_flat;
    bool family_is_instanton;
    bool motion;
};

PipelineResult run_pipeline(const Model& m, const Scalar& eps, const Scalar& rho,
                            const Connection& gauge) {
    Connection conn = family_connection(*m.structure, eps, rho);
    Curvature qc = curvature(*m.algebra, conn);
    Curvature qg = curvature(*m.algebra, gauge);
    KForm dt = m.algebra->d(torsion_T(*m.structure));
    return {solve_alpha(dt, pontrjagin_trace(qc), pontrjagin_trace(qg)),
            instanton_check(qg), qg.is_zero(), instanton_check(qc),
            motion_equations_check(*m.structure, eps, rho, gauge)};
}

ordered_json pipeline_json(const PipelineResult& p) {
    ordered_json out;
    out["status"] = status_name(p.anomaly.status);
    if (p.anomaly.alpha) {
        out["alpha"] = p.anomaly.alpha->str();
        if (auto s = constant_sign(*p.anomaly.alpha)) out["alpha_sign"] = *s;
    }
    if (p.anomaly.residual) out["residual"] = p.anomaly.residual->str();
    out["gauge_is_instanton"] = p.gauge_is_instanton;
    out["gauge_flat"] = p.gauge_flat;
    out["family_is_instanton"] = p.family_is_instanton;
    out["motion_equations"] = p.motion;
    return out;
}

struct SolveArgs {
    std::string algebra;
    std::string eps, rho;
    std::string t, r, u1, u2, lambda, mu;
    std::string gauge = "flat";
    int delta = 1;
    bool require_positive = false;
    bool json = false;
};

void print_solve_report(const ordered_json& report, bool json) {
    if (json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            std::cout << key << ":\n";
            for (const auto& [k2, v2] : value.items())
                std::cout << "  " << k2 << " = "
                          << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << "\n";
        } else {
            std::cout << key << " = "
                      << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

int run_solve(const SolveArgs& args) {
    ordered_json report;
    report["algebra"] = args.algebra;
    report["eps"] = args.eps;
    report["rho"] = args.rho;

    if (args.algebra == "g7") {
        if (args.r.empty() || args.t.empty())
            throw Error("solve --algebra g7 needs --r and --t");
        const Rational eps = rat(args.eps), rho = rat(args.rho);
        const Rational r = rat(args.r), t = rat(args.t);
        const Rational u1 = args.u1.empty() ? Rational(0) : rat(args.u1);
        const Rational u2 = args.u2.empty() ? Rational(0) : rat(args.u2);
        BuiltinOptions opt;
        opt.delta = args.delta;
        opt.values = {{"r", r}, {"t", t}, {"u1", u1}, {"u2", u2}};

        if (u1 == 0 && u2 == 0) {
            if (args.mu.empty()) throw Error("solve --algebra g7 with u = 0 needs --mu");
            const Rational mu = rat(args.mu);
            const Rational lambda = args.lambda.empty() ? Rational(0) : rat(args.lambda);
            G7Outcome closed = solve_g7_u0(eps, rho, r, t, mu);
            if (closed.ok()) {
                report["alpha_closed_form"] = to_string(closed.solution->alpha);
                report["alpha_sign"] = sign_of(closed.solution->alpha);
            } else {
                report["failure"] = to_string(*closed.failure);
            }
            Model m = builtin("g7", opt);
            Connection gauge = g7_instanton(m.ring, Scalar::constant(m.ring, lambda),
                                            Scalar::constant(m.ring, mu));
            report["anomaly"] = pipeline_json(run_pipeline(m, Scalar::constant(m.ring, eps),
                                                           Scalar::constant(m.ring, rho), gauge));
        } else {
            G7Outcome closed = solve_g7(eps, rho, r, t, u1, u2, args.require_positive);
            if (closed.ok()) {
                report["mu_squared"] = to_string(closed.solution->mu_squared);
                report["alpha"] = to_string(closed.solution->alpha);
                report["alpha_sign"] = sign_of(closed.solution->alpha);
                if (auto mu = exact_sqrt(closed.solution->mu_squared)) {
                    Model m = builtin("g7", opt);
                    Connection gauge = g7_instanton(m.ring, Scalar::constant(m.ring, Rational(0)),
                                                    Scalar::constant(m.ring, *mu));
                    report["anomaly"] = pipeline_json(
                        run_pipeline(m, Scalar::constant(m.ring, eps),
                                     Scalar::constant(m.ring, rho), gauge));
                } else {
                    report["note"] = "mu is irrational at this point; closed form only";
                }
            } else {
                report["failure"] = to_string(*closed.failure);
            }
        }
        print_solve_report(report, args.json);
        return kExitPass;
    }

    BuiltinOptions opt;
    if (!args.t.empty()) opt.values["t"] = rat(args.t);
    Model m = builtin(args.algebra, opt);
    const Scalar eps = parse_scalar(m.ring, args.eps);
    const Scalar rho = parse_scalar(m.ring, args.rho);
    if (args.algebra == "h3") {
        Scalar lambda = args.lambda.empty() ? Scalar::var(m.ring, "lambda")
                                            : Scalar::constant(m.ring, rat(args.lambda));
        report["anomaly"] = pipeline_json(run_pipeline(m, eps, rho, h3_instanton(m.ring, lambda)));
    } else {
        Connection gauge = args.gauge == "bismut"
                               ? family_connection(*m.structure,
                                                   Scalar::constant(m.ring, Rational(1, 2)),
                                                   Scalar::constant(m.ring, Rational(0)))
                               : flat_connection(m.ring);
        report["gauge"] = args.gauge;
        report["anomaly"] = pipeline_json(run_pipeline(m, eps, rho, gauge));
    }
    print_solve_report(report, args.json);
    return kExitPass;
}

struct ScanArgs {
    std::string grid = "-2:2:1/20";
    std::string csv;
    std::string svg;
    int threads = 0;
};

int run_scan(const ScanArgs& args) {
    const auto first = args.grid.find(':');
    const auto second = first == std::string::npos ? std::string::npos
                                                   : args.grid.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw Error("--grid expects lo:hi:step");
    GridSpec grid;
    grid.lo = rat(args.grid.substr(0, first));
    grid.hi = rat(args.grid.substr(first + 1, second - first - 1));
    grid.step = rat(args.grid.substr(second + 1));

    const std::string csv = scan_region_csv(grid, args.threads);
    if (args.csv.empty() || args.csv == "-") {
        std::cout << csv;
    } else {
        write_file(args.csv, csv);
        std::cout << "wrote " << args.csv << "\n";
    }
    if (!args.svg.empty()) {
        write_file(args.svg, region_svg());
        std::cout << "wrote " << args.svg << "\n";
    }
    return kExitPass;
}

struct HolonomyArgs {
    std::string algebra;
    std::string t = "1", r = "1", u1, u2, u;
    int delta = 1;
    bool json = false;
};

int run_holonomy(const HolonomyArgs& args) {
    Model m = builtin(args.algebra);
    Connection bismut = family_connection(*m.structure, Scalar::constant(m.ring, Rational(1, 2)),
                                          Scalar::constant(m.ring, Rational(0)));
    Assignment values{{"t", rat(args.t)}};
    if (args.algebra == "g7") {
        values["r"] = rat(args.r);
        values["u1"] = !args.u1.empty() ? rat(args.u1)
                       : !args.u.empty() ? rat(args.u)
                                         : Rational(0);
        values["u2"] = args.u2.empty() ? Rational(0) : rat(args.u2);
        values["delta"] = Rational(args.delta);
    }
    HolonomyResult res = holonomy_dimension(*m.structure, bismut, values);
    if (args.json) {
        std::cout << holonomy_report_json({{args.algebra, values, res}}) << "\n";
    } else {
        std::cout << args.algebra << ": holonomy dimension " << res.dimension << ", "
                  << res.classification << " (" << res.generators_count << " curvature generators, "
                  << res.iterations << " closure passes)\n";
    }
    return kExitPass;
}

struct CohomologyArgs {
    std::string algebra;
    bool json = false;
};

int run_cohomology(const CohomologyArgs& args) {
    Model m = builtin(args.algebra);
    const KForm& f = m.structure->fundamental_form();
    std::vector<std::pair<std::string, KForm>> queries = {
        {"F^2", wedge(f, f)},
        {"e12345", KForm::basis(m.ring, {1, 2, 3, 4, 5})},
        {"e123456", KForm::basis(m.ring, {1, 2, 3, 4, 5, 6})},
    };
    CupProductResult cup = cup_product_L_check(*m.algebra, *m.structure);
    if (args.json) {
        ordered_json out;
        out["algebra"] = args.algebra;
        out["queries"] = ordered_json::parse(cohomology_report_json(*m.algebra, queries));
        ordered_json cp;
        cp["injective"] = cup.injective;
        cp["closed_one_forms"] = cup.closed_one_forms;
        if (cup.kernel_witness) cp["kernel_witness"] = cup.kernel_witness->str();
        out["cup_product"] = std::move(cp);
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    for (const auto& [name, omega] : queries) {
        const bool closed = m.algebra->d(omega).is_zero();
        ExactnessResult res;
        if (closed) res = is_exact(*m.algebra, omega);
        std::cout << name << ": " << (closed ? "closed" : "not closed") << ", "
                  << (closed && res.exact ? "exact" : "not exact");
        if (res.witness && !res.witness->is_zero()) std::cout << ", witness " << res.witness->str();
        std::cout << "\n";
    }
    std::cout << "cup product with F^2: "
              << (cup.injective ? "injective on closed 1-forms"
                                : "kernel witness " + cup.kernel_witness->str())
              << " (" << cup.closed_one_forms << " closed 1-forms)\n";
    return kExitPass;
}

// Exact sign of the anomaly ratio at a concrete point, through the full
// curvature pipeline.
int h3_alpha_sign(const Rational& eps, const Rational& rho) {
    BuiltinOptions opt;
    opt.values = {{"t", Rational(1)}};
    Model m = builtin("h3", opt);
    Connection gauge = h3_instanton(m.ring, Scalar::constant(m.ring, Rational(1)));
    PipelineResult p = run_pipeline(m, Scalar::constant(m.ring, eps),
                                    Scalar::constant(m.ring, rho), gauge);
    if (p.anomaly.status != AnomalyStatus::Unique || !p.anomaly.alpha) return 0;
    return constant_sign(*p.anomaly.alpha).value_or(0);
}

int sl2c_alpha_sign(const Rational& eps, const Rational& rho, bool bismut_gauge) {
    BuiltinOptions opt;
    opt.values = {{"t", Rational(1)}};
    Model m = builtin("sl2c", opt);
    Connection gauge = bismut_gauge
                           ? family_connection(*m.structure,
                                               Scalar::constant(m.ring, Rational(1, 2)),
                                               Scalar::constant(m.ring, Rational(0)))
                           : flat_connection(m.ring);
    PipelineResult p = run_pipeline(m, Scalar::constant(m.ring, eps),
                                    Scalar::constant(m.ring, rho), gauge);
    if (p.anomaly.status != AnomalyStatus::Unique || !p.anomaly.alpha) return 0;
    return constant_sign(*p.anomaly.alpha).value_or(0);
}

bool motion_at(const std::string& name, const BuiltinOptions& opt, const Rational& eps,
               const Rational& rho, const std::function<Connection(const Model&)>& gauge_of) {
    Model m = builtin(name, opt);
    return motion_equations_check(*m.structure, Scalar::constant(m.ring, eps),
                                  Scalar::constant(m.ring, rho), gauge_of(m));
}

struct Table1Args {
    bool json = false;
};

int run_table1(const Table1Args& args) {
    CheckSet checks;

    {  // Nilpotent rows: sign flips across rho = eps + 1/2, motion only at (1/2,0).
        checks.record("h3 | rho >= eps+1/2 | alpha < 0 at (0,1),(0,1/2),(-1,0)",
                      h3_alpha_sign(0, 1) < 0 && h3_alpha_sign(0, Rational(1, 2)) < 0
                          && h3_alpha_sign(-1, 0) < 0);
        checks.record("h3 | rho <  eps+1/2 | alpha > 0 at (0,0),(1/2,0),(1,0)",
                      h3_alpha_sign(0, 0) > 0 && h3_alpha_sign(Rational(1, 2), 0) > 0
                          && h3_alpha_sign(1, 0) > 0);
        BuiltinOptions opt;
        opt.values = {{"t", Rational(1)}};
        Model m = builtin("h3", opt);
        auto gauge = [](const Model& mm) {
            return h3_instanton(mm.ring, Scalar::constant(mm.ring, Rational(1)));
        };
        checks.record("h3 | family connection non-flat",
                      !curvature(*m.algebra,
                                 family_connection(*m.structure,
                                                   Scalar::constant(m.ring, Rational(0)),
                                                   Scalar::constant(m.ring, Rational(1))))
                           .is_zero());
        checks.record("h3 | motion equations hold only for the Bismut member",
                      motion_at("h3", opt, Rational(1, 2), 0, gauge)
                          && !motion_at("h3", opt, 0, 0, gauge)
                          && !motion_at("h3", opt, 0, Rational(1, 2), gauge));
        checks.record("h3 | holonomy dimension 1, u(1)", [&] {
            HolonomyResult res = holonomy_dimension(
                *m.structure,
                family_connection(*m.structure, Scalar::constant(m.ring, Rational(1, 2)),
                                  Scalar::constant(m.ring, Rational(0))),
                {});
            return res.dimension == 1 && res.classification == "u(1)";
        }());
        Model sym = builtin("h3");
        const KForm& f = sym.structure->fundamental_form();
        checks.record("h3 | [F^2] non-trivial", !is_exact(*sym.algebra, wedge(f, f)).exact);
    }

    {  // Semisimple rows: flat gauge tracks sign beta, Bismut gauge sign (beta - 8).
        checks.record("sl2c | flat gauge | sign alpha = sign beta at (1/2,0),(0,0),(-1/2,0)",
                      sl2c_alpha_sign(Rational(1, 2), 0, false) == 1
                          && sl2c_alpha_sign(0, 0, false) == 1
                          && sl2c_alpha_sign(Rational(-1, 2), 0, false) == -1);
        checks.record("sl2c | Bismut gauge | sign alpha = sign (beta-8) at (0,0),(1,0),(-1/2,0)",
                      sl2c_alpha_sign(0, 0, true) == -1 && sl2c_alpha_sign(1, 0, true) == 1
                          && sl2c_alpha_sign(Rational(-1, 2), 0, true) == -1);
        BuiltinOptions opt;
        opt.values = {{"t", Rational(1)}};
        Model m = builtin("sl2c", opt);
        Connection bismut = family_connection(*m.structure,
                                              Scalar::constant(m.ring, Rational(1, 2)),
                                              Scalar::constant(m.ring, Rational(0)));
        checks.record("sl2c | flat gauge is flat, Bismut gauge is a non-flat instanton",
                      curvature(*m.algebra, flat_connection(m.ring)).is_zero()
                          && !curvature(*m.algebra, bismut).is_zero()
                          && instanton_check(curvature(*m.algebra, bismut)));
        checks.record("sl2c | motion equations only for the Bismut member",
                      motion_at("sl2c", opt, Rational(1, 2), 0,
                                [](const Model& mm) { return flat_connection(mm.ring); })
                          && !motion_at("sl2c", opt, 0, 0,
                                        [](const Model& mm) { return flat_connection(mm.ring); }));
        checks.record("sl2c | holonomy dimension 3, so(3)", [&] {
            HolonomyResult res = holonomy_dimension(*m.structure, bismut, {});
            return res.dimension == 3 && res.classification == "so(3)";
        }());
        Model sym = builtin("sl2c");
        const KForm& f = sym.structure->fundamental_form();
        checks.record("sl2c | [F^2] trivial", is_exact(*sym.algebra, wedge(f, f)).exact);
    }

    {  // Solvable rows with u = 0 mirror the nilpotent sign split.
        auto alpha_u0 = [](const Rational& eps, const Rational& rho) {
            G7Outcome out = solve_g7_u0(eps, rho, 1, 2, 1);
            return out.ok() ? sign_of(out.solution->alpha) : 0;
        };
        checks.record("g7 u=0 | rho >= eps+1/2 | alpha < 0 at (0,1),(0,1/2)",
                      alpha_u0(0, 1) < 0 && alpha_u0(0, Rational(1, 2)) < 0);
        checks.record("g7 u=0 | rho <  eps+1/2 | alpha > 0 at (0,0),(1/2,0)",
                      alpha_u0(0, 0) > 0 && alpha_u0(Rational(1, 2), 0) > 0);
        BuiltinOptions opt;
        opt.delta = 1;
        opt.values = {{"r", Rational(1)}, {"t", Rational(2)}, {"u1", Rational(0)},
                      {"u2", Rational(0)}};
        auto gauge = [](const Model& mm) {
            return g7_instanton(mm.ring, Scalar::constant(mm.ring, Rational(0)),
                                Scalar::constant(mm.ring, Rational(1)));
        };
        Model m = builtin("g7", opt);
        checks.record("g7 u=0 | gauge instanton non-flat",
                      !curvature(*m.algebra, gauge(m)).is_zero());
        PipelineResult p = run_pipeline(m, Scalar::constant(m.ring, Rational(1, 2)),
                                        Scalar::constant(m.ring, Rational(0)), gauge(m));
        checks.record("g7 u=0 | closed form matches the curvature pipeline at (1/2,0)",
                      p.anomaly.status == AnomalyStatus::Unique && p.anomaly.alpha
                          && *p.anomaly.alpha == Scalar::constant(m.ring, Rational(2, 15)));
        checks.record("g7 u=0 | motion equations only for the Bismut member",
                      motion_at("g7", opt, Rational(1, 2), 0, gauge)
                          && !motion_at("g7", opt, 0, 0, gauge)
                          && !motion_at("g7", opt, 0, Rational(1, 2), gauge));
        checks.record("g7 u=0 | holonomy dimension 1, u(1)", [&] {
            Model mm = builtin("g7");
            Connection bismut = family_connection(*mm.structure,
                                                  Scalar::constant(mm.ring, Rational(1, 2)),
                                                  Scalar::constant(mm.ring, Rational(0)));
            HolonomyResult res = holonomy_dimension(
                *mm.structure, bismut,
                {{"r", Rational(1)}, {"t", Rational(1)}, {"u1", Rational(0)},
                 {"u2", Rational(0)}, {"delta", Rational(1)}});
            return res.dimension == 1 && res.classification == "u(1)";
        }());
    }

    {  // Solvable rows with u != 0: flat solutions only at the two radical
       // points, negative alpha on Delta minus Delta_+, positive on Delta_+.
        std::vector<Ring::Decl> decls{{"w", ParamKind::Radical, {{Rational(7), {}}}}};
        RingPtr ring = Ring::make(decls);
        Scalar w = Scalar::var(ring, "w");
        bool radical_ok = true;
        for (int branch : {1, -1}) {
            Scalar sw = Scalar::constant(ring, Rational(branch)) * w;
            Scalar eighth = Scalar::constant(ring, Rational(1, 8));
            Scalar eps = eighth * (Scalar::constant(ring, Rational(1)) - sw);
            Scalar rho = eighth * (Scalar::constant(ring, Rational(3)) - sw);
            RegionReport rep = region_report(eps, rho);
            radical_ok = radical_ok && rep.L.is_zero() && rep.N.is_zero()
                         && rep.Z == Scalar::constant(ring, Rational(3, 4))
                         && rep.W == Scalar::constant(ring, Rational(-1));
        }
        // mu^2 = -2 (L t^4 + N |u|^2) / (t^2 P) vanishes with L = N = 0, so
        // the abelian gauge field is flat; alpha at the witness (r,t,u) =
        // (2,2,1) is 2 t^2 P / (Z t^4 + W |u|^2) = 120/11 > 0.
        const Rational alpha_radical = Rational(2) * Rational(4) * Rational(15)
                                       / (Rational(3, 4) * Rational(16) + Rational(-1));
        checks.record("g7 u!=0 | flat solutions at the two radical points with alpha > 0",
                      radical_ok && sign_of(alpha_radical) > 0
                          && alpha_radical == Rational(120, 11));
        {
            Model m = builtin("g7");
            checks.record("g7 u!=0 | lambda e5 gauge field is flat",
                          curvature(*m.algebra,
                                    g7_instanton(m.ring, Scalar::constant(m.ring, Rational(1)),
                                                 Scalar::constant(m.ring, Rational(0))))
                              .is_zero());
        }

        auto delta_row = [](const Rational& eps, const Rational& rho, const Rational& r,
                            const Rational& t, const Rational& u1) {
            return std::make_pair(region_report(eps, rho), solve_g7(eps, rho, r, t, u1, 0, false));
        };
        {
            auto [rep, out] = delta_row(0, 1, 2, 1, 1);
            checks.record("g7 u!=0 | Delta minus Delta_+ | (0,1): alpha < 0, mu^2 > 0",
                          rep.in_delta && !rep.in_delta_plus && out.ok()
                              && sign_of(out.solution->alpha) < 0
                              && sign_of(out.solution->mu_squared) > 0);
        }
        {
            auto [rep, out] = delta_row(Rational(1, 6), Rational(1, 3), 2, 1, 1);
            checks.record("g7 u!=0 | Delta minus Delta_+ | (1/6,1/3): alpha < 0, mu^2 > 0",
                          rep.in_delta && !rep.in_delta_plus && out.ok()
                              && sign_of(out.solution->alpha) < 0
                              && sign_of(out.solution->mu_squared) > 0);
        }
        {
            auto [rep, out] = delta_row(0, Rational(1, 2), 2, 1, 3);
            checks.record("g7 u!=0 | Delta_+ | Chern point: alpha = 14 > 0",
                          rep.in_delta_plus && out.ok() && out.solution->alpha == Rational(14)
                              && out.solution->mu_squared == Rational(5));
        }
        {
            auto [rep, out] = delta_row(Rational(1, 2), 0, 2, 2, 1);
            checks.record("g7 u!=0 | Delta_+ | Bismut point: alpha = 30 > 0",
                          rep.in_delta_plus && out.ok() && out.solution->alpha == Rational(30));
        }
        checks.record("g7 u!=0 | holonomy dimension 8, su(3)", [&] {
            Model m = builtin("g7");
            Connection bismut = family_connection(*m.structure,
                                                  Scalar::constant(m.ring, Rational(1, 2)),
                                                  Scalar::constant(m.ring, Rational(0)));
            HolonomyResult res = holonomy_dimension(
                *m.structure, bismut,
                {{"r", Rational(3)}, {"t", Rational(1)}, {"u1", Rational(1)},
                 {"u2", Rational(4)}, {"delta", Rational(1)}});
            return res.dimension == 8 && res.classification == "su(3)";
        }());
        Model sym = builtin("g7");
        const KForm& f = sym.structure->fundamental_form();
        checks.record("g7 | [F^2] non-trivial", !is_exact(*sym.algebra, wedge(f, f)).exact);
    }

    return finish(checks, args.json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and solving for invariant torsion geometries "
                 "on six-dimensional Lie algebras"};
    app.require_subcommand(1);
    const std::vector<std::string> algebra_names{"h3", "sl2c", "g7"};
    const std::vector<std::string> algebra_or_all{"h3", "sl2c", "g7", "all"};

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check symbolic identities and curvature tables");
    verify->add_option("--algebra", verify_args.algebra, "h3, sl2c, g7 or all")
        ->check(CLI::IsMember(algebra_or_all));
    verify->add_option("--suite", verify_args.suite, "appendix, identities or all")
        ->check(CLI::IsMember({"appendix", "identities", "all"}));
    verify->add_option("--file", verify_args.file, "model file to check against --algebra");
    verify->add_flag("--json", verify_args.json, "emit a JSON summary");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve the anomaly equation at a point");
    solve->add_option("--algebra", solve_args.algebra, "h3, sl2c or g7")
        ->required()
        ->check(CLI::IsMember(algebra_names));
    solve->add_option("--eps", solve_args.eps, "family parameter eps")->required();
    solve->add_option("--rho", solve_args.rho, "family parameter rho")->required();
    solve->add_option("--t", solve_args.t, "metric parameter t (symbolic when omitted)");
    solve->add_option("--r", solve_args.r, "g7 metric parameter r");
    solve->add_option("--u1", solve_args.u1, "g7 parameter u1");
    solve->add_option("--u2", solve_args.u2, "g7 parameter u2");
    solve->add_option("--delta", solve_args.delta, "g7 sign, +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    solve->add_option("--lambda", solve_args.lambda, "abelian gauge coefficient on e5");
    solve->add_option("--mu", solve_args.mu, "abelian gauge coefficient on e6");
    solve->add_option("--gauge", solve_args.gauge, "sl2c gauge connection")
        ->check(CLI::IsMember({"flat", "bismut"}));
    solve->add_flag("--require-positive", solve_args.require_positive,
                    "fail the g7 closed form when alpha <= 0");
    solve->add_flag("--json", solve_args.json, "emit JSON");

    ScanArgs scan_args;
    scan_args.threads = env_threads();
    auto* scan = app.add_subcommand("scan-region", "Tabulate the (eps, rho) plane");
    scan->add_option("--grid", scan_args.grid, "lo:hi:step (default -2:2:1/20)");
    scan->add_option("--csv", scan_args.csv, "CSV output path ('-' or empty for stdout)");
    scan->add_option("--svg", scan_args.svg, "also write the region figure");
    scan->add_option("--threads", scan_args.threads,
                     "worker threads (default TORSION_FORGE_THREADS or hardware)");

    HolonomyArgs holonomy_args;
    auto* holonomy = app.add_subcommand("holonomy", "Holonomy of the Bismut connection");
    holonomy->add_option("--algebra", holonomy_args.algebra, "h3, sl2c or g7")
        ->required()
        ->check(CLI::IsMember(algebra_names));
    holonomy->add_option("--t", holonomy_args.t, "metric parameter t (default 1)");
    holonomy->add_option("--r", holonomy_args.r, "g7 parameter r (default 1)");
    holonomy->add_option("--u", holonomy_args.u, "shorthand for --u1 with u2 = 0");
    holonomy->add_option("--u1", holonomy_args.u1, "g7 parameter u1 (default 0)");
    holonomy->add_option("--u2", holonomy_args.u2, "g7 parameter u2 (default 0)");
    holonomy->add_option("--delta", holonomy_args.delta, "g7 sign, +1 or -1")
        ->check(CLI::IsMember({1, -1}));
    holonomy->add_flag("--json", holonomy_args.json, "emit JSON");

    CohomologyArgs cohomology_args;
    auto* cohomology = app.add_subcommand("cohomology", "Exactness and cup-product reports");
    cohomology->add_option("--algebra", cohomology_args.algebra, "h3, sl2c or g7")
        ->required()
        ->check(CLI::IsMember(algebra_names));
    cohomology->add_flag("--json", cohomology_args.json, "emit JSON");

    Table1Args table1_args;
    auto* table1 = app.add_subcommand("table1", "Machine-check the summary table");
    table1->add_flag("--json", table1_args.json, "emit a JSON summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(verify_args);
        if (app.got_subcommand(solve)) return run_solve(solve_args);
        if (app.got_subcommand(scan)) return run_scan(scan_args);
        if (app.got_subcommand(holonomy)) return run_holonomy(holonomy_args);
        if (app.got_subcommand(cohomology)) return run_cohomology(cohomology_args);
        if (app.got_subcommand(table1)) return run_table1(table1_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
