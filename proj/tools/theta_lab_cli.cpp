// theta-lab: command-line front end for the theta norm verification suite.
//
// Subcommands
//   selftest     quick numerics and theta-engine invariants
//   law-check    transformation law, Gamma_0(4) invariance, Fricke pointwise
//   xavg         fit the Fourier constant c from x-averages on a y-grid
//   ip           ip_direct vs ip_closed on the (s, p) grid
//   residues     residue machinery, Eisenstein residue, candidate table
//   norm         direct tiling vs residue-chain norm
//   full-report  all ten criteria; writes the JSON report
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// config error, 3 numerical budget exhausted.

#include <cmath>
#include <complex>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "thetalab/checks.hpp"
#include "thetalab/eisenstein.hpp"
#include "thetalab/modular.hpp"
#include "thetalab/numerics.hpp"
#include "thetalab/quadrature.hpp"
#include "thetalab/report.hpp"
#include "thetalab/theta.hpp"

namespace {

using namespace thetalab;

constexpr double kPi = 3.14159265358979323846;

struct CliOptions {
    std::vector<int> p_list = {3, 5, 7};
    std::vector<double> s_list = {1.5, 2.0, 3.0};
    double Y = 100.0;
    double tol_tile = 1e-7;
    double tol_ip = 1e-6;
    std::vector<double> grid = {0.05, 0.1, 0.2, 0.3, 0.5};
    std::string c_mode = "auto";
    std::string out_path;
    std::string threads = "auto";
};

CheckContext make_context(const CliOptions& opt) {
    CheckContext ctx;
    ctx.spec.Y = opt.Y;
    ctx.spec.tol_tile = opt.tol_tile;
    ctx.spec.tol_ip = opt.tol_ip;
    validate(ctx.spec);  // invalid_argument here -> exit 2
    ctx.p_list = opt.p_list;
    ctx.fit_grid = opt.grid;
    return ctx;
}

void apply_threads(const std::string& threads) {
    if (threads == "auto") {
        set_thread_budget(0);
        return;
    }
    std::size_t pos = 0;
    int n = 0;
    try {
        n = std::stoi(threads, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != threads.size() || n < 1)
        throw std::invalid_argument("--threads expects a positive integer or 'auto', got '" +
                                    threads + "'");
    set_thread_budget(n);
}

double resolve_c(const CliOptions& opt) {
    if (opt.c_mode == "auto") return fit_fourier_constant(opt.grid);
    std::size_t pos = 0;
    double c = 0.0;
    try {
        c = std::stod(opt.c_mode, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != opt.c_mode.size() || !(c > 0.0))
        throw std::invalid_argument("--c expects 'auto' or a positive real, got '" + opt.c_mode +
                                    "'");
    return c;
}

void print_check(const CheckResult& r) {
    std::printf("    [%-11s] %-24s measured=%-14.7g", r.status.c_str(), r.id.c_str(), r.measured);
    if (r.expected) std::printf(" expected=%-14.7g", *r.expected);
    std::printf(" tol=%g\n", r.tolerance);
}

bool print_outcome(const CriterionOutcome& o) {
    std::printf("[%s] %-3s %s  (%.1fs)\n", o.passed ? "PASS" : "FAIL", o.check.id.c_str(),
                o.check.description.c_str(), o.seconds);
    for (const auto& d : o.details) print_check(d);
    return o.passed;
}

int run_selftest() {
    struct Row {
        const char* name;
        double measured;
        double expected;
        double tol;
    };
    std::vector<double> cancel = {1e16, 1.0, -1e16};
    HalfPlanePoint z{0.3, 0.8};
    HalfPlanePoint w = moebius_apply(MoebiusMap::fricke(4.0), z);
    std::vector<Row> rows = {
        {"gamma(0.25)", gamma(ComplexValue(0.25)).real(), 3.6256099082219083119, 1e-13},
        {"zeta(3)", zeta(ComplexValue(3.0)).real(), 1.2020569031595942854, 1e-13},
        {"zeta(0.5)", zeta(ComplexValue(0.5)).real(), -1.4603545088095868129, 1e-13},
        {"compensated cancellation", compensated_sum(std::span<const double>(cancel)), 1.0, 0.0},
        {"theta(i)", theta_direct({0.0, 1.0}).real(), 1.003734885487739091, 1e-14},
        {"theta(i/4)/theta(i)", std::abs(theta_full({0.0, 0.25}) / theta_direct({0.0, 1.0})),
         std::sqrt(2.0), 1e-13},
        {"theta_full vs series", std::abs(theta_full(z) - theta_direct(z)), 0.0, 1e-13},
        {"F(z+1) = F(z)", f_invariant({z.x + 1.0, z.y}) - f_invariant(z), 0.0, 1e-12},
        {"F(-1/(4z)) = F(z)", f_invariant(w) - f_invariant(z), 0.0, 1e-12},
        {"x-average at y = 1/2", x_average(0.5), 1.0074697709754781821, 1e-10},
        {"index of Gamma_0(4)", double(index_gamma0(4)), 6.0, 0.0},
    };
    int failures = 0;
    for (const auto& r : rows) {
        bool ok = std::abs(r.measured - r.expected) <= r.tol;
        failures += !ok;
        std::printf("[%s] %-26s measured=%.17g expected=%.17g tol=%g\n", ok ? "PASS" : "FAIL",
                    r.name, r.measured, r.expected, r.tol);
    }
    std::printf("selftest: %zu/%zu ok\n", rows.size() - failures, rows.size());
    return failures == 0 ? 0 : 1;
}

int run_law_check(const CheckContext& ctx) {
    bool ok = true;
    ok &= print_outcome(criterion_transformation_law(ctx));
    ok &= print_outcome(criterion_invariance(ctx));
    ok &= print_outcome(criterion_fricke_pointwise(ctx));
    return ok ? 0 : 1;
}

int run_xavg(const CliOptions& opt) {
    for (double y : opt.grid) std::printf("  A(%g) = %.15f\n", y, x_average(y));
    FourierFit fit = fit_fourier_constant_detail(opt.grid);
    double dist = std::abs(fit.c - std::nearbyint(fit.c));
    std::printf("fitted c     = %.15f\n", fit.c);
    std::printf("fit residual = %.3g\n", fit.residual);
    bool ok_int = dist <= 1e-8;
    bool ok_res = fit.residual <= 1e-9;
    std::printf("[%s] distance to nearest integer %.3g (tol 1e-8)\n", ok_int ? "PASS" : "FAIL",
                dist);
    std::printf("[%s] fit residual %.3g (tol 1e-9)\n", ok_res ? "PASS" : "FAIL", fit.residual);
    return (ok_int && ok_res) ? 0 : 1;
}

int run_ip(const CliOptions& opt, const CheckContext& ctx) {
    double c = resolve_c(opt);
    std::printf("using c = %.12f (%s)\n", c, opt.c_mode == "auto" ? "fitted" : "given");
    bool ok = true;
    for (double s : opt.s_list) {
        for (int p : opt.p_list) {
            ClosedFormParams params{ComplexValue(s), p, c};
            double direct = ip_direct(params, ctx.spec);
            double closed = ip_closed(params).real();
            double rel = std::abs(direct - closed) / std::abs(closed);
            bool row_ok = rel <= 1e-4;
            ok &= row_ok;
            std::printf("[%s] s=%-4g p=%-2d  direct=%.10g  closed=%.10g  rel gap=%.3g\n",
                        row_ok ? "PASS" : "FAIL", s, p, direct, closed, rel);
        }
    }
    return ok ? 0 : 1;
}

int run_residues(const CliOptions& opt, const CheckContext& ctx) {
    bool ok = true;
    ok &= print_outcome(criterion_residue_machinery(ctx));
    ok &= print_outcome(criterion_eisenstein_residue(ctx));

    int p = opt.p_list.empty() ? 3 : opt.p_list.front();
    double c_fit = resolve_c(opt);
    std::printf("\nresidue of I_%d at s = 1 under each reading of the constant\n", p);
    std::printf("(forced norm = 2 pi res / (1 - 1/p)):\n");
    struct Cand {
        std::string name;
        double res;
    };
    std::vector<Cand> cands;
    auto res_for = [p](double c) {
        return residue_at_1([p, c](ComplexValue s) {
                   return ip_closed({s, p, c});
               }).value;
    };
    cands.push_back({"c = 2 (displayed)", res_for(2.0)});
    cands.push_back({"c = 4", res_for(4.0)});
    char label[64];
    std::snprintf(label, sizeof label, "c = %.10g (%s)", c_fit,
                  opt.c_mode == "auto" ? "fitted" : "given");
    cands.push_back({label, res_for(c_fit)});
    cands.push_back({"stated residue 2(1 - 1/p)", 2.0 * (1.0 - 1.0 / p)});
    for (const auto& cd : cands) {
        double forced = 2.0 * kPi * cd.res / (1.0 - 1.0 / p);
        std::printf("  %-28s residue=%-14.10g forced norm=%.10g = %.10g pi\n", cd.name.c_str(),
                    cd.res, forced, forced / kPi);
    }
    return ok ? 0 : 1;
}

int run_norm(const CliOptions& opt, const CheckContext& ctx) {
    double c_fit = resolve_c(opt);
    NormReport rep = norm_direct(ctx.spec);
    CosetTable table = coset_reps(4);
    std::printf("direct tiling at Y = %g:\n", rep.Y_used);
    for (std::size_t i = 0; i < rep.tile_values.size(); ++i)
        std::printf("  tile (%lld:%lld)      %.10f\n", (long long)table.labels[i].first,
                    (long long)table.labels[i].second, rep.tile_values[i]);
    std::printf("  tail correction  %.10f\n", rep.tail_correction);
    std::printf("  total            %.10f  (= %.10f pi)\n", rep.total, rep.ratio_to_pi);
    std::printf("residue chain with c = %.10g:\n", c_fit);
    bool ok = true;
    for (int p : opt.p_list) {
        double nfr = norm_from_residue(p, c_fit);
        double rel = std::abs(rep.total - nfr) / nfr;
        bool row_ok = rel <= 1e-3;
        ok &= row_ok;
        std::printf("[%s] p=%-2d  norm=%.10f  rel gap to direct=%.3g\n", row_ok ? "PASS" : "FAIL",
                    p, nfr, rel);
    }
    return ok ? 0 : 1;
}

int run_full_report(const CliOptions& opt, const CheckContext& ctx) {
    FullRun run = run_verification(ctx);
    bool all = true;
    for (const auto& o : run.criteria) all &= print_outcome(o);
    const VerificationReport& rep = run.report;
    std::printf("\nfitted c               %.12f\n", rep.fitted_c);
    std::printf("norm (direct)          %.12f\n", rep.norm_direct_total);
    for (const auto& [p, v] : rep.norm_from_residue)
        std::printf("norm (residue, p=%d)    %.12f\n", p, v);
    std::printf("ratio to pi            %.12f  (claimed: %g)\n", rep.final_ratio_to_pi,
                rep.claimed_ratio);
    std::printf("agreement with claim   %s\n", rep.agreement_with_claim ? "true" : "false");
    std::string path = opt.out_path.empty() ? "report.json" : opt.out_path;
    write_report(rep, path);
    std::printf("report written to %s\n", path.c_str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-lab: step-by-step numerical verification of the theta norm computation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags win over the file");

    CliOptions opt;
    app.add_option("--p", opt.p_list, "odd primes for the Fricke/residue checks")->delimiter(',');
    app.add_option("--s", opt.s_list, "s values for the ip comparison")->delimiter(',');
    app.add_option("--Y", opt.Y, "truncation height of the tiled strip");
    app.add_option("--tol-tile", opt.tol_tile, "absolute error budget per tile integral");
    app.add_option("--tol-ip", opt.tol_ip, "absolute error budget for ip_direct");
    app.add_option("--grid", opt.grid, "y-grid for the Fourier-constant fit")->delimiter(',');
    app.add_option("--c", opt.c_mode, "Fourier constant: 'auto' (fit it) or a positive real");
    app.add_option("--out", opt.out_path, "report output path (full-report; default report.json)");
    app.add_option("--threads", opt.threads,
                   "worker count or 'auto'; env THETA_LAB_THREADS overrides");

    auto* selftest = app.add_subcommand("selftest", "quick numerics and theta-engine invariants");
    auto* law = app.add_subcommand("law-check", "transformation law, invariance, Fricke suites");
    auto* xavg = app.add_subcommand("xavg", "fit the Fourier constant from x-averages");
    auto* ip = app.add_subcommand("ip", "direct vs closed-form I_p on the (s, p) grid");
    auto* residues = app.add_subcommand("residues", "residue extractions and the candidate table");
    auto* norm = app.add_subcommand("norm", "direct tiling vs residue-chain norm");
    auto* full = app.add_subcommand("full-report", "all ten criteria; writes the JSON report");
    for (auto* sub : {selftest, law, xavg, ip, residues, norm, full}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version -> 0, any parse problem -> usage error
    }

    try {
        apply_threads(opt.threads);
        CheckContext ctx = make_context(opt);
        if (selftest->parsed()) return run_selftest();
        if (law->parsed()) return run_law_check(ctx);
        if (xavg->parsed()) return run_xavg(opt);
        if (ip->parsed()) return run_ip(opt, ctx);
        if (residues->parsed()) return run_residues(opt, ctx);
        if (norm->parsed()) return run_norm(opt, ctx);
        if (full->parsed()) return run_full_report(opt, ctx);
        return 2;
    } catch (const thetalab::budget_error& e) {
        std::fprintf(stderr, "error: numerical budget exhausted: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
