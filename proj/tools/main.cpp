// Command-line front end: cutoff-check, lemma31, lemma32, solver-verify,
// inflate. Emits CSV (17 significant digits) or a JSON mirror, exits 0 iff
// every embedded assertion passes.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "besov_inflate/cutoff.hpp"
#include "besov_inflate/errors.hpp"
#include "besov_inflate/experiment.hpp"
#include "besov_inflate/initial_data.hpp"
#include "besov_inflate/lp.hpp"
#include "besov_inflate/report.hpp"
#include "besov_inflate/solver.hpp"

namespace {

struct Options {
    std::vector<int> n{16};
    double p = 4.0;
    std::size_t grid_n = std::size_t(1) << 22;
    double grid_l = 200.0;
    double dt = 0.004;
    double t_end = -1.0;           // < 0: use 1 / log n
    std::size_t stride = 10;
    double min_ratio = 1.0e-6;     // lemma32 positivity floor
    unsigned seed = 12345;
    std::string output;            // empty: stdout
    std::string diagnostics;       // inflate only; empty: skip
    bool json = false;
};

int thread_cap() {
    if (const char* env = std::getenv("BESOV_INFLATE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void emit(const besov::Table& table, const Options& opt) {
    auto write = [&](std::ostream& os) {
        if (opt.json)
            besov::write_json(table, os);
        else
            besov::write_csv(table, os);
    };
    if (opt.output.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream os(opt.output);
    if (!os) throw besov::InvalidParamError("cannot open output path: " + opt.output);
    write(os);
}

bool check(bool ok, const char* what) {
    std::cerr << (ok ? "pass: " : "FAIL: ") << what << "\n";
    return ok;
}

int run_cutoff_check(const Options& opt) {
    const besov::CutoffPair cut = besov::make_cutoff();
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> dist(-1.0e5, 1.0e5);

    double pou = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double xi = dist(rng);
        double sum = cut.chi(xi);
        for (int j = 0; j <= 40; ++j) sum += cut.phi(std::ldexp(xi, -j));
        pou = std::max(pou, std::abs(sum - 1.0));
    }
    double phi_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double xi = 4.0 / 3.0 + (1.5 - 4.0 / 3.0) * i / 999.0;
        phi_err = std::max(phi_err, std::abs(cut.phi(xi) - 1.0));
    }
    double chi_err = 0.0;
    for (int i = 0; i < 1000; ++i)
        chi_err = std::max(chi_err, std::abs(cut.chi(0.75 * i / 999.0) - 1.0));

    besov::Table t;
    t.columns = {"max_pou_residual", "max_phi_plateau_error", "max_chi_plateau_error"};
    t.rows = {{pou, phi_err, chi_err}};
    emit(t, opt);

    bool ok = check(pou <= 1.0e-10, "partition-of-unity residual <= 1e-10");
    ok &= check(phi_err <= 1.0e-12, "phi == 1 on [4/3, 3/2]");
    ok &= check(chi_err <= 1.0e-12, "chi == 1 on [0, 3/4]");
    return ok ? 0 : 1;
}

int run_lemma31(const Options& opt) {
    const std::size_t count = opt.n.size();
    std::vector<besov::Lemma31Norms> norms(count);
    std::vector<std::exception_ptr> errors(count);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                const auto params = besov::ConstructionParams::make(opt.n[i], opt.p);
                norms[i] = besov::lemma31_norms(params);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int workers = std::min<int>(thread_cap(), static_cast<int>(count));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    besov::Table t;
    t.columns = {"n", "ratio_linf", "ratio_dxlinf", "ratio_besov", "ratio_l1"};
    bool ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        const double n = opt.n[i];
        const double logn = std::log(n);
        const double r1 = norms[i].linf_u0 / (std::ldexp(1.0, -opt.n[i]) * logn / std::sqrt(n));
        const double r2 = norms[i].linf_dxu0 / (logn / std::sqrt(n));
        const double r3 = norms[i].besov_b1p1 /
                          (std::pow(n, -0.5 * (1.0 - 2.0 / opt.p)) * logn);
        const double r4 = norms[i].l1_u0 / (std::ldexp(1.0, -opt.n[i]) * std::sqrt(n) * logn);
        t.rows.push_back({n, r1, r2, r3, r4});
        ok &= std::isfinite(r1) && r1 > 0.0 && std::isfinite(r2) && r2 > 0.0 &&
              std::isfinite(r3) && r3 > 0.0 && std::isfinite(r4) && r4 > 0.0;
    }
    emit(t, opt);
    return check(ok, "lemma 3.1 ratios finite and positive") ? 0 : 1;
}

int run_lemma32(const Options& opt) {
    besov::Table t;
    t.columns = {"n", "j", "block_value", "total_value", "log2n_ratio"};
    bool ok = true;
    for (int n : opt.n) {
        const auto params = besov::ConstructionParams::make(n, opt.p);
        std::optional<besov::GridSpec> grid;
        if (n == 16) grid = besov::GridSpec::make(opt.grid_l, opt.grid_n);
        const auto res = besov::lemma32_lower(params, grid);
        for (const auto& [j, v] : res.per_block)
            t.rows.push_back({double(n), double(j), v, res.value, res.log2n_ratio});
        ok &= res.log2n_ratio >= opt.min_ratio;
    }
    emit(t, opt);
    return check(ok, "restricted block sum / log^2 n above the floor") ? 0 : 1;
}

int run_solver_verify(const Options& opt) {
    const auto grid = besov::GridSpec::make(2.0 * std::numbers::pi, 256);
    const besov::Field u0 =
        besov::Field::sample(grid, [](double x) { return 0.1 * std::cos(x); });
    const double e0 = besov::h1_energy(u0);

    auto reversal_error = [&](double dt) {
        besov::SolverConfig cfg{grid, dt, 1.0};
        cfg.store_states = false;
        besov::Field end = u0;
        besov::integrate(u0, cfg, [&](std::size_t, double, const besov::Field& s) {
            end = s;
        });
        const double drift = std::abs(besov::h1_energy(end) - e0) / e0;
        besov::Field back = end.scaled(-1.0);
        besov::integrate(back, cfg, [&](std::size_t, double, const besov::Field& s) {
            back = s;
        });
        const besov::Field unflipped = back.scaled(-1.0);
        double err = 0.0;
        for (std::size_t i = 0; i < grid.point_count; ++i)
            err = std::max(err,
                           std::abs(unflipped.samples()[i] - u0.samples()[i]));
        return std::pair<double, double>(drift, err);
    };
    const auto [drift1, rev1] = reversal_error(1.0e-3);

    // fourth-order accuracy: Richardson ratio of end-state errors against a
    // fine-dt reference (the negation round trip itself cancels the O(dt^4)
    // defect, so it cannot carry the order measurement)
    const besov::Field w0 =
        besov::Field::sample(grid, [](double x) { return 0.2 * std::cos(x); });
    auto end_state = [&](double dt) {
        besov::SolverConfig cfg{grid, dt, 0.5};
        cfg.store_states = false;
        besov::Field end = w0;
        besov::integrate(w0, cfg, [&](std::size_t, double, const besov::Field& s) {
            end = s;
        });
        return end;
    };
    const besov::Field ref = end_state(1.0 / 3200.0);
    auto max_err = [&](const besov::Field& f) {
        double m = 0.0;
        for (std::size_t i = 0; i < grid.point_count; ++i)
            m = std::max(m, std::abs(f.samples()[i] - ref.samples()[i]));
        return m;
    };
    const double e1 = max_err(end_state(1.0 / 100.0));
    const double e2 = max_err(end_state(1.0 / 200.0));
    const double ratio = e1 / std::max(e2, 1.0e-300);

    besov::Table t;
    t.columns = {"dt", "energy_drift_rel", "reversal_linf", "halving_ratio"};
    t.rows = {{1.0e-2, 0.0, e1, ratio}, {1.0e-3, drift1, rev1, 0.0}};
    emit(t, opt);

    bool ok = check(drift1 <= 1.0e-8, "H1 energy drift <= 1e-8 over [0,1]");
    ok &= check(rev1 <= 1.0e-12, "time reversal returns the data");
    ok &= check(ratio >= 12.0 && ratio <= 20.0, "end-state error ~ O(dt^4)");
    return ok ? 0 : 1;
}

int run_inflate(const Options& opt) {
    const auto params = besov::ConstructionParams::make(opt.n.front(), opt.p);
    besov::InflationConfig cfg;
    cfg.grid = besov::GridSpec::make(opt.grid_l, opt.grid_n);
    cfg.dt = opt.dt;
    if (opt.t_end >= 0.0) cfg.t_end = opt.t_end;
    cfg.report_stride = opt.stride;

    const auto report = besov::run_inflation(params, cfg);
    emit(besov::inflation_table(report), opt);
    if (!opt.diagnostics.empty()) {
        std::ofstream os(opt.diagnostics);
        if (!os)
            throw besov::InvalidParamError("cannot open diagnostics path: " +
                                           opt.diagnostics);
        besov::write_csv(besov::inflation_diagnostics_table(report), os);
    }

    bool ok = check(report.rows.front().block_sum <= 1.0e-8,
                    "S(0) vanishes to block-support tolerance");
    double worst_closure = 0.0, jmin = 1.0, jmax = 1.0;
    for (const auto& r : report.rows) {
        worst_closure = std::max(worst_closure, r.closure_residual);
        jmin = std::min(jmin, r.jacobian_min);
        jmax = std::max(jmax, r.jacobian_max);
    }
    ok &= check(worst_closure <= 1.0e-3, "ledger closure residual <= 1e-3");
    ok &= check(jmin >= 0.5 && jmax <= 2.0, "flow jacobian within [1/2, 2]");
    return ok ? 0 : 1;
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const besov::UnresolvedBlockError*>(&e)) return "unresolved_block";
    if (dynamic_cast<const besov::GridMismatchError*>(&e)) return "grid_mismatch";
    if (dynamic_cast<const besov::InvalidParamError*>(&e)) return "invalid_param";
    if (dynamic_cast<const besov::CoverageError*>(&e)) return "coverage";
    if (dynamic_cast<const besov::BlowupError*>(&e)) return "blowup";
    if (dynamic_cast<const besov::JacobianBoundError*>(&e)) return "jacobian_bound";
    if (dynamic_cast<const besov::QuadratureBudgetError*>(&e)) return "quadrature_budget";
    return "internal";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm-inflation toolkit for the Camassa-Holm equation"};
    app.set_config("--config", "", "flat key=value config file; flags override");
    app.require_subcommand(1);

    Options opt;
    app.add_option("--n", opt.n, "construction scale(s), comma separated")
        ->delimiter(',');
    app.add_option("--p", opt.p, "Lebesgue exponent (> 2)");
    app.add_option("--N", opt.grid_n, "grid point count (power of two)");
    app.add_option("--L", opt.grid_l, "domain length");
    app.add_option("--dt", opt.dt, "solver time step");
    app.add_option("--t-end", opt.t_end, "final time (default 1 / log n)");
    app.add_option("--stride", opt.stride, "solver steps between report rows");
    app.add_option("--min-ratio", opt.min_ratio, "lemma32 positivity floor");
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--output", opt.output, "report path (default stdout)");
    app.add_option("--diagnostics", opt.diagnostics, "inflate diagnostics CSV path");
    app.add_flag("--json", opt.json, "emit JSON instead of CSV");

    auto* cutoff = app.add_subcommand("cutoff-check", "partition-of-unity residuals");
    auto* lemma31 = app.add_subcommand("lemma31", "initial-data norm scaling ratios");
    auto* lemma32 = app.add_subcommand("lemma32", "restricted block-sum lower bound");
    auto* solver = app.add_subcommand("solver-verify", "conservation and reversibility");
    auto* inflate = app.add_subcommand("inflate", "norm-inflation experiment time series");
    for (auto* s : {cutoff, lemma31, lemma32, solver, inflate})
        s->fallthrough();  // let `sub --n ...` reach the top-level options

    CLI11_PARSE(app, argc, argv);

    try {
        if (cutoff->parsed()) return run_cutoff_check(opt);
        if (lemma31->parsed()) return run_lemma31(opt);
        if (lemma32->parsed()) return run_lemma32(opt);
        if (solver->parsed()) return run_solver_verify(opt);
        if (inflate->parsed()) return run_inflate(opt);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"" << error_kind(e) << "\", \"message\": \""
                  << e.what() << "\"}\n";
        return 1;
    }
    return 1;
}
