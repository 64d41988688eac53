// Copyright 2026 The tqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tqc/tqc.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kNumericalFailure = 2, kInvarianceFailure = 3 };

/// --config plus inline overrides shared by the sweep-style subcommands.
struct CommonOptions {
    std::string config;
    std::map<std::string, std::string> inline_settings;

    void attach(CLI::App *cmd) {
        cmd->add_option("--config", config, "key = value config file");
        add(cmd, "--state", "state", "werner | mems");
        add(cmd, "--gamma", "gamma", "mixing parameter(s), comma separated");
        add(cmd, "--a", "a", "main-diagonal base");
        add(cmd, "--b", "b", "off-diagonal base ('e' accepted)");
        add(cmd, "--n", "n", "exponent(s), comma separated");
        add(cmd, "--t-max", "t_max", "time span (default: one period 2 pi / b^n)");
        add(cmd, "--t-steps", "t_steps", "samples per trace");
        add(cmd, "--seed", "seed", "random seed");
        add(cmd, "--out", "out", "output directory");
        add(cmd, "--threads", "threads", "worker threads (0 = all cores)");
        add(cmd, "--normalize-time", "normalize_time", "emit t/T in the t_norm column (true/false)");
    }

    void add(CLI::App *cmd, const std::string &flag, const std::string &key, const std::string &help) {
        cmd->add_option_function<std::string>(
            flag, [this, key](const std::string &v) { inline_settings[key] = v; }, help);
    }

    tqc::SweepConfig resolve() const {
        tqc::SweepConfig cfg;
        if (!config.empty()) {
            cfg = tqc::load_config(config, cfg);
        }
        for (const auto &[key, value] : inline_settings) {
            tqc::apply_setting(cfg, key, value);
        }
        cfg.validate();
        for (const auto &w : cfg.sampling_warnings()) {
            std::cerr << "warning: " << w << "\n";
        }
        return cfg;
    }
};

std::string fmt(double v) { return tqc::format_g(v, 6); }

std::string label(const tqc::TraceParams &p) {
    return std::string(tqc::state_name(p.state)) + " gamma=" + fmt(p.gamma) + " b=" + fmt(p.b) + " n=" + fmt(p.n);
}

int run_sweep_command(const CommonOptions &opts) {
    const auto cfg = opts.resolve();
    const auto traces = tqc::run_sweep(cfg);
    const std::filesystem::path dir(cfg.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw tqc::Error(tqc::ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
    }
    for (const auto &t : traces) {
        const auto path = dir / tqc::csv_file_name(t.params);
        tqc::emit_csv(t, path);
        std::cout << path.string() << "  (" << t.rows.size() << " rows, " << label(t.params) << ")\n";
    }
    const auto script = dir / "plot_correlations.py";
    tqc::emit_plot_script(traces, script);
    std::cout << script.string() << "\n";
    return kOk;
}

int run_esd_command(const CommonOptions &opts, double threshold) {
    const auto cfg = opts.resolve();
    for (const auto &t : tqc::run_sweep(cfg)) {
        const auto report = tqc::detect_esd(t, threshold);
        const double period = t.params.period();
        std::cout << label(t.params) << ": " << report.zero_intervals.size() << " sudden-death interval(s)\n";
        for (const auto &z : report.zero_intervals) {
            std::printf("  t in [%.6f, %.6f]  t/T in [%.6f, %.6f]  max discord %.6f\n", z.t_start, z.t_end,
                        z.t_start / period, z.t_end / period, z.max_discord);
        }
    }
    return kOk;
}

int run_balance_command(const CommonOptions &opts) {
    const auto cfg = opts.resolve();
    for (const auto &t : tqc::run_sweep(cfg)) {
        const auto report = tqc::detect_balance_points(t);
        const double period = t.params.period();
        std::cout << label(t.params) << ": " << report.count() << " balancing point(s)\n";
        for (double x : report.crossings) {
            std::printf("  t = %.6f  t/T = %.6f\n", x, x / period);
        }
    }
    return kOk;
}

int run_invariance_command(std::uint64_t seed, std::size_t grid, bool inject_fault) {
    const auto report = tqc::invariance_suite({seed, grid, inject_fault});
    for (const auto &w : report.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    for (const auto &c : report.checks) {
        std::printf("%-16s %s  worst %.3e  tol %.1e  (%zu samples)\n", c.name.c_str(), c.passed ? "PASS" : "FAIL",
                    c.worst, c.tolerance, c.samples);
    }
    std::cout << (report.passed() ? "all invariance checks passed\n" : "invariance suite FAILED\n");
    return report.passed() ? kOk : kInvarianceFailure;
}

int run_lanczos_command(const CommonOptions &opts, std::size_t random_dim, bool no_reorth) {
    tqc::SweepConfig cfg;
    if (!opts.config.empty()) {
        cfg = tqc::load_config(opts.config, cfg);
    }
    for (const auto &[key, value] : opts.inline_settings) {
        tqc::apply_setting(cfg, key, value);
    }

    tqc::Matrix a;
    std::string what;
    if (random_dim > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::normal_distribution<double> nd;
        a = tqc::Matrix(random_dim);
        for (std::size_t i = 0; i < random_dim; ++i) {
            a(i, i) = nd(rng);
            for (std::size_t j = i + 1; j < random_dim; ++j) {
                a(i, j) = {nd(rng), nd(rng)};
                a(j, i) = std::conj(a(i, j));
            }
        }
        what = "random Hermitian, dim " + std::to_string(random_dim) + ", seed " + std::to_string(cfg.seed);
    } else {
        const tqc::ToeplitzParams p{cfg.a, cfg.b, cfg.ns.front(), 4};
        a = tqc::build_hamiltonian(p);
        what = "Toeplitz H with a=" + fmt(p.a) + " b=" + fmt(p.b) + " n=" + fmt(p.n);
    }
    tqc::CVector start(a.dim());
    start[0] = 1.0;
    const auto out = tqc::lanczos_tridiagonalize(a, start, a.dim(), {.reorthogonalize = !no_reorth});

    std::cout << what << "\n" << "steps " << out.steps() << (out.terminated_early ? " (breakdown)" : "") << "\n";
    std::cout << "alphas:";
    for (double x : out.alphas) {
        std::printf(" %.10g", x);
    }
    std::cout << "\nbetas: ";
    for (double x : out.betas) {
        std::printf(" %.10g", x);
    }
    const auto ev_t = tqc::eigenvalues(out.tridiagonal());
    const auto ev_a = tqc::eigenvalues(a);
    double gap = 0.0;
    if (ev_t.size() == ev_a.size()) {
        for (std::size_t k = 0; k < ev_t.size(); ++k) {
            gap = std::max(gap, std::abs(ev_t[k] - ev_a[k]));
        }
    }
    std::printf("\nToeplitz (tol 1e-8): %s\northogonality loss: %.3e\n", out.is_toeplitz() ? "yes" : "no",
                out.orthogonality_loss);
    if (ev_t.size() == ev_a.size()) {
        std::printf("max |eig(T) - eig(A)|: %.3e\n", gap);
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-qubit correlation dynamics under tridiagonal Toeplitz Hamiltonians"};
    app.require_subcommand(1);

    CommonOptions sweep_opts, esd_opts, balance_opts, lanczos_opts;
    auto *sweep = app.add_subcommand("sweep", "write CSV traces and a plot script for a (gamma, n) sweep");
    sweep_opts.attach(sweep);

    double threshold = 1e-6;
    auto *esd = app.add_subcommand("esd", "report entanglement sudden-death intervals");
    esd_opts.attach(esd);
    esd->add_option("--threshold", threshold, "concurrence below this counts as zero");

    auto *balance = app.add_subcommand("balance", "report concurrence/discord crossings");
    balance_opts.attach(balance);

    std::uint64_t inv_seed = tqc::InvarianceOptions{}.seed;
    std::size_t inv_grid = tqc::InvarianceOptions{}.grid_size;
    bool inject_fault = false;
    std::string inv_config;
    auto *inv = app.add_subcommand("invariance", "check spectrum, a-independence and b^n t scaling");
    inv->add_option("--config", inv_config, "config file; only its seed is used");
    auto *inv_seed_opt = inv->add_option("--seed", inv_seed, "grid seed");
    inv->add_option("--grid", inv_grid, "number of random parameter tuples");
    inv->add_flag("--inject-fault", inject_fault, "perturb the Hamiltonian diagonal (negative control)");

    std::size_t random_dim = 0;
    bool no_reorth = false;
    auto *lz = app.add_subcommand("lanczos-demo", "tridiagonalize a Toeplitz H or a random Hermitian matrix");
    lanczos_opts.attach(lz);
    lz->add_option("--random", random_dim, "use a random Hermitian matrix of this dimension");
    lz->add_flag("--no-reorth", no_reorth, "disable full re-orthogonalization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        if (*sweep) {
            return run_sweep_command(sweep_opts);
        }
        if (*esd) {
            return run_esd_command(esd_opts, threshold);
        }
        if (*balance) {
            return run_balance_command(balance_opts);
        }
        if (*inv) {
            if (!inv_config.empty() && inv_seed_opt->count() == 0) {
                inv_seed = tqc::load_config(inv_config).seed;
            }
            return run_invariance_command(inv_seed, inv_grid, inject_fault);
        }
        if (*lz) {
            return run_lanczos_command(lanczos_opts, random_dim, no_reorth);
        }
    } catch (const tqc::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_numerical() ? kNumericalFailure : kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericalFailure;
    }
    return kOk;
}
