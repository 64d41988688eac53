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

#pragma once

// Parameter sweeps over (gamma, n), entanglement-sudden-death and
// balancing-point detection, the invariance self-check, and the flat-file
// formats used by the command-line tool.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tqc/error.hpp"
#include "tqc/evolution.hpp"
#include "tqc/linalg.hpp"
#include "tqc/measures.hpp"
#include "tqc/states.hpp"
#include "tqc/toeplitz.hpp"

namespace tqc {

enum class StateKind { Werner, Mems };

inline std::string_view state_name(StateKind k) { return k == StateKind::Werner ? "werner" : "mems"; }

inline DensityMatrix initial_state(StateKind k, double gamma) {
    return k == StateKind::Werner ? werner_state(StateParam(gamma)) : mems_state(StateParam(gamma));
}

/// Spread between the extreme eigenvalues of the unit hopping generator; the
/// fastest frequency in rho(t) is b^n times this.
inline double max_generator_gap(std::size_t m = 4) {
    return 4.0 * std::cos(std::numbers::pi / static_cast<double>(m + 1));
}

/// T = 2 pi / b^n, the time unit of the t_norm column.
inline double normalized_period(double b, double n) { return 2.0 * std::numbers::pi / std::pow(b, n); }

// ---------------------------------------------------------------------------
// Configuration

struct SweepConfig {
    StateKind state = StateKind::Mems;
    std::vector<double> gammas{0.3};
    double a = 1.0;
    double b = 2.0;
    std::vector<double> ns{1.0};
    std::optional<double> t_max;  // unset: one period T per (gamma, n) trace
    std::size_t t_steps = 2000;
    bool normalize_time = true;
    std::uint64_t seed = 0;
    std::string out = ".";
    unsigned threads = 0;  // 0: hardware concurrency

    void validate() const {
        auto fail = [](const std::string &field, const std::string &why) {
            throw Error(ErrorCode::ConfigError, "field '" + field + "': " + why);
        };
        if (gammas.empty()) {
            fail("gamma", "at least one value required");
        }
        for (double g : gammas) {
            if (!(g >= 0.0 && g <= 1.0)) {
                fail("gamma", "value " + std::to_string(g) + " outside [0, 1]");
            }
        }
        if (ns.empty()) {
            fail("n", "at least one value required");
        }
        for (double n : ns) {
            if (!std::isfinite(n)) {
                fail("n", "values must be finite");
            }
        }
        if (!(a > 0.0) || !std::isfinite(a)) {
            fail("a", "must be a positive finite number");
        }
        if (!(b > 0.0) || !std::isfinite(b)) {
            fail("b", "must be a positive finite number");
        }
        if (t_max && !(*t_max > 0.0 && std::isfinite(*t_max))) {
            fail("t_max", "must be > 0");
        }
        if (t_steps < 2) {
            fail("t_steps", "must be >= 2");
        }
    }

    /// Sampling density of the fastest oscillation for exponent n.
    double samples_per_fastest_period(double n) const {
        const double span = t_max.value_or(normalized_period(b, n));
        const double dt = span / static_cast<double>(t_steps - 1);
        const double fastest = 2.0 * std::numbers::pi / (std::pow(b, n) * max_generator_gap());
        return fastest / dt;
    }

    /// Human-readable warnings for undersampled traces (< 20 samples per
    /// fastest period).
    std::vector<std::string> sampling_warnings() const {
        std::vector<std::string> w;
        for (double n : ns) {
            const double s = samples_per_fastest_period(n);
            if (s < 20.0) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "n=%g: only %.1f samples per fastest period (want >= 20); raise t_steps",
                              n, s);
                w.emplace_back(buf);
            }
        }
        return w;
    }
};

namespace detail {

inline std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

inline double parse_real(const std::string &token, const std::string &field) {
    const std::string t = trim(token);
    if (t == "e") {
        return std::numbers::e;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (t.empty() || used != t.size()) {
        throw Error(ErrorCode::ConfigError, "field '" + field + "': cannot parse '" + t + "' as a number");
    }
    return v;
}

inline std::vector<double> parse_list(const std::string &value, const std::string &field) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_real(item, field));
    }
    if (out.empty()) {
        throw Error(ErrorCode::ConfigError, "field '" + field + "': empty list");
    }
    return out;
}

inline std::uint64_t parse_count(const std::string &value, const std::string &field) {
    const std::string t = trim(value);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ConfigError, "field '" + field + "': expected a non-negative integer, got '" + t + "'");
    }
    return std::stoull(t);
}

inline bool parse_bool(const std::string &value, const std::string &field) {
    const std::string t = trim(value);
    if (t == "true" || t == "1" || t == "yes" || t == "on") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no" || t == "off") {
        return false;
    }
    throw Error(ErrorCode::ConfigError, "field '" + field + "': expected a boolean, got '" + t + "'");
}

}  // namespace detail

inline StateKind parse_state_kind(const std::string &value) {
    const std::string t = detail::trim(value);
    if (t == "werner") {
        return StateKind::Werner;
    }
    if (t == "mems") {
        return StateKind::Mems;
    }
    throw Error(ErrorCode::ConfigError, "field 'state': expected 'werner' or 'mems', got '" + t + "'");
}

/// Apply one `key = value` setting. Unknown keys are an error.
inline void apply_setting(SweepConfig &cfg, const std::string &key, const std::string &value) {
    if (key == "state") {
        cfg.state = parse_state_kind(value);
    } else if (key == "gamma") {
        cfg.gammas = detail::parse_list(value, key);
    } else if (key == "a") {
        cfg.a = detail::parse_real(value, key);
    } else if (key == "b") {
        cfg.b = detail::parse_real(value, key);
    } else if (key == "n") {
        cfg.ns = detail::parse_list(value, key);
    } else if (key == "t_max") {
        cfg.t_max = detail::parse_real(value, key);
    } else if (key == "t_steps") {
        cfg.t_steps = detail::parse_count(value, key);
    } else if (key == "normalize_time") {
        cfg.normalize_time = detail::parse_bool(value, key);
    } else if (key == "seed") {
        cfg.seed = detail::parse_count(value, key);
    } else if (key == "out") {
        cfg.out = detail::trim(value);
    } else if (key == "threads") {
        cfg.threads = static_cast<unsigned>(detail::parse_count(value, key));
    } else {
        throw Error(ErrorCode::ConfigError, "unknown key '" + key + "'");
    }
}

/// Flat `key = value` text, one per line, `#` starts a comment. Errors name
/// the offending line.
inline SweepConfig parse_config(std::istream &in, SweepConfig cfg = {}) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string body = detail::trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = detail::trim(std::string_view(body).substr(0, eq));
        const std::string value = detail::trim(std::string_view(body).substr(eq + 1));
        try {
            apply_setting(cfg, key, value);
        } catch (const Error &e) {
            throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

inline SweepConfig load_config(const std::filesystem::path &path, SweepConfig cfg = {}) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open config file " + path.string());
    }
    return parse_config(in, std::move(cfg));
}

// ---------------------------------------------------------------------------
// Traces

struct TraceParams {
    StateKind state = StateKind::Mems;
    double gamma = 0.0;
    double a = 1.0;
    double b = 2.0;
    double n = 1.0;

    double period() const { return normalized_period(b, n); }
};

struct TraceRow {
    double t = 0.0;
    double t_norm = 0.0;
    double concurrence = 0.0;
    double discord = 0.0;
    double classical_correlation = 0.0;
    double mutual_information = 0.0;
};

struct CorrelationTrace {
    TraceParams params;
    std::vector<TraceRow> rows;
};

/// rho(t) for one parameter point, with the Hamiltonian diagonalized once.
class TraceModel {
   public:
    explicit TraceModel(const TraceParams &p)
        : rho0_(initial_state(p.state, p.gamma)), propagator_(ToeplitzParams{p.a, p.b, p.n, 4}) {}

    DensityMatrix state_at(double t) const { return propagator_.evolve(rho0_, t); }
    double concurrence_at(double t) const { return concurrence(state_at(t)); }
    Correlations correlations_at(double t, const DiscordOptions &opt = {}) const {
        return measure_correlations(state_at(t), opt);
    }

   private:
    DensityMatrix rho0_;
    Propagator propagator_;
};

/// Runs f(i) for i in [0, count) on a small thread pool. Each index is
/// handled exactly once; the first exception is rethrown after joining.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F &&f) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        f(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                        next = count;
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

inline CorrelationTrace compute_trace(const TraceParams &p, double t_max, std::size_t t_steps,
                                      bool normalize_time = true, unsigned threads = 0,
                                      const DiscordOptions &opt = {}) {
    if (t_steps < 2 || !(t_max > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "trace needs t_steps >= 2 and t_max > 0");
    }
    const TraceModel model(p);
    const double period = p.period();
    CorrelationTrace trace{p, std::vector<TraceRow>(t_steps)};
    parallel_for(t_steps, threads, [&](std::size_t k) {
        const double t = k + 1 == t_steps ? t_max : t_max * static_cast<double>(k) / static_cast<double>(t_steps - 1);
        const auto c = model.correlations_at(t, opt);
        trace.rows[k] = {t,
                         normalize_time ? t / period : t,
                         c.concurrence,
                         c.discord.discord,
                         c.discord.classical_correlation,
                         c.discord.mutual_information};
    });
    return trace;
}

/// One trace per (gamma, n), gammas outer, in config order.
inline std::vector<CorrelationTrace> run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    std::vector<CorrelationTrace> traces;
    for (double g : cfg.gammas) {
        for (double n : cfg.ns) {
            const TraceParams p{cfg.state, g, cfg.a, cfg.b, n};
            traces.push_back(
                compute_trace(p, cfg.t_max.value_or(p.period()), cfg.t_steps, cfg.normalize_time, cfg.threads));
        }
    }
    return traces;
}

// ---------------------------------------------------------------------------
// Detectors

inline constexpr double kDetectorTimeTolerance = 1e-4;

namespace detail {

/// Bisect for the boundary between lo (where inside(lo) is false) and hi
/// (where inside(hi) is true); returns the midpoint of the final bracket.
template <class Pred>
double bisect_boundary(double lo, double hi, Pred &&inside, double tol = kDetectorTimeTolerance) {
    while (std::abs(hi - lo) > tol) {
        const double mid = 0.5 * (lo + hi);
        if (inside(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

struct EsdInterval {
    double t_start = 0.0;
    double t_end = 0.0;
    double max_discord = 0.0;       // largest sampled discord inside the interval
    bool discord_positive = false;  // max_discord > 1e-8
};

struct EsdReport {
    std::vector<EsdInterval> zero_intervals;
    double total_width() const {
        double w = 0.0;
        for (const auto &z : zero_intervals) {
            w += z.t_end - z.t_start;
        }
        return w;
    }
};

/// Maximal runs of rows with concurrence < threshold. Interior endpoints are
/// refined by bisection on the continuous concurrence to 1e-4 in t.
inline EsdReport detect_esd(const CorrelationTrace &trace, double threshold = 1e-6) {
    EsdReport report;
    const auto &rows = trace.rows;
    if (rows.empty()) {
        return report;
    }
    const TraceModel model(trace.params);
    auto dead = [&](double t) { return model.concurrence_at(t) < threshold; };

    std::size_t i = 0;
    while (i < rows.size()) {
        if (!(rows[i].concurrence < threshold)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        double max_d = rows[i].discord;
        while (j + 1 < rows.size() && rows[j + 1].concurrence < threshold) {
            ++j;
            max_d = std::max(max_d, rows[j].discord);
        }
        EsdInterval z;
        z.t_start = i == 0 ? rows.front().t : detail::bisect_boundary(rows[i - 1].t, rows[i].t, dead);
        z.t_end = j + 1 == rows.size() ? rows.back().t
                                       : detail::bisect_boundary(rows[j + 1].t, rows[j].t, dead);
        z.max_discord = max_d;
        z.discord_positive = max_d > 1e-8;
        report.zero_intervals.push_back(z);
        i = j + 1;
    }
    return report;
}

struct BalancePointReport {
    std::vector<double> crossings;
    std::size_t count() const noexcept { return crossings.size(); }
};

/// Sign changes of concurrence - discord, located by bisection to 1e-4 in t.
/// Differences within 1e-9 of zero carry no sign and are skipped.
inline BalancePointReport detect_balance_points(const CorrelationTrace &trace, const DiscordOptions &opt = {}) {
    BalancePointReport report;
    const auto &rows = trace.rows;
    constexpr double dead_band = 1e-9;
    std::optional<std::size_t> last;
    std::optional<TraceModel> model;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const double d = rows[k].concurrence - rows[k].discord;
        if (std::abs(d) <= dead_band) {
            continue;
        }
        if (last) {
            const double prev = rows[*last].concurrence - rows[*last].discord;
            if ((prev > 0.0) != (d > 0.0)) {
                if (!model) {
                    model.emplace(trace.params);
                }
                const bool positive_after = d > 0.0;
                auto after = [&](double t) {
                    const auto c = model->correlations_at(t, opt);
                    return (c.concurrence - c.discord.discord > 0.0) == positive_after;
                };
                report.crossings.push_back(detail::bisect_boundary(rows[*last].t, rows[k].t, after));
            }
        }
        last = k;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Invariance self-check

struct InvarianceOptions {
    std::uint64_t seed = 20240501;
    std::size_t grid_size = 64;
    // Test hook: perturb the Hamiltonian diagonal non-uniformly so the
    // diagonal no longer drops out. The a-independence check must then fail.
    bool inject_fault = false;
};

struct InvarianceCheck {
    std::string name;
    std::size_t samples = 0;
    double worst = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

struct InvarianceReport {
    std::vector<InvarianceCheck> checks;
    std::vector<std::string> warnings;
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
    }
};

struct InvarianceSample {
    double a1, a2, b, n, t, gamma;
};

inline std::vector<InvarianceSample> invariance_grid(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> base(0.1, 5.0);
    std::uniform_real_distribution<double> exponent(0.5, 9.0);
    std::uniform_real_distribution<double> time(0.0, 20.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<InvarianceSample> out(count);
    for (auto &s : out) {
        s.a1 = base(rng);
        s.a2 = base(rng);
        s.b = base(rng);
        s.n = exponent(rng);
        s.t = time(rng);
        s.gamma = unit(rng);
    }
    return out;
}

inline InvarianceReport invariance_suite(const InvarianceOptions &opt = {}) {
    constexpr double tol = 1e-10;
    std::function<Matrix(const ToeplitzParams &)> build = [](const ToeplitzParams &p) { return build_hamiltonian(p); };
    if (opt.inject_fault) {
        build = [](const ToeplitzParams &p) {
            Matrix h = build_hamiltonian(p);
            for (std::size_t i = 0; i < h.dim(); ++i) {
                h(i, i) *= 1.0 + 0.25 * static_cast<double>(i);
            }
            return h;
        };
    }
    auto evolve_with = [&](const DensityMatrix &rho0, const ToeplitzParams &p, double t) {
        return Propagator(build(p)).evolve(rho0, t);
    };

    InvarianceReport report;
    const auto grid = invariance_grid(opt.seed, opt.grid_size);
    if (grid.empty()) {
        report.warnings.emplace_back("empty parameter grid: every check passes vacuously");
    }

    InvarianceCheck spectrum{"werner-spectrum", grid.size(), 0.0, tol, true};
    InvarianceCheck a_free{"a-independence", grid.size(), 0.0, tol, true};
    InvarianceCheck scaling{"bn-t-scaling", grid.size(), 0.0, tol, true};
    for (const auto &s : grid) {
        const ToeplitzParams p1{s.a1, s.b, s.n, 4};
        const ToeplitzParams p2{s.a2, s.b, s.n, 4};
        const ToeplitzParams rescaled{s.a1, std::pow(s.b, s.n), 1.0, 4};

        const auto werner = evolve_with(werner_state(StateParam(s.gamma)), p1, s.t);
        const auto ev = eigenvalues(werner.matrix());
        const double low = (1.0 - s.gamma) / 4.0;
        const double expected[4] = {low, low, low, (1.0 + 3.0 * s.gamma) / 4.0};
        for (std::size_t k = 0; k < 4; ++k) {
            spectrum.worst = std::max(spectrum.worst, std::abs(ev[k] - expected[k]));
        }

        const auto mems = mems_state(StateParam(s.gamma));
        const auto r1 = evolve_with(mems, p1, s.t);
        a_free.worst = std::max(a_free.worst, max_abs_diff(r1.matrix(), evolve_with(mems, p2, s.t).matrix()));
        scaling.worst =
            std::max(scaling.worst, max_abs_diff(r1.matrix(), evolve_with(mems, rescaled, s.t).matrix()));
    }
    for (auto *c : {&spectrum, &a_free, &scaling}) {
        c->passed = c->worst <= c->tolerance;
        report.checks.push_back(*c);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Files

inline constexpr std::string_view kCsvHeader = "t,t_norm,concurrence,discord,classical_correlation,mutual_information";

inline std::string format_g(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

/// `<state>_g<gamma>_n<n>.csv`
inline std::string csv_file_name(const TraceParams &p) {
    return std::string(state_name(p.state)) + "_g" + format_g(p.gamma, 6) + "_n" + format_g(p.n, 6) + ".csv";
}

inline void write_csv(std::ostream &out, const CorrelationTrace &trace) {
    out << kCsvHeader << '\n';
    for (const auto &r : trace.rows) {
        out << format_g(r.t, 12) << ',' << format_g(r.t_norm, 12) << ',' << format_g(r.concurrence, 12) << ','
            << format_g(r.discord, 12) << ',' << format_g(r.classical_correlation, 12) << ','
            << format_g(r.mutual_information, 12) << '\n';
    }
}

inline void emit_csv(const CorrelationTrace &trace, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    }
    write_csv(out, trace);
    if (!out) {
        throw Error(ErrorCode::IoError, "write failed for " + path.string());
    }
}

inline std::vector<TraceRow> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || detail::trim(line) != kCsvHeader) {
        throw Error(ErrorCode::IoError, "CSV header mismatch");
    }
    std::vector<TraceRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(ss, cell, ',')) {
            v.push_back(detail::parse_real(cell, "csv line " + std::to_string(lineno)));
        }
        if (v.size() != 6) {
            throw Error(ErrorCode::IoError, "CSV line " + std::to_string(lineno) + " has " +
                                                std::to_string(v.size()) + " fields, expected 6");
        }
        rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
    }
    return rows;
}

/// Writes a matplotlib script that plots every trace's CSV (looked up next to
/// the script) as its own panel.
inline void emit_plot_script(const std::vector<CorrelationTrace> &traces, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    }
    out << "#!/usr/bin/env python3\n"
           "# Concurrence (black dotted) and discord (red solid) per sweep point.\n"
           "import csv\n"
           "import math\n"
           "import os\n"
           "import sys\n"
           "\n"
           "import matplotlib\n"
           "matplotlib.use(\"Agg\")\n"
           "import matplotlib.pyplot as plt\n"
           "\n"
           "HERE = os.path.dirname(os.path.abspath(__file__))\n"
           "PANELS = [\n";
    for (const auto &t : traces) {
        const auto &p = t.params;
        out << "    (\"" << csv_file_name(p) << "\", \"" << state_name(p.state) << "  gamma=" << format_g(p.gamma, 6)
            << "  n=" << format_g(p.n, 6) << "  b=" << format_g(p.b, 6) << "\"),\n";
    }
    out << "]\n"
           "\n"
           "\n"
           "def load(name):\n"
           "    with open(os.path.join(HERE, name), newline=\"\") as fh:\n"
           "        rows = list(csv.DictReader(fh))\n"
           "    return {k: [float(r[k]) for r in rows] for k in rows[0]}\n"
           "\n"
           "\n"
           "def main():\n"
           "    cols = min(3, len(PANELS)) or 1\n"
           "    nrows = math.ceil(len(PANELS) / cols) or 1\n"
           "    fig, axes = plt.subplots(nrows, cols, figsize=(4 * cols, 3 * nrows), squeeze=False)\n"
           "    for ax in axes.flat[len(PANELS):]:\n"
           "        ax.set_visible(False)\n"
           "    for ax, (name, title) in zip(axes.flat, PANELS):\n"
           "        data = load(name)\n"
           "        ax.plot(data[\"t_norm\"], data[\"concurrence\"], \"k:\", label=\"concurrence\")\n"
           "        ax.plot(data[\"t_norm\"], data[\"discord\"], \"r-\", label=\"discord\")\n"
           "        ax.set_title(title, fontsize=9)\n"
           "        ax.set_xlabel(\"t/T\")\n"
           "        ax.set_ylim(bottom=0)\n"
           "    axes.flat[0].legend(fontsize=8)\n"
           "    fig.tight_layout()\n"
           "    target = sys.argv[1] if len(sys.argv) > 1 else os.path.join(HERE, \"correlations.png\")\n"
           "    fig.savefig(target, dpi=150)\n"
           "\n"
           "\n"
           "if __name__ == \"__main__\":\n"
           "    main()\n";
    if (!out) {
        throw Error(ErrorCode::IoError, "write failed for " + path.string());
    }
}

}  // namespace tqc
