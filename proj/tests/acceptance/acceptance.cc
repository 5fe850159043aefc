// Copyright 2026 The cvet Authors
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

// Acceptance suite: one PASS/FAIL line per criterion at its stated tolerance.
//
//   cvet_acceptance [--criterion N] [--cli PATH] [--work DIR]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvet/conversion.hpp"
#include "cvet/harness.hpp"
#include "cvet/rates.hpp"
#include "cvet/receiver.hpp"
#include "cvet/theory.hpp"

using namespace cvet;

namespace {

struct Context {
    std::string cli;
    std::filesystem::path work = std::filesystem::temp_directory_path() / "cvet_acceptance";
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double v) {
    std::ostringstream s;
    s.precision(4);
    s << v;
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        out.push_back(std::exp(std::log(a) + (std::log(b) - std::log(a)) * k / (n - 1)));
    }
    out.front() = a;
    out.back() = b;
    return out;
}

double column(const Dataset &d, std::size_t row, const char *name) {
    return std::get<double>(d.rows[row][d.column_index(name)]);
}

Outcome oracle_equivalence(const Context &) {
    const auto t0 = std::chrono::steady_clock::now();
    const GateResult g = check_recursion_oracle(6, false);
    const double elapsed = seconds_since(t0);
    return {g.passed && elapsed < 1.0,
            "max |recursion - enumeration| = " + num(g.observed) + " (limit 1e-12), " + num(elapsed) + " s (limit 1 s)"};
}

Outcome ideal_limit(const Context &) {
    double worst_abs = 0.0;
    double worst_rel = 0.0;
    std::size_t worst_m = 0;
    double worst_a2 = 0.0;
    std::size_t largest_ok_m = 64;
    bool approx_ok = true;
    for (std::size_t m = 2; m <= 64; ++m) {
        for (int k = 1; k <= 200; ++k) {
            const double a2 = 0.1 * k;
            const double rec = cn_error_recursive(m, {0.0, std::exp(-a2)});
            const IdealCnError e = cn_error_ideal(m, std::sqrt(a2));
            worst_abs = std::max(worst_abs, std::abs(rec - e.exact));
            if (e.exact < 1e-2) {
                const double rel = std::abs(e.approx - e.exact) / e.exact;
                if (rel > 0.10) {
                    if (approx_ok) {
                        largest_ok_m = m - 1;
                    }
                    approx_ok = false;
                }
                if (rel > worst_rel) {
                    worst_rel = rel;
                    worst_m = m;
                    worst_a2 = a2;
                }
            }
        }
    }
    const bool exact_ok = worst_abs <= 1e-10;
    std::string detail = "recursion vs closed form max abs diff " + num(worst_abs) + " (limit 1e-10, " +
                         (exact_ok ? "ok" : "FAIL") + "); approximation max rel error where P < 1e-2: " +
                         num(worst_rel) + " at m=" + std::to_string(worst_m) + ", alpha^2=" + num(worst_a2) +
                         " (limit 0.10, " + (approx_ok ? "ok" : "FAIL");
    if (!approx_ok) {
        detail += "; holds only for m <= " + std::to_string(largest_ok_m);
    }
    return {exact_ok && approx_ok, detail + ")"};
}

Outcome fig3_reproduction(const Context &) {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t points = 0;
    std::size_t agree = 0;
    std::string misses;
    for (double ns : {1e-2, 1e-3}) {
        SnrSweepConfig cfg;
        cfg.kappa = 0.1;
        cfg.n_noise = 10.0;
        cfg.num_bins = 10;
        cfg.n_signal = ns;
        cfg.snr_grid = log_grid(0.1, 10.0, 10);
        const Dataset d = sweep_error_vs_snr(cfg, [](std::string_view line) {
            std::cerr << "  " << line << '\n';
        });
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
            const Cell &flag = d.rows[r][d.column_index("mc_agrees")];
            if (std::holds_alternative<std::monostate>(flag)) {
                continue;
            }
            ++points;
            if (std::get<std::int64_t>(flag) == 1) {
                ++agree;
            } else {
                misses += " [N_S=" + num(ns) + " SNR=" + num(column(d, r, "snr")) + "]";
            }
        }
    }
    const double frac = points ? static_cast<double>(agree) / points : 0.0;
    const double elapsed = seconds_since(t0);
    return {points > 0 && frac >= 0.95 && elapsed <= 1800.0,
            std::to_string(agree) + "/" + std::to_string(points) + " Monte-Carlo points within 3 s.e. (" + num(frac) +
                ", need 0.95)" + misses + ", " + num(elapsed) + " s"};
}

Outcome error_exponent(const Context &) {
    const double kappa = 0.1, ns = 1e-3, nb = 10.0;
    const double target = -2.0 * kappa * ns / nb;
    // Window: up to ten times the M at which the entanglement-assisted bound
    // reaches 1e-6; points kept where the recursion lies in [1e-6, 1e-1].
    const double m_top = 10.0 * std::log(0.9 / 1e-6) / (-target);
    std::vector<double> xs, ys;
    for (int k = 1; k <= 4000; ++k) {
        const double modes = std::round(m_top * k / 4000.0);
        const double p = cn_error_recursive(10, binary_error_pair(derive_statistics(kappa, ns, nb, modes).alpha_one,
                                                                  derive_statistics(kappa, ns, nb, modes).e_thermal));
        if (p >= 1e-6 && p <= 1e-1) {
            xs.push_back(modes);
            ys.push_back(std::log(p));
        }
    }
    if (xs.size() < 2) {
        return {false, "fewer than two points with error in [1e-6, 1e-1]"};
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    // Steepest local slope, for the report only.
    double steepest = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        steepest = std::min(steepest, (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
    }
    const double ratio = slope / target;
    const double min_p = std::exp(*std::min_element(ys.begin(), ys.end()));
    return {std::abs(ratio - 1.0) <= 0.10,
            "fitted slope " + num(slope) + " vs target " + num(target) + " (ratio " + num(ratio) +
                ", limit 1 +- 0.10); steepest local slope ratio " + num(steepest / target) +
                "; smallest error reached " + num(min_p) + " over M <= " + num(m_top)};
}

Outcome error_floor(const Context &) {
    auto floor_curve = [](double ns) {
        SnrSweepConfig cfg;
        cfg.monte_carlo = false;
        cfg.n_signal = ns;
        cfg.snr_grid = log_grid(100.0, 1000.0, 11);
        const Dataset d = sweep_error_vs_snr(cfg);
        std::vector<double> p;
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
            p.push_back(column(d, r, "P_cn_recursive"));
        }
        return p;
    };
    const auto hi = floor_curve(1e-2);
    const auto lo = floor_curve(1e-3);
    const auto [mn, mx] = std::minmax_element(hi.begin(), hi.end());
    const double change = (*mx - *mn) / *mn;
    const bool flat = change < 0.01;
    const bool lower = lo.back() < hi.back();
    return {flat && lower, "relative change over SNR 100..1000 at N_S=1e-2: " + num(change) +
                               " (limit 0.01); floor " + num(hi.back()) + " at N_S=1e-2 vs " + num(lo.back()) +
                               " at N_S=1e-3"};
}

Outcome appendix_a(const Context &) {
    const auto t0 = std::chrono::steady_clock::now();
    const ScenarioParams p{0.1, 0.01, 10.0, 10, 10000};
    const DerivedStats s = derive_statistics(p);
    ValidationReport r = validate_norm_statistics(p, 1000);
    r.append(validate_orthogonality(p.modes_per_bin, s.v_het, 1000, {0.02, 0.05, 0.1}));
    r.append(validate_alpha_stats(p, 1000));
    bool ok = true;
    std::string detail;
    for (const GateResult &g : r.gates) {
        const bool wanted = g.name == "norm_mean" || g.name.starts_with("overlap_") || g.name == "alpha1_mean";
        if (!wanted) {
            continue;
        }
        ok = ok && g.passed;
        detail += g.name + "=" + num(g.observed) + "/" + num(g.bound) + (g.passed ? " " : "(FAIL) ");
    }
    const double elapsed = seconds_since(t0);
    return {ok && elapsed < 60.0, detail + "; " + num(elapsed) + " s (limit 60 s)"};
}

Outcome leakage(const Context &) {
    const ScenarioParams p{0.1, 0.01, 10.0, 10, 10000};
    const DerivedStats s = derive_statistics(p);
    const RandomStream root(2718);
    double worst_leak = 0.0;
    double worst_rel = 0.0;
    double worst_imag = 0.0;
    bool positive = true;
    for (std::size_t t = 0; t < 1000; ++t) {
        const RandomStream trial = root.child(t);
        Engine pick = trial.child(0).engine();
        const std::size_t h = std::min<std::size_t>(9, static_cast<std::size_t>(uniform01(pick) * 10));
        const ConversionOutput out = convert(simulate_heterodyne(p, h, trial.child(1)), p);
        const double dh = out.means[h].real();
        positive = positive && dh > 0.0;
        worst_imag = std::max(worst_imag, std::abs(out.means[h].imag()) / dh);
        worst_rel = std::max(worst_rel, std::abs(dh / (s.c_pair * out.norms[h] / (2.0 * s.v_het)) - 1.0));
        for (std::size_t i = h + 1; i < out.means.size(); ++i) {
            worst_leak = std::max(worst_leak, std::abs(out.means[i]) / dh);
        }
    }
    return {positive && worst_leak < 1e-9 && worst_rel <= 1e-9 && worst_imag <= 1e-9,
            "max |d'_i|/d'_h for i > h " + num(worst_leak) + "; max relative error of d'_h " + num(worst_rel) +
                "; max |Im d'_h|/d'_h " + num(worst_imag) + " (limits 1e-9)"};
}

Outcome capacities(const Context &) {
    bool ok = entropy_g(0.0) == 0.0 && entropy_g(1.0) == 2.0;
    std::string detail = std::string("g(0)=0, g(1)=2 ") + (ok ? "exact" : "FAIL");
    double worst = 0.0;
    for (double ns : {1e-6, 1e-4, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0}) {
        worst = std::max(worst, std::abs(ea_capacity(1.0, 0.0, ns).bits - 2.0 * entropy_g(ns)));
    }
    ok = ok && worst <= 1e-12;
    detail += "; |C_E - 2g| max " + num(worst);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int violations = 0;
    for (int t = 0; t < 1000; ++t) {
        const double kappa = 1e-3 + (1.0 - 1e-3) * u(rng);
        const double nb = std::pow(10.0, -3.0 + 5.0 * u(rng));
        const double ns = std::pow(10.0, -6.0 + 7.0 * u(rng));
        violations += classical_capacity(kappa, nb, ns) > ea_capacity(kappa, nb, ns).bits;
    }
    ok = ok && violations == 0;
    detail += "; C > C_E on " + std::to_string(violations) + "/1000 random points";
    double lo = INFINITY, hi = 0.0;
    for (double ns : log_grid(1e-5, 1e-3, 21)) {
        const double v = ea_capacity(0.1, 20, ns).bits / classical_capacity(0.1, 20, ns) / std::abs(std::log(ns));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    ok = ok && hi / lo - 1.0 < 0.15;
    detail += "; (C_E/C)/|ln n_S| spread " + num(hi / lo - 1.0) + " (limit 0.15)";
    return {ok, detail};
}

Outcome fig4_reproduction(const Context &) {
    const auto t0 = std::chrono::steady_clock::now();
    RateSweepConfig cfg;
    cfg.kappa = 0.1;
    cfg.n_noise = 20.0;
    cfg.n_s_grid = log_grid(1e-1, 1e-4, 30);  // descending n_s
    const Dataset d = sweep_rates(cfg);
    int order_bad = 0;
    int mono_bad = 0;
    std::string mono_where;
    std::vector<double> cn_ratio;
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
        const double ce = column(d, r, "C_E"), rh = column(d, r, "R_H"), rcn = column(d, r, "R_cn");
        order_bad += !(rcn <= rh && rh <= ce);
        if (r > 0 && column(d, r, "R_H_over_C_E") < column(d, r - 1, "R_H_over_C_E")) {
            ++mono_bad;
            if (mono_where.size() < 80) {
                mono_where += " " + num(column(d, r, "n_s"));
            }
        }
        cn_ratio.push_back(column(d, r, "R_cn_over_C"));
    }
    std::size_t first_above = cn_ratio.size();
    for (std::size_t r = 0; r < cn_ratio.size(); ++r) {
        if (cn_ratio[r] > 1.0) {
            first_above = r;
            break;
        }
    }
    bool cn_ok = first_above < cn_ratio.size();
    for (std::size_t r = first_above + 1; cn_ok && r < cn_ratio.size(); ++r) {
        cn_ok = cn_ratio[r] > cn_ratio[r - 1];
    }
    const double elapsed = seconds_since(t0);
    std::string detail = "ordering violations " + std::to_string(order_bad) + "/" + std::to_string(d.rows.size()) +
                         "; R_H/C_E decreases at " + std::to_string(mono_bad) + " steps" +
                         (mono_bad ? " (n_s:" + mono_where + ")" : "") + "; R_cn/C ";
    if (first_above < cn_ratio.size()) {
        detail += "exceeds 1 from n_s=" + num(column(d, first_above, "n_s")) + " down, reaching " +
                  num(cn_ratio.back()) + (cn_ok ? ", increasing" : ", NOT increasing");
    } else {
        detail += "never exceeds 1 (max " + num(*std::max_element(cn_ratio.begin(), cn_ratio.end())) + ")";
    }
    detail += "; R_H/C_E at n_s=1e-4: " + num(column(d, d.rows.size() - 1, "R_H_over_C_E")) + "; " +
              num(elapsed) + " s";
    return {order_bad == 0 && mono_bad == 0 && cn_ok && elapsed <= 600.0, detail};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const Context &ctx) {
    if (ctx.cli.empty()) {
        // Library-level fallback: serialised sweeps with 1 and 8 workers.
        SnrSweepConfig cfg;
        cfg.snr_grid = {0.5, 1.0};
        cfg.trials = 300;
        cfg.workers = 1;
        const std::string a = to_csv(sweep_error_vs_snr(cfg));
        cfg.workers = 8;
        const std::string b = to_csv(sweep_error_vs_snr(cfg));
        return {a == b, std::string("library sweep with 1 vs 8 workers ") + (a == b ? "identical" : "DIFFERENT")};
    }
    std::filesystem::create_directories(ctx.work);
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"theory", "theory --M 1000:100000:log8 --m 2,10"},
        {"simulate", "simulate --preset fig3 --snr 0.3:3:log4 --trials 300 --seed 99 --quiet"},
        {"simulate_json", "simulate --M 3000 --trials 400 --policy adaptive --format json --quiet"},
        {"rates", "rates --preset fig4 --ns 1e-3:1e-2:log3 --quiet"},
        {"validate", "validate --M 2000 --samples 200 --quiet"},
    };
    int mismatches = 0;
    std::string detail;
    for (const auto &[name, args] : commands) {
        std::vector<std::string> outputs;
        for (const char *workers : {"1", "1", "8", "8"}) {
            const auto path = ctx.work / ("acc10_" + name + "_" + workers + "_" + std::to_string(outputs.size()));
            const std::string cmd =
                "CVET_WORKERS=" + std::string(workers) + " \"" + ctx.cli + "\" " + args + " --out \"" + path.string() + "\"";
            const int rc = std::system(cmd.c_str());
            if (rc != 0) {
                return {false, "command failed: " + cmd};
            }
            outputs.push_back(slurp(path));
        }
        const bool same = std::all_of(outputs.begin(), outputs.end(),
                                      [&](const std::string &o) { return o == outputs.front() && !o.empty(); });
        mismatches += !same;
        detail += name + (same ? "=identical " : "=DIFFERENT ");
    }
    return {mismatches == 0, detail + "(two runs each with 1 and 8 workers)"};
}

struct Entry {
    int id;
    const char *title;
    std::function<Outcome(const Context &)> run;
};

const std::vector<Entry> &entries() {
    static const std::vector<Entry> list = {
        {1, "recursion vs path enumeration", oracle_equivalence},
        {2, "ideal-limit consistency", ideal_limit},
        {3, "error vs SNR: Monte Carlo vs recursion", fig3_reproduction},
        {4, "error exponent of the receiver", error_exponent},
        {5, "error floor", error_floor},
        {6, "heterodyne and conversion statistics", appendix_a},
        {7, "leakage-free conversion", leakage},
        {8, "capacity identities", capacities},
        {9, "rate sweep ordering and monotonicity", fig4_reproduction},
        {10, "determinism", determinism},
    };
    return list;
}

}  // namespace

int main(int argc, char **argv) {
    Context ctx;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (arg == "--cli" && i + 1 < argc) {
            ctx.cli = argv[++i];
        } else if (arg == "--work" && i + 1 < argc) {
            ctx.work = argv[++i];
        } else {
            std::cerr << "usage: cvet_acceptance [--criterion N] [--cli PATH] [--work DIR]\n";
            return 2;
        }
    }
    int failures = 0;
    int ran = 0;
    for (const Entry &e : entries()) {
        if (only != 0 && e.id != only) {
            continue;
        }
        ++ran;
        Outcome o;
        try {
            o = e.run(ctx);
        } catch (const std::exception &ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << e.id << " (" << e.title << "): " << o.detail
                  << std::endl;
    }
    if (ran == 0) {
        std::cerr << "no criterion " << only << '\n';
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
