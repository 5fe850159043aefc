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

#include "cvet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "cvet/conversion.hpp"
#include "cvet/error.hpp"
#include "cvet/kernels.hpp"
#include "cvet/random.hpp"
#include "cvet/theory.hpp"
#include "cvet/version.hpp"

namespace cvet {

namespace {

struct RunningStats {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double variance() const {
        return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    }
    double std_err() const {
        return n > 0 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
    }
};

std::string fmt(double v) {
    return format_number(v);
}

GateResult relative_gate(std::string name, double observed, double expected, double tolerance) {
    GateResult g;
    g.name = std::move(name);
    g.observed = std::abs(observed / expected - 1.0);
    g.bound = tolerance;
    g.passed = g.observed <= tolerance;
    g.detail = "value " + fmt(observed) + " vs expected " + fmt(expected) + " (relative deviation)";
    return g;
}

}  // namespace

std::size_t default_workers() {
    if (const char *env = std::getenv("CVET_WORKERS"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        const unsigned long long n = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) {
            return static_cast<std::size_t>(n);
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void TrialCampaign::validate() const {
    params.validate();
    if (trials == 0) {
        throw ParameterError("a campaign needs at least one trial");
    }
    if (fixed_bin && *fixed_bin >= params.num_bins) {
        throw ParameterError("fixed bin index out of range");
    }
}

Decision run_trial(const TrialCampaign &campaign, std::size_t trial, std::size_t *true_bin) {
    const RandomStream stream = RandomStream(campaign.master_seed).child(trial);
    const std::size_t m = campaign.params.num_bins;
    std::size_t h = 0;
    if (campaign.fixed_bin) {
        h = *campaign.fixed_bin;
    } else {
        Engine engine = stream.child(0).engine();
        h = std::min(m - 1, static_cast<std::size_t>(uniform01(engine) * static_cast<double>(m)));
    }
    const HeterodyneRecord record = simulate_heterodyne(campaign.params, h, stream.child(1));
    const ConversionOutput conv = convert(record, campaign.params);
    if (true_bin != nullptr) {
        *true_bin = h;
    }
    return run_conditional_nulling(conv, campaign.policy, campaign.params, stream.child(2));
}

ErrorEstimate estimate_error(const TrialCampaign &campaign, std::size_t workers) {
    campaign.validate();
    const std::size_t n_workers = std::min(workers == 0 ? default_workers() : workers, campaign.trials);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> errors{0};
    std::atomic<bool> stop{false};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto work = [&] {
        std::size_t local = 0;
        try {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
                if (t >= campaign.trials) {
                    break;
                }
                std::size_t h = 0;
                const Decision d = run_trial(campaign, t, &h);
                local += d.chosen_bin != h ? 1 : 0;
            }
        } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) {
                failure = std::current_exception();
            }
            stop = true;
        }
        errors += local;
    };

    if (n_workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ErrorEstimate est;
    est.trials = campaign.trials;
    est.errors = errors.load();
    est.p_hat = static_cast<double>(est.errors) / static_cast<double>(est.trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(est.trials));
    est.predicted = cn_error_recursive(campaign.params.num_bins, binary_error_pair(campaign.params));
    return est;
}

bool ValidationReport::passed() const {
    return std::all_of(gates.begin(), gates.end(), [](const GateResult &g) { return g.passed; });
}

void ValidationReport::append(const ValidationReport &other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

ValidationReport validate_orthogonality(std::size_t modes, double variance, std::size_t samples,
                                        const std::vector<double> &thresholds, std::uint64_t seed) {
    if (modes < 2 || samples < 100) {
        throw ParameterError("orthogonality check needs M >= 2 and at least 100 samples");
    }
    const auto &k = kernels::active_kernels();
    const RandomStream root = RandomStream(seed).child(0x6f72);
    std::vector<std::size_t> tail_re(thresholds.size(), 0);
    std::vector<std::size_t> tail_im(thresholds.size(), 0);
    RunningStats re_stats;
    RunningStats im_stats;
    for (std::size_t s = 0; s < samples; ++s) {
        const RandomStream pair = root.child(s);
        const ComplexVector a = sample_complex_gaussian(pair.child(0), variance, modes);
        const ComplexVector b = sample_complex_gaussian(pair.child(1), variance, modes);
        const double denom = std::sqrt(kernels::norm_sq(k, a) * kernels::norm_sq(k, b));
        const std::complex<double> overlap = kernels::hdot(k, a, b) / denom;
        re_stats.push(overlap.real());
        im_stats.push(overlap.imag());
        for (std::size_t t = 0; t < thresholds.size(); ++t) {
            tail_re[t] += std::abs(overlap.real()) > thresholds[t] ? 1 : 0;
            tail_im[t] += std::abs(overlap.imag()) > thresholds[t] ? 1 : 0;
        }
    }

    ValidationReport report;
    const double n = static_cast<double>(samples);
    const double dm = static_cast<double>(modes);
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
        const double a = thresholds[t];
        const double bound = std::min(1.0, 1.0 / (2.0 * a * a * dm));
        const double slack = 3.0 * std::sqrt(bound * (1.0 - bound) / n);
        for (int part = 0; part < 2; ++part) {
            GateResult g;
            g.name = std::string(part == 0 ? "overlap_tail_re" : "overlap_tail_im") + "[a=" + fmt(a) + "]";
            g.observed = static_cast<double>(part == 0 ? tail_re[t] : tail_im[t]) / n;
            g.bound = bound;
            g.passed = g.observed <= bound + slack;
            g.detail = "Chebyshev bound 1/(2a^2 M) with 3 s.e. slack " + fmt(slack);
            report.gates.push_back(std::move(g));
        }
    }
    const double sigma = 1.0 / std::sqrt(2.0 * dm);
    report.gates.push_back(relative_gate("overlap_std_re", std::sqrt(re_stats.variance()), sigma, 0.10));
    report.gates.push_back(relative_gate("overlap_std_im", std::sqrt(im_stats.variance()), sigma, 0.10));
    return report;
}

ValidationReport validate_norm_statistics(const ScenarioParams &params, std::size_t samples, std::uint64_t seed) {
    params.validate();
    if (samples < 100) {
        throw ParameterError("norm statistics need at least 100 samples");
    }
    const auto &k = kernels::active_kernels();
    const DerivedStats stats = derive_statistics(params);
    const RandomStream root = RandomStream(seed).child(0x6e6f);
    RunningStats norms;
    for (std::size_t s = 0; s < samples; ++s) {
        const ComplexVector r = sample_complex_gaussian(root.child(s), stats.v_het, params.modes_per_bin);
        norms.push(std::sqrt(kernels::norm_sq(k, r)));
    }
    ValidationReport report;
    const double expected_mean = std::sqrt(2.0 * static_cast<double>(params.modes_per_bin) * stats.v_het);
    report.gates.push_back(relative_gate("norm_mean", norms.mean, expected_mean, 0.01));
    const double var_tol = std::max(0.10, 4.0 * std::sqrt(2.0 / static_cast<double>(samples - 1)));
    report.gates.push_back(relative_gate("norm_variance", norms.variance(), stats.v_het / 2.0, var_tol));
    return report;
}

ValidationReport validate_alpha_stats(const ScenarioParams &params, std::size_t samples, std::uint64_t seed) {
    params.validate();
    if (samples < 100) {
        throw ParameterError("alpha statistics need at least 100 samples");
    }
    const DerivedStats stats = derive_statistics(params);
    const std::size_t m = params.num_bins;
    const RandomStream root = RandomStream(seed).child(0x616c);

    // The signal bin goes first for alpha_1 so its norm is not reduced by
    // projections, and last for alpha_0 so every other bin precedes it.
    RunningStats alpha1;
    RunningStats alpha0;
    for (std::size_t s = 0; s < samples; ++s) {
        const RandomStream trial = root.child(s);
        const ConversionOutput first = convert(simulate_heterodyne(params, 0, trial.child(0)), params);
        alpha1.push(first.means[0].real());
        const ConversionOutput last = convert(simulate_heterodyne(params, m - 1, trial.child(1)), params);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            alpha0.push(last.means[i].real());
            alpha0.push(last.means[i].imag());
        }
    }

    ValidationReport report;
    const double mu = stats.alpha_one;
    GateResult mean_gate;
    mean_gate.name = "alpha1_mean";
    mean_gate.observed = std::abs(alpha1.mean - mu);
    mean_gate.bound = 3.0 * alpha1.std_err();
    mean_gate.passed = mean_gate.observed <= mean_gate.bound;
    mean_gate.detail = "mean " + fmt(alpha1.mean) + " vs " + fmt(mu) + ", |difference| vs 3 s.e.";
    report.gates.push_back(std::move(mean_gate));

    const double c2 = stats.c_pair * stats.c_pair;
    const double alpha1_var = c2 / (8.0 * stats.v_het);
    const double alpha0_var = c2 / (4.0 * stats.v_het);
    report.gates.push_back(relative_gate("alpha1_variance", alpha1.variance(), alpha1_var, 0.30));
    report.gates.push_back(relative_gate("alpha0_quadrature_variance", alpha0.variance(), alpha0_var, 0.30));

    if (stats.e_thermal > 0.0) {
        GateResult ratio;
        ratio.name = "alpha1_fluctuation_to_noise";
        ratio.observed = alpha1.variance() / stats.e_thermal;
        ratio.bound = 0.05;
        ratio.passed = ratio.observed <= ratio.bound;
        ratio.detail = "var(alpha1)/E, predicted " + fmt(alpha1_var / stats.e_thermal);
        report.gates.push_back(std::move(ratio));
    }
    return report;
}

GateResult check_recursion_oracle(std::size_t max_bins, bool corrupt_q) {
    if (max_bins < 2 || max_bins > kBruteForceMaxBins) {
        throw ParameterError("oracle check supports 2 <= m <= " + std::to_string(kBruteForceMaxBins));
    }
    auto miss = [corrupt_q](std::size_t n, const BinaryErrorPair &pair) {
        return corrupt_q ? 1.0 - 0.5 * q_sequence(n, pair) : q_complement(n, pair);
    };
    double worst = 0.0;
    for (std::size_t m = 2; m <= max_bins; ++m) {
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const BinaryErrorPair pair{0.1 * i, 0.1 * j};
                const double rec = detail::cn_recursion(m, pair, miss);
                const double brute = cn_error_bruteforce(m, pair);
                worst = std::max(worst, std::abs(rec - brute));
            }
        }
    }
    GateResult g;
    g.name = "recursion_oracle";
    g.observed = worst;
    g.bound = 1e-12;
    g.passed = worst <= g.bound;
    g.detail = "max |recursion - path enumeration| over m = 2.." + std::to_string(max_bins) +
               " and (p1, p2) in {0, 0.1, ..., 0.9}^2" + (corrupt_q ? " (Q_n corrupted)" : "");
    return g;
}

std::size_t auto_trials(double predicted) {
    constexpr double kMin = 1e3;
    constexpr double kMax = 1e5;
    const double wanted = predicted > 0.0 ? 100.0 / predicted : kMax;
    return static_cast<std::size_t>(std::ceil(std::clamp(wanted, kMin, kMax)));
}

Dataset sweep_error_vs_snr(const SnrSweepConfig &config, const ProgressFn &progress) {
    if (config.snr_grid.empty()) {
        throw ParameterError("SNR grid is empty");
    }
    if (!(config.n_noise > 0.0)) {
        throw ParameterError("the SNR sweep needs N_B > 0");
    }
    if (config.trials && *config.trials < 100) {
        throw ParameterError("Monte-Carlo points need at least 100 trials");
    }

    Dataset data;
    data.add_meta("artifact", std::string("cvet ") + kVersion);
    data.add_meta("command", "simulate");
    data.add_meta("snr_definition", "SNR = M*kappa*N_S/N_B, M rounded to nearest integer");
    data.add_meta("kappa", fmt(config.kappa));
    data.add_meta("n_signal", fmt(config.n_signal));
    data.add_meta("n_noise", fmt(config.n_noise));
    data.add_meta("num_bins", std::to_string(config.num_bins));
    data.add_meta("policy", std::string(to_string(config.policy)));
    data.add_meta("seed", std::to_string(config.master_seed));
    data.add_meta("trials", config.trials ? std::to_string(*config.trials) : "auto: max(1e3, 100/P) capped at 1e5");
    data.add_meta("mc_max_modes", std::to_string(config.mc_max_modes));
    data.add_meta("ideal_columns", "E = 0 limit with alpha_1^2 = SNR");
    data.columns = {"snr",      "M",          "P_cn_recursive", "P_cn_montecarlo", "P_cn_montecarlo_stderr",
                    "trials",   "mc_agrees",  "P_ideal_exact",  "P_ideal_approx",  "P_EH",
                    "P_CH",     "P_CH_large_nb", "p1",          "p2",              "alpha1",
                    "E"};

    const RandomStream root(config.master_seed);
    for (std::size_t idx = 0; idx < config.snr_grid.size(); ++idx) {
        const double snr = config.snr_grid[idx];
        if (!(std::isfinite(snr) && snr > 0.0)) {
            throw ParameterError("SNR values must be positive");
        }
        const double modes_real = std::round(snr * config.n_noise / (config.kappa * config.n_signal));
        if (modes_real < static_cast<double>(config.num_bins)) {
            throw ParameterError("SNR " + fmt(snr) + " gives M = " + fmt(modes_real) + " < m");
        }
        ScenarioParams params{config.kappa, config.n_signal, config.n_noise, config.num_bins,
                              static_cast<std::size_t>(modes_real)};
        params.validate();
        const DerivedStats stats = derive_statistics(params);
        const BinaryErrorPair pair = binary_error_pair(stats.alpha_one, stats.e_thermal);
        const double p_rec = cn_error_recursive(params.num_bins, pair);
        const IdealCnError ideal = cn_error_ideal(params.num_bins, std::sqrt(snr));

        std::vector<Cell> row{snr, static_cast<std::int64_t>(params.modes_per_bin), p_rec};
        if (config.monte_carlo && params.modes_per_bin <= config.mc_max_modes) {
            TrialCampaign campaign;
            campaign.params = params;
            campaign.trials = config.trials.value_or(auto_trials(p_rec));
            campaign.policy = config.policy;
            campaign.master_seed = root.child(idx).key();
            if (progress) {
                std::ostringstream msg;
                msg << "point " << idx + 1 << "/" << config.snr_grid.size() << ": SNR " << fmt(snr) << ", M "
                    << params.modes_per_bin << ", " << campaign.trials << " trials";
                progress(msg.str());
            }
            const ErrorEstimate est = estimate_error(campaign, config.workers);
            row.insert(row.end(), {est.p_hat, est.std_err, static_cast<std::int64_t>(est.trials),
                                   static_cast<std::int64_t>(std::abs(est.p_hat - p_rec) <= 3.0 * est.std_err)});
        } else {
            row.insert(row.end(), {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}});
        }
        row.insert(row.end(), {ideal.exact, ideal.approx, helstrom_ea_asymptotic(params),
                               helstrom_classical_asymptotic(params),
                               helstrom_classical_large_noise(params.num_bins, modes_real, params.kappa,
                                                              params.n_signal, params.n_noise),
                               pair.p_false_alarm, pair.p_false_negative, stats.alpha_one, stats.e_thermal});
        data.add_row(std::move(row));
    }
    return data;
}

Dataset sweep_rates(const RateSweepConfig &config, const ProgressFn &progress) {
    if (config.n_s_grid.empty()) {
        throw ParameterError("n_s grid is empty");
    }
    if (!config.helstrom && !config.cn) {
        throw ParameterError("no rate model selected");
    }
    Dataset data;
    data.add_meta("artifact", std::string("cvet ") + kVersion);
    data.add_meta("command", "rates");
    data.add_meta("kappa", fmt(config.kappa));
    data.add_meta("n_noise", fmt(config.n_noise));
    data.add_meta("models", std::string(config.helstrom ? "helstrom" : "") + (config.helstrom && config.cn ? "," : "") +
                                (config.cn ? "cn" : ""));
    data.add_meta("rate_definition", "R = I(P)/(M*m) bits per mode, per-bin brightness N_S = m*n_s");
    data.add_meta("bins_grid", std::to_string(config.grid.bins.size()) + " values from " +
                                   std::to_string(config.grid.bins.front()) + " to " +
                                   std::to_string(config.grid.bins.back()));
    data.add_meta("modes_grid", std::to_string(config.grid.modes.size()) + " values from " +
                                    std::to_string(config.grid.modes.front()) + " to " +
                                    std::to_string(config.grid.modes.back()) +
                                    (config.grid.refine ? ", refined around the argmax" : ""));
    data.add_meta("max_bin_brightness", config.grid.max_bin_brightness > 0.0 ? fmt(config.grid.max_bin_brightness)
                                                                              : std::string("none"));
    data.columns = {"n_s",   "C",     "C_E",     "R_H",  "P_H",  "m_H",     "M_H",        "edge_H",
                    "R_cn",  "P_cn",  "m_cn",    "M_cn", "edge_cn", "C_E_over_C", "R_H_over_C", "R_cn_over_C",
                    "R_H_over_C_E"};

    for (std::size_t idx = 0; idx < config.n_s_grid.size(); ++idx) {
        const double n_s = config.n_s_grid[idx];
        if (!(std::isfinite(n_s) && n_s > 0.0)) {
            throw ParameterError("n_s values must be positive");
        }
        if (progress) {
            progress("n_s " + fmt(n_s) + " (" + std::to_string(idx + 1) + "/" +
                     std::to_string(config.n_s_grid.size()) + ")");
        }
        const double c = classical_capacity(config.kappa, config.n_noise, n_s);
        const double c_e = ea_capacity(config.kappa, config.n_noise, n_s).bits;
        std::vector<Cell> row{n_s, c, c_e};
        auto add_model = [&](bool enabled, ErrorModel model) -> std::optional<RatePoint> {
            if (!enabled) {
                row.insert(row.end(), 5, std::monostate{});
                return std::nullopt;
            }
            const RateOptimum opt = optimize_rate(config.kappa, config.n_noise, n_s, model, config.grid);
            row.insert(row.end(), {opt.best.rate, opt.best.error_prob, static_cast<std::int64_t>(opt.best.num_bins),
                                   static_cast<std::int64_t>(opt.best.modes_per_bin),
                                   static_cast<std::int64_t>(opt.at_grid_edge)});
            return opt.best;
        };
        const auto h = add_model(config.helstrom, ErrorModel::kHelstromEa);
        const auto cn = add_model(config.cn, ErrorModel::kCnRecursion);
        row.push_back(c_e / c);
        row.push_back(h ? Cell{h->rate / c} : Cell{});
        row.push_back(cn ? Cell{cn->rate / c} : Cell{});
        row.push_back(h ? Cell{h->rate / c_e} : Cell{});
        data.add_row(std::move(row));
    }
    return data;
}

}  // namespace cvet
