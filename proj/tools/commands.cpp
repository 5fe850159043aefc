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

#include "commands.hpp"

#include <cmath>
#include <iostream>

#include "cvet/core_stats.hpp"
#include "cvet/error.hpp"
#include "cvet/rates.hpp"
#include "cvet/theory.hpp"
#include "cvet/version.hpp"
#include "grid.hpp"

namespace cvet::cli {

namespace {

void emit(const RunConfig &config, const Dataset &data) {
    if (config.out.empty()) {
        std::cout << (config.format == DataFormat::kCsv ? to_csv(data) : to_json(data));
        std::cout.flush();
        return;
    }
    write_dataset(config.out, data, config.format);
}

ProgressFn progress_for(const RunConfig &config) {
    if (config.quiet) {
        return {};
    }
    return [](std::string_view line) { std::cerr << "cvet: " << line << '\n'; };
}

std::optional<std::size_t> parse_trials(const std::string &text) {
    if (text == "auto") {
        return std::nullopt;
    }
    const auto counts = parse_count_grid(text);
    if (counts.size() != 1) {
        throw ParameterError("--trials takes one count or 'auto'");
    }
    if (counts.front() < 100) {
        throw ParameterError("--trials must be at least 100");
    }
    return counts.front();
}

std::size_t single_count(const std::string &text, const char *flag) {
    const auto counts = parse_count_grid(text);
    if (counts.size() != 1) {
        throw ParameterError(std::string(flag) + " takes a single value here");
    }
    return counts.front();
}

void common_meta(Dataset &data, const RunConfig &config, const char *command) {
    data.add_meta("artifact", std::string("cvet ") + kVersion);
    data.add_meta("command", command);
    data.add_meta("kappa", format_number(config.kappa));
    data.add_meta("n_noise", format_number(config.n_noise));
    data.add_meta("n_signal", format_number(config.n_signal));
    data.add_meta("seed", std::to_string(config.seed));
}

}  // namespace

int cmd_theory(const RunConfig &config) {
    const auto bins = parse_count_grid(config.bins);
    const auto modes = parse_count_grid(config.modes);

    Dataset data;
    common_meta(data, config, "theory");
    data.add_meta("snr_definition", "SNR = M*kappa*N_S/N_B");
    data.add_meta("ideal_columns", "E = 0 limit with alpha_1^2 = SNR");
    data.columns = {"m",      "M",  "snr", "alpha1", "E",          "p1",   "p2",
                    "P_cn",   "P_ideal_exact", "P_ideal_approx", "P_EH", "P_CH", "P_CH_large_nb"};
    for (std::size_t m : bins) {
        for (std::size_t mm : modes) {
            const ScenarioParams params{config.kappa, config.n_signal, config.n_noise, m, mm};
            params.validate();
            const DerivedStats stats = derive_statistics(params);
            const BinaryErrorPair pair = binary_error_pair(stats.alpha_one, stats.e_thermal);
            const double dm = static_cast<double>(mm);
            std::vector<Cell> row{static_cast<std::int64_t>(m), static_cast<std::int64_t>(mm)};
            if (config.n_noise > 0.0) {
                const double snr = dm * config.kappa * config.n_signal / config.n_noise;
                const IdealCnError ideal = cn_error_ideal(m, std::sqrt(snr));
                row.insert(row.end(), {snr, stats.alpha_one, stats.e_thermal, pair.p_false_alarm,
                                       pair.p_false_negative, cn_error_recursive(m, pair), ideal.exact, ideal.approx,
                                       helstrom_ea_asymptotic(params), helstrom_classical_asymptotic(params),
                                       helstrom_classical_large_noise(m, dm, config.kappa, config.n_signal,
                                                                      config.n_noise)});
            } else {
                row.insert(row.end(), {std::monostate{}, stats.alpha_one, stats.e_thermal, pair.p_false_alarm,
                                       pair.p_false_negative, cn_error_recursive(m, pair), std::monostate{},
                                       std::monostate{}, std::monostate{}, helstrom_classical_asymptotic(params),
                                       std::monostate{}});
            }
            data.add_row(std::move(row));
        }
    }
    emit(config, data);
    return kExitOk;
}

int cmd_simulate(const RunConfig &config) {
    const auto trials = parse_trials(config.trials);
    const ProgressFn progress = progress_for(config);
    const std::size_t m = single_count(config.bins, "--m");

    if (!config.snr.empty()) {
        SnrSweepConfig sweep;
        sweep.kappa = config.kappa;
        sweep.n_signal = config.n_signal;
        sweep.n_noise = config.n_noise;
        sweep.num_bins = m;
        sweep.snr_grid = parse_grid(config.snr);
        sweep.trials = trials;
        sweep.policy = config.policy;
        sweep.master_seed = config.seed;
        sweep.workers = config.workers;
        emit(config, sweep_error_vs_snr(sweep, progress));
        return kExitOk;
    }

    Dataset data;
    common_meta(data, config, "simulate");
    data.add_meta("num_bins", std::to_string(m));
    data.add_meta("policy", std::string(to_string(config.policy)));
    data.add_meta("trials", trials ? std::to_string(*trials) : "auto: max(1e3, 100/P) capped at 1e5");
    data.columns = {"M", "P_cn_recursive", "P_cn_montecarlo", "P_cn_montecarlo_stderr", "trials", "errors",
                    "mc_agrees"};
    const auto modes = parse_count_grid(config.modes);
    const RandomStream root(config.seed);
    for (std::size_t idx = 0; idx < modes.size(); ++idx) {
        TrialCampaign campaign;
        campaign.params = {config.kappa, config.n_signal, config.n_noise, m, modes[idx]};
        campaign.params.validate();
        const double predicted = cn_error_recursive(m, binary_error_pair(campaign.params));
        campaign.trials = trials.value_or(auto_trials(predicted));
        campaign.policy = config.policy;
        campaign.master_seed = root.child(idx).key();
        if (progress) {
            progress("M " + std::to_string(modes[idx]) + ": " + std::to_string(campaign.trials) + " trials");
        }
        const ErrorEstimate est = estimate_error(campaign, config.workers);
        data.add_row({static_cast<std::int64_t>(modes[idx]), est.predicted, est.p_hat, est.std_err,
                      static_cast<std::int64_t>(est.trials), static_cast<std::int64_t>(est.errors),
                      static_cast<std::int64_t>(std::abs(est.p_hat - est.predicted) <= 3.0 * est.std_err)});
    }
    emit(config, data);
    return kExitOk;
}

int cmd_rates(const RunConfig &config) {
    RateSweepConfig sweep;
    sweep.kappa = config.kappa;
    sweep.n_noise = config.n_noise;
    sweep.n_s_grid = parse_grid(config.n_s_grid);
    if (config.model == "helstrom") {
        sweep.cn = false;
    } else if (config.model == "cn") {
        sweep.helstrom = false;
    } else if (config.model != "both") {
        throw ParameterError("--model must be helstrom, cn or both");
    }
    sweep.grid.max_bin_brightness = config.max_bin_brightness;
    sweep.grid.refine = config.refine;
    emit(config, sweep_rates(sweep, progress_for(config)));
    return kExitOk;
}

int cmd_validate(const RunConfig &config) {
    const ScenarioParams params{config.kappa, config.n_signal, config.n_noise, single_count(config.bins, "--m"),
                                single_count(config.modes, "--M")};
    params.validate();
    const ProgressFn progress = progress_for(config);

    ValidationReport report;
    if (progress) {
        progress("recursion oracle");
    }
    report.gates.push_back(check_recursion_oracle(6, config.self_test_negative));
    if (progress) {
        progress("orthogonality");
    }
    const DerivedStats stats = derive_statistics(params);
    report.append(validate_orthogonality(params.modes_per_bin, stats.v_het, config.samples, {0.02, 0.05, 0.1, 1.0},
                                         config.seed));
    if (progress) {
        progress("norm statistics");
    }
    report.append(validate_norm_statistics(params, config.samples, config.seed));
    if (progress) {
        progress("alpha statistics");
    }
    report.append(validate_alpha_stats(params, config.samples, config.seed));

    Dataset data;
    common_meta(data, config, "validate");
    data.add_meta("num_bins", std::to_string(params.num_bins));
    data.add_meta("modes_per_bin", std::to_string(params.modes_per_bin));
    data.add_meta("samples", std::to_string(config.samples));
    data.add_meta("self_test_negative", config.self_test_negative ? "true" : "false");
    data.add_meta("overall", report.passed() ? "pass" : "fail");
    data.columns = {"gate", "observed", "bound", "passed", "detail"};
    for (const auto &g : report.gates) {
        data.add_row({g.name, g.observed, g.bound, std::string(g.passed ? "pass" : "fail"), g.detail});
    }
    emit(config, data);
    return report.passed() ? kExitOk : kExitGateFailure;
}

}  // namespace cvet::cli
