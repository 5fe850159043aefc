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

#ifndef CVET_HARNESS_HPP_
#define CVET_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvet/core_stats.hpp"
#include "cvet/dataset.hpp"
#include "cvet/rates.hpp"
#include "cvet/receiver.hpp"

namespace cvet {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Receives one human-readable progress line; may be empty.
using ProgressFn = std::function<void(std::string_view)>;

/// Worker count from CVET_WORKERS, else the hardware concurrency (at least 1).
std::size_t default_workers();

struct TrialCampaign {
    ScenarioParams params;
    std::size_t trials = 1000;
    NullPolicy policy = NullPolicy::kAsymptotic;
    std::uint64_t master_seed = kDefaultSeed;
    /// Empty means a uniformly random true bin per trial.
    std::optional<std::size_t> fixed_bin;

    void validate() const;
};

struct ErrorEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::size_t trials = 0;
    std::size_t errors = 0;
    double predicted = 0.0;  // recursion value with the weak-fluctuation error pair
};

/// One end-to-end trial: heterodyne sampling, conversion and nulling.
/// Trial t draws from RandomStream(master_seed).child(t), so the result does
/// not depend on the worker count.
Decision run_trial(const TrialCampaign &campaign, std::size_t trial, std::size_t *true_bin = nullptr);

ErrorEstimate estimate_error(const TrialCampaign &campaign, std::size_t workers = 0);

struct GateResult {
    std::string name;
    double observed = 0.0;
    double bound = 0.0;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<GateResult> gates;

    bool passed() const;
    void append(const ValidationReport &other);
};

/// Normalised overlaps of independent complex Gaussian vectors of length M:
/// Chebyshev tail frequencies per threshold and the quadrature spread.
ValidationReport validate_orthogonality(std::size_t modes, double variance, std::size_t samples,
                                        const std::vector<double> &thresholds, std::uint64_t seed = kDefaultSeed);

/// Mean and spread of the signal-bin norm against the chi distribution.
ValidationReport validate_norm_statistics(const ScenarioParams &params, std::size_t samples,
                                          std::uint64_t seed = kDefaultSeed);

/// Fluctuations of the converted idler means: the signal-bin displacement
/// and the residual displacements of earlier bins.
ValidationReport validate_alpha_stats(const ScenarioParams &params, std::size_t samples,
                                      std::uint64_t seed = kDefaultSeed);

/// Recursion against the exhaustive path enumeration for m = 2..max_bins over
/// the (p1, p2) grid {0, 0.1, ..., 0.9}^2. corrupt_q perturbs Q_n to exercise
/// the failure path.
GateResult check_recursion_oracle(std::size_t max_bins = 6, bool corrupt_q = false);

/// Trials per point: max(1e3, 100/P) capped at 1e5.
std::size_t auto_trials(double predicted);

struct SnrSweepConfig {
    double kappa = 0.1;
    double n_signal = 0.01;
    double n_noise = 10.0;
    std::size_t num_bins = 10;
    std::vector<double> snr_grid;
    std::optional<std::size_t> trials;  // empty selects auto_trials
    NullPolicy policy = NullPolicy::kAsymptotic;
    std::uint64_t master_seed = kDefaultSeed;
    std::size_t mc_max_modes = 100000;  // larger M reports the recursion only
    bool monte_carlo = true;
    std::size_t workers = 0;
};

/// SNR = M kappa N_S / N_B; M is rounded to the nearest integer.
Dataset sweep_error_vs_snr(const SnrSweepConfig &config, const ProgressFn &progress = {});

struct RateSweepConfig {
    double kappa = 0.1;
    double n_noise = 20.0;
    std::vector<double> n_s_grid;
    bool helstrom = true;
    bool cn = true;
    RateGrid grid = RateGrid::standard();
};

Dataset sweep_rates(const RateSweepConfig &config, const ProgressFn &progress = {});

}  // namespace cvet

#endif  // CVET_HARNESS_HPP_
