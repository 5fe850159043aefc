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

#ifndef CVET_RATES_HPP_
#define CVET_RATES_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace cvet {

/// Mutual information (bits) of the m-ary symmetric channel with symbol
/// error probability p. 0 log 0 is taken as 0.
double mutual_information(double p, std::size_t m);

/// Entropy (bits) of a thermal state with mean photon number n.
double entropy_g(double n);

/// g(base + delta) - g(base), evaluated without cancelling the leading terms.
double entropy_g_difference(double base, double delta);

/// Unassisted classical capacity of the thermal-loss channel (bits/mode).
double classical_capacity(double kappa, double n_noise, double n_s);

struct EaCapacityTerms {
    double n_s;
    double n_s_prime;
    double d_term;
    double a_plus;
    double a_minus;
};

struct EaCapacity {
    double bits;
    EaCapacityTerms terms;
};

/// Entanglement-assisted classical capacity (bits/mode).
EaCapacity ea_capacity(double kappa, double n_noise, double n_s);

/// Weak-signal, strong-noise forms kappa n_S / (ln2 N_B) and
/// kappa n_S |ln n_S| / (ln2 N_B).
double classical_capacity_asymptotic(double kappa, double n_noise, double n_s);
double ea_capacity_asymptotic(double kappa, double n_noise, double n_s);

enum class ErrorModel { kHelstromEa, kCnRecursion };

std::string_view to_string(ErrorModel model);

/// Error probability of one PPM symbol with m bins of M modes each, when the
/// average photon number per mode is n_s (so each signal bin carries
/// N_S = m n_s per mode).
double ppm_error_probability(ErrorModel model, double kappa, double n_noise, double n_s, std::size_t m,
                             std::size_t modes);

struct RatePoint {
    std::size_t num_bins = 0;
    std::size_t modes_per_bin = 0;
    double error_prob = 0.0;
    double rate = 0.0;  // bits per mode
};

/// Search space of the rate maximisation.
struct RateGrid {
    std::vector<std::size_t> bins;
    std::vector<std::size_t> modes;  // ascending
    bool refine = true;
    /// Upper limit on the per-bin brightness N_S = m n_s; the asymptotic
    /// error formulas only hold for weak signals. Non-positive disables it.
    double max_bin_brightness = 0.2;

    /// m in {2, 4, ..., 2^16}; M on a 64-per-decade log grid over [1, 1e8].
    static RateGrid standard();
};

struct RateOptimum {
    RatePoint best;
    bool at_grid_edge = false;  // argmax on the largest m or largest M of the grid
    std::size_t evaluations = 0;
};

/// Maximises I(P)/(M m) over the grid. Ties go to the smaller M, then the
/// smaller m. Throws ParameterError when no grid point is admissible.
RateOptimum optimize_rate(double kappa, double n_noise, double n_s, ErrorModel model,
                          const RateGrid &grid = RateGrid::standard());

}  // namespace cvet

#endif  // CVET_RATES_HPP_
