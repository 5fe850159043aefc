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

#ifndef CVET_CORE_STATS_HPP_
#define CVET_CORE_STATS_HPP_

#include <complex>
#include <cstddef>

namespace cvet {

/// Channel and protocol parameters of one entanglement-testing instance.
///
/// `n_signal` is the per-mode brightness of the entangled signal, `n_noise`
/// the thermal background per mode. There are `num_bins` candidate return
/// pulses, each made of `modes_per_bin` modes.
struct ScenarioParams {
    double kappa = 0.1;
    double n_signal = 0.01;
    double n_noise = 10.0;
    std::size_t num_bins = 10;
    std::size_t modes_per_bin = 10000;

    /// Throws ParameterError unless 0 < kappa <= 1, n_signal > 0,
    /// n_noise >= 0, num_bins >= 2 and modes_per_bin >= num_bins.
    void validate() const;
};

/// Scalars shared by the conversion, the receiver and the analytics.
struct DerivedStats {
    double v_het;      // heterodyne variance per quadrature of the signal bin
    double c_pair;     // signal-idler correlation coefficient
    double e_thermal;  // thermal photons left on the idler after conditioning
    double alpha_one;  // nominal displacement of the signal bin's idler mode
};

DerivedStats derive_statistics(const ScenarioParams &params);

/// Same formulas without the Gram-Schmidt constraint modes >= bins; `modes`
/// may be any non-negative value. Used by the rate analytics.
DerivedStats derive_statistics(double kappa, double n_signal, double n_noise, double modes);

struct DisplacedThermalMode {
    std::complex<double> mean;
    double thermal = 0.0;
};

/// ln P(0 photons) = -|mean|^2 / (thermal + 1) - ln(1 + thermal).
double log_vacuum_probability(const DisplacedThermalMode &mode);

/// P(0 photons) of a displaced thermal state; the only weight on/off
/// detection needs.
double vacuum_probability(const DisplacedThermalMode &mode);

}  // namespace cvet

#endif  // CVET_CORE_STATS_HPP_
