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

#include "cvet/core_stats.hpp"

#include <cmath>
#include <sstream>

#include "cvet/error.hpp"

namespace cvet {

void ScenarioParams::validate() const {
    std::ostringstream problem;
    if (!(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0)) {
        problem << "kappa must lie in (0, 1], got " << kappa;
    } else if (!(std::isfinite(n_signal) && n_signal > 0.0)) {
        problem << "signal brightness must be positive, got " << n_signal;
    } else if (!(std::isfinite(n_noise) && n_noise >= 0.0)) {
        problem << "noise brightness must be non-negative, got " << n_noise;
    } else if (num_bins < 2) {
        problem << "need at least 2 bins, got " << num_bins;
    } else if (modes_per_bin < num_bins) {
        problem << "modes per bin (" << modes_per_bin << ") must be >= number of bins (" << num_bins << ")";
    }
    if (!problem.str().empty()) {
        throw ParameterError(problem.str());
    }
}

DerivedStats derive_statistics(double kappa, double n_signal, double n_noise, double modes) {
    if (!(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0)) {
        throw ParameterError("kappa must lie in (0, 1]");
    }
    if (!(std::isfinite(n_signal) && n_signal > 0.0)) {
        throw ParameterError("signal brightness must be positive");
    }
    if (!(std::isfinite(n_noise) && n_noise >= 0.0)) {
        throw ParameterError("noise brightness must be non-negative");
    }
    if (!(std::isfinite(modes) && modes >= 0.0)) {
        throw ParameterError("number of modes must be non-negative");
    }
    DerivedStats s{};
    s.v_het = (n_noise + kappa * n_signal + 1.0) / 2.0;
    s.c_pair = std::sqrt(kappa * n_signal * (n_signal + 1.0));
    s.e_thermal = n_signal * (n_noise + 1.0 - kappa) / (2.0 * s.v_het);
    s.alpha_one = s.c_pair * std::sqrt(modes / (2.0 * s.v_het));
    return s;
}

DerivedStats derive_statistics(const ScenarioParams &params) {
    params.validate();
    return derive_statistics(params.kappa, params.n_signal, params.n_noise,
                             static_cast<double>(params.modes_per_bin));
}

double log_vacuum_probability(const DisplacedThermalMode &mode) {
    if (!(std::isfinite(mode.thermal) && mode.thermal >= 0.0)) {
        throw ParameterError("thermal photon number must be non-negative");
    }
    return -std::norm(mode.mean) / (mode.thermal + 1.0) - std::log1p(mode.thermal);
}

double vacuum_probability(const DisplacedThermalMode &mode) {
    return std::exp(log_vacuum_probability(mode));
}

}  // namespace cvet
