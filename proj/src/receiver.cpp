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

#include "cvet/receiver.hpp"

#include <cmath>
#include <string>

#include "cvet/error.hpp"

namespace cvet {

std::string_view to_string(NullPolicy policy) {
    return policy == NullPolicy::kAdaptive ? "adaptive" : "asymptotic";
}

NullPolicy parse_null_policy(std::string_view name) {
    if (name == "asymptotic") {
        return NullPolicy::kAsymptotic;
    }
    if (name == "adaptive") {
        return NullPolicy::kAdaptive;
    }
    throw ParameterError("unknown null policy '" + std::string(name) + "'");
}

namespace {

bool detect(std::complex<double> mean, double thermal, Engine &engine) {
    const double p_vacuum = vacuum_probability({mean, thermal});
    return uniform01(engine) >= p_vacuum;
}

}  // namespace

Decision run_conditional_nulling(std::span<const std::complex<double>> means, double thermal,
                                 std::span<const double> null_amplitudes, Engine &engine) {
    const std::size_t m = means.size();
    if (m < 2) {
        throw ParameterError("conditional nulling needs at least 2 modes");
    }
    if (null_amplitudes.size() != m) {
        throw ParameterError("need one null amplitude per mode");
    }
    if (!(std::isfinite(thermal) && thermal >= 0.0)) {
        throw ParameterError("thermal photon number must be non-negative");
    }

    Decision decision;
    decision.trace.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool clicked = detect(means[i] - null_amplitudes[i], thermal, engine);
        decision.trace.push_back({i, true, clicked});
        if (clicked) {
            continue;
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool hit = detect(means[j], thermal, engine);
            decision.trace.push_back({j, false, hit});
            if (hit) {
                decision.chosen_bin = j;
                return decision;
            }
        }
        decision.chosen_bin = i;
        return decision;
    }
    decision.chosen_bin = m - 1;
    return decision;
}

Decision run_conditional_nulling(const ConversionOutput &conv, NullPolicy policy, const ScenarioParams &params,
                                 const RandomStream &stream) {
    const DerivedStats stats = derive_statistics(params);
    std::vector<double> amplitudes(conv.means.size(), stats.alpha_one);
    if (policy == NullPolicy::kAdaptive) {
        if (conv.norms.size() != conv.means.size()) {
            throw ParameterError("adaptive nulling needs one Gram-Schmidt norm per mode");
        }
        const double coef = stats.c_pair / (2.0 * stats.v_het);
        for (std::size_t i = 0; i < amplitudes.size(); ++i) {
            amplitudes[i] = coef * conv.norms[i];
        }
    }
    Engine engine = stream.engine();
    return run_conditional_nulling(conv.means, conv.thermal, amplitudes, engine);
}

bool trace_is_consistent(const Decision &decision, std::size_t num_modes) {
    const auto &trace = decision.trace;
    if (trace.empty() || decision.chosen_bin >= num_modes) {
        return false;
    }
    std::size_t k = 0;
    std::size_t expected_mode = 0;
    // Leading run of nulled modes: all click except possibly the last one.
    while (k < trace.size() && trace[k].displaced) {
        if (trace[k].mode != expected_mode) {
            return false;
        }
        ++expected_mode;
        if (!trace[k].clicked) {
            break;
        }
        ++k;
    }
    if (k == trace.size()) {
        // Exhaustion: every mode was nulled and clicked.
        return expected_mode == num_modes && decision.chosen_bin == num_modes - 1;
    }
    if (!trace[k].displaced || trace[k].clicked) {
        return false;
    }
    const std::size_t anchor = trace[k].mode;
    ++k;
    for (; k < trace.size(); ++k) {
        const ClickEvent &e = trace[k];
        if (e.displaced || e.mode != expected_mode) {
            return false;
        }
        ++expected_mode;
        if (e.clicked) {
            return k + 1 == trace.size() && decision.chosen_bin == e.mode;
        }
    }
    return expected_mode == num_modes && decision.chosen_bin == anchor;
}

BinaryErrorPair binary_error_pair(double alpha_one, double thermal) {
    if (!(std::isfinite(alpha_one) && alpha_one >= 0.0)) {
        throw ParameterError("alpha_one must be non-negative");
    }
    BinaryErrorPair pair;
    pair.p_false_alarm = -std::expm1(log_vacuum_probability({0.0, thermal}));
    pair.p_false_negative = vacuum_probability({alpha_one, thermal});
    return pair;
}

BinaryErrorPair binary_error_pair(const ScenarioParams &params) {
    const DerivedStats stats = derive_statistics(params);
    return binary_error_pair(stats.alpha_one, stats.e_thermal);
}

}  // namespace cvet
