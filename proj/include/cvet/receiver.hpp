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

#ifndef CVET_RECEIVER_HPP_
#define CVET_RECEIVER_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cvet/conversion.hpp"
#include "cvet/core_stats.hpp"
#include "cvet/random.hpp"
#include "cvet/theory.hpp"

namespace cvet {

/// Amplitude used to null the hypothesised mode.
///   kAsymptotic: the nominal alpha_one of the scenario, for every mode.
///   kAdaptive:   C_p c_i / (2 v) from the trial's own Gram-Schmidt norms.
enum class NullPolicy { kAsymptotic, kAdaptive };

std::string_view to_string(NullPolicy policy);
NullPolicy parse_null_policy(std::string_view name);

struct ClickEvent {
    std::size_t mode;
    bool displaced;
    bool clicked;

    bool operator==(const ClickEvent &) const = default;
};

struct Decision {
    std::size_t chosen_bin = 0;
    std::vector<ClickEvent> trace;
};

/// Runs the adaptive displace-and-count procedure:
///   1. null mode i by displacing it by -null_amplitudes[i];
///   2. on a click discard mode i and go back to 1 with i+1;
///   3. on no click, count the undisplaced modes i+1.. in order; the first
///      click names the bin, otherwise bin i is reported.
/// If every nulled mode clicks, the last bin is reported.
Decision run_conditional_nulling(std::span<const std::complex<double>> means, double thermal,
                                 std::span<const double> null_amplitudes, Engine &engine);

Decision run_conditional_nulling(const ConversionOutput &conv, NullPolicy policy, const ScenarioParams &params,
                                 const RandomStream &stream);

/// Checks that a trace could have been produced by the automaton and that
/// the decision matches it.
bool trace_is_consistent(const Decision &decision, std::size_t num_modes);

/// Sub-test error probabilities with alpha_0 = 0 and the nominal alpha_1:
/// p1 = 1 - 1/(1+E), p2 = exp(-alpha_1^2/(E+1)) / (1+E).
BinaryErrorPair binary_error_pair(const ScenarioParams &params);
BinaryErrorPair binary_error_pair(double alpha_one, double thermal);

}  // namespace cvet

#endif  // CVET_RECEIVER_HPP_
