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

#ifndef CVET_TOOLS_COMMANDS_HPP_
#define CVET_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "cvet/dataset.hpp"
#include "cvet/harness.hpp"
#include "cvet/receiver.hpp"

namespace cvet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    double kappa = 0.1;
    double n_noise = 10.0;
    double n_signal = 0.01;
    std::string bins = "10";
    std::string modes = "10000";
    std::string snr;  // empty: simulate runs on the M grid
    std::string n_s_grid = "1e-4:1e-1:log30";
    std::string trials = "auto";
    NullPolicy policy = NullPolicy::kAsymptotic;
    std::uint64_t seed = kDefaultSeed;
    std::size_t workers = 0;
    DataFormat format = DataFormat::kCsv;
    std::string out;  // empty: standard output
    std::string model = "both";
    std::size_t samples = 1000;
    double max_bin_brightness = 0.2;
    bool refine = true;
    bool self_test_negative = false;
    bool quiet = false;
};

int cmd_theory(const RunConfig &config);
int cmd_simulate(const RunConfig &config);
int cmd_rates(const RunConfig &config);
int cmd_validate(const RunConfig &config);

}  // namespace cvet::cli

#endif  // CVET_TOOLS_COMMANDS_HPP_
