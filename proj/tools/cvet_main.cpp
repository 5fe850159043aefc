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

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "cvet/error.hpp"
#include "cvet/version.hpp"

using namespace cvet;
using namespace cvet::cli;

namespace {

struct Shared {
    RunConfig config;
    std::string preset;
    std::string policy = "asymptotic";
    std::string format = "csv";
};

void add_physics(CLI::App *sub, Shared &s) {
    sub->add_option("--kappa", s.config.kappa, "Channel transmissivity")->capture_default_str();
    sub->add_option("--nb", s.config.n_noise, "Background photons per mode N_B")->capture_default_str();
    sub->add_option("--preset", s.preset, "Named parameter set")->check(CLI::IsMember({"fig3", "fig4"}));
}

void add_output(CLI::App *sub, Shared &s) {
    sub->add_option("--out", s.config.out, "Output file (default: standard output)");
    sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--seed", s.config.seed, "Master seed")->capture_default_str();
    sub->add_flag("--quiet", s.config.quiet, "Suppress progress on standard error");
}

void add_scenario(CLI::App *sub, Shared &s) {
    sub->add_option("--ns", s.config.n_signal, "Signal photons per mode N_S")->capture_default_str();
    sub->add_option("--m", s.config.bins, "Bins per symbol (value, list or grid)")->capture_default_str();
    sub->add_option("--M", s.config.modes, "Modes per bin (value, list or a:b:logN / a:b:linN)")
        ->capture_default_str();
}

void apply_preset(const CLI::App *sub, Shared &s) {
    const auto unset = [&](const char *flag) { return sub->count(flag) == 0; };
    if (s.preset == "fig3") {
        if (unset("--kappa")) s.config.kappa = 0.1;
        if (unset("--nb")) s.config.n_noise = 10.0;
        if (sub->get_option_no_throw("--m") != nullptr && unset("--m")) s.config.bins = "10";
    } else if (s.preset == "fig4") {
        if (unset("--kappa")) s.config.kappa = 0.1;
        if (unset("--nb")) s.config.n_noise = 20.0;
    }
    s.config.format = parse_data_format(s.format);
    s.config.policy = parse_null_policy(s.policy);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Monte-Carlo and analytic toolkit for the correlation-to-displacement conditional-nulling receiver"};
    app.set_version_flag("--version", std::string("cvet ") + kVersion);
    app.require_subcommand(1);
    Shared s;

    CLI::App *theory = app.add_subcommand("theory", "Analytic error probabilities on a parameter grid");
    add_physics(theory, s);
    add_scenario(theory, s);
    add_output(theory, s);

    CLI::App *simulate = app.add_subcommand("simulate", "Monte-Carlo error estimates");
    add_physics(simulate, s);
    add_scenario(simulate, s);
    add_output(simulate, s);
    simulate->add_option("--snr", s.config.snr, "SNR grid (SNR = M kappa N_S / N_B); overrides --M");
    simulate->add_option("--trials", s.config.trials, "Trials per point or 'auto'")->capture_default_str();
    simulate->add_option("--policy", s.policy, "Null amplitude policy")
        ->check(CLI::IsMember({"asymptotic", "adaptive"}))
        ->capture_default_str();
    simulate->add_option("--workers", s.config.workers, "Worker threads (0: CVET_WORKERS or all cores)");

    CLI::App *rates = app.add_subcommand("rates", "Optimised PPM rates against the channel capacities");
    add_physics(rates, s);
    add_output(rates, s);
    rates->add_option("--ns", s.config.n_s_grid, "Per-mode brightness grid n_s")->capture_default_str();
    rates->add_option("--model", s.config.model, "Rate model")
        ->check(CLI::IsMember({"helstrom", "cn", "both"}))
        ->capture_default_str();
    rates->add_option("--max-bin-brightness", s.config.max_bin_brightness,
                      "Upper limit on m*n_s (0 disables)")
        ->capture_default_str();
    rates->add_flag("!--no-refine", s.config.refine, "Skip the local M refinement");

    CLI::App *validate = app.add_subcommand("validate", "Statistical and analytic self-checks");
    add_physics(validate, s);
    add_scenario(validate, s);
    add_output(validate, s);
    validate->add_option("--samples", s.config.samples, "Samples per statistical gate")->capture_default_str();
    validate->add_flag("--self-test-negative", s.config.self_test_negative, "Corrupt Q_n to exercise failing gates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (theory->parsed()) {
            apply_preset(theory, s);
            return cmd_theory(s.config);
        }
        if (simulate->parsed()) {
            apply_preset(simulate, s);
            return cmd_simulate(s.config);
        }
        if (rates->parsed()) {
            apply_preset(rates, s);
            return cmd_rates(s.config);
        }
        apply_preset(validate, s);
        return cmd_validate(s.config);
    } catch (const ParameterError &e) {
        std::cerr << "cvet: invalid parameters: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "cvet: error: " << e.what() << '\n';
        return kExitGateFailure;
    }
}
