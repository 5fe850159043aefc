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

#include <gtest/gtest.h>

#include <cmath>

#include "cvet/error.hpp"
#include "cvet/theory.hpp"

using namespace cvet;

TEST(Harness, noiseless_campaign_makes_no_errors) {
    // kappa = 1, N_B = 0 gives E = 0; M = 200 gives alpha_1^2 = 20.
    TrialCampaign c;
    c.params = {1.0, 0.1, 0.0, 10, 200};
    c.trials = 1000;
    c.policy = NullPolicy::kAdaptive;
    const DerivedStats s = derive_statistics(c.params);
    EXPECT_EQ(s.e_thermal, 0.0);
    EXPECT_NEAR(s.alpha_one * s.alpha_one, 20.0, 1e-12);
    const ErrorEstimate est = estimate_error(c, 1);
    EXPECT_EQ(est.errors, 0u);
    EXPECT_EQ(est.p_hat, 0.0);
    EXPECT_EQ(est.std_err, 0.0);
    EXPECT_LT(est.predicted, 1e-8);
}

TEST(Harness, reference_campaign_matches_recursion) {
    TrialCampaign c;
    c.params = {0.1, 0.01, 10.0, 10, 5000};
    c.trials = 10000;
    c.master_seed = 7;
    const ErrorEstimate est = estimate_error(c);
    EXPECT_NEAR(est.predicted, cn_error_recursive(10, binary_error_pair(c.params)), 0.0);
    EXPECT_NEAR(est.std_err, std::sqrt(est.p_hat * (1 - est.p_hat) / 10000), 1e-15);
    EXPECT_LE(std::abs(est.p_hat - est.predicted), 3 * est.std_err)
        << est.p_hat << " vs " << est.predicted << " se " << est.std_err;
}

TEST(Harness, worker_count_does_not_change_result) {
    TrialCampaign c;
    c.params = {0.1, 0.01, 10.0, 10, 5000};
    c.trials = 600;
    c.master_seed = 42;
    const ErrorEstimate one = estimate_error(c, 1);
    const ErrorEstimate eight = estimate_error(c, 8);
    EXPECT_EQ(one.errors, eight.errors);
    EXPECT_EQ(one.p_hat, eight.p_hat);
    c.master_seed = 43;
    EXPECT_EQ(estimate_error(c, 3).trials, 600u);
}

TEST(Harness, trials_are_reproducible) {
    TrialCampaign c;
    c.params = {0.1, 0.01, 10.0, 4, 100};
    for (std::size_t t = 0; t < 20; ++t) {
        std::size_t h1 = 0, h2 = 0;
        const Decision a = run_trial(c, t, &h1);
        const Decision b = run_trial(c, t, &h2);
        EXPECT_EQ(h1, h2);
        EXPECT_EQ(a.chosen_bin, b.chosen_bin);
        EXPECT_EQ(a.trace, b.trace);
    }
    c.fixed_bin = 2;
    std::size_t h = 0;
    run_trial(c, 5, &h);
    EXPECT_EQ(h, 2u);
}

TEST(Harness, campaign_validation) {
    TrialCampaign c;
    c.trials = 0;
    EXPECT_THROW(estimate_error(c), ParameterError);
    c.trials = 10;
    c.fixed_bin = 10;
    EXPECT_THROW(estimate_error(c), ParameterError);
}

TEST(Harness, orthogonality_report) {
    const ValidationReport r = validate_orthogonality(10000, 5.5005, 1000, {0.02, 0.05, 0.1, 1.0});
    EXPECT_TRUE(r.passed());
    for (const auto &g : r.gates) {
        if (g.name.find("a=0.05") != std::string::npos) {
            EXPECT_DOUBLE_EQ(g.bound, 0.02);
            EXPECT_LE(g.observed, 0.02);
        }
        if (g.name.find("a=1]") != std::string::npos) {
            EXPECT_EQ(g.observed, 0.0);
        }
    }
    EXPECT_THROW(validate_orthogonality(1, 1.0, 1000, {0.1}), ParameterError);
    EXPECT_THROW(validate_orthogonality(100, 1.0, 99, {0.1}), ParameterError);
}

TEST(Harness, norm_and_alpha_reports_pass) {
    const ScenarioParams p{0.1, 0.01, 10.0, 10, 10000};
    const ValidationReport norms = validate_norm_statistics(p, 1000);
    EXPECT_TRUE(norms.passed());
    const ValidationReport alpha = validate_alpha_stats(p, 1000);
    for (const auto &g : alpha.gates) {
        EXPECT_TRUE(g.passed) << g.name << " observed " << g.observed << " bound " << g.bound;
        if (g.name == "alpha1_fluctuation_to_noise") {
            EXPECT_NEAR(g.observed, 0.00232, 0.0006);
        }
    }
}

TEST(Harness, recursion_oracle_gate) {
    const GateResult ok = check_recursion_oracle();
    EXPECT_TRUE(ok.passed) << ok.observed;
    const GateResult bad = check_recursion_oracle(6, true);
    EXPECT_FALSE(bad.passed);
    EXPECT_GT(bad.observed, 1e-3);
}

TEST(Harness, auto_trial_budget) {
    EXPECT_EQ(auto_trials(0.5), 1000u);
    EXPECT_EQ(auto_trials(0.01), 10000u);
    EXPECT_EQ(auto_trials(1e-6), 100000u);
    EXPECT_EQ(auto_trials(0.0), 100000u);
}

TEST(Harness, snr_sweep_structure) {
    SnrSweepConfig cfg;
    cfg.monte_carlo = false;
    cfg.snr_grid = {1e-3, 0.1, 1.0, 10.0, 100.0, 1000.0};
    const Dataset d = sweep_error_vs_snr(cfg);
    ASSERT_EQ(d.rows.size(), 6u);
    const auto col = [&](const char *name, std::size_t row) {
        return std::get<double>(d.rows[row][d.column_index(name)]);
    };
    EXPECT_EQ(std::get<std::int64_t>(d.rows[2][d.column_index("M")]), 10000);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(d.rows[2][d.column_index("P_cn_montecarlo")]));
    for (const char *name : {"P_cn_recursive", "P_ideal_exact", "P_EH", "P_CH"}) {
        EXPECT_NEAR(col(name, 0), 0.9, 2e-3) << name;
    }
    // The recursion floors while the ideal curve keeps falling.
    EXPECT_LT(std::abs(col("P_cn_recursive", 5) / col("P_cn_recursive", 4) - 1), 0.01);
    EXPECT_LT(col("P_ideal_exact", 4), 1e-3 * col("P_cn_recursive", 4));

    SnrSweepConfig lower = cfg;
    lower.n_signal = 1e-3;
    lower.snr_grid = {1000.0};
    EXPECT_LT(std::get<double>(sweep_error_vs_snr(lower).rows[0][2]), col("P_cn_recursive", 5));

    cfg.snr_grid = {1e-7};
    EXPECT_THROW(sweep_error_vs_snr(cfg), ParameterError);
}

TEST(Harness, snr_sweep_with_monte_carlo) {
    SnrSweepConfig cfg;
    cfg.snr_grid = {0.2, 0.5};
    cfg.trials = 400;
    const Dataset d = sweep_error_vs_snr(cfg);
    for (const auto &row : d.rows) {
        EXPECT_EQ(std::get<std::int64_t>(row[d.column_index("trials")]), 400);
        EXPECT_TRUE(std::holds_alternative<double>(row[d.column_index("P_cn_montecarlo_stderr")]));
    }
    cfg.trials = 50;
    EXPECT_THROW(sweep_error_vs_snr(cfg), ParameterError);
}

TEST(Harness, rate_sweep_columns) {
    RateSweepConfig cfg;
    cfg.n_s_grid = {1e-2, 1e-3};
    const Dataset d = sweep_rates(cfg);
    ASSERT_EQ(d.rows.size(), 2u);
    for (const auto &row : d.rows) {
        const double ce = std::get<double>(row[d.column_index("C_E")]);
        const double rh = std::get<double>(row[d.column_index("R_H")]);
        const double rcn = std::get<double>(row[d.column_index("R_cn")]);
        EXPECT_LE(rcn, rh);
        EXPECT_LE(rh, ce);
    }
    cfg.cn = false;
    const Dataset h_only = sweep_rates(cfg);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(h_only.rows[0][h_only.column_index("R_cn")]));
}
