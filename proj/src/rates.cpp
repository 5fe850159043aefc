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

#include "cvet/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvet/core_stats.hpp"
#include "cvet/error.hpp"
#include "cvet/receiver.hpp"
#include "cvet/theory.hpp"

namespace cvet {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_channel(double kappa, double n_noise, double n_s) {
    if (!(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0)) {
        throw ParameterError("kappa must lie in (0, 1]");
    }
    if (!(std::isfinite(n_noise) && n_noise >= 0.0)) {
        throw ParameterError("noise brightness must be non-negative");
    }
    if (!(std::isfinite(n_s) && n_s >= 0.0)) {
        throw ParameterError("signal brightness must be non-negative");
    }
}

bool better(const RatePoint &cand, const RatePoint &best) {
    if (cand.rate != best.rate) {
        return cand.rate > best.rate;
    }
    if (cand.modes_per_bin != best.modes_per_bin) {
        return cand.modes_per_bin < best.modes_per_bin;
    }
    return cand.num_bins < best.num_bins;
}

}  // namespace

double mutual_information(double p, std::size_t m) {
    if (m < 2) {
        throw ParameterError("mutual information needs m >= 2");
    }
    if (!(std::isfinite(p) && p >= 0.0 && p <= 1.0)) {
        throw ParameterError("error probability must lie in [0, 1]");
    }
    const double dm = static_cast<double>(m);
    double info = std::log2(dm);
    if (p < 1.0) {
        info += (1.0 - p) * std::log1p(-p) / kLn2;
    }
    if (p > 0.0) {
        info += p * (std::log2(p) - std::log2(dm - 1.0));
    }
    return std::max(info, 0.0);
}

double entropy_g(double n) {
    if (!(std::isfinite(n) && n >= 0.0)) {
        throw ParameterError("mean photon number must be non-negative");
    }
    if (n == 0.0) {
        return 0.0;
    }
    // (n+1) log(n+1) - n log n = log(n+1) + n log(1 + 1/n)
    return (std::log1p(n) + n * std::log1p(1.0 / n)) / kLn2;
}

double entropy_g_difference(double base, double delta) {
    if (!(std::isfinite(base) && base >= 0.0) || !std::isfinite(delta) || base + delta < 0.0) {
        throw ParameterError("entropy difference needs base >= 0 and base + delta >= 0");
    }
    if (delta == 0.0) {
        return 0.0;
    }
    if (base == 0.0) {
        return entropy_g(delta);
    }
    const double top = base + delta;
    if (top == 0.0) {
        return -entropy_g(base);
    }
    const double nats = (base + 1.0) * std::log1p(delta / (base + 1.0)) - base * std::log1p(delta / base) +
                        delta * std::log1p(1.0 / top);
    return nats / kLn2;
}

double classical_capacity(double kappa, double n_noise, double n_s) {
    check_channel(kappa, n_noise, n_s);
    return entropy_g_difference(n_noise, kappa * n_s);
}

EaCapacity ea_capacity(double kappa, double n_noise, double n_s) {
    check_channel(kappa, n_noise, n_s);
    if (n_s <= 0.0) {
        throw ParameterError("entanglement-assisted capacity needs n_s > 0");
    }
    EaCapacityTerms t{};
    t.n_s = n_s;
    t.n_s_prime = kappa * n_s + n_noise;
    const double sum = n_s + t.n_s_prime + 1.0;
    t.d_term = std::sqrt(sum * sum - 4.0 * kappa * n_s * (n_s + 1.0));
    t.a_plus = std::max((t.d_term - 1.0 + (t.n_s_prime - n_s)) / 2.0, 0.0);
    // (D - 1 - (n_s' - n_s))/2 rationalised: D^2 - (n_s' - n_s + 1)^2 = 4 n_s (N_B + 1 - kappa).
    t.a_minus = 2.0 * n_s * (n_noise + 1.0 - kappa) / (t.d_term + t.n_s_prime - n_s + 1.0);

    // g(n_s) - g(A_-) and g(n_s') - g(A_+) share the offset n_s - A_-.
    const double shift = n_s - t.a_minus;
    const double bits = entropy_g_difference(t.a_minus, shift) +
                        entropy_g_difference(t.a_plus, std::max(shift, -t.a_plus));
    return {bits, t};
}

double classical_capacity_asymptotic(double kappa, double n_noise, double n_s) {
    check_channel(kappa, n_noise, n_s);
    if (n_noise <= 0.0) {
        throw ParameterError("asymptotic capacity needs N_B > 0");
    }
    return kappa * n_s / (kLn2 * n_noise);
}

double ea_capacity_asymptotic(double kappa, double n_noise, double n_s) {
    check_channel(kappa, n_noise, n_s);
    if (n_noise <= 0.0 || n_s <= 0.0) {
        throw ParameterError("asymptotic capacity needs N_B > 0 and n_s > 0");
    }
    return kappa * n_s * std::abs(std::log(n_s)) / (kLn2 * n_noise);
}

std::string_view to_string(ErrorModel model) {
    return model == ErrorModel::kHelstromEa ? "helstrom_ea" : "cn_recursion";
}

double ppm_error_probability(ErrorModel model, double kappa, double n_noise, double n_s, std::size_t m,
                             std::size_t modes) {
    const double bin_brightness = static_cast<double>(m) * n_s;
    const double dmodes = static_cast<double>(modes);
    if (model == ErrorModel::kHelstromEa) {
        return helstrom_ea_asymptotic(m, dmodes, kappa, bin_brightness, n_noise);
    }
    const DerivedStats stats = derive_statistics(kappa, bin_brightness, n_noise, dmodes);
    return cn_error_recursive(m, binary_error_pair(stats.alpha_one, stats.e_thermal));
}

RateGrid RateGrid::standard() {
    RateGrid grid;
    for (std::size_t m = 2; m <= (std::size_t{1} << 16); m *= 2) {
        grid.bins.push_back(m);
    }
    for (int k = 0; k <= 8 * 64; ++k) {
        const auto modes = static_cast<std::size_t>(std::llround(std::pow(10.0, k / 64.0)));
        if (grid.modes.empty() || modes != grid.modes.back()) {
            grid.modes.push_back(modes);
        }
    }
    return grid;
}

RateOptimum optimize_rate(double kappa, double n_noise, double n_s, ErrorModel model, const RateGrid &grid) {
    check_channel(kappa, n_noise, n_s);
    if (n_s <= 0.0) {
        throw ParameterError("rate optimisation needs n_s > 0");
    }
    if (grid.bins.empty() || grid.modes.empty() || !std::is_sorted(grid.modes.begin(), grid.modes.end())) {
        throw ParameterError("rate grid must be non-empty with ascending modes");
    }
    const bool capped = grid.max_bin_brightness > 0.0 && std::isfinite(grid.max_bin_brightness);

    RateOptimum out;
    bool found = false;
    auto consider = [&](std::size_t m, std::size_t modes) {
        RatePoint p;
        p.num_bins = m;
        p.modes_per_bin = modes;
        p.error_prob = ppm_error_probability(model, kappa, n_noise, n_s, m, modes);
        p.rate = mutual_information(std::clamp(p.error_prob, 0.0, 1.0), m) /
                 (static_cast<double>(modes) * static_cast<double>(m));
        ++out.evaluations;
        if (!found || better(p, out.best)) {
            out.best = p;
            found = true;
        }
    };

    for (std::size_t m : grid.bins) {
        if (m < 2 || (capped && static_cast<double>(m) * n_s > grid.max_bin_brightness * (1.0 + 1e-12))) {
            continue;
        }
        const double ceiling = std::log2(static_cast<double>(m)) / static_cast<double>(m);
        for (std::size_t modes : grid.modes) {
            if (modes == 0) {
                continue;
            }
            // I(P) <= log2 m, so larger M cannot beat the incumbent.
            if (found && ceiling / static_cast<double>(modes) < out.best.rate) {
                break;
            }
            consider(m, modes);
        }
    }
    if (!found) {
        throw ParameterError("rate grid has no admissible (m, M) point");
    }

    if (grid.refine) {
        const auto it = std::find(grid.modes.begin(), grid.modes.end(), out.best.modes_per_bin);
        const std::size_t lo = it == grid.modes.begin() ? *it : *(it - 1);
        const std::size_t hi = (it + 1) == grid.modes.end() ? *it : *(it + 1);
        const std::size_t m = out.best.num_bins;
        constexpr std::size_t kMaxRefine = 2048;
        if (hi > lo + 1) {
            if (hi - lo - 1 <= kMaxRefine) {
                for (std::size_t modes = lo + 1; modes < hi; ++modes) {
                    if (modes != out.best.modes_per_bin) {
                        consider(m, modes);
                    }
                }
            } else {
                const double a = std::log(static_cast<double>(lo));
                const double b = std::log(static_cast<double>(hi));
                std::size_t last = lo;
                for (std::size_t k = 1; k <= kMaxRefine; ++k) {
                    const auto modes = static_cast<std::size_t>(
                        std::llround(std::exp(a + (b - a) * static_cast<double>(k) / (kMaxRefine + 1))));
                    if (modes > last && modes < hi) {
                        consider(m, modes);
                        last = modes;
                    }
                }
            }
        }
    }

    out.at_grid_edge = out.best.num_bins == grid.bins.back() || out.best.modes_per_bin == grid.modes.back();
    return out;
}

}  // namespace cvet
