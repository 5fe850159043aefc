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

#include "cvet/theory.hpp"

#include <cmath>
#include <sstream>

namespace cvet {

void BinaryErrorPair::validate() const {
    auto ok = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
    if (!ok(p_false_alarm) || !ok(p_false_negative)) {
        std::ostringstream msg;
        msg << "error probabilities must lie in [0, 1], got (" << p_false_alarm << ", " << p_false_negative << ")";
        throw ParameterError(msg.str());
    }
}

double q_sequence(std::size_t n, const BinaryErrorPair &pair) {
    pair.validate();
    if (n == 0) {
        throw ParameterError("q_sequence needs n >= 1");
    }
    const double p1 = pair.p_false_alarm;
    const double p2 = pair.p_false_negative;
    // Below this the general branch loses digits to cancellation.
    if (p1 < 1e-12) {
        return 1.0 - p2;
    }
    const double dn = static_cast<double>(n);
    const double reached = p1 >= 1.0 ? 1.0 : -std::expm1(dn * std::log1p(-p1));
    return (1.0 - p2) * reached / (dn * p1);
}

double q_complement(std::size_t n, const BinaryErrorPair &pair) {
    pair.validate();
    if (n == 0) {
        throw ParameterError("q_complement needs n >= 1");
    }
    const double p1 = pair.p_false_alarm;
    const double p2 = pair.p_false_negative;
    if (p1 < 1e-12) {
        return p2;
    }
    // 1 - Q_n = (1 - w) + p2 w with w = (1 - (1-p1)^n) / (n p1).
    const double dn = static_cast<double>(n);
    double one_minus_w = 0.0;
    if (dn * p1 < 0.1) {
        // 1 - w = sum_{k>=2} C(n,k)/n (-1)^k p1^(k-1); terms shrink by n p1 / 3.
        double term = -1.0;
        for (std::size_t k = 2; k <= n; ++k) {
            term *= -p1 * static_cast<double>(n - k + 1) / static_cast<double>(k);
            one_minus_w += term;
            if (std::abs(term) <= 1e-18 * std::abs(one_minus_w)) {
                break;
            }
        }
    } else {
        const double reached = p1 >= 1.0 ? 1.0 : -std::expm1(dn * std::log1p(-p1));
        one_minus_w = 1.0 - reached / (dn * p1);
    }
    return one_minus_w + p2 * (1.0 - one_minus_w);
}

double cn_error_recursive(std::size_t m, const BinaryErrorPair &pair) {
    return detail::cn_recursion(m, pair, [](std::size_t n, const BinaryErrorPair &p) { return q_complement(n, p); });
}

IdealCnError cn_error_ideal(std::size_t m, double alpha_one) {
    if (m < 2) {
        throw ParameterError("ideal conditional-nulling error needs m >= 2");
    }
    if (!(std::isfinite(alpha_one) && alpha_one >= 0.0)) {
        throw ParameterError("alpha_one must be non-negative");
    }
    const double a2 = alpha_one * alpha_one;
    const double x = std::exp(-a2);
    const double dm = static_cast<double>(m);
    double exact;
    if (dm * x < 0.5) {
        // m x + (1-x)^m - 1 = sum_{k>=2} C(m,k) (-x)^k; terms shrink by at
        // least a factor (m x)/2 < 1/4 and alternate in sign.
        double term = -dm * x;  // C(m,1) (-x)
        double sum = 0.0;
        for (std::size_t k = 2; k <= m; ++k) {
            term *= -x * static_cast<double>(m - k + 1) / static_cast<double>(k);
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) {
                break;
            }
        }
        exact = sum / dm;
    } else {
        exact = (dm * x + std::expm1(dm * std::log1p(-x))) / dm;
    }
    return {exact, 0.5 * (dm - 1.0) * std::exp(-2.0 * a2)};
}

namespace {

// Walks the automaton for one true bin, returning the probability of a
// correct decision. `displaced` is the mode currently nulled.
class PathWalker {
   public:
    PathWalker(std::size_t m, std::size_t truth, double p1, double p2) : m_(m), truth_(truth), p1_(p1), p2_(p2) {
    }

    double from_displaced(std::size_t displaced, double weight) const {
        if (weight == 0.0) {
            return 0.0;
        }
        const bool is_true = displaced == truth_;
        // After nulling, the true mode is empty (clicks only by false alarm);
        // any other mode carries -alpha and is missed with probability p2.
        const double click = is_true ? p1_ : 1.0 - p2_;
        double correct = 0.0;
        if (displaced + 1 == m_) {
            // Every nulled mode clicked: the last index is reported.
            correct += weight * click * (truth_ == m_ - 1 ? 1.0 : 0.0);
        } else {
            correct += from_displaced(displaced + 1, weight * click);
        }
        correct += scan(displaced, displaced + 1, weight * (1.0 - click));
        return correct;
    }

   private:
    double scan(std::size_t candidate, std::size_t next, double weight) const {
        if (weight == 0.0) {
            return 0.0;
        }
        if (next == m_) {
            return truth_ == candidate ? weight : 0.0;
        }
        const double click = next == truth_ ? 1.0 - p2_ : p1_;
        double correct = next == truth_ ? weight * click : 0.0;
        correct += scan(candidate, next + 1, weight * (1.0 - click));
        return correct;
    }

    std::size_t m_;
    std::size_t truth_;
    double p1_;
    double p2_;
};

}  // namespace

double cn_error_bruteforce(std::size_t m, const BinaryErrorPair &pair) {
    pair.validate();
    if (m == 0) {
        throw ParameterError("number of hypotheses must be at least 1");
    }
    if (m > kBruteForceMaxBins) {
        throw ParameterError("brute-force oracle is capped at 12 bins");
    }
    double success = 0.0;
    for (std::size_t truth = 0; truth < m; ++truth) {
        PathWalker walker(m, truth, pair.p_false_alarm, pair.p_false_negative);
        success += walker.from_displaced(0, 1.0);
    }
    return 1.0 - success / static_cast<double>(m);
}

namespace {

void check_helstrom_inputs(std::size_t m, double modes, double kappa, double n_signal, double n_noise) {
    if (m < 1) {
        throw ParameterError("need at least one hypothesis");
    }
    if (!(std::isfinite(modes) && modes >= 0.0)) {
        throw ParameterError("number of modes must be non-negative");
    }
    if (!(std::isfinite(kappa) && kappa > 0.0 && kappa <= 1.0)) {
        throw ParameterError("kappa must lie in (0, 1]");
    }
    if (!(std::isfinite(n_signal) && n_signal > 0.0)) {
        throw ParameterError("signal brightness must be positive");
    }
    if (!(std::isfinite(n_noise) && n_noise >= 0.0)) {
        throw ParameterError("noise brightness must be non-negative");
    }
}

double prior_error(std::size_t m) {
    return (static_cast<double>(m) - 1.0) / static_cast<double>(m);
}

}  // namespace

double helstrom_ea_asymptotic(std::size_t m, double modes, double kappa, double n_signal, double n_noise) {
    check_helstrom_inputs(m, modes, kappa, n_signal, n_noise);
    if (n_noise == 0.0) {
        throw ParameterError("entanglement-assisted benchmark needs N_B > 0");
    }
    return prior_error(m) * std::exp(-2.0 * modes * kappa * n_signal / n_noise);
}

double helstrom_ea_asymptotic(const ScenarioParams &params) {
    params.validate();
    return helstrom_ea_asymptotic(params.num_bins, static_cast<double>(params.modes_per_bin), params.kappa,
                                  params.n_signal, params.n_noise);
}

double helstrom_classical_asymptotic(std::size_t m, double modes, double kappa, double n_signal, double n_noise) {
    check_helstrom_inputs(m, modes, kappa, n_signal, n_noise);
    const double denom = 1.0 + 2.0 * n_noise + 2.0 * std::sqrt(n_noise * (1.0 + n_noise));
    return prior_error(m) * std::exp(-2.0 * modes * kappa * n_signal / denom);
}

double helstrom_classical_asymptotic(const ScenarioParams &params) {
    params.validate();
    return helstrom_classical_asymptotic(params.num_bins, static_cast<double>(params.modes_per_bin), params.kappa,
                                         params.n_signal, params.n_noise);
}

double helstrom_classical_large_noise(std::size_t m, double modes, double kappa, double n_signal, double n_noise) {
    check_helstrom_inputs(m, modes, kappa, n_signal, n_noise);
    if (n_noise == 0.0) {
        throw ParameterError("large-noise form needs N_B > 0");
    }
    return prior_error(m) * std::exp(-modes * kappa * n_signal / (2.0 * n_noise));
}

}  // namespace cvet
