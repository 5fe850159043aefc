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

#ifndef CVET_THEORY_HPP_
#define CVET_THEORY_HPP_

#include <cmath>
#include <cstddef>

#include "cvet/core_stats.hpp"
#include "cvet/error.hpp"

namespace cvet {

/// Error probabilities of the per-mode on/off sub-test: a false alarm
/// (zero mean reported as non-zero) and a false negative (non-zero mean
/// reported as zero).
struct BinaryErrorPair {
    double p_false_alarm = 0.0;
    double p_false_negative = 0.0;

    void validate() const;
};

/// Probability that the undisplaced one-by-one scan over n modes, with the
/// true mode uniformly placed among them, stops on the true mode.
double q_sequence(std::size_t n, const BinaryErrorPair &pair);

/// 1 - Q_n without the cancellation of forming Q_n first.
double q_complement(std::size_t n, const BinaryErrorPair &pair);

/// Error probability of the conditional-nulling receiver for m equal-prior
/// hypotheses, iterated up from P_1 = 0.
double cn_error_recursive(std::size_t m, const BinaryErrorPair &pair);

namespace detail {

/// The recursion with a pluggable Q_n, so the validation suite can inject a
/// faulty Q_n and watch the oracle gate trip. Iterates P_n rather than
/// 1 - P_n; every term is non-negative.
/// Iterates the error recursion; miss(n, pair) must return 1 - Q_n.
template <class MissFn>
double cn_recursion(std::size_t m, const BinaryErrorPair &pair, MissFn &&miss) {
    pair.validate();
    if (m == 0) {
        throw ParameterError("number of hypotheses must be at least 1");
    }
    const double p1 = pair.p_false_alarm;
    const double p2 = pair.p_false_negative;
    const double log_keep = std::log1p(-p1);
    double error = 0.0;
    for (std::size_t n = 2; n <= m; ++n) {
        const double dn = static_cast<double>(n);
        const double miss_first = p1 >= 1.0 ? 1.0 : -std::expm1(dn * log_keep);
        error = miss_first / dn + ((dn - 1.0) / dn) * ((1.0 - p2) * error + p2 * miss(n - 1, pair));
    }
    return error;
}

}  // namespace detail

struct IdealCnError {
    double exact;   // closed form of the noiseless recursion
    double approx;  // ((m-1)/2) exp(-2 alpha^2)
};

/// Noiseless (p1 = 0, p2 = exp(-alpha^2)) conditional-nulling error.
IdealCnError cn_error_ideal(std::size_t m, double alpha_one);

/// Largest m accepted by the brute-force oracle.
inline constexpr std::size_t kBruteForceMaxBins = 12;

/// Exact error by walking every click/no-click path of the decision
/// automaton for every true bin. Shares no algebra with the recursion.
double cn_error_bruteforce(std::size_t m, const BinaryErrorPair &pair);

/// ((m-1)/m) exp(-2 M kappa N_S / N_B); N_B must be positive.
double helstrom_ea_asymptotic(const ScenarioParams &params);
double helstrom_ea_asymptotic(std::size_t m, double modes, double kappa, double n_signal, double n_noise);

/// Coherent-state benchmark with the same photon budget:
/// ((m-1)/m) exp(-2 M kappa N_S / (1 + 2 N_B + 2 sqrt(N_B (1 + N_B)))).
double helstrom_classical_asymptotic(const ScenarioParams &params);
double helstrom_classical_asymptotic(std::size_t m, double modes, double kappa, double n_signal, double n_noise);

/// Large-noise form ((m-1)/m) exp(-M kappa N_S / (2 N_B)); reported next to
/// the exact expression, never substituted for it.
double helstrom_classical_large_noise(std::size_t m, double modes, double kappa, double n_signal, double n_noise);

}  // namespace cvet

#endif  // CVET_THEORY_HPP_
