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

#include "cvet/conversion.hpp"

#include <cmath>
#include <sstream>

#include "cvet/error.hpp"

namespace cvet {

HeterodyneRecord simulate_heterodyne(const ScenarioParams &params, std::size_t true_bin, const RandomStream &stream) {
    params.validate();
    if (true_bin >= params.num_bins) {
        std::ostringstream msg;
        msg << "true bin " << true_bin << " out of range for " << params.num_bins << " bins";
        throw ParameterError(msg.str());
    }
    const double var_signal = (params.n_noise + params.kappa * params.n_signal + 1.0) / 2.0;
    const double var_idle = (params.n_noise + 1.0) / 2.0;

    HeterodyneRecord record;
    record.true_bin = true_bin;
    record.outcomes.reserve(params.num_bins);
    for (std::size_t b = 0; b < params.num_bins; ++b) {
        ComplexVector r(params.modes_per_bin);
        Engine engine = stream.child(b).engine();
        fill_complex_gaussian(engine, b == true_bin ? var_signal : var_idle, r);
        record.outcomes.push_back(std::move(r));
    }
    return record;
}

OrthoBasis gram_schmidt(std::span<const ComplexVector> outcomes, const kernels::KernelTable &kernels) {
    if (outcomes.empty()) {
        throw ParameterError("gram_schmidt needs at least one vector");
    }
    const std::size_t dim = outcomes.front().size();
    for (const auto &v : outcomes) {
        if (v.size() != dim || v.im.size() != dim) {
            throw ParameterError("gram_schmidt inputs must share one length");
        }
    }
    if (outcomes.size() > dim) {
        throw ParameterError("cannot orthonormalise more vectors than the dimension");
    }

    // Kahan's "twice is enough" threshold.
    constexpr double kReorthogonalize = 0.70710678118654752;
    constexpr double kDegenerate = 1e-9;

    OrthoBasis basis;
    basis.rows.reserve(outcomes.size());
    basis.norms.reserve(outcomes.size());
    for (std::size_t n = 0; n < outcomes.size(); ++n) {
        ComplexVector v = outcomes[n];
        const double input_norm = std::sqrt(kernels::norm_sq(kernels, v));
        double before = input_norm;
        double after = input_norm;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < n; ++k) {
                const std::complex<double> proj = kernels::hdot(kernels, basis.rows[k], v);
                kernels::axpy(kernels, -proj, basis.rows[k], v);
            }
            after = std::sqrt(kernels::norm_sq(kernels, v));
            if (n == 0 || after >= kReorthogonalize * before) {
                break;
            }
            before = after;
        }
        if (!(after >= kDegenerate * input_norm) || after == 0.0) {
            std::ostringstream msg;
            msg << "vector " << n << " is numerically dependent on its predecessors (residual " << after
                << " vs norm " << input_norm << ")";
            throw DegenerateBasisError(msg.str());
        }
        kernels::scale(kernels, 1.0 / after, v);
        basis.rows.push_back(std::move(v));
        basis.norms.push_back(after);
    }
    return basis;
}

ConversionOutput convert(const HeterodyneRecord &record, const ScenarioParams &params,
                         const kernels::KernelTable &kernels) {
    const DerivedStats stats = derive_statistics(params);
    if (record.outcomes.size() != params.num_bins) {
        throw ParameterError("record does not hold one outcome vector per bin");
    }
    if (record.true_bin >= params.num_bins) {
        throw ParameterError("record true bin out of range");
    }
    for (const auto &r : record.outcomes) {
        if (r.size() != params.modes_per_bin) {
            throw ParameterError("record vector length differs from modes per bin");
        }
    }

    OrthoBasis basis = gram_schmidt(record.outcomes, kernels);
    const ComplexVector &signal = record.outcomes[record.true_bin];
    const double coef = stats.c_pair / (2.0 * stats.v_het);

    ConversionOutput out;
    out.thermal = stats.e_thermal;
    out.norms = std::move(basis.norms);
    out.means.reserve(params.num_bins);
    for (const auto &row : basis.rows) {
        out.means.push_back(coef * std::conj(kernels::hdot(kernels, row, signal)));
    }
    return out;
}

}  // namespace cvet
