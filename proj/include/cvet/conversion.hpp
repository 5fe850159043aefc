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

#ifndef CVET_CONVERSION_HPP_
#define CVET_CONVERSION_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cvet/complex_vector.hpp"
#include "cvet/core_stats.hpp"
#include "cvet/kernels.hpp"
#include "cvet/random.hpp"

namespace cvet {

/// Heterodyne outcomes r_1..r_m of the m return pulses (each of length M)
/// and the bin that actually carried the signal (0-based).
struct HeterodyneRecord {
    std::vector<ComplexVector> outcomes;
    std::size_t true_bin = 0;
};

/// First m rows of the beamsplitter weight matrix: the Gram-Schmidt
/// orthonormalised outcomes, in index order, with their pre-normalisation
/// norms c_n.
struct OrthoBasis {
    std::vector<ComplexVector> rows;
    std::vector<double> norms;
};

/// Idler modes after the beamsplitter array: displaced thermal states with
/// these means and a common thermal occupation.
struct ConversionOutput {
    std::vector<std::complex<double>> means;
    double thermal = 0.0;
    std::vector<double> norms;
};

/// Samples one record. Bin `true_bin` has per-quadrature variance
/// (N_B + kappa N_S + 1)/2, every other bin (N_B + 1)/2. Bin b draws from
/// `stream.child(b)`.
HeterodyneRecord simulate_heterodyne(const ScenarioParams &params, std::size_t true_bin, const RandomStream &stream);

/// Modified Gram-Schmidt under the Hermitian inner product, with a second
/// pass whenever a projection removes more than ~30% of the norm. Throws
/// DegenerateBasisError when a residual falls below 1e-9 of its input norm.
OrthoBasis gram_schmidt(std::span<const ComplexVector> outcomes,
                        const kernels::KernelTable &kernels = kernels::active_kernels());

/// Correlation-to-displacement conversion of one record:
/// (d')_i = (C_p / 2 v) conj(<row_i, r_h>), computed exactly.
ConversionOutput convert(const HeterodyneRecord &record, const ScenarioParams &params,
                         const kernels::KernelTable &kernels = kernels::active_kernels());

}  // namespace cvet

#endif  // CVET_CONVERSION_HPP_
