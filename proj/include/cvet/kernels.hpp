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

#ifndef CVET_KERNELS_HPP_
#define CVET_KERNELS_HPP_

#include <complex>
#include <cstddef>
#include <string_view>

#include "cvet/complex_vector.hpp"

namespace cvet::kernels {

// Inner loops over split-complex data. Every entry has a scalar reference in
// kernels_scalar.cpp; SIMD variants must agree with it to rounding (see
// tests/kernels_test.cpp).
struct KernelTable {
    std::string_view name;

    // sum_k conj(a_k) * b_k
    std::complex<double> (*hdot)(const double *a_re, const double *a_im, const double *b_re, const double *b_im,
                                 std::size_t n);

    // sum_k |x_k|^2
    double (*norm_sq)(const double *re, const double *im, std::size_t n);

    // y += c * x
    void (*axpy)(double c_re, double c_im, const double *x_re, const double *x_im, double *y_re, double *y_im,
                 std::size_t n);

    // x *= s
    void (*scale)(double s, double *re, double *im, std::size_t n);
};

const KernelTable &scalar_kernels();

/// AVX2+FMA table, or nullptr when not compiled in or the CPU lacks it.
const KernelTable *avx2_kernels();

/// Table picked once per process: the widest supported variant, unless the
/// CVET_KERNELS environment variable is set to "scalar" or "avx2".
const KernelTable &active_kernels();

/// Looks a table up by name ("scalar", "avx2"); nullptr if unavailable.
const KernelTable *find_kernels(std::string_view name);

// Convenience wrappers over a table.
inline std::complex<double> hdot(const KernelTable &k, const ComplexVector &a, const ComplexVector &b) {
    return k.hdot(a.re.data(), a.im.data(), b.re.data(), b.im.data(), a.size());
}
inline double norm_sq(const KernelTable &k, const ComplexVector &x) {
    return k.norm_sq(x.re.data(), x.im.data(), x.size());
}
inline void axpy(const KernelTable &k, std::complex<double> c, const ComplexVector &x, ComplexVector &y) {
    k.axpy(c.real(), c.imag(), x.re.data(), x.im.data(), y.re.data(), y.im.data(), x.size());
}
inline void scale(const KernelTable &k, double s, ComplexVector &x) {
    k.scale(s, x.re.data(), x.im.data(), x.size());
}

}  // namespace cvet::kernels

#endif  // CVET_KERNELS_HPP_
