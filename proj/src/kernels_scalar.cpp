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

#include <complex>
#include <cstddef>

#include "cvet/kernels.hpp"

namespace cvet::kernels {
namespace {

std::complex<double> hdot_scalar(const double *a_re, const double *a_im, const double *b_re, const double *b_im,
                                 std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        re += a_re[k] * b_re[k] + a_im[k] * b_im[k];
        im += a_re[k] * b_im[k] - a_im[k] * b_re[k];
    }
    return {re, im};
}

double norm_sq_scalar(const double *re, const double *im, std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        acc += re[k] * re[k] + im[k] * im[k];
    }
    return acc;
}

void axpy_scalar(double c_re, double c_im, const double *x_re, const double *x_im, double *y_re, double *y_im,
                 std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        y_re[k] += c_re * x_re[k] - c_im * x_im[k];
        y_im[k] += c_re * x_im[k] + c_im * x_re[k];
    }
}

void scale_scalar(double s, double *re, double *im, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        re[k] *= s;
        im[k] *= s;
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar", hdot_scalar, norm_sq_scalar, axpy_scalar, scale_scalar};
    return table;
}

}  // namespace cvet::kernels
