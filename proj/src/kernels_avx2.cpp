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

// Compiled with -mavx2 -mfma; nothing here may run before the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include <complex>
#include <cstddef>

#include "cvet/kernels.hpp"

namespace cvet::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

std::complex<double> hdot_avx2(const double *a_re, const double *a_im, const double *b_re, const double *b_im,
                               std::size_t n) {
    __m256d re0 = _mm256_setzero_pd();
    __m256d re1 = _mm256_setzero_pd();
    __m256d im0 = _mm256_setzero_pd();
    __m256d im1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        __m256d ar0 = _mm256_loadu_pd(a_re + k);
        __m256d ai0 = _mm256_loadu_pd(a_im + k);
        __m256d br0 = _mm256_loadu_pd(b_re + k);
        __m256d bi0 = _mm256_loadu_pd(b_im + k);
        __m256d ar1 = _mm256_loadu_pd(a_re + k + 4);
        __m256d ai1 = _mm256_loadu_pd(a_im + k + 4);
        __m256d br1 = _mm256_loadu_pd(b_re + k + 4);
        __m256d bi1 = _mm256_loadu_pd(b_im + k + 4);
        re0 = _mm256_fmadd_pd(ar0, br0, re0);
        re0 = _mm256_fmadd_pd(ai0, bi0, re0);
        re1 = _mm256_fmadd_pd(ar1, br1, re1);
        re1 = _mm256_fmadd_pd(ai1, bi1, re1);
        im0 = _mm256_fmadd_pd(ar0, bi0, im0);
        im0 = _mm256_fnmadd_pd(ai0, br0, im0);
        im1 = _mm256_fmadd_pd(ar1, bi1, im1);
        im1 = _mm256_fnmadd_pd(ai1, br1, im1);
    }
    for (; k + 4 <= n; k += 4) {
        __m256d ar = _mm256_loadu_pd(a_re + k);
        __m256d ai = _mm256_loadu_pd(a_im + k);
        __m256d br = _mm256_loadu_pd(b_re + k);
        __m256d bi = _mm256_loadu_pd(b_im + k);
        re0 = _mm256_fmadd_pd(ar, br, re0);
        re0 = _mm256_fmadd_pd(ai, bi, re0);
        im0 = _mm256_fmadd_pd(ar, bi, im0);
        im0 = _mm256_fnmadd_pd(ai, br, im0);
    }
    double re = hsum(_mm256_add_pd(re0, re1));
    double im = hsum(_mm256_add_pd(im0, im1));
    for (; k < n; ++k) {
        re += a_re[k] * b_re[k] + a_im[k] * b_im[k];
        im += a_re[k] * b_im[k] - a_im[k] * b_re[k];
    }
    return {re, im};
}

double norm_sq_avx2(const double *re, const double *im, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        __m256d r0 = _mm256_loadu_pd(re + k);
        __m256d i0 = _mm256_loadu_pd(im + k);
        __m256d r1 = _mm256_loadu_pd(re + k + 4);
        __m256d i1 = _mm256_loadu_pd(im + k + 4);
        acc0 = _mm256_fmadd_pd(r0, r0, acc0);
        acc0 = _mm256_fmadd_pd(i0, i0, acc0);
        acc1 = _mm256_fmadd_pd(r1, r1, acc1);
        acc1 = _mm256_fmadd_pd(i1, i1, acc1);
    }
    for (; k + 4 <= n; k += 4) {
        __m256d r = _mm256_loadu_pd(re + k);
        __m256d i = _mm256_loadu_pd(im + k);
        acc0 = _mm256_fmadd_pd(r, r, acc0);
        acc0 = _mm256_fmadd_pd(i, i, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; ++k) {
        acc += re[k] * re[k] + im[k] * im[k];
    }
    return acc;
}

void axpy_avx2(double c_re, double c_im, const double *x_re, const double *x_im, double *y_re, double *y_im,
               std::size_t n) {
    const __m256d cr = _mm256_set1_pd(c_re);
    const __m256d ci = _mm256_set1_pd(c_im);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d xr = _mm256_loadu_pd(x_re + k);
        __m256d xi = _mm256_loadu_pd(x_im + k);
        __m256d yr = _mm256_loadu_pd(y_re + k);
        __m256d yi = _mm256_loadu_pd(y_im + k);
        yr = _mm256_fmadd_pd(cr, xr, yr);
        yr = _mm256_fnmadd_pd(ci, xi, yr);
        yi = _mm256_fmadd_pd(cr, xi, yi);
        yi = _mm256_fmadd_pd(ci, xr, yi);
        _mm256_storeu_pd(y_re + k, yr);
        _mm256_storeu_pd(y_im + k, yi);
    }
    for (; k < n; ++k) {
        y_re[k] += c_re * x_re[k] - c_im * x_im[k];
        y_im[k] += c_re * x_im[k] + c_im * x_re[k];
    }
}

void scale_avx2(double s, double *re, double *im, std::size_t n) {
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(re + k, _mm256_mul_pd(sv, _mm256_loadu_pd(re + k)));
        _mm256_storeu_pd(im + k, _mm256_mul_pd(sv, _mm256_loadu_pd(im + k)));
    }
    for (; k < n; ++k) {
        re[k] *= s;
        im[k] *= s;
    }
}

}  // namespace

const KernelTable &avx2_kernel_table() {
    static const KernelTable table{"avx2", hdot_avx2, norm_sq_avx2, axpy_avx2, scale_avx2};
    return table;
}

}  // namespace cvet::kernels
