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

#ifndef CVET_COMPLEX_VECTOR_HPP_
#define CVET_COMPLEX_VECTOR_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace cvet {

/// Complex vector stored as separate real and imaginary planes so the
/// kernels can stream both with packed loads.
struct ComplexVector {
    std::vector<double> re;
    std::vector<double> im;

    ComplexVector() = default;
    explicit ComplexVector(std::size_t n) : re(n, 0.0), im(n, 0.0) {
    }

    std::size_t size() const {
        return re.size();
    }
    std::complex<double> operator[](std::size_t k) const {
        return {re[k], im[k]};
    }
    void set(std::size_t k, std::complex<double> v) {
        re[k] = v.real();
        im[k] = v.imag();
    }

    bool operator==(const ComplexVector &other) const = default;
};

}  // namespace cvet

#endif  // CVET_COMPLEX_VECTOR_HPP_
