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

#include "cvet/random.hpp"

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <cmath>

#include "cvet/error.hpp"

namespace cvet {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t master_seed) : master_seed_(master_seed), key_(mix64(master_seed)) {
}

RandomStream RandomStream::child(std::uint64_t index) const {
    RandomStream out = *this;
    out.path_.push_back(index);
    out.key_ = mix64(key_ ^ mix64(index ^ 0xD1B54A32D192ED03ULL));
    return out;
}

Engine RandomStream::engine() const {
    return Engine(key_);
}

void fill_complex_gaussian(Engine &engine, double var_per_quadrature, ComplexVector &out) {
    boost::random::normal_distribution<double> normal(0.0, std::sqrt(var_per_quadrature));
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
        out.re[k] = normal(engine);
        out.im[k] = normal(engine);
    }
}

ComplexVector sample_complex_gaussian(const RandomStream &stream, double var_per_quadrature, std::size_t length) {
    if (!(std::isfinite(var_per_quadrature) && var_per_quadrature > 0.0)) {
        throw ParameterError("variance per quadrature must be positive");
    }
    if (length == 0) {
        throw ParameterError("sample length must be at least 1");
    }
    ComplexVector out(length);
    Engine engine = stream.engine();
    fill_complex_gaussian(engine, var_per_quadrature, out);
    return out;
}

double uniform01(Engine &engine) {
    return boost::random::uniform_01<double>()(engine);
}

}  // namespace cvet
