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

#ifndef CVET_RANDOM_HPP_
#define CVET_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cvet/complex_vector.hpp"

namespace cvet {

using Engine = std::mt19937_64;

/// Immutable token naming one reproducible random substream.
///
/// A stream is identified by (master_seed, path). `child(i)` appends `i` to
/// the path and never touches the parent, so trial t of point p can always be
/// addressed as `RandomStream(seed).child(p).child(t)` no matter which worker
/// runs it or in which order.
class RandomStream {
   public:
    explicit RandomStream(std::uint64_t master_seed);

    RandomStream child(std::uint64_t index) const;

    std::uint64_t master_seed() const {
        return master_seed_;
    }
    std::span<const std::uint64_t> path() const {
        return path_;
    }
    /// 64-bit digest of (master_seed, path); seeds the engine.
    std::uint64_t key() const {
        return key_;
    }

    /// Fresh engine positioned at the start of this substream.
    Engine engine() const;

   private:
    std::uint64_t master_seed_;
    std::vector<std::uint64_t> path_;
    std::uint64_t key_;
};

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Circularly-symmetric complex Gaussian vector: real and imaginary parts
/// are independent N(0, var_per_quadrature).
ComplexVector sample_complex_gaussian(const RandomStream &stream, double var_per_quadrature, std::size_t length);

/// Engine-level variant used inside the hot loops; fills `out` in place.
void fill_complex_gaussian(Engine &engine, double var_per_quadrature, ComplexVector &out);

/// Uniform draw in [0, 1).
double uniform01(Engine &engine);

}  // namespace cvet

#endif  // CVET_RANDOM_HPP_
