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

#ifndef CVET_ERROR_HPP_
#define CVET_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cvet {

/// Raised when physical or protocol parameters violate their invariants.
class ParameterError : public std::invalid_argument {
   public:
    explicit ParameterError(const std::string &what) : std::invalid_argument(what) {
    }
};

/// Raised when Gram-Schmidt meets a (numerically) linearly dependent vector.
class DegenerateBasisError : public std::runtime_error {
   public:
    explicit DegenerateBasisError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace cvet

#endif  // CVET_ERROR_HPP_
