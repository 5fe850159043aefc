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

#ifndef CVET_TOOLS_GRID_HPP_
#define CVET_TOOLS_GRID_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace cvet::cli {

/// Parses a value grid: "x", "x,y,z", "a:b:logN" (N log-spaced points) or
/// "a:b:linN" (N evenly spaced points); endpoints are included.
std::vector<double> parse_grid(std::string_view text);

/// As parse_grid, rounding each value to a positive integer.
std::vector<std::size_t> parse_count_grid(std::string_view text);

}  // namespace cvet::cli

#endif  // CVET_TOOLS_GRID_HPP_
