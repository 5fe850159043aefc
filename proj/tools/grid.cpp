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

#include "grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "cvet/error.hpp"

namespace cvet::cli {

namespace {

double parse_number(std::string_view text) {
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(value)) {
        throw ParameterError("not a number: '" + s + "'");
    }
    return value;
}

std::size_t parse_points(std::string_view text) {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
        throw ParameterError("bad point count '" + std::string(text) + "'");
    }
    return n;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    if (text.empty()) {
        throw ParameterError("empty grid");
    }
    const auto first = text.find(':');
    if (first == std::string_view::npos) {
        std::vector<double> out;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            out.push_back(parse_number(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) {
                return out;
            }
            start = comma + 1;
        }
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) {
        throw ParameterError("grid needs the form a:b:logN or a:b:linN");
    }
    const double a = parse_number(text.substr(0, first));
    const double b = parse_number(text.substr(first + 1, second - first - 1));
    const std::string_view spacing = text.substr(second + 1);
    const bool is_log = spacing.starts_with("log");
    if (!is_log && !spacing.starts_with("lin")) {
        throw ParameterError("grid spacing must be logN or linN");
    }
    const std::size_t n = parse_points(spacing.substr(3));
    if (is_log && !(a > 0.0 && b > 0.0)) {
        throw ParameterError("log grid needs positive endpoints");
    }
    if (n == 1 && a != b) {
        throw ParameterError("a one-point grid needs equal endpoints");
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1);
        out.push_back(is_log ? std::exp(std::log(a) + t * (std::log(b) - std::log(a))) : a + t * (b - a));
    }
    out.front() = a;
    out.back() = b;
    return out;
}

std::vector<std::size_t> parse_count_grid(std::string_view text) {
    std::vector<std::size_t> out;
    for (double v : parse_grid(text)) {
        const double r = std::round(v);
        if (!(r >= 1.0 && r < 9.0e15)) {
            throw ParameterError("counts must be positive integers");
        }
        out.push_back(static_cast<std::size_t>(r));
    }
    return out;
}

}  // namespace cvet::cli
