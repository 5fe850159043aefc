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

#ifndef CVET_DATASET_HPP_
#define CVET_DATASET_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cvet {

/// One table cell. std::monostate is written as null.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Dataset {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_meta(std::string key, std::string value);
    /// Throws ParameterError when the row width does not match the header.
    void add_row(std::vector<Cell> row);
    std::size_t column_index(std::string_view name) const;
};

enum class DataFormat { kCsv, kJson };

DataFormat parse_data_format(std::string_view name);

/// 12 significant digits; non-finite values become null.
std::string format_number(double value);

std::string to_csv(const Dataset &data);
std::string to_json(const Dataset &data);

/// Writes to a sibling temporary file and renames it over the target.
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

void write_dataset(const std::filesystem::path &path, const Dataset &data, DataFormat format);

}  // namespace cvet

#endif  // CVET_DATASET_HPP_
