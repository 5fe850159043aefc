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

#include "cvet/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include "cvet/error.hpp"
#include "json.hpp"

namespace cvet {

void Dataset::add_meta(std::string key, std::string value) {
    meta.emplace_back(std::move(key), std::move(value));
}

void Dataset::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw ParameterError("row has " + std::to_string(row.size()) + " cells, header has " +
                             std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::size_t Dataset::column_index(std::string_view name) const {
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k] == name) {
            return k;
        }
    }
    throw ParameterError("no column named '" + std::string(name) + "'");
}

DataFormat parse_data_format(std::string_view name) {
    if (name == "csv") {
        return DataFormat::kCsv;
    }
    if (name == "json") {
        return DataFormat::kJson;
    }
    throw ParameterError("unknown output format '" + std::string(name) + "'");
}

std::string format_number(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::string csv_cell(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const {
            return "null";
        }
        std::string operator()(double v) const {
            return format_number(v);
        }
        std::string operator()(std::int64_t v) const {
            return std::to_string(v);
        }
        std::string operator()(const std::string &s) const {
            if (s.find_first_of(",\"\n") == std::string::npos) {
                return s;
            }
            std::string out = "\"";
            for (char c : s) {
                out += c;
                if (c == '"') {
                    out += '"';
                }
            }
            return out + "\"";
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell &cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const {
            return nullptr;
        }
        nlohmann::ordered_json operator()(double v) const {
            if (!std::isfinite(v)) {
                return nullptr;
            }
            return std::strtod(format_number(v).c_str(), nullptr);
        }
        nlohmann::ordered_json operator()(std::int64_t v) const {
            return v;
        }
        nlohmann::ordered_json operator()(const std::string &s) const {
            return s;
        }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string to_csv(const Dataset &data) {
    std::string out;
    for (const auto &[key, value] : data.meta) {
        out += "# " + key + ": " + value + "\n";
    }
    for (std::size_t k = 0; k < data.columns.size(); ++k) {
        out += (k ? "," : "") + data.columns[k];
    }
    out += "\n";
    for (const auto &row : data.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            out += (k ? "," : "") + csv_cell(row[k]);
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Dataset &data) {
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (const auto &[key, value] : data.meta) {
        doc["meta"][key] = value;
    }
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : data.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < row.size(); ++k) {
            obj[data.columns[k]] = json_cell(row[k]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path &path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw std::runtime_error("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto '" + path.string() + "': " + ec.message());
    }
}

void write_dataset(const std::filesystem::path &path, const Dataset &data, DataFormat format) {
    write_file_atomic(path, format == DataFormat::kCsv ? to_csv(data) : to_json(data));
}

}  // namespace cvet
