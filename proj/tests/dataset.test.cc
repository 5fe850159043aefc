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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cvet/error.hpp"
#include "json.hpp"

using namespace cvet;

namespace {

Dataset sample() {
    Dataset d;
    d.add_meta("seed", "1729");
    d.columns = {"x", "n", "label", "missing"};
    d.add_row({1.0 / 3.0, std::int64_t{42}, std::string("a,b"), std::monostate{}});
    d.add_row({1e-300, std::int64_t{-1}, std::string("plain"), NAN});
    return d;
}

}  // namespace

TEST(Dataset, number_format) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(12345678901234.0), "1.23456789012e+13");
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(INFINITY), "null");
}

TEST(Dataset, csv_layout) {
    EXPECT_EQ(to_csv(sample()),
              "# seed: 1729\n"
              "x,n,label,missing\n"
              "0.333333333333,42,\"a,b\",null\n"
              "1e-300,-1,plain,null\n");
}

TEST(Dataset, json_layout) {
    const auto doc = nlohmann::json::parse(to_json(sample()));
    EXPECT_EQ(doc["meta"]["seed"], "1729");
    ASSERT_EQ(doc["rows"].size(), 2u);
    EXPECT_DOUBLE_EQ(doc["rows"][0]["x"].get<double>(), 0.333333333333);
    EXPECT_EQ(doc["rows"][0]["n"].get<int>(), 42);
    EXPECT_TRUE(doc["rows"][0]["missing"].is_null());
    EXPECT_TRUE(doc["rows"][1]["missing"].is_null());
}

TEST(Dataset, row_width_checked) {
    Dataset d;
    d.columns = {"a", "b"};
    EXPECT_THROW(d.add_row({1.0}), ParameterError);
    EXPECT_THROW(d.column_index("c"), ParameterError);
    EXPECT_THROW(parse_data_format("xml"), ParameterError);
}

TEST(Dataset, atomic_write_replaces_file) {
    const auto dir = std::filesystem::temp_directory_path() / "cvet_dataset_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    write_file_atomic(path, "old\n");
    write_dataset(path, sample(), DataFormat::kCsv);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), to_csv(sample()));
    EXPECT_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));
    std::filesystem::remove_all(dir);
}
