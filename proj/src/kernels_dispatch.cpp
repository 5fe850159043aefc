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

#include <cstdlib>
#include <iostream>
#include <string_view>

#include "cvet/kernels.hpp"

namespace cvet::kernels {

#if defined(CVET_HAVE_AVX2)
const KernelTable &avx2_kernel_table();
#endif

const KernelTable *avx2_kernels() {
#if defined(CVET_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable *find_kernels(std::string_view name) {
    if (name == "scalar") {
        return &scalar_kernels();
    }
    if (name == "avx2") {
        return avx2_kernels();
    }
    return nullptr;
}

namespace {

const KernelTable &select_kernels() {
    if (const char *forced = std::getenv("CVET_KERNELS"); forced != nullptr && *forced != '\0') {
        std::string_view want(forced);
        if (want != "auto") {
            if (const KernelTable *table = find_kernels(want)) {
                return *table;
            }
            std::cerr << "cvet: kernel variant '" << want << "' unavailable, using auto selection\n";
        }
    }
    if (const KernelTable *table = avx2_kernels()) {
        return *table;
    }
    return scalar_kernels();
}

}  // namespace

const KernelTable &active_kernels() {
    static const KernelTable &table = select_kernels();
    return table;
}

}  // namespace cvet::kernels
