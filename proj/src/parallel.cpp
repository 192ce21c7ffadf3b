// Copyright 2026 The turbolab Authors
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

#include "turbolab/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace turbolab {

namespace {

std::atomic<int> g_override{0};

}  // namespace

int lab_threads() {
    if (const int forced = g_override.load(); forced > 0) {
        return forced;
    }
    const char* env = std::getenv("LAB_THREADS");
    if (env == nullptr || *env == '\0') {
        return omp_get_max_threads();
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 4096) {
        throw std::invalid_argument("LAB_THREADS must be a nonnegative integer, got '" + std::string(env) + "'");
    }
    return v == 0 ? omp_get_max_threads() : static_cast<int>(v);
}

void set_thread_override(int threads) { g_override.store(threads < 0 ? 0 : threads); }

}  // namespace turbolab
