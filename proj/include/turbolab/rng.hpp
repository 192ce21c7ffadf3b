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

#ifndef TURBOLAB_RNG_HPP
#define TURBOLAB_RNG_HPP

#include <cstdint>
#include <random>

namespace turbolab {

/// One round of the splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `index` under `master`. Depends only on the two values, so
/// trials can be run in any order or on any number of workers.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// mt19937_64 with a bounded-integer draw that does not depend on the
/// standard library's distribution implementation.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);

   private:
    std::mt19937_64 engine_;
};

}  // namespace turbolab

#endif
