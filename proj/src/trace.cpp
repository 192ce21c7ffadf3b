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

#include "turbolab/trace.hpp"

#include <numeric>
#include <stdexcept>

namespace turbolab {

int TraceDecomposition::delta_p_sum() const { return std::accumulate(delta_p.begin(), delta_p.end(), 0); }

TraceDecomposition trace_and_detours(const SeedMorphism& seed, const MemoryClassification& classification,
                                     const ConvInput& input) {
    const int b = seed.space().bits();
    if (classification.in_m1.size() != (std::size_t{1} << (b * seed.m()))) {
        throw std::invalid_argument("classification does not match the seed");
    }
    const ConvOutput full = conv_apply(seed, input);
    TraceDecomposition t;
    t.output_weight = static_cast<int>(full.weight());

    const auto k = static_cast<std::size_t>(seed.k());
    for (std::size_t blk = 0; blk < input.info.size(); ++blk) {
        for (std::size_t j = 0; j < k; ++j) {
            if (input.info[blk][j] != 0) {
                t.positions.push_back(static_cast<int>(blk * k + j + 1));
                t.block_indices.push_back(static_cast<int>(blk + 1));
            }
        }
    }

    auto state_of = [&](const Letters& memory) {
        return static_cast<std::uint32_t>(pack_letters(memory, b));
    };
    t.memories.push_back(input.memory);
    t.bits.push_back(classification.is_m1(state_of(input.memory)) ? 1 : 0);
    for (std::size_t i = 0; i < t.positions.size(); ++i) {
        // i-th truncature: the first N_i blocks with information letters after
        // p_i replaced by I.
        const auto blocks = static_cast<std::size_t>(t.block_indices[i]);
        const auto last = static_cast<std::size_t>(t.positions[i]);
        ConvInput cut;
        cut.memory = input.memory;
        cut.info.assign(input.info.begin(), input.info.begin() + static_cast<std::ptrdiff_t>(blocks));
        cut.stab.assign(input.stab.begin(), input.stab.begin() + static_cast<std::ptrdiff_t>(blocks));
        for (std::size_t pos = last; pos < blocks * k; ++pos) {
            cut.info[pos / k][pos % k] = 0;
        }
        Letters memory = conv_apply(seed, cut).final_memory;
        t.bits.push_back(classification.is_m1(state_of(memory)) ? 1 : 0);
        t.memories.push_back(std::move(memory));
    }

    // Detours start at the first 1 and at every 1 that follows a 0.
    const int w = static_cast<int>(t.positions.size());
    for (int i = 0; i <= w && w >= 1; ++i) {
        if (t.bits[static_cast<std::size_t>(i)] == 1 &&
            (t.detour_starts.empty() || t.bits[static_cast<std::size_t>(i - 1)] == 0)) {
            t.detour_starts.push_back(i);
        }
    }
    auto p = [&](int i) { return i == 0 ? 0 : t.positions[static_cast<std::size_t>(i - 1)]; };
    for (std::size_t d = 0; d < t.detour_starts.size(); ++d) {
        const int start = t.detour_starts[d];
        const int next = d + 1 < t.detour_starts.size() ? t.detour_starts[d + 1] : w + 1;
        t.delta_p.push_back(p(next - 1) - p(start));
        t.terminating.push_back(t.bits[static_cast<std::size_t>(next - 1)] == 0);
    }
    return t;
}

}  // namespace turbolab
