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

#ifndef TURBOLAB_TRACE_HPP
#define TURBOLAB_TRACE_HPP

#include <vector>

#include "turbolab/classify.hpp"

namespace turbolab {

/// Positions are 1-based over the k*N information letters; p_0 = 0.
struct TraceDecomposition {
    /// b_0..b_{w_L}: b_i = 1 iff M_i is in M1.
    std::vector<int> bits;
    /// p_1..p_{w_L}.
    std::vector<int> positions;
    /// N_1..N_{w_L}, N_i = ceil(p_i / k).
    std::vector<int> block_indices;
    /// M_0..M_{w_L}, M_i = mu_{N_i} of the i-th truncature.
    std::vector<Letters> memories;
    /// Indices v_1 < ... < v_c into `bits` where a detour starts.
    std::vector<int> detour_starts;
    /// delta p^(i) = p_{v_{i+1}-1} - p_{v_i}, with v_{c+1} = w_L + 1.
    std::vector<int> delta_p;
    /// Whether each detour ends with a 0.
    std::vector<bool> terminating;
    /// |C_N(E)| including the terminal memory.
    int output_weight = 0;

    int info_weight() const { return static_cast<int>(positions.size()); }
    int detour_count() const { return static_cast<int>(detour_starts.size()); }
    int delta_p_sum() const;
};

/// Throws std::invalid_argument when the classification does not match the
/// seed's state space or an input block is malformed.
TraceDecomposition trace_and_detours(const SeedMorphism& seed, const MemoryClassification& classification,
                                     const ConvInput& input);

}  // namespace turbolab

#endif
