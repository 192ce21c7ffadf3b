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

#ifndef TURBOLAB_CLASSIFY_HPP
#define TURBOLAB_CLASSIFY_HPP

// Memory-state behaviour of a seed morphism under information-free inputs.
//
// Definitions phrased over infinite input sequences become graph questions on
// the finite memory automaton whose edges are the steps (M, I, S) with S in
// Z^s, labelled by the physical output weight. An infinite continuation of
// finite total weight eventually only uses weight-0 edges, and an infinite
// weight-0 walk in a finite graph must enter a set of states each of which
// keeps a weight-0 successor inside the set. The largest such set ("good")
// is found by pruning; M0 is everything that can reach it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turbolab/convolutional.hpp"

namespace turbolab {

class TransitionGraph {
   public:
    explicit TransitionGraph(const SeedMorphism& seed);

    std::uint32_t state_count() const { return states_; }
    /// Out-degree of every state, |Z|^s.
    std::size_t degree() const { return degree_; }
    std::uint32_t target(std::uint32_t state, std::size_t choice) const {
        return targets_[static_cast<std::size_t>(state) * degree_ + choice];
    }
    int weight(std::uint32_t state, std::size_t choice) const {
        return weights_[static_cast<std::size_t>(state) * degree_ + choice];
    }
    const StepTable& table() const { return table_; }
    const SeedMorphism& seed() const { return seed_; }

   private:
    SeedMorphism seed_;
    StepTable table_;
    std::uint32_t states_;
    std::size_t degree_;
    std::vector<std::uint32_t> targets_;
    std::vector<std::uint16_t> weights_;
};

/// Forward closure of the zero state. Entry s is 1 iff s is in the set.
std::vector<std::uint8_t> reachable_I(const TransitionGraph& graph);

struct MemoryPartition {
    /// States with an infinite weight-0 continuation.
    std::vector<std::uint8_t> good;
    /// 1 for M1, 0 for M0.
    std::vector<std::uint8_t> in_m1;
};

MemoryPartition classify_memories(const TransitionGraph& graph);

/// eta together with a state of M1 and a stabilizer choice sequence of
/// length eta - 1 along which the physical output stays zero.
struct SpeedWitness {
    int eta = 0;
    std::uint32_t start = 0;
    std::vector<std::size_t> choices;
};

/// Empty when M1 is empty (eta undefined).
std::optional<SpeedWitness> speed(const TransitionGraph& graph, const MemoryPartition& partition);

struct MemoryClassification {
    std::vector<std::uint8_t> in_i;
    std::vector<std::uint8_t> in_m1;
    std::vector<std::uint8_t> good;
    std::optional<SpeedWitness> speed;

    std::optional<int> eta() const {
        return speed ? std::optional<int>(speed->eta) : std::nullopt;
    }
    std::size_t count_i() const;
    std::size_t count_m0() const;
    std::size_t count_m1() const;
    bool is_m1(std::uint32_t state) const { return in_m1[state] != 0; }
};

MemoryClassification classify(const TransitionGraph& graph);
MemoryClassification classify(const SeedMorphism& seed);

/// A weight-1 information impulse whose continuation has finite weight:
/// from the zero memory, `prefix` steps (I, S) reach `memory` in I; the step
/// (memory, impulse, impulse_stab) and then `tail` steps (I, S) reach a good
/// state, after which weight-0 steps exist forever. `finite_weight` is the
/// physical weight from the impulse step on.
struct RecursionWitness {
    std::vector<Letters> prefix;
    Letters memory;
    Letters impulse;
    Letters impulse_stab;
    std::vector<Letters> tail;
    int finite_weight = 0;
};

struct RecursionVerdict {
    bool recursive = false;
    std::optional<RecursionWitness> witness;
};

RecursionVerdict is_recursive(const SeedMorphism& seed);
RecursionVerdict is_recursive(const TransitionGraph& graph, const MemoryClassification& classification);

/// is_recursive of the truncated decoder seen as a forward morphism.
RecursionVerdict is_totally_recursive(const SeedMorphism& encoder);

enum class SystematicVerdict { structural_pass, falsified, undecided };

std::string to_string(SystematicVerdict verdict);

struct SystematicReport {
    SystematicVerdict verdict = SystematicVerdict::undecided;
    /// structural_pass: output letter carrying information letter j.
    std::vector<int> info_to_output;
    /// falsified: an input (stabilizers unrestricted) with |C_N(E)| < |E|_L.
    std::optional<ConvInput> witness;
    int witness_deficit = 0;
};

/// Structural test first; otherwise an exact search for a violating input of
/// length up to n_falsify. Inputs range over all of P for stabilizer letters.
SystematicReport is_systematic(const SeedMorphism& encoder, int n_falsify = 6);

/// Graphviz rendering of the transition graph with M1 states boxed.
std::string to_dot(const TransitionGraph& graph, const MemoryClassification& classification);

}  // namespace turbolab

#endif
