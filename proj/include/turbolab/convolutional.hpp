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

#ifndef TURBOLAB_CONVOLUTIONAL_HPP
#define TURBOLAB_CONVOLUTIONAL_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "turbolab/encoders.hpp"

namespace turbolab {

/// Largest b*m for which memory-state tables are built.
inline constexpr int kMaxMemoryBits = 20;
/// Largest number of stabilizer choices per step a table will hold.
inline constexpr std::uint64_t kMaxStabilizerChoices = std::uint64_t{1} << 12;

/// (M, L_1, S_1, ..., L_N, S_N).
struct ConvInput {
    Letters memory;
    std::vector<Letters> info;
    std::vector<Letters> stab;

    std::size_t steps() const { return info.size(); }
};

struct ConvOutput {
    std::vector<Letters> physical;
    Letters final_memory;
    /// M_1..M_N; the last entry equals final_memory.
    std::vector<Letters> memories;

    /// sum |P_i| + |M_final|.
    std::size_t weight() const;
    Letters physical_word() const;
};

/// N sequential seed applications. Throws std::invalid_argument on block size
/// mismatch.
ConvOutput conv_apply(const SeedMorphism& seed, const ConvInput& input);

/// (pi_N(E), mu_N(E)).
std::pair<Letters, Letters> pi_mu(const SeedMorphism& seed, const ConvInput& input);

struct TruncatedDecodeResult {
    std::vector<Letters> info;
    Letters initial_memory;
    /// M_0..M_N as recovered during the backward pass.
    std::vector<Letters> memories;
};

/// Backward pass of the truncated decoder: feeds (M_i, P_i) to C̄ for
/// i = N..1. Requires an encoder seed.
TruncatedDecodeResult conv_truncated_decode(const SeedMorphism& encoder, std::span<const Letter> final_memory,
                                            std::span<const std::vector<Letter>> physical);

/// Full inverse of C_N, recovering the stabilizer blocks too.
ConvInput conv_invert(const SeedMorphism& encoder, std::span<const Letter> final_memory,
                      std::span<const std::vector<Letter>> physical);

/// Precomputed images of one seed step, split by input role. Memory states are
/// packed letter words of b*m bits; the full step output is the packed
/// (P | M') word.
class StepTable {
   public:
    enum class Stabilizers { undetected, all };

    /// Throws std::length_error when b*m > kMaxMemoryBits or the stabilizer
    /// choice set exceeds kMaxStabilizerChoices.
    explicit StepTable(const SeedMorphism& seed, Stabilizers choices = Stabilizers::undetected);

    int bits() const { return bits_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int m() const { return m_; }
    std::uint32_t state_count() const { return static_cast<std::uint32_t>(memory_images_.size()); }
    std::size_t stab_count() const { return stab_images_.size(); }
    /// Packed stabilizer block for choice j.
    std::uint64_t stab_choice(std::size_t j) const { return stab_words_[j]; }

    std::uint64_t memory_image(std::uint32_t state) const { return memory_images_[state]; }
    std::uint64_t stab_image(std::size_t j) const { return stab_images_[j]; }
    /// Image of a packed information block.
    std::uint64_t info_image(std::uint64_t info) const;

    std::uint64_t step(std::uint32_t state, std::uint64_t info_image_bits, std::size_t stab) const {
        return memory_images_[state] ^ info_image_bits ^ stab_images_[stab];
    }
    std::uint32_t next_state(std::uint64_t out) const { return static_cast<std::uint32_t>(out >> physical_bits_); }
    int physical_weight(std::uint64_t out) const {
        return packed_weight(out & physical_mask_, bits_, physical_lsb_);
    }
    int memory_weight(std::uint32_t state) const { return packed_weight(state, bits_, memory_lsb_); }
    int info_weight(std::uint64_t info) const { return packed_weight(info, bits_, info_lsb_); }

   private:
    int bits_;
    int n_;
    int k_;
    int m_;
    int physical_bits_;
    std::uint64_t physical_mask_;
    std::uint64_t physical_lsb_;
    std::uint64_t memory_lsb_;
    std::uint64_t info_lsb_;
    std::vector<std::uint64_t> memory_images_;
    // info_letter_images_[i * 2^b + x] is the image of letter x at info slot i.
    std::vector<std::uint64_t> info_letter_images_;
    std::vector<std::uint64_t> stab_images_;
    std::vector<std::uint64_t> stab_words_;
};

/// Packs each information block of `info` into b*k bits.
std::vector<std::uint64_t> pack_blocks(std::span<const std::vector<Letter>> blocks, int bits);

/// Minimum of |C_N(M, L, S)| over S in (Z^s)^N, by dynamic programming over
/// memory states. The terminal memory counts iff `include_final_memory`.
int min_weight_over_stabilizers(const StepTable& table, std::uint32_t memory, std::span<const std::uint64_t> info,
                                bool include_final_memory = true);
int min_weight_over_stabilizers(const SeedMorphism& seed, std::span<const Letter> memory,
                                std::span<const std::vector<Letter>> info, bool include_final_memory = true);

/// Bit d is set iff some S in (Z^s)^N gives |C_N(M, L, S)| = d; d_max <= 63.
std::uint64_t achievable_weight_mask(const StepTable& table, std::uint32_t memory, std::span<const std::uint64_t> info,
                                     int d_max, bool include_final_memory = true);
std::vector<int> achievable_weights(const SeedMorphism& seed, std::span<const Letter> memory,
                                    std::span<const std::vector<Letter>> info, int d_max,
                                    bool include_final_memory = true);

}  // namespace turbolab

#endif
