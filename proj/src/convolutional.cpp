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

#include "turbolab/convolutional.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace turbolab {

namespace {

constexpr int kUnreached = INT_MAX;

void check_input(const SeedMorphism& seed, const ConvInput& input) {
    if (input.memory.size() != static_cast<std::size_t>(seed.m())) {
        throw std::invalid_argument("initial memory must have m letters");
    }
    if (input.stab.size() != input.info.size()) {
        throw std::invalid_argument("information and stabilizer block counts differ");
    }
    for (std::size_t i = 0; i < input.info.size(); ++i) {
        if (input.info[i].size() != static_cast<std::size_t>(seed.k()) ||
            input.stab[i].size() != static_cast<std::size_t>(seed.s())) {
            throw std::invalid_argument("block " + std::to_string(i) + " has the wrong size");
        }
    }
}

std::uint32_t pack_memory(const SeedMorphism& seed, std::span<const Letter> memory) {
    if (memory.size() != static_cast<std::size_t>(seed.m())) {
        throw std::invalid_argument("memory must have m letters");
    }
    return static_cast<std::uint32_t>(pack_letters(memory, seed.space().bits()));
}

}  // namespace

std::size_t ConvOutput::weight() const {
    std::size_t total = turbolab::weight(final_memory);
    for (const auto& p : physical) {
        total += turbolab::weight(p);
    }
    return total;
}

Letters ConvOutput::physical_word() const {
    Letters out;
    for (const auto& p : physical) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

ConvOutput conv_apply(const SeedMorphism& seed, const ConvInput& input) {
    check_input(seed, input);
    ConvOutput out;
    Letters memory = input.memory;
    for (std::size_t i = 0; i < input.steps(); ++i) {
        auto [p, next] = seed.step(memory, input.info[i], input.stab[i]);
        out.physical.push_back(std::move(p));
        out.memories.push_back(next);
        memory = std::move(next);
    }
    out.final_memory = std::move(memory);
    return out;
}

std::pair<Letters, Letters> pi_mu(const SeedMorphism& seed, const ConvInput& input) {
    ConvOutput out = conv_apply(seed, input);
    return {out.physical_word(), std::move(out.final_memory)};
}

TruncatedDecodeResult conv_truncated_decode(const SeedMorphism& encoder, std::span<const Letter> final_memory,
                                            std::span<const std::vector<Letter>> physical) {
    const SeedMorphism bar = truncated_decoder(encoder);
    if (final_memory.size() != static_cast<std::size_t>(encoder.m())) {
        throw std::invalid_argument("final memory must have m letters");
    }
    const std::size_t steps = physical.size();
    TruncatedDecodeResult out;
    out.info.resize(steps);
    out.memories.resize(steps + 1);
    out.memories[steps] = Letters(final_memory.begin(), final_memory.end());
    for (std::size_t i = steps; i-- > 0;) {
        if (physical[i].size() != static_cast<std::size_t>(encoder.n())) {
            throw std::invalid_argument("physical block " + std::to_string(i) + " has the wrong size");
        }
        // C̄(M_i, P_i) = (L_i, M_{i-1}).
        auto [info, previous] = bar.step(out.memories[i + 1], physical[i], {});
        out.info[i] = std::move(info);
        out.memories[i] = std::move(previous);
    }
    out.initial_memory = out.memories[0];
    return out;
}

ConvInput conv_invert(const SeedMorphism& encoder, std::span<const Letter> final_memory,
                      std::span<const std::vector<Letter>> physical) {
    if (encoder.kind() != MorphismKind::encoder) {
        throw std::invalid_argument("conv_invert requires an encoder");
    }
    const auto m = static_cast<std::size_t>(encoder.m());
    const auto k = static_cast<std::size_t>(encoder.k());
    if (final_memory.size() != m) {
        throw std::invalid_argument("final memory must have m letters");
    }
    ConvInput out;
    out.info.resize(physical.size());
    out.stab.resize(physical.size());
    Letters memory(final_memory.begin(), final_memory.end());
    for (std::size_t i = physical.size(); i-- > 0;) {
        Letters word = physical[i];
        word.insert(word.end(), memory.begin(), memory.end());
        const Letters input = encoder.invert(word);
        memory.assign(input.begin(), input.begin() + static_cast<std::ptrdiff_t>(m));
        out.info[i].assign(input.begin() + static_cast<std::ptrdiff_t>(m),
                           input.begin() + static_cast<std::ptrdiff_t>(m + k));
        out.stab[i].assign(input.begin() + static_cast<std::ptrdiff_t>(m + k), input.end());
    }
    out.memory = std::move(memory);
    return out;
}

StepTable::StepTable(const SeedMorphism& seed, Stabilizers choices)
    : bits_(seed.space().bits()), n_(seed.n()), k_(seed.k()), m_(seed.m()) {
    const int b = bits_;
    if (b * m_ > kMaxMemoryBits) {
        throw std::length_error("memory state space exceeds 2^" + std::to_string(kMaxMemoryBits));
    }
    physical_bits_ = b * n_;
    physical_mask_ = physical_bits_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << physical_bits_) - 1;
    physical_lsb_ = letter_lsb_mask(b, static_cast<std::size_t>(n_));
    memory_lsb_ = letter_lsb_mask(b, static_cast<std::size_t>(m_));
    info_lsb_ = letter_lsb_mask(b, static_cast<std::size_t>(k_));

    const BitMatrix& a = seed.matrix();
    const std::size_t mem_cols = static_cast<std::size_t>(b * m_);
    const std::size_t info_base = mem_cols;
    const std::size_t stab_base = mem_cols + static_cast<std::size_t>(b * k_);
    std::vector<std::uint64_t> cols(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        cols[c] = a.column(c);
    }

    const std::size_t states = std::size_t{1} << mem_cols;
    memory_images_.assign(states, 0);
    for (std::size_t x = 1; x < states; ++x) {
        const auto low = static_cast<std::size_t>(std::countr_zero(x));
        memory_images_[x] = memory_images_[x & (x - 1)] ^ cols[low];
    }

    const std::size_t letters = std::size_t{1} << b;
    info_letter_images_.assign(static_cast<std::size_t>(k_) * letters, 0);
    for (int i = 0; i < k_; ++i) {
        for (std::size_t x = 0; x < letters; ++x) {
            std::uint64_t img = 0;
            for (int j = 0; j < b; ++j) {
                if ((x >> j) & 1) {
                    img ^= cols[info_base + static_cast<std::size_t>(i * b + j)];
                }
            }
            info_letter_images_[static_cast<std::size_t>(i) * letters + x] = img;
        }
    }

    // Stabilizer blocks: every letter drawn from Z (or from all of P).
    std::vector<Letter> alphabet;
    if (choices == Stabilizers::undetected) {
        alphabet = seed.space().z_elements();
    } else {
        for (Letter x = 0; x < letters; ++x) {
            alphabet.push_back(x);
        }
    }
    std::uint64_t count = 1;
    for (int i = 0; i < seed.s(); ++i) {
        count *= alphabet.size();
        if (count > kMaxStabilizerChoices) {
            throw std::length_error("stabilizer choice set too large");
        }
    }
    stab_images_.reserve(count);
    stab_words_.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t rest = code;
        std::uint64_t word = 0;
        for (int i = 0; i < seed.s(); ++i) {
            word |= static_cast<std::uint64_t>(alphabet[rest % alphabet.size()]) << (i * b);
            rest /= alphabet.size();
        }
        std::uint64_t img = 0;
        for (std::uint64_t bitsleft = word; bitsleft != 0; bitsleft &= bitsleft - 1) {
            img ^= cols[stab_base + static_cast<std::size_t>(std::countr_zero(bitsleft))];
        }
        stab_words_.push_back(word);
        stab_images_.push_back(img);
    }
}

std::uint64_t StepTable::info_image(std::uint64_t info) const {
    std::uint64_t img = 0;
    const std::size_t letters = std::size_t{1} << bits_;
    const std::uint64_t mask = letters - 1;
    for (int i = 0; i < k_ && info != 0; ++i) {
        img ^= info_letter_images_[static_cast<std::size_t>(i) * letters + (info & mask)];
        info >>= bits_;
    }
    return img;
}

std::vector<std::uint64_t> pack_blocks(std::span<const std::vector<Letter>> blocks, int bits) {
    std::vector<std::uint64_t> out;
    out.reserve(blocks.size());
    for (const auto& block : blocks) {
        out.push_back(pack_letters(block, bits));
    }
    return out;
}

int min_weight_over_stabilizers(const StepTable& table, std::uint32_t memory, std::span<const std::uint64_t> info,
                                bool include_final_memory) {
    const std::uint32_t states = table.state_count();
    std::vector<int> cur(states, kUnreached);
    std::vector<int> next(states, kUnreached);
    cur[memory] = 0;
    for (std::uint64_t block : info) {
        const std::uint64_t img = table.info_image(block);
        std::fill(next.begin(), next.end(), kUnreached);
        for (std::uint32_t st = 0; st < states; ++st) {
            if (cur[st] == kUnreached) {
                continue;
            }
            for (std::size_t j = 0; j < table.stab_count(); ++j) {
                const std::uint64_t out = table.step(st, img, j);
                const int w = cur[st] + table.physical_weight(out);
                int& slot = next[table.next_state(out)];
                slot = std::min(slot, w);
            }
        }
        cur.swap(next);
    }
    int best = kUnreached;
    for (std::uint32_t st = 0; st < states; ++st) {
        if (cur[st] != kUnreached) {
            best = std::min(best, cur[st] + (include_final_memory ? table.memory_weight(st) : 0));
        }
    }
    return best;
}

int min_weight_over_stabilizers(const SeedMorphism& seed, std::span<const Letter> memory,
                                std::span<const std::vector<Letter>> info, bool include_final_memory) {
    const StepTable table(seed);
    for (const auto& block : info) {
        if (block.size() != static_cast<std::size_t>(seed.k())) {
            throw std::invalid_argument("information block has the wrong size");
        }
    }
    const auto packed = pack_blocks(info, seed.space().bits());
    return min_weight_over_stabilizers(table, pack_memory(seed, memory), packed, include_final_memory);
}

std::uint64_t achievable_weight_mask(const StepTable& table, std::uint32_t memory, std::span<const std::uint64_t> info,
                                     int d_max, bool include_final_memory) {
    if (d_max < 0 || d_max > 63) {
        throw std::invalid_argument("d_max must be in [0, 63]");
    }
    const std::uint64_t keep = d_max == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (d_max + 1)) - 1;
    const std::uint32_t states = table.state_count();
    std::vector<std::uint64_t> cur(states, 0);
    std::vector<std::uint64_t> next(states, 0);
    cur[memory] = 1;
    for (std::uint64_t block : info) {
        const std::uint64_t img = table.info_image(block);
        std::fill(next.begin(), next.end(), 0);
        for (std::uint32_t st = 0; st < states; ++st) {
            if (cur[st] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < table.stab_count(); ++j) {
                const std::uint64_t out = table.step(st, img, j);
                const int w = table.physical_weight(out);
                next[table.next_state(out)] |= (cur[st] << w) & keep;
            }
        }
        cur.swap(next);
    }
    std::uint64_t result = 0;
    for (std::uint32_t st = 0; st < states; ++st) {
        const int w = include_final_memory ? table.memory_weight(st) : 0;
        result |= (cur[st] << w) & keep;
    }
    return result;
}

std::vector<int> achievable_weights(const SeedMorphism& seed, std::span<const Letter> memory,
                                    std::span<const std::vector<Letter>> info, int d_max, bool include_final_memory) {
    const StepTable table(seed);
    for (const auto& block : info) {
        if (block.size() != static_cast<std::size_t>(seed.k())) {
            throw std::invalid_argument("information block has the wrong size");
        }
    }
    const auto packed = pack_blocks(info, seed.space().bits());
    std::uint64_t mask =
        achievable_weight_mask(table, pack_memory(seed, memory), packed, d_max, include_final_memory);
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace turbolab
