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

#ifndef TURBOLAB_LETTERS_HPP
#define TURBOLAB_LETTERS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turbolab/gf2.hpp"

namespace turbolab {

/// One letter of the error group, stored as a b-bit vector. Bit j of the
/// value is character j of the letter's bit-string form, so the quantum
/// letters are I=00 (0), X=10 (1), Z=01 (2), Y=11 (3).
using Letter = std::uint32_t;
using Letters = std::vector<Letter>;

/// Largest supported letter dimension.
inline constexpr int kMaxLetterBits = 8;

/// The error group as the binary vector space of dimension `bits`, together
/// with the strict subspace of undetected syndromes spanned by `z_basis`.
///
/// Immutable after construction.
class LetterSpace {
   public:
    /// Throws std::invalid_argument when the basis is dependent, has
    /// out-of-range vectors, or spans the whole space.
    LetterSpace(int bits, std::vector<Letter> z_basis);

    /// Bit flips: b = 1, undetected syndromes {0}.
    static LetterSpace classical();
    /// Quotient Pauli group {I, X, Z, Y} with undetected syndromes {I, Z}.
    static LetterSpace quantum();

    int bits() const { return bits_; }
    std::size_t size() const { return std::size_t{1} << bits_; }
    Letter mask() const { return static_cast<Letter>(size() - 1); }

    const std::vector<Letter>& z_basis() const { return z_basis_; }
    int z_rank() const { return static_cast<int>(z_basis_.size()); }
    std::size_t z_size() const { return z_elements_.size(); }
    /// Elements of the undetected-syndrome subspace; element 0 is the identity.
    const std::vector<Letter>& z_elements() const { return z_elements_; }
    bool in_z(Letter x) const { return in_z_[x & mask()] != 0; }

    Letter compose(Letter a, Letter b) const { return (a ^ b) & mask(); }

    /// Textual symbol of a letter: '0'/'1' classically, I/X/Z/Y for the
    /// quantum layout, a b-bit string otherwise.
    std::string symbol(Letter x) const;
    std::string format_word(std::span<const Letter> word) const;
    /// Inverse of format_word. Classical words also accept 'I'/'X';
    /// generic layouts use comma-separated bit strings.
    Letters parse_word(std::string_view text) const;

    /// b-bit string form, character j is bit j.
    std::string bit_string(Letter x) const;
    Letter parse_bit_string(std::string_view s) const;

    bool is_pauli_layout() const { return bits_ == 2 && z_basis_.size() == 1 && z_basis_[0] == 2; }

    bool operator==(const LetterSpace& other) const {
        return bits_ == other.bits_ && z_elements_ == other.z_elements_;
    }

   private:
    int bits_;
    std::vector<Letter> z_basis_;
    std::vector<Letter> z_elements_;
    std::vector<unsigned char> in_z_;
};

enum class Role : std::uint8_t { information, stabilizer, physical, memory };

/// A sequence of letters with an optional role for each position.
struct Word {
    Letters letters;
    std::vector<Role> roles;
};

/// Number of non-identity letters.
std::size_t weight(std::span<const Letter> word);

struct SegmentWeights {
    std::size_t information = 0;
    std::size_t stabilizer = 0;
    std::size_t physical = 0;
    std::size_t memory = 0;
    /// Stabilizer-role letters outside the undetected-syndrome subspace.
    std::size_t detected = 0;
};

/// Throws std::invalid_argument when roles are missing or mis-sized.
SegmentWeights segment_weights(const LetterSpace& space, const Word& word);

/// An invertible b x b matrix acting on single letters.
class LetterAutomorphism {
   public:
    explicit LetterAutomorphism(BitMatrix matrix);
    static LetterAutomorphism identity(int bits) { return LetterAutomorphism(BitMatrix::identity(bits)); }

    Letter operator()(Letter x) const { return table_[x]; }
    const BitMatrix& matrix() const { return matrix_; }
    LetterAutomorphism inverse() const;

    bool operator==(const LetterAutomorphism& other) const { return matrix_ == other.matrix_; }

   private:
    BitMatrix matrix_;
    std::vector<Letter> table_;
};

/// All invertible b x b matrices, in increasing order of their row words.
/// Brute force; requires b <= 3.
std::vector<LetterAutomorphism> automorphism_group(const LetterSpace& space);

// Bit-level layout: letter i of a word occupies bits [i*b, (i+1)*b).

std::uint64_t pack_letters(std::span<const Letter> word, int bits);
Letters unpack_letters(std::uint64_t packed, std::size_t count, int bits);

/// Mask with bit i*b set for every letter slot i fitting in a word.
std::uint64_t letter_lsb_mask(int bits, std::size_t count);

/// Number of non-identity letters in a packed word of `count` letters.
inline int packed_weight(std::uint64_t x, int bits, std::uint64_t lsb_mask) {
    std::uint64_t fold = x;
    for (int j = 1; j < bits; ++j) {
        fold |= x >> j;
    }
    return std::popcount(fold & lsb_mask);
}

/// Arbitrarily long word with letters packed 64/b to a machine word (letters
/// never straddle words).
class PackedWord {
   public:
    PackedWord() = default;
    PackedWord(std::size_t length, int bits);

    std::size_t length() const { return length_; }
    int bits() const { return bits_; }

    Letter get(std::size_t i) const;
    void set(std::size_t i, Letter x);

    void xor_with(const PackedWord& other);
    int weight() const;
    Letters letters() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }
    std::size_t letters_per_word() const { return per_word_; }

    bool operator==(const PackedWord& other) const = default;

   private:
    std::size_t length_ = 0;
    int bits_ = 1;
    std::size_t per_word_ = 64;
    std::vector<std::uint64_t> words_;
    std::uint64_t lsb_ = 0;
};

}  // namespace turbolab

#endif
