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

#ifndef TURBOLAB_ENCODERS_HPP
#define TURBOLAB_ENCODERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "turbolab/gf2.hpp"
#include "turbolab/letters.hpp"
#include "turbolab/rng.hpp"

namespace turbolab {

/// Default cap on the number of undetected inputs an exhaustive distance
/// search may visit.
inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;

/// Checks that `matrix` preserves the symplectic form of the Pauli layout
/// (letter bit 0 = X part, bit 1 = Z part), i.e. comes from a Clifford map.
bool is_symplectic(const BitMatrix& matrix);

/// An [[n,k]] block encoder: an invertible map from (L | S), k information
/// letters followed by n-k stabilizer letters, to n physical letters.
class BlockEncoder {
   public:
    /// Throws std::invalid_argument on dimension mismatch, a singular matrix
    /// ("not an isomorphism"), or, when requested, a non-symplectic matrix.
    static BlockEncoder make(LetterSpace space, int n, int k, BitMatrix matrix, bool require_symplectic = false);

    const LetterSpace& space() const { return space_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const BitMatrix& matrix() const { return matrix_; }
    const BitMatrix& inverse_matrix() const { return inverse_; }

    Letters apply(std::span<const Letter> input) const;
    Letters invert(std::span<const Letter> physical) const;

    std::uint64_t apply_bits(std::uint64_t input) const { return matrix_.apply(input); }
    std::uint64_t invert_bits(std::uint64_t physical) const { return inverse_.apply(physical); }

    /// Basis of the undetected input subspace P^k x Z^(n-k): the b*k
    /// information unit vectors first, then the undetected-syndrome basis at
    /// each stabilizer position. Input-bit layout.
    std::vector<std::uint64_t> undetected_input_basis() const;
    int information_generator_count() const { return k_ * space_.bits(); }

   private:
    BlockEncoder(LetterSpace space, int n, int k, BitMatrix matrix, BitMatrix inverse)
        : space_(std::move(space)), n_(n), k_(k), matrix_(std::move(matrix)), inverse_(std::move(inverse)) {}

    LetterSpace space_;
    int n_;
    int k_;
    BitMatrix matrix_;
    BitMatrix inverse_;
};

enum class MorphismKind { encoder, truncated_decoder, generic };

/// An [[n,k,s,m]] morphism: a linear map from (M | L | S) with m memory, k
/// information and s stabilizer letters to (P | M') with n physical and m
/// memory letters. Seed encoders are the invertible case with s = n - k.
class SeedMorphism {
   public:
    /// An [[n,k,m]] seed encoder. The matrix is square of side b(n+m).
    static SeedMorphism make_encoder(LetterSpace space, int n, int k, int m, BitMatrix matrix,
                                     bool require_symplectic = false);
    static SeedMorphism make_generic(LetterSpace space, int n, int k, int s, int m, BitMatrix matrix,
                                     MorphismKind kind = MorphismKind::generic);

    const LetterSpace& space() const { return space_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int s() const { return s_; }
    int m() const { return m_; }
    MorphismKind kind() const { return kind_; }
    const BitMatrix& matrix() const { return matrix_; }
    /// Present for kind() == encoder.
    const std::optional<BitMatrix>& inverse_matrix() const { return inverse_; }

    int input_letters() const { return m_ + k_ + s_; }
    int output_letters() const { return n_ + m_; }

    /// (M, L, S) -> (P, M').
    std::pair<Letters, Letters> step(std::span<const Letter> memory, std::span<const Letter> info,
                                     std::span<const Letter> stab) const;
    /// Full-word form of step: input (M | L | S), output (P | M').
    Letters apply(std::span<const Letter> input) const;
    /// Inverse of apply; encoders only.
    Letters invert(std::span<const Letter> output) const;

    std::uint64_t apply_bits(std::uint64_t input) const { return matrix_.apply(input); }

   private:
    SeedMorphism(LetterSpace space, int n, int k, int s, int m, BitMatrix matrix, MorphismKind kind,
                 std::optional<BitMatrix> inverse)
        : space_(std::move(space)),
          n_(n),
          k_(k),
          s_(s),
          m_(m),
          matrix_(std::move(matrix)),
          kind_(kind),
          inverse_(std::move(inverse)) {}

    LetterSpace space_;
    int n_;
    int k_;
    int s_;
    int m_;
    BitMatrix matrix_;
    MorphismKind kind_;
    std::optional<BitMatrix> inverse_;
};

/// The [[k,n,0,m]] morphism C̄ with C̄(M', P) = (L, M) whenever
/// C^-1(P, M') = (M, L, S). Throws unless `encoder` is an encoder.
SeedMorphism truncated_decoder(const SeedMorphism& encoder);

/// Minimum weights of harmful (d_c) and undetected (d_q) errors. An empty
/// optional means no such error exists (infinite distance).
struct DistancePair {
    std::optional<int> d_c;
    std::optional<int> d_q;
};

/// Exhaustive search over the undetected inputs. Throws std::length_error
/// when |P|^k |Z|^(n-k) exceeds `budget`.
DistancePair distances(const BlockEncoder& encoder, std::uint64_t budget = kDefaultDistanceBudget);

/// C(L_1,S_1) . ... . C(L_N,S_N) with L_seq = (L_1..L_N), S_seq = (S_1..S_N).
Letters blockwise_apply(const BlockEncoder& encoder, int blocks, std::span<const Letter> info_seq,
                        std::span<const Letter> stab_seq);

/// Product of `rounds` random symplectic transvections x -> x + <x,v> v on
/// dim = 2n bits, with the per-letter X/Z pairing of is_symplectic.
BitMatrix random_symplectic(std::size_t dim, Rng& rng, int rounds = 0);

/// First random symplectic [[n,k]] quantum encoder (in draw order) with
/// d_q >= min_dq, trying at most `attempts` draws from `seed`.
std::optional<BlockEncoder> search_quantum_encoder(int n, int k, int min_dq, std::uint64_t seed,
                                                   int attempts = 4096);

}  // namespace turbolab

#endif
