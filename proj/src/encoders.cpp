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

#include "turbolab/encoders.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace turbolab {

namespace {

std::uint64_t swap_xz(std::uint64_t v) {
    constexpr std::uint64_t kLow = 0x5555555555555555ULL;
    return ((v & kLow) << 1) | ((v >> 1) & kLow);
}

std::size_t side(const LetterSpace& space, int letters) {
    return static_cast<std::size_t>(letters) * static_cast<std::size_t>(space.bits());
}

Letters concat(std::span<const Letter> a, std::span<const Letter> b, std::span<const Letter> c) {
    Letters out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

}  // namespace

bool is_symplectic(const BitMatrix& matrix) {
    if (!matrix.is_square() || matrix.cols() % 2 != 0) {
        return false;
    }
    const std::size_t dim = matrix.cols();
    std::vector<std::uint64_t> images(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        images[c] = matrix.column(c);
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const bool before = parity((std::uint64_t{1} << i) & swap_xz(std::uint64_t{1} << j));
            const bool after = parity(images[i] & swap_xz(images[j]));
            if (before != after) {
                return false;
            }
        }
    }
    return true;
}

BlockEncoder BlockEncoder::make(LetterSpace space, int n, int k, BitMatrix matrix, bool require_symplectic) {
    if (k < 0 || n < k || n < 1) {
        throw std::invalid_argument("block encoder requires n >= k >= 0 and n >= 1");
    }
    const std::size_t dim = side(space, n);
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("block encoder matrix must be " + std::to_string(dim) + "x" +
                                    std::to_string(dim));
    }
    auto inverse = matrix.inverse();
    if (!inverse) {
        throw std::invalid_argument("encoder matrix is not an isomorphism (singular)");
    }
    if (require_symplectic) {
        if (!space.is_pauli_layout()) {
            throw std::invalid_argument("symplectic validation needs the Pauli letter layout");
        }
        if (!is_symplectic(matrix)) {
            throw std::invalid_argument("encoder matrix is not symplectic");
        }
    }
    return BlockEncoder(std::move(space), n, k, std::move(matrix), std::move(*inverse));
}

Letters BlockEncoder::apply(std::span<const Letter> input) const {
    if (input.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("block encoder input must have n letters");
    }
    const int b = space_.bits();
    return unpack_letters(matrix_.apply(pack_letters(input, b)), static_cast<std::size_t>(n_), b);
}

Letters BlockEncoder::invert(std::span<const Letter> physical) const {
    if (physical.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("block encoder output must have n letters");
    }
    const int b = space_.bits();
    return unpack_letters(inverse_.apply(pack_letters(physical, b)), static_cast<std::size_t>(n_), b);
}

std::vector<std::uint64_t> BlockEncoder::undetected_input_basis() const {
    const int b = space_.bits();
    std::vector<std::uint64_t> basis;
    for (int bit = 0; bit < k_ * b; ++bit) {
        basis.push_back(std::uint64_t{1} << bit);
    }
    for (int pos = k_; pos < n_; ++pos) {
        for (Letter z : space_.z_basis()) {
            basis.push_back(static_cast<std::uint64_t>(z) << (pos * b));
        }
    }
    return basis;
}

SeedMorphism SeedMorphism::make_encoder(LetterSpace space, int n, int k, int m, BitMatrix matrix,
                                        bool require_symplectic) {
    if (k < 0 || n < k || m < 0 || n < 1) {
        throw std::invalid_argument("seed encoder requires n >= k >= 0, n >= 1, m >= 0");
    }
    const std::size_t dim = side(space, n + m);
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("seed encoder matrix must be " + std::to_string(dim) + "x" +
                                    std::to_string(dim));
    }
    auto inverse = matrix.inverse();
    if (!inverse) {
        throw std::invalid_argument("encoder matrix is not an isomorphism (singular)");
    }
    if (require_symplectic) {
        if (!space.is_pauli_layout()) {
            throw std::invalid_argument("symplectic validation needs the Pauli letter layout");
        }
        if (!is_symplectic(matrix)) {
            throw std::invalid_argument("encoder matrix is not symplectic");
        }
    }
    return SeedMorphism(std::move(space), n, k, n - k, m, std::move(matrix), MorphismKind::encoder,
                        std::move(inverse));
}

SeedMorphism SeedMorphism::make_generic(LetterSpace space, int n, int k, int s, int m, BitMatrix matrix,
                                        MorphismKind kind) {
    if (n < 0 || k < 0 || s < 0 || m < 0) {
        throw std::invalid_argument("morphism sizes must be nonnegative");
    }
    if (matrix.rows() != side(space, n + m) || matrix.cols() != side(space, m + k + s)) {
        throw std::invalid_argument("morphism matrix has the wrong shape");
    }
    if (kind == MorphismKind::encoder) {
        return make_encoder(std::move(space), n, k, m, std::move(matrix));
    }
    if (kind == MorphismKind::truncated_decoder && s != 0) {
        throw std::invalid_argument("a truncated decoder has no stabilizer inputs");
    }
    return SeedMorphism(std::move(space), n, k, s, m, std::move(matrix), kind, std::nullopt);
}

std::pair<Letters, Letters> SeedMorphism::step(std::span<const Letter> memory, std::span<const Letter> info,
                                               std::span<const Letter> stab) const {
    if (memory.size() != static_cast<std::size_t>(m_) || info.size() != static_cast<std::size_t>(k_) ||
        stab.size() != static_cast<std::size_t>(s_)) {
        throw std::invalid_argument("seed step input has the wrong block sizes");
    }
    const Letters out = apply(concat(memory, info, stab));
    return {Letters(out.begin(), out.begin() + n_), Letters(out.begin() + n_, out.end())};
}

Letters SeedMorphism::apply(std::span<const Letter> input) const {
    if (input.size() != static_cast<std::size_t>(input_letters())) {
        throw std::invalid_argument("seed input length mismatch");
    }
    const int b = space_.bits();
    return unpack_letters(matrix_.apply(pack_letters(input, b)), static_cast<std::size_t>(output_letters()), b);
}

Letters SeedMorphism::invert(std::span<const Letter> output) const {
    if (!inverse_) {
        throw std::invalid_argument("only encoders can be inverted");
    }
    if (output.size() != static_cast<std::size_t>(output_letters())) {
        throw std::invalid_argument("seed output length mismatch");
    }
    const int b = space_.bits();
    return unpack_letters(inverse_->apply(pack_letters(output, b)), static_cast<std::size_t>(input_letters()), b);
}

SeedMorphism truncated_decoder(const SeedMorphism& encoder) {
    if (encoder.kind() != MorphismKind::encoder) {
        throw std::invalid_argument("truncated_decoder requires an encoder");
    }
    const BitMatrix& inv = *encoder.inverse_matrix();
    const std::size_t b = static_cast<std::size_t>(encoder.space().bits());
    const std::size_t mb = b * static_cast<std::size_t>(encoder.m());
    const std::size_t kb = b * static_cast<std::size_t>(encoder.k());
    const std::size_t nb = b * static_cast<std::size_t>(encoder.n());

    // Rows of C^-1 are (M | L | S); keep L then M. Columns of C^-1 are
    // (P | M'); reorder them to (M' | P).
    BitMatrix out(kb + mb, mb + nb);
    for (std::size_t r = 0; r < kb + mb; ++r) {
        const std::size_t src_row = r < kb ? mb + r : r - kb;
        for (std::size_t c = 0; c < mb + nb; ++c) {
            const std::size_t src_col = c < mb ? nb + c : c - mb;
            out.set(r, c, inv.get(src_row, src_col));
        }
    }
    return SeedMorphism::make_generic(encoder.space(), encoder.k(), encoder.n(), 0, encoder.m(), std::move(out),
                                      MorphismKind::truncated_decoder);
}

DistancePair distances(const BlockEncoder& encoder, std::uint64_t budget) {
    const auto basis = encoder.undetected_input_basis();
    const std::size_t dim = basis.size();
    if (dim >= 63 || (std::uint64_t{1} << dim) > budget) {
        throw std::length_error("distance enumeration exceeds budget");
    }
    const int b = encoder.space().bits();
    const std::uint64_t lsb = letter_lsb_mask(b, static_cast<std::size_t>(encoder.n()));
    std::vector<std::uint64_t> images(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        images[i] = encoder.apply_bits(basis[i]);
    }
    // Information generators come first, so the input is harmful iff the
    // Gray code has any of its low `info` bits set.
    const std::uint64_t info_mask = (std::uint64_t{1} << encoder.information_generator_count()) - 1;
    DistancePair out;
    std::uint64_t image = 0;
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t i = 1; i < total; ++i) {
        image ^= images[static_cast<std::size_t>(std::countr_zero(i))];
        const std::uint64_t gray = i ^ (i >> 1);
        const int w = packed_weight(image, b, lsb);
        if (!out.d_q || w < *out.d_q) {
            out.d_q = w;
        }
        if ((gray & info_mask) != 0 && (!out.d_c || w < *out.d_c)) {
            out.d_c = w;
        }
    }
    return out;
}

Letters blockwise_apply(const BlockEncoder& encoder, int blocks, std::span<const Letter> info_seq,
                        std::span<const Letter> stab_seq) {
    const auto k = static_cast<std::size_t>(encoder.k());
    const auto s = static_cast<std::size_t>(encoder.n() - encoder.k());
    const auto count = static_cast<std::size_t>(blocks);
    if (blocks < 0 || info_seq.size() != count * k || stab_seq.size() != count * s) {
        throw std::invalid_argument("blockwise input sizes do not match the block count");
    }
    Letters out;
    out.reserve(count * static_cast<std::size_t>(encoder.n()));
    for (std::size_t i = 0; i < count; ++i) {
        const Letters block = concat(info_seq.subspan(i * k, k), stab_seq.subspan(i * s, s), {});
        const Letters p = encoder.apply(block);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

BitMatrix random_symplectic(std::size_t dim, Rng& rng, int rounds) {
    if (dim == 0 || dim % 2 != 0 || dim > 64) {
        throw std::invalid_argument("symplectic dimension must be even and at most 64");
    }
    if (rounds <= 0) {
        rounds = static_cast<int>(4 * dim + 8);
    }
    const std::uint64_t full = dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
    BitMatrix out = BitMatrix::identity(dim);
    for (int r = 0; r < rounds; ++r) {
        const std::uint64_t v = rng.next() & full;
        if (v == 0) {
            continue;
        }
        const std::uint64_t dual = swap_xz(v);
        // Left-multiply by the transvection: each column c maps to c + <c,v> v.
        for (std::size_t c = 0; c < dim; ++c) {
            const std::uint64_t col = out.column(c);
            if (parity(col & dual)) {
                const std::uint64_t next = col ^ v;
                for (std::size_t i = 0; i < dim; ++i) {
                    out.set(i, c, (next >> i) & 1);
                }
            }
        }
    }
    return out;
}

std::optional<BlockEncoder> search_quantum_encoder(int n, int k, int min_dq, std::uint64_t seed, int attempts) {
    const LetterSpace space = LetterSpace::quantum();
    Rng rng(seed);
    for (int a = 0; a < attempts; ++a) {
        BitMatrix mat = random_symplectic(static_cast<std::size_t>(2 * n), rng);
        const BlockEncoder enc = BlockEncoder::make(space, n, k, std::move(mat), true);
        const DistancePair d = distances(enc);
        if (d.d_q && *d.d_q >= min_dq) {
            return enc;
        }
    }
    return std::nullopt;
}

}  // namespace turbolab
