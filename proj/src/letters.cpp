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

#include "turbolab/letters.hpp"

#include <algorithm>
#include <stdexcept>

namespace turbolab {

LetterSpace::LetterSpace(int bits, std::vector<Letter> z_basis) : bits_(bits), z_basis_(std::move(z_basis)) {
    if (bits < 1 || bits > kMaxLetterBits) {
        throw std::invalid_argument("letter dimension must be in [1, 8]");
    }
    std::vector<std::uint64_t> vecs;
    for (Letter z : z_basis_) {
        if (z == 0 || z > mask()) {
            throw std::invalid_argument("undetected-syndrome basis vector out of range");
        }
        vecs.push_back(z);
    }
    if (rank_of(vecs) != vecs.size()) {
        throw std::invalid_argument("undetected-syndrome basis is linearly dependent");
    }
    if (static_cast<int>(vecs.size()) >= bits) {
        throw std::invalid_argument("undetected syndromes must form a strict subspace");
    }
    for (std::uint64_t e : span_elements(vecs)) {
        z_elements_.push_back(static_cast<Letter>(e));
    }
    in_z_.assign(size(), 0);
    for (Letter z : z_elements_) {
        in_z_[z] = 1;
    }
}

LetterSpace LetterSpace::classical() { return LetterSpace(1, {}); }

LetterSpace LetterSpace::quantum() { return LetterSpace(2, {2}); }

std::string LetterSpace::bit_string(Letter x) const {
    std::string s(static_cast<std::size_t>(bits_), '0');
    for (int j = 0; j < bits_; ++j) {
        if ((x >> j) & 1) {
            s[static_cast<std::size_t>(j)] = '1';
        }
    }
    return s;
}

Letter LetterSpace::parse_bit_string(std::string_view s) const {
    if (s.size() != static_cast<std::size_t>(bits_)) {
        throw std::invalid_argument("letter '" + std::string(s) + "' has wrong length");
    }
    Letter x = 0;
    for (int j = 0; j < bits_; ++j) {
        const char c = s[static_cast<std::size_t>(j)];
        if (c == '1') {
            x |= Letter{1} << j;
        } else if (c != '0') {
            throw std::invalid_argument("letter '" + std::string(s) + "' is not a bit string");
        }
    }
    return x;
}

std::string LetterSpace::symbol(Letter x) const {
    if (bits_ == 1) {
        return x ? "1" : "0";
    }
    if (is_pauli_layout()) {
        static constexpr char kPauli[4] = {'I', 'X', 'Z', 'Y'};
        return std::string(1, kPauli[x & 3]);
    }
    return bit_string(x);
}

std::string LetterSpace::format_word(std::span<const Letter> word) const {
    std::string out;
    const bool separated = bits_ != 1 && !is_pauli_layout();
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (separated && i > 0) {
            out += ',';
        }
        out += symbol(word[i]);
    }
    return out;
}

Letters LetterSpace::parse_word(std::string_view text) const {
    Letters out;
    if (bits_ == 1 || is_pauli_layout()) {
        for (char c : text) {
            if (bits_ == 1) {
                if (c == '0' || c == 'I') {
                    out.push_back(0);
                } else if (c == '1' || c == 'X') {
                    out.push_back(1);
                } else {
                    throw std::invalid_argument(std::string("invalid classical symbol '") + c + "'");
                }
            } else {
                switch (c) {
                    case 'I': out.push_back(0); break;
                    case 'X': out.push_back(1); break;
                    case 'Z': out.push_back(2); break;
                    case 'Y': out.push_back(3); break;
                    default: throw std::invalid_argument(std::string("invalid Pauli symbol '") + c + "'");
                }
            }
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_bit_string(text.substr(start, end - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::size_t weight(std::span<const Letter> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Letter x) { return x != 0; }));
}

SegmentWeights segment_weights(const LetterSpace& space, const Word& word) {
    if (word.roles.size() != word.letters.size()) {
        throw std::invalid_argument("segment_weights requires a role for every letter");
    }
    SegmentWeights out;
    for (std::size_t i = 0; i < word.letters.size(); ++i) {
        const Letter x = word.letters[i];
        if (x == 0) {
            continue;
        }
        switch (word.roles[i]) {
            case Role::information: ++out.information; break;
            case Role::stabilizer:
                ++out.stabilizer;
                if (!space.in_z(x)) {
                    ++out.detected;
                }
                break;
            case Role::physical: ++out.physical; break;
            case Role::memory: ++out.memory; break;
        }
    }
    return out;
}

LetterAutomorphism::LetterAutomorphism(BitMatrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_invertible() || matrix_.rows() > static_cast<std::size_t>(kMaxLetterBits)) {
        throw std::invalid_argument("letter automorphism must be an invertible b x b matrix");
    }
    table_.resize(std::size_t{1} << matrix_.rows());
    for (std::size_t x = 0; x < table_.size(); ++x) {
        table_[x] = static_cast<Letter>(matrix_.apply(x));
    }
}

LetterAutomorphism LetterAutomorphism::inverse() const { return LetterAutomorphism(*matrix_.inverse()); }

std::vector<LetterAutomorphism> automorphism_group(const LetterSpace& space) {
    const int b = space.bits();
    if (b > 3) {
        throw std::invalid_argument("automorphism enumeration supports b <= 3");
    }
    std::vector<LetterAutomorphism> out;
    const std::uint64_t per_row = std::uint64_t{1} << b;
    const std::uint64_t total = std::uint64_t{1} << (b * b);
    for (std::uint64_t code = 0; code < total; ++code) {
        BitMatrix m(static_cast<std::size_t>(b), static_cast<std::size_t>(b));
        std::uint64_t rest = code;
        for (int r = 0; r < b; ++r) {
            m.set_row(static_cast<std::size_t>(r), rest % per_row);
            rest /= per_row;
        }
        if (m.is_invertible()) {
            out.emplace_back(std::move(m));
        }
    }
    return out;
}

std::uint64_t pack_letters(std::span<const Letter> word, int bits) {
    if (word.size() * static_cast<std::size_t>(bits) > 64) {
        throw std::invalid_argument("word too long to pack into 64 bits");
    }
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        out |= static_cast<std::uint64_t>(word[i]) << (i * static_cast<std::size_t>(bits));
    }
    return out;
}

Letters unpack_letters(std::uint64_t packed, std::size_t count, int bits) {
    Letters out(count);
    const std::uint64_t m = (std::uint64_t{1} << bits) - 1;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Letter>((packed >> (i * static_cast<std::size_t>(bits))) & m);
    }
    return out;
}

std::uint64_t letter_lsb_mask(int bits, std::size_t count) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < count && i * static_cast<std::size_t>(bits) < 64; ++i) {
        out |= std::uint64_t{1} << (i * static_cast<std::size_t>(bits));
    }
    return out;
}

PackedWord::PackedWord(std::size_t length, int bits)
    : length_(length),
      bits_(bits),
      per_word_(64 / static_cast<std::size_t>(bits)),
      words_((length + per_word_ - 1) / per_word_, 0),
      lsb_(letter_lsb_mask(bits, per_word_)) {}

Letter PackedWord::get(std::size_t i) const {
    const std::size_t shift = (i % per_word_) * static_cast<std::size_t>(bits_);
    return static_cast<Letter>((words_[i / per_word_] >> shift) & ((std::uint64_t{1} << bits_) - 1));
}

void PackedWord::set(std::size_t i, Letter x) {
    const std::size_t shift = (i % per_word_) * static_cast<std::size_t>(bits_);
    const std::uint64_t m = ((std::uint64_t{1} << bits_) - 1) << shift;
    std::uint64_t& w = words_[i / per_word_];
    w = (w & ~m) | ((static_cast<std::uint64_t>(x) << shift) & m);
}

void PackedWord::xor_with(const PackedWord& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
}

int PackedWord::weight() const {
    int total = 0;
    for (std::uint64_t w : words_) {
        total += packed_weight(w, bits_, lsb_);
    }
    return total;
}

Letters PackedWord::letters() const {
    Letters out(length_);
    for (std::size_t i = 0; i < length_; ++i) {
        out[i] = get(i);
    }
    return out;
}

}  // namespace turbolab
