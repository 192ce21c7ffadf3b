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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "turbolab/gf2.hpp"
#include "turbolab/letters.hpp"

using namespace turbolab;

namespace {

TEST(BitMatrix, StringsRoundTrip) {
    const std::vector<std::string> rows{"101", "011", "110"};
    const BitMatrix m = BitMatrix::from_strings(rows);
    EXPECT_EQ(m.to_strings(), rows);
    EXPECT_TRUE(m.get(0, 0));
    EXPECT_FALSE(m.get(0, 1));
}

TEST(BitMatrix, ApplyMatchesStringOracle) {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t side = 1 + rng.uniform_below(12);
        const BitMatrix m = testsupport::random_invertible(side, rng);
        const std::uint64_t x = rng.next() & ((std::uint64_t{1} << side) - 1);
        oracle::Ints bits(side);
        for (std::size_t i = 0; i < side; ++i) {
            bits[i] = static_cast<int>((x >> i) & 1);
        }
        const oracle::Ints expect = oracle::mat_apply(m.to_strings(), bits);
        const std::uint64_t got = m.apply(x);
        for (std::size_t r = 0; r < side; ++r) {
            ASSERT_EQ(static_cast<int>((got >> r) & 1), expect[r]);
        }
    }
}

TEST(BitMatrix, InverseAndRank) {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t side = 1 + rng.uniform_below(20);
        const BitMatrix m = testsupport::random_invertible(side, rng);
        const auto inv = m.inverse();
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(m * *inv, BitMatrix::identity(side));
        EXPECT_EQ(*inv * m, BitMatrix::identity(side));
        EXPECT_EQ(m.rank(), side);
    }
    const BitMatrix singular = BitMatrix::from_strings(std::vector<std::string>{"11", "11"});
    EXPECT_EQ(singular.rank(), 1u);
    EXPECT_FALSE(singular.inverse().has_value());
}

TEST(BitMatrix, RejectsRaggedRows) {
    EXPECT_THROW(BitMatrix::from_strings(std::vector<std::string>{"10", "1"}), std::invalid_argument);
    EXPECT_THROW(BitMatrix::from_strings(std::vector<std::string>{"10", "1x"}), std::invalid_argument);
}

TEST(BitMatrix, TransposeIsInvolution) {
    Rng rng(9);
    const BitMatrix m = testsupport::random_invertible(7, rng);
    EXPECT_EQ(m.transpose().transpose(), m);
    EXPECT_EQ(m.transpose().get(2, 5), m.get(5, 2));
}

TEST(Span, ElementsFollowBinaryCounter) {
    const std::vector<std::uint64_t> basis{0b001, 0b110};
    EXPECT_EQ(span_elements(basis), (std::vector<std::uint64_t>{0, 0b001, 0b110, 0b111}));
    EXPECT_EQ(rank_of(std::vector<std::uint64_t>{1, 2, 3}), 2u);
}

TEST(Letters, QuantumLayout) {
    const LetterSpace q = LetterSpace::quantum();
    EXPECT_EQ(q.bits(), 2);
    EXPECT_EQ(q.size(), 4u);
    EXPECT_TRUE(q.in_z(0));
    EXPECT_TRUE(q.in_z(2));
    EXPECT_FALSE(q.in_z(1));
    EXPECT_FALSE(q.in_z(3));
    EXPECT_EQ(q.format_word(Letters{0, 1, 2, 3}), "IXZY");
    EXPECT_EQ(q.parse_word("IXZY"), (Letters{0, 1, 2, 3}));
    EXPECT_EQ(q.bit_string(1), "10");
    EXPECT_EQ(q.parse_bit_string("01"), 2u);
}

TEST(Letters, ClassicalLayout) {
    const LetterSpace c = LetterSpace::classical();
    EXPECT_EQ(c.z_size(), 1u);
    EXPECT_EQ(c.parse_word("0110"), (Letters{0, 1, 1, 0}));
    EXPECT_EQ(c.format_word(Letters{1, 0}), "10");
}

TEST(Letters, RejectsWholeSpaceAsZ) {
    EXPECT_THROW(LetterSpace(1, {1}), std::invalid_argument);
    EXPECT_THROW(LetterSpace(2, {1, 1}), std::invalid_argument);
    EXPECT_THROW(LetterSpace(2, {4}), std::invalid_argument);
}

TEST(Letters, WeightsAndSegments) {
    const LetterSpace q = LetterSpace::quantum();
    EXPECT_EQ(weight(Letters{0, 3, 0, 2}), 2u);
    Word w{Letters{1, 2, 3, 0}, {Role::information, Role::stabilizer, Role::stabilizer, Role::physical}};
    const SegmentWeights s = segment_weights(q, w);
    EXPECT_EQ(s.information, 1u);
    EXPECT_EQ(s.stabilizer, 2u);
    EXPECT_EQ(s.detected, 1u);
    EXPECT_EQ(s.physical, 0u);
    Word bad{Letters{1, 2}, {Role::information}};
    EXPECT_THROW(segment_weights(q, bad), std::invalid_argument);
}

TEST(Letters, PackingRoundTrip) {
    Rng rng(1);
    for (int bits = 1; bits <= 3; ++bits) {
        for (int t = 0; t < 50; ++t) {
            const std::size_t count = 1 + rng.uniform_below(static_cast<std::uint64_t>(64 / bits));
            Letters w(count);
            for (auto& x : w) {
                x = static_cast<Letter>(rng.uniform_below(std::uint64_t{1} << bits));
            }
            const std::uint64_t packed = pack_letters(w, bits);
            EXPECT_EQ(unpack_letters(packed, count, bits), w);
            EXPECT_EQ(packed_weight(packed, bits, letter_lsb_mask(bits, count)), static_cast<int>(weight(w)));
        }
    }
}

TEST(Letters, PackedWordMatchesLetters) {
    Rng rng(2);
    PackedWord a(100, 3);
    PackedWord b(100, 3);
    Letters la(100);
    Letters lb(100);
    for (std::size_t i = 0; i < 100; ++i) {
        la[i] = static_cast<Letter>(rng.uniform_below(8));
        lb[i] = static_cast<Letter>(rng.uniform_below(8));
        a.set(i, la[i]);
        b.set(i, lb[i]);
    }
    EXPECT_EQ(a.letters(), la);
    a.xor_with(b);
    Letters x(100);
    for (std::size_t i = 0; i < 100; ++i) {
        x[i] = la[i] ^ lb[i];
    }
    EXPECT_EQ(a.letters(), x);
    EXPECT_EQ(a.weight(), static_cast<int>(weight(x)));
}

TEST(Letters, AutomorphismGroupOrders) {
    EXPECT_EQ(automorphism_group(LetterSpace::classical()).size(), 1u);
    EXPECT_EQ(automorphism_group(LetterSpace::quantum()).size(), 6u);
    EXPECT_EQ(automorphism_group(LetterSpace(3, {1})).size(), 168u);
    for (const auto& a : automorphism_group(LetterSpace::quantum())) {
        const LetterAutomorphism inv = a.inverse();
        for (Letter x = 0; x < 4; ++x) {
            EXPECT_EQ(inv(a(x)), x);
        }
        EXPECT_EQ(a(0), 0u);
    }
}

}  // namespace
