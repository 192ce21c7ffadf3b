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

#include "support.hpp"
#include "turbolab/encoders.hpp"

using namespace turbolab;
using testsupport::ints;

namespace {

const char* const kBlocks[] = {"rep3.json", "cnot.json", "quantum_4_1.json", "quantum_5_1.json"};

TEST(BlockEncoder, ExhaustiveRoundTripOnCorpus) {
    for (const char* file : kBlocks) {
        const BlockEncoder e = testsupport::load_block(file);
        const int bits = e.space().bits() * e.n();
        ASSERT_LE(bits, 16) << file;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x) {
            const Letters in = unpack_letters(x, static_cast<std::size_t>(e.n()), e.space().bits());
            const Letters out = e.apply(in);
            ASSERT_EQ(e.invert(out), in) << file;
            ASSERT_EQ(ints(out), oracle::apply_letters(e.matrix().to_strings(), e.space().bits(), ints(in)));
        }
    }
}

TEST(BlockEncoder, DistancesMatchOracle) {
    for (const char* file : kBlocks) {
        const BlockEncoder e = testsupport::load_block(file);
        const DistancePair d = distances(e);
        const auto [dc, dq] = oracle::distances(testsupport::to_oracle(e));
        EXPECT_EQ(d.d_c.value_or(-1), dc) << file;
        EXPECT_EQ(d.d_q.value_or(-1), dq) << file;
        EXPECT_LE(*d.d_q, *d.d_c) << file;
    }
}

TEST(BlockEncoder, KnownDistances) {
    EXPECT_EQ(*distances(testsupport::load_block("rep3.json")).d_c, 3);
    const DistancePair cnot = distances(testsupport::load_block("cnot.json"));
    EXPECT_EQ(*cnot.d_c, 1);
    EXPECT_EQ(*cnot.d_q, 1);
    const DistancePair five = distances(testsupport::load_block("quantum_5_1.json"));
    EXPECT_EQ(*five.d_c, 3);
    EXPECT_EQ(*five.d_q, 3);
}

TEST(BlockEncoder, RandomQuantumDistancesMatchOracle) {
    Rng rng(77);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform_below(3));
        const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - 1)));
        const BlockEncoder e = BlockEncoder::make(LetterSpace::quantum(), n, k,
                                                  random_symplectic(static_cast<std::size_t>(2 * n), rng), true);
        const DistancePair d = distances(e);
        const auto [dc, dq] = oracle::distances(testsupport::to_oracle(e));
        EXPECT_EQ(d.d_c.value_or(-1), dc);
        EXPECT_EQ(d.d_q.value_or(-1), dq);
    }
}

TEST(BlockEncoder, RejectsBadMatrices) {
    const BitMatrix singular = BitMatrix::from_strings(std::vector<std::string>{"11", "11"});
    EXPECT_THROW(BlockEncoder::make(LetterSpace::classical(), 2, 1, singular), std::invalid_argument);
    EXPECT_THROW(BlockEncoder::make(LetterSpace::classical(), 3, 1, BitMatrix::identity(2)), std::invalid_argument);
    // X <-> X+Z on one qubit keeps the form; swapping X of one qubit with Z of another does not.
    const BitMatrix bad = BitMatrix::from_strings(std::vector<std::string>{"0010", "0100", "1000", "0001"});
    EXPECT_FALSE(is_symplectic(bad));
    EXPECT_THROW(BlockEncoder::make(LetterSpace::quantum(), 2, 1, bad, true), std::invalid_argument);
}

TEST(BlockEncoder, DistanceBudget) {
    const BlockEncoder e = testsupport::load_block("quantum_5_1.json");
    EXPECT_THROW(distances(e, 4), std::length_error);
}

TEST(Symplectic, RandomDrawsPreserveForm) {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const std::size_t dim = 2 * (1 + rng.uniform_below(5));
        const BitMatrix m = random_symplectic(dim, rng);
        EXPECT_TRUE(is_symplectic(m));
        EXPECT_TRUE(m.is_invertible());
    }
}

TEST(Symplectic, SearchReproducesCorpusEncoders) {
    const auto four = search_quantum_encoder(4, 1, 2, 2026, 20000);
    ASSERT_TRUE(four.has_value());
    EXPECT_EQ(four->matrix(), testsupport::load_block("quantum_4_1.json").matrix());
    const auto five = search_quantum_encoder(5, 1, 3, 2026, 20000);
    ASSERT_TRUE(five.has_value());
    EXPECT_EQ(five->matrix(), testsupport::load_block("quantum_5_1.json").matrix());
}

TEST(BlockEncoder, BlockwiseApplyConcatenates) {
    const BlockEncoder e = testsupport::load_block("cnot.json");
    const Letters info{1, 3, 2};
    const Letters stab{2, 0, 2};
    const Letters out = blockwise_apply(e, 3, info, stab);
    ASSERT_EQ(out.size(), 6u);
    for (int i = 0; i < 3; ++i) {
        const Letters blk = e.apply(Letters{info[static_cast<std::size_t>(i)], stab[static_cast<std::size_t>(i)]});
        EXPECT_EQ(out[static_cast<std::size_t>(2 * i)], blk[0]);
        EXPECT_EQ(out[static_cast<std::size_t>(2 * i + 1)], blk[1]);
    }
}

TEST(SeedMorphism, TruncatedDecoderInvertsEncoder) {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
        const SeedMorphism s = testsupport::random_seed(2, 2, 1, 1, rng);
        const SeedMorphism dec = truncated_decoder(s);
        EXPECT_EQ(dec.kind(), MorphismKind::truncated_decoder);
        EXPECT_EQ(dec.k(), s.n());
        EXPECT_EQ(dec.n(), s.k());
        EXPECT_EQ(dec.s(), 0);
        for (int r = 0; r < 50; ++r) {
            const Letters M = testsupport::random_letters(rng, 1, s.space(), false);
            const Letters L = testsupport::random_letters(rng, 1, s.space(), false);
            const Letters S = testsupport::random_letters(rng, 1, s.space(), false);
            const auto [P, Mp] = s.step(M, L, S);
            const auto [Lr, Mr] = dec.step(Mp, P, Letters{});
            EXPECT_EQ(Lr, L);
            EXPECT_EQ(Mr, M);
        }
    }
    const SeedMorphism generic = SeedMorphism::make_generic(LetterSpace::classical(), 1, 1, 0, 1, BitMatrix::identity(2));
    EXPECT_THROW(truncated_decoder(generic), std::invalid_argument);
}

TEST(SeedMorphism, StepMatchesOracle) {
    for (const char* file : {"seed_R.json", "seed_F.json", "seed_SYS.json", "qseed_rec.json"}) {
        const SeedMorphism s = testsupport::load_seed(file);
        const oracle::Seed o = testsupport::to_oracle(s);
        const int bits = s.space().bits() * s.input_letters();
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x) {
            const Letters in = unpack_letters(x, static_cast<std::size_t>(s.input_letters()), s.space().bits());
            const Letters out = s.apply(in);
            ASSERT_EQ(s.invert(out), in) << file;
            const Letters M(in.begin(), in.begin() + s.m());
            const Letters L(in.begin() + s.m(), in.begin() + s.m() + s.k());
            const Letters S(in.begin() + s.m() + s.k(), in.end());
            const auto [P, Mp] = o.step(ints(M), ints(L), ints(S));
            const auto [P2, Mp2] = s.step(M, L, S);
            ASSERT_EQ(ints(P2), P) << file;
            ASSERT_EQ(ints(Mp2), Mp) << file;
        }
    }
}

}  // namespace
