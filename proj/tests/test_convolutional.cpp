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

#include <climits>
#include <set>

#include "support.hpp"
#include "turbolab/convolutional.hpp"

using namespace turbolab;
using testsupport::ints;

namespace {

const char* const kSeeds[] = {"seed_R.json", "seed_F.json", "seed_SYS.json", "qseed_rec.json"};

std::vector<oracle::Ints> ints_blocks(const std::vector<Letters>& blocks) {
    std::vector<oracle::Ints> out;
    for (const auto& b : blocks) {
        out.push_back(ints(b));
    }
    return out;
}

TEST(Conv, ApplyMatchesOracle) {
    Rng rng(10);
    for (const char* file : kSeeds) {
        const SeedMorphism s = testsupport::load_seed(file);
        const oracle::Seed o = testsupport::to_oracle(s);
        for (int r = 0; r < 200; ++r) {
            const int N = 1 + static_cast<int>(rng.uniform_below(10));
            const ConvInput in = testsupport::random_input(rng, s, N, false, false);
            const ConvOutput out = conv_apply(s, in);
            oracle::Ints flat = ints(out.physical_word());
            flat.insert(flat.end(), out.final_memory.begin(), out.final_memory.end());
            ASSERT_EQ(flat, oracle::conv(o, ints(in.memory), ints_blocks(in.info), ints_blocks(in.stab))) << file;
            ASSERT_EQ(out.weight(), static_cast<std::size_t>(oracle::weight(flat)));
            ASSERT_EQ(out.memories.size(), static_cast<std::size_t>(N));
            ASSERT_EQ(out.memories.back(), out.final_memory);
            const auto [pi, mu] = pi_mu(s, in);
            EXPECT_EQ(pi, out.physical_word());
            EXPECT_EQ(mu, out.final_memory);
        }
    }
}

TEST(Conv, TruncatedDecodeRecoversEverything) {
    Rng rng(11);
    for (const char* file : {"seed_R.json", "seed_F.json", "seed_SYS.json", "qseed_rec.json"}) {
        const SeedMorphism s = testsupport::load_seed(file);
        for (int r = 0; r < 1000; ++r) {
            const int N = 1 + static_cast<int>(rng.uniform_below(12));
            const ConvInput in = testsupport::random_input(rng, s, N, false, false);
            const ConvOutput out = conv_apply(s, in);
            const TruncatedDecodeResult dec = conv_truncated_decode(s, out.final_memory, out.physical);
            ASSERT_EQ(dec.info, in.info) << file;
            ASSERT_EQ(dec.initial_memory, in.memory) << file;
            ASSERT_EQ(dec.memories.size(), static_cast<std::size_t>(N + 1));
            EXPECT_EQ(dec.memories.front(), in.memory);
            for (int i = 1; i <= N; ++i) {
                ASSERT_EQ(dec.memories[static_cast<std::size_t>(i)], out.memories[static_cast<std::size_t>(i - 1)]);
            }
            const ConvInput back = conv_invert(s, out.final_memory, out.physical);
            ASSERT_EQ(back.memory, in.memory);
            ASSERT_EQ(back.info, in.info);
            ASSERT_EQ(back.stab, in.stab);
        }
    }
}

TEST(Conv, RejectsMalformedBlocks) {
    const SeedMorphism s = testsupport::load_seed("seed_R.json");
    ConvInput in;
    in.memory = {0};
    in.info = {{1, 0}};
    in.stab = {{0}};
    EXPECT_THROW(conv_apply(s, in), std::invalid_argument);
}

// Oracle: minimum and achievable weight sets over every stabilizer sequence.
std::set<int> oracle_weights(const oracle::Seed& o, const oracle::Ints& M, const std::vector<oracle::Ints>& L,
                             bool final_memory) {
    std::set<int> ds;
    oracle::for_each_z_sequence(o, static_cast<int>(L.size()), [&](const std::vector<oracle::Ints>& S) {
        oracle::Ints out = oracle::conv(o, M, L, S);
        if (!final_memory) {
            out.resize(out.size() - static_cast<std::size_t>(o.m));
        }
        ds.insert(oracle::weight(out));
    });
    return ds;
}

TEST(Conv, StabilizerMinimizationMatchesOracle) {
    Rng rng(12);
    for (const char* file : {"qseed_rec.json", "seed_R.json", "seed_SYS.json"}) {
        const SeedMorphism s = testsupport::load_seed(file);
        const oracle::Seed o = testsupport::to_oracle(s);
        for (int r = 0; r < 150; ++r) {
            const int N = 1 + static_cast<int>(rng.uniform_below(6));
            const ConvInput in = testsupport::random_input(rng, s, N, false, true);
            for (bool fin : {true, false}) {
                const std::set<int> ds = oracle_weights(o, ints(in.memory), ints_blocks(in.info), fin);
                ASSERT_EQ(min_weight_over_stabilizers(s, in.memory, in.info, fin), *ds.begin()) << file;
                const std::vector<int> got = achievable_weights(s, in.memory, in.info, 40, fin);
                ASSERT_EQ(std::set<int>(got.begin(), got.end()), ds) << file;
            }
        }
    }
}

TEST(StepTable, SizesAndLimits) {
    const SeedMorphism q = testsupport::load_seed("qseed_rec.json");
    const StepTable und(q);
    EXPECT_EQ(und.state_count(), 16u);
    EXPECT_EQ(und.stab_count(), 2u);
    const StepTable all(q, StepTable::Stabilizers::all);
    EXPECT_EQ(all.stab_count(), 4u);
    const SeedMorphism big = SeedMorphism::make_encoder(LetterSpace::classical(), 1, 1, 21, BitMatrix::identity(22));
    EXPECT_THROW(StepTable{big}, std::length_error);
}

}  // namespace
