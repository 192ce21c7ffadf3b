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
#include "turbolab/classify.hpp"

using namespace turbolab;

namespace {

std::vector<int> library_m1(const MemoryClassification& c) {
    return std::vector<int>(c.in_m1.begin(), c.in_m1.end());
}

struct Shape {
    int b;
    int n;
    int k;
    int m;
};

// Every (b, m) with b*m <= 8 that keeps the oracle cheap.
const Shape kShapes[] = {{1, 2, 1, 1}, {1, 2, 1, 2}, {1, 2, 1, 3}, {1, 2, 1, 4}, {1, 3, 1, 2}, {1, 3, 2, 2},
                         {1, 2, 1, 6}, {1, 2, 1, 8}, {2, 2, 1, 1}, {2, 2, 1, 2}, {2, 1, 1, 3}, {2, 1, 1, 4}};

TEST(Classify, RandomSeedsAgreeWithSimulation) {
    Rng rng(2026);
    int recursive_seen = 0;
    for (const Shape& sh : kShapes) {
        for (int t = 0; t < 20; ++t) {
            const SeedMorphism s = testsupport::random_seed(sh.b, sh.n, sh.k, sh.m, rng);
            const oracle::Seed o = testsupport::to_oracle(s);
            const MemoryClassification c = classify(s);
            ASSERT_EQ(library_m1(c), oracle::m1_labels(o)) << "b=" << sh.b << " m=" << sh.m << " t=" << t;
            const std::vector<int> reach = oracle::reachable_from_zero(o);
            ASSERT_EQ(std::vector<int>(c.in_i.begin(), c.in_i.end()), reach);
            const bool rec = oracle::recursive(o);
            ASSERT_EQ(is_recursive(s).recursive, rec) << "b=" << sh.b << " m=" << sh.m << " t=" << t;
            recursive_seen += rec;
            const int eta = oracle::speed(o);
            ASSERT_EQ(c.eta().value_or(-1), eta);
        }
    }
    EXPECT_GT(recursive_seen, 0);
}

TEST(Classify, RecursionWitnessHasFiniteWeight) {
    Rng rng(31);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 30; ++t) {
        const SeedMorphism s = testsupport::random_seed(1, 2, 1, 2, rng);
        const RecursionVerdict v = is_recursive(s);
        if (v.recursive) {
            continue;
        }
        ASSERT_TRUE(v.witness.has_value());
        const RecursionWitness& w = *v.witness;
        // Replay: the impulse step and tail have the stated weight and end in a good state.
        ConvInput in;
        in.memory = w.memory;
        in.info.push_back(w.impulse);
        in.stab.push_back(w.impulse_stab);
        for (const auto& st : w.tail) {
            in.info.push_back(Letters(static_cast<std::size_t>(s.k()), 0));
            in.stab.push_back(st);
        }
        const ConvOutput out = conv_apply(s, in);
        EXPECT_EQ(static_cast<int>(weight(out.physical_word())), w.finite_weight);
        EXPECT_EQ(weight(w.impulse), 1u);
        const TransitionGraph g(s);
        const MemoryClassification c = classify(g);
        EXPECT_TRUE(c.good[pack_letters(out.final_memory, 1)]);
        ++checked;
    }
    EXPECT_GT(checked, 0);
}

TEST(Classify, ReferenceSeeds) {
    const SeedMorphism R = testsupport::load_seed("seed_R.json");
    const SeedMorphism F = testsupport::load_seed("seed_F.json");
    const SeedMorphism SYS = testsupport::load_seed("seed_SYS.json");
    EXPECT_TRUE(is_recursive(R).recursive);
    EXPECT_FALSE(is_recursive(F).recursive);
    EXPECT_TRUE(is_recursive(F).witness.has_value());
    EXPECT_TRUE(is_recursive(SYS).recursive);
    EXPECT_EQ(is_systematic(SYS).verdict, SystematicVerdict::structural_pass);
    EXPECT_EQ(is_systematic(R).verdict, SystematicVerdict::falsified);
    EXPECT_EQ(classify(R).eta(), 1);
    EXPECT_EQ(classify(SYS).eta(), 1);
    EXPECT_EQ(classify(F).count_m1(), 0u);
    EXPECT_FALSE(classify(F).eta().has_value());
    EXPECT_FALSE(is_totally_recursive(R).recursive);
    EXPECT_TRUE(is_totally_recursive(F).recursive);
}

TEST(Classify, QuantumRecursiveSeed) {
    const SeedMorphism q = testsupport::load_seed("qseed_rec.json");
    const MemoryClassification c = classify(q);
    EXPECT_TRUE(is_recursive(q).recursive);
    EXPECT_TRUE(is_totally_recursive(q).recursive);
    EXPECT_EQ(c.eta(), 2);
    EXPECT_EQ(c.count_m1(), 14u);
    EXPECT_EQ(c.count_m0() + c.count_m1(), 16u);
    EXPECT_EQ(oracle::speed(testsupport::to_oracle(q)), 2);
}

TEST(Classify, SystematicWitnessViolates) {
    const SystematicReport r = is_systematic(testsupport::load_seed("seed_R.json"));
    ASSERT_TRUE(r.witness.has_value());
    std::size_t info = 0;
    for (const auto& b : r.witness->info) {
        info += weight(b);
    }
    const ConvOutput out = conv_apply(testsupport::load_seed("seed_R.json"), *r.witness);
    EXPECT_LT(out.weight(), info);
    EXPECT_EQ(static_cast<int>(info - out.weight()), r.witness_deficit);
}

TEST(Speed, WindowPropertyOnCorpusSeeds) {
    for (const char* file : {"seed_R.json", "seed_SYS.json", "qseed_rec.json"}) {
        const SeedMorphism s = testsupport::load_seed(file);
        const TransitionGraph g(s);
        const MemoryClassification c = classify(g);
        ASSERT_TRUE(c.speed.has_value());
        const int eta = c.speed->eta;
        const oracle::Seed o = testsupport::to_oracle(s);
        // Every stabilizer sequence of length eta from M1 emits something.
        for (std::uint32_t q = 0; q < g.state_count(); ++q) {
            if (!c.is_m1(q)) {
                continue;
            }
            const std::vector<oracle::Ints> zeros(static_cast<std::size_t>(eta), oracle::Ints(1, 0));
            oracle::for_each_z_sequence(o, eta, [&](const std::vector<oracle::Ints>& S) {
                std::vector<oracle::Ints> L(static_cast<std::size_t>(eta), oracle::Ints(static_cast<std::size_t>(o.k), 0));
                oracle::Ints out = oracle::conv(o, o.memory_of(static_cast<int>(q)), L, S);
                out.resize(out.size() - static_cast<std::size_t>(o.m));
                EXPECT_GE(oracle::weight(out), 1) << file;
            });
        }
        // The witness has length eta - 1 and stays silent.
        const SpeedWitness& w = *c.speed;
        ASSERT_EQ(w.choices.size(), static_cast<std::size_t>(eta - 1));
        std::uint32_t st = w.start;
        EXPECT_TRUE(c.is_m1(st));
        for (std::size_t ch : w.choices) {
            EXPECT_EQ(g.weight(st, ch), 0);
            st = g.target(st, ch);
        }
    }
}

TEST(Classify, DotOutputMentionsEveryState) {
    const SeedMorphism s = testsupport::load_seed("seed_R.json");
    const TransitionGraph g(s);
    const std::string dot = to_dot(g, classify(g));
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("box"), std::string::npos);
}

}  // namespace
