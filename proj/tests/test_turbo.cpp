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
#include <map>

#include "support.hpp"
#include "turbolab/parallel.hpp"
#include "turbolab/turbo.hpp"

using namespace turbolab;
using testsupport::ints;

namespace {

oracle::Turbo to_oracle(const TurboInstance& t) {
    oracle::Turbo o;
    o.outer = testsupport::to_oracle(t.outer());
    o.inner = testsupport::to_oracle(t.inner());
    o.N = t.N();
    o.N_in = t.N_in();
    o.perm.assign(t.interleaver().perm().begin(), t.interleaver().perm().end());
    for (const auto& a : t.interleaver().autos()) {
        o.autos.push_back(a.matrix().to_strings());
    }
    return o;
}

TurboInput random_turbo_input(Rng& rng, const TurboInstance& t, bool undetected) {
    const LetterSpace& sp = t.outer().space();
    return {testsupport::random_letters(rng, t.info_letters(), sp, false),
            testsupport::random_letters(rng, t.outer_stab_letters(), sp, undetected),
            testsupport::random_letters(rng, t.inner_stab_letters(), sp, undetected)};
}

TEST(Interleaver, ApplyInvertAndValidation) {
    Rng rng(1);
    const LetterSpace q = LetterSpace::quantum();
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng.uniform_below(20);
        const Interleaver pi = sample_interleaver(rng, n, q);
        const Letters w = testsupport::random_letters(rng, n, q, false);
        const Letters out = pi.apply(w);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(out[j], pi.autos()[j](w[pi.perm()[j]]));
        }
        EXPECT_EQ(pi.invert(out), w);
        EXPECT_EQ(weight(out), weight(w));
    }
    EXPECT_THROW(Interleaver({0, 0}, {LetterAutomorphism::identity(1), LetterAutomorphism::identity(1)}),
                 std::invalid_argument);
    EXPECT_THROW(Interleaver({0, 1}, {LetterAutomorphism::identity(1)}), std::invalid_argument);
    const Interleaver id = Interleaver::identity(4, 2);
    EXPECT_EQ(id.apply(Letters{1, 2, 3, 0}), (Letters{1, 2, 3, 0}));
}

TEST(Interleaver, PermutationsLookUniform) {
    Rng rng(2);
    std::map<std::vector<std::uint32_t>, int> counts;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
        ++counts[sample_interleaver(rng, 3, LetterSpace::classical()).perm()];
    }
    ASSERT_EQ(counts.size(), 6u);
    // Each cell has mean 10000 and sd below 100; 6 sd is a generous fixed band.
    for (const auto& [perm, c] : counts) {
        EXPECT_NEAR(c, draws / 6, 600);
    }
}

TEST(Interleaver, ZPreservingGroup) {
    const auto g = z_preserving_automorphisms(LetterSpace::quantum());
    EXPECT_EQ(g.size(), 2u);
    for (const auto& a : g) {
        EXPECT_EQ(a(2), 2u);
    }
    EXPECT_EQ(z_preserving_automorphisms(LetterSpace::classical()).size(), 1u);
}

TEST(Turbo, EligibleLengths) {
    const BlockEncoder rep = testsupport::load_block("rep3.json");
    const SeedMorphism R = testsupport::load_seed("seed_R.json");
    const auto e = eligible_lengths(rep, R, 1, 5);
    ASSERT_EQ(e.size(), 5u);
    for (const auto& x : e) {
        EXPECT_EQ(x.N_in, 3 * x.N - 1);
    }
    const auto q = eligible_lengths(testsupport::load_block("cnot.json"), testsupport::load_seed("qseed_rec.json"), 1, 4);
    ASSERT_EQ(q.size(), 3u);
    EXPECT_EQ(q[0].N, 2);
    EXPECT_EQ(q[0].N_in, 2);
    EXPECT_THROW(TurboInstance(rep, testsupport::load_seed("qseed_rec.json"), Interleaver::identity(6, 1), 2),
                 std::invalid_argument);
    EXPECT_THROW(TurboInstance(rep, R, Interleaver::identity(5, 1), 2), std::invalid_argument);
}

TEST(Turbo, SingleBlockExample) {
    const TurboInstance t(testsupport::load_block("rep3.json"), testsupport::load_seed("seed_R.json"),
                          Interleaver::identity(3, 1), 1);
    ASSERT_EQ(t.N_in(), 2);
    const TurboInput in{{1}, {0, 0}, {}};
    const Letters out = turbo_apply(t, in);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(ints(out), oracle::turbo_apply(to_oracle(t), {1}, {0, 0}, {}));
    EXPECT_EQ(turbo_decode(t, out), in);
}

TEST(Turbo, EncodeMatchesOracleAndDecodes) {
    Rng rng(3);
    const std::vector<std::pair<const char*, const char*>> pairs{
        {"rep3.json", "seed_R.json"}, {"rep3.json", "seed_SYS.json"}, {"cnot.json", "qseed_rec.json"},
        {"quantum_4_1.json", "qseed_rec.json"}};
    for (const auto& [outer_file, inner_file] : pairs) {
        const BlockEncoder outer = testsupport::load_block(outer_file);
        const SeedMorphism inner = testsupport::load_seed(inner_file);
        for (const auto& len : eligible_lengths(outer, inner, 1, 6)) {
            for (int r = 0; r < 20; ++r) {
                const TurboInstance t(outer, inner, sample_interleaver(rng, static_cast<std::size_t>(len.N * outer.n()),
                                                                       outer.space()),
                                      len.N);
                const TurboInput in = random_turbo_input(rng, t, false);
                const Letters out = turbo_apply(t, in);
                ASSERT_EQ(out.size(), t.output_letters());
                ASSERT_EQ(ints(out), oracle::turbo_apply(to_oracle(t), ints(in.info), ints(in.stab), ints(in.inner_stab)));
                ASSERT_EQ(turbo_decode(t, out), in);
                const TurboTrace tr = turbo_trace(t, in);
                EXPECT_EQ(tr.output, out);
                EXPECT_EQ(weight(tr.interleaved), weight(tr.outer_output));
            }
        }
    }
}

void expect_distance_matches(const TurboInstance& t, bool want_dq) {
    const TurboDistance d = turbo_distance_exact(t, want_dq);
    const auto [dc, dq] = oracle::turbo_distances(to_oracle(t));
    ASSERT_EQ(d.d_c.value_or(-1), dc);
    if (d.d_c) {
        EXPECT_GT(weight(d.witness_c.info), 0u);
        EXPECT_EQ(static_cast<int>(weight(turbo_apply(t, d.witness_c))), *d.d_c);
        for (Letter x : d.witness_c.inner_stab) {
            EXPECT_TRUE(t.inner().space().in_z(x));
        }
    }
    if (want_dq) {
        ASSERT_EQ(d.d_q.value_or(-1), dq);
        if (d.d_q) {
            EXPECT_EQ(static_cast<int>(weight(turbo_apply(t, d.witness_q))), *d.d_q);
        }
    }
}

TEST(TurboDistance, ClassicalMatchesEnumeration) {
    Rng rng(4);
    const BlockEncoder rep = testsupport::load_block("rep3.json");
    for (const char* inner_file : {"seed_R.json", "seed_SYS.json", "seed_F.json"}) {
        const SeedMorphism inner = testsupport::load_seed(inner_file);
        for (int N = 1; N <= 5; ++N) {
            for (int r = 0; r < 10; ++r) {
                const TurboInstance t(rep, inner, sample_interleaver(rng, static_cast<std::size_t>(3 * N), rep.space()), N);
                expect_distance_matches(t, true);
            }
        }
    }
}

TEST(TurboDistance, QuantumMatchesEnumeration) {
    Rng rng(5);
    const BlockEncoder cnot = testsupport::load_block("cnot.json");
    const SeedMorphism inner = testsupport::load_seed("qseed_rec.json");
    for (int N : {2, 3}) {
        for (int r = 0; r < 6; ++r) {
            const TurboInstance t(cnot, inner, sample_interleaver(rng, static_cast<std::size_t>(2 * N), cnot.space()), N);
            expect_distance_matches(t, true);
        }
    }
}

TEST(TurboDistance, BudgetIsEnforced) {
    const BlockEncoder rep = testsupport::load_block("rep3.json");
    const TurboInstance t(rep, testsupport::load_seed("seed_R.json"), Interleaver::identity(30, 1), 10);
    EXPECT_THROW(turbo_distance_exact(t, false, 100), std::length_error);
}

TEST(MonteCarlo, ParallelEqualsSerial) {
    const BlockEncoder rep = testsupport::load_block("rep3.json");
    const SeedMorphism sys = testsupport::load_seed("seed_SYS.json");
    McOptions opt;
    opt.trials = 40;
    opt.master_seed = 123;
    opt.want_dq = true;
    const auto serial = monte_carlo_distance_serial(rep, sys, 6, opt);
    for (int threads : {1, 3, 8}) {
        set_thread_override(threads);
        const auto par = monte_carlo_distance(rep, sys, 6, opt);
        ASSERT_EQ(par.size(), serial.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            EXPECT_EQ(par[i].trial, i);
            EXPECT_EQ(par[i].seed, serial[i].seed);
            EXPECT_EQ(par[i].d_c, serial[i].d_c);
            EXPECT_EQ(par[i].d_q, serial[i].d_q);
            EXPECT_EQ(par[i].witness, serial[i].witness);
        }
    }
    set_thread_override(0);
    // Trial i's interleaver is reproducible on its own.
    const Interleaver pi = trial_interleaver(rep, 6, 123, 7);
    const TurboInstance t(rep, sys, pi, 6);
    EXPECT_EQ(turbo_distance_exact(t).d_c, serial[7].d_c);
}

TEST(MonteCarlo, Summary) {
    std::vector<DistanceSample> s(4);
    s[0].d_c = 5;
    s[1].d_c = 3;
    s[2].d_c = 8;
    s[3].d_c = 4;
    const McSummary m = summarize(s, {3, 4, 10});
    EXPECT_EQ(m.trials, 4u);
    EXPECT_EQ(m.min, 3);
    EXPECT_EQ(m.max, 8);
    EXPECT_DOUBLE_EQ(*m.median, 4.5);
    ASSERT_EQ(m.below.size(), 3u);
    EXPECT_DOUBLE_EQ(m.below[0].second, 0.25);
    EXPECT_DOUBLE_EQ(m.below[1].second, 0.5);
    EXPECT_DOUBLE_EQ(m.below[2].second, 1.0);
    s.pop_back();
    EXPECT_DOUBLE_EQ(*summarize(s, {}).median, 5.0);
    EXPECT_FALSE(summarize({}, {}).median.has_value());
}

// Event oracle: some harmful outer input with outer-output weight w admits an
// inner stabilizer choice with total weight d (or <= d).
bool oracle_event(const oracle::Turbo& o, int w, int d, bool at_most) {
    bool hit = false;
    oracle::for_each_word(oracle::all_letters(o.outer.b), o.outer.k * o.N, [&](const oracle::Ints& L) {
        if (hit || oracle::weight(L) == 0) {
            return;
        }
        const oracle::Ints S(static_cast<std::size_t>((o.outer.n - o.outer.k) * o.N), 0);
        const oracle::Ints Sp(static_cast<std::size_t>(o.inner.s * o.N_in), 0);
        oracle::Ints E;
        for (int blk = 0; blk < o.N; ++blk) {
            const auto k = static_cast<std::size_t>(o.outer.k);
            const auto r = static_cast<std::size_t>(o.outer.n - o.outer.k);
            const oracle::Ints in = oracle::concat({oracle::slice(L, static_cast<std::size_t>(blk) * k, k),
                                                    oracle::slice(S, static_cast<std::size_t>(blk) * r, r)});
            const oracle::Ints out = oracle::apply_letters(o.outer.rows, o.outer.b, in);
            E.insert(E.end(), out.begin(), out.end());
        }
        if (oracle::weight(E) != w) {
            return;
        }
        const int got = oracle::weight(oracle::turbo_apply(o, L, S, Sp));
        hit = at_most ? got <= d : got == d;
    });
    return hit;
}

TEST(MonteCarlo, EmpiricalFrequencyMatchesEventOracle) {
    const BlockEncoder rep = testsupport::load_block("rep3.json");
    const SeedMorphism R = testsupport::load_seed("seed_R.json");
    const int N = 2;
    const std::uint64_t trials = 200;
    for (int w : {3, 6}) {
        for (int d = 0; d <= 6; ++d) {
            for (bool at_most : {false, true}) {
                std::uint64_t hits = 0;
                for (std::uint64_t i = 0; i < trials; ++i) {
                    const TurboInstance t(rep, R, trial_interleaver(rep, N, 77, i), N);
                    hits += oracle_event(to_oracle(t), w, d, at_most);
                }
                const EmpiricalP p = empirical_p(rep, R, N, w, d, trials, 77, at_most);
                EXPECT_EQ(p.hits, hits) << "w=" << w << " d=" << d;
            }
        }
    }
}

}  // namespace
