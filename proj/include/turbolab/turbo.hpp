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

#ifndef TURBOLAB_TURBO_HPP
#define TURBOLAB_TURBO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "turbolab/convolutional.hpp"
#include "turbolab/rng.hpp"

namespace turbolab {

/// Letter permutation followed by one automorphism per output position:
/// output[j] = autos[j](input[perm[j]]). Positions are 0-based.
class Interleaver {
   public:
    Interleaver() = default;
    /// Throws std::invalid_argument unless perm is a permutation of
    /// [0, autos.size()).
    Interleaver(std::vector<std::uint32_t> perm, std::vector<LetterAutomorphism> autos);
    static Interleaver identity(std::size_t size, int bits);

    std::size_t size() const { return perm_.size(); }
    const std::vector<std::uint32_t>& perm() const { return perm_; }
    const std::vector<LetterAutomorphism>& autos() const { return autos_; }

    Letters apply(std::span<const Letter> word) const;
    Letters invert(std::span<const Letter> word) const;

   private:
    std::vector<std::uint32_t> perm_;
    std::vector<LetterAutomorphism> autos_;
};

/// Uniform permutation (Fisher-Yates) and i.i.d. uniform automorphisms drawn
/// from `group`.
Interleaver sample_interleaver(Rng& rng, std::size_t size, const std::vector<LetterAutomorphism>& group);
Interleaver sample_interleaver(Rng& rng, std::size_t size, const LetterSpace& space);

/// Automorphisms of P that map Z onto itself.
std::vector<LetterAutomorphism> z_preserving_automorphisms(const LetterSpace& space);

struct EligibleLength {
    int N = 0;
    int N_in = 0;
};

/// N in [n_lo, n_hi] with N n_out = N_in k_in + m_in for some N_in >= 1.
std::vector<EligibleLength> eligible_lengths(const BlockEncoder& outer, const SeedMorphism& inner, int n_lo, int n_hi);

/// Outer block encoder, interleaver of size N n_out and inner seed encoder.
class TurboInstance {
   public:
    /// Throws std::invalid_argument when N is not eligible, the interleaver
    /// has the wrong size, or the letter spaces differ.
    TurboInstance(BlockEncoder outer, SeedMorphism inner, Interleaver interleaver, int N);

    const BlockEncoder& outer() const { return outer_; }
    const SeedMorphism& inner() const { return inner_; }
    const Interleaver& interleaver() const { return interleaver_; }
    int N() const { return N_; }
    int N_in() const { return N_in_; }

    std::size_t info_letters() const;
    std::size_t outer_stab_letters() const;
    std::size_t inner_stab_letters() const;
    std::size_t output_letters() const;

   private:
    BlockEncoder outer_;
    SeedMorphism inner_;
    Interleaver interleaver_;
    int N_;
    int N_in_;
};

/// (L_1..L_N, S_1..S_N, S'_1..S'_{N_in}) as three flat words.
struct TurboInput {
    Letters info;
    Letters stab;
    Letters inner_stab;

    bool operator==(const TurboInput& other) const = default;
};

/// Intermediate words of one encoding.
struct TurboTrace {
    Letters outer_output;
    Letters interleaved;
    ConvOutput inner_output;
    Letters output;
};

TurboTrace turbo_trace(const TurboInstance& t, const TurboInput& input);
/// Output (P_1..P_{N_in}, M_final); the final memory is part of the output.
Letters turbo_apply(const TurboInstance& t, const TurboInput& input);
/// Inverse of turbo_apply.
TurboInput turbo_decode(const TurboInstance& t, std::span<const Letter> output);

struct TurboDistance {
    /// Empty when no harmful input exists.
    std::optional<int> d_c;
    TurboInput witness_c;
    /// Filled only when requested.
    std::optional<int> d_q;
    TurboInput witness_q;
    std::uint64_t outer_inputs = 0;
};

/// Exhaustive over outer inputs (P^{k_out} x Z^{n_out-k_out})^N, minimizing over
/// S' by dynamic programming. Throws std::length_error beyond `budget` outer
/// inputs.
TurboDistance turbo_distance_exact(const TurboInstance& t, bool want_dq = false,
                                   std::uint64_t budget = std::uint64_t{1} << 22);

struct DistanceSample {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::optional<int> d_c;
    std::optional<int> d_q;
    TurboInput witness;
};

struct McOptions {
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    bool want_dq = false;
    bool preserve_z = false;
    std::uint64_t budget = std::uint64_t{1} << 22;
};

/// Trials are independent; trial i uses trial_seed(master_seed, i). The
/// OpenMP version and the serial one return identical lists.
std::vector<DistanceSample> monte_carlo_distance(const BlockEncoder& outer, const SeedMorphism& inner, int N,
                                                 const McOptions& options);
std::vector<DistanceSample> monte_carlo_distance_serial(const BlockEncoder& outer, const SeedMorphism& inner, int N,
                                                        const McOptions& options);

/// Interleaver used by trial `trial` of a run.
Interleaver trial_interleaver(const BlockEncoder& outer, int N, std::uint64_t master_seed, std::uint64_t trial,
                              bool preserve_z = false);

struct McSummary {
    std::uint64_t trials = 0;
    std::optional<int> min;
    std::optional<double> median;
    std::optional<int> max;
    /// (D, fraction of trials with d_c <= D).
    std::vector<std::pair<int, double>> below;
};

McSummary summarize(const std::vector<DistanceSample>& samples, const std::vector<int>& thresholds);

struct EmpiricalP {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double frequency = 0;
    /// sqrt(f (1 - f) / trials).
    double sigma = 0;
};

/// Fraction of sampled interleavers for which some harmful input has
/// |E'| = w and |T_N(E)| = d (or <= d when `at_most`).
EmpiricalP empirical_p(const BlockEncoder& outer, const SeedMorphism& inner, int N, int w, int d,
                       std::uint64_t trials, std::uint64_t master_seed, bool at_most = false);

}  // namespace turbolab

#endif
