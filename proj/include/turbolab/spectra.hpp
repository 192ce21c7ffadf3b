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

#ifndef TURBOLAB_SPECTRA_HPP
#define TURBOLAB_SPECTRA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "turbolab/convolutional.hpp"

namespace turbolab {

/// Largest number of (M, L) tuples an inner spectrum may enumerate.
inline constexpr std::uint64_t kDefaultSpectrumBudget = std::uint64_t{1} << 28;

/// a_N(w, d) and a_N(w, <=d) for w <= w_max, d <= d_max. A tuple (M, L_1..L_N)
/// of weight w counts towards a_N(w, d) when some S in (Z^s)^N gives
/// |C_N(M, L, S)| = d, and towards a_N(w, <=d) when some S gives weight <= d.
/// The terminal memory is part of the output weight.
struct InnerSpectrum {
    int N = 0;
    int w_max = 0;
    int d_max = 0;
    std::vector<std::vector<mpz_class>> exact;
    std::vector<std::vector<mpz_class>> at_most;

    const mpz_class& a(int w, int d) const { return exact.at(static_cast<std::size_t>(w)).at(static_cast<std::size_t>(d)); }
    const mpz_class& a_leq(int w, int d) const {
        return at_most.at(static_cast<std::size_t>(w)).at(static_cast<std::size_t>(d));
    }
};

/// Dispatches to the trellis count when every step has a single stabilizer
/// choice, else to the enumeration kernel.
InnerSpectrum inner_spectrum(const SeedMorphism& seed, int N, int w_max, int d_max,
                             std::uint64_t budget = kDefaultSpectrumBudget);

/// OpenMP kernel: position subsets are distributed over workers and per-worker
/// counts are summed. Throws std::length_error beyond `budget` tuples.
InnerSpectrum inner_spectrum_enumerate(const SeedMorphism& seed, int N, int w_max, int d_max,
                                       std::uint64_t budget = kDefaultSpectrumBudget);

/// Exact count by dynamic programming over (memory, w, d) when |Z|^s = 1, so
/// that every (M, L) has a single output. No size limit beyond the tables.
InnerSpectrum inner_spectrum_trellis(const SeedMorphism& seed, int N, int w_max, int d_max);

/// Serial brute force: every (M, L) word and every stabilizer sequence is run
/// through the seed step by step. Kept as the oracle for inner_spectrum.
InnerSpectrum inner_spectrum_reference(const SeedMorphism& seed, int N, int w_max, int d_max);

/// a^{(x)N}(d): inputs in P^{Nk} x Z^{N(n-k)} with |E|_L > 0 and
/// |C^{(x)N}(E)| = d, for d in [0, N n].
struct OuterSpectrum {
    int N = 0;
    std::vector<mpz_class> counts;

    mpz_class a(int d) const {
        return d >= 0 && static_cast<std::size_t>(d) < counts.size() ? counts[static_cast<std::size_t>(d)] : mpz_class(0);
    }
};

/// Weight enumerator of one block split by trivial / nontrivial information.
struct BlockEnumerator {
    std::vector<mpz_class> harmless;
    std::vector<mpz_class> harmful;
};

BlockEnumerator block_enumerator(const BlockEncoder& encoder, std::uint64_t budget = kDefaultDistanceBudget);

/// (harmless + harmful)^N - harmless^N, by exact polynomial products.
OuterSpectrum outer_spectrum(const BlockEncoder& encoder, int N);

/// Direct enumeration of every N-block undetected input.
OuterSpectrum outer_spectrum_reference(const BlockEncoder& encoder, int N);

}  // namespace turbolab

#endif
