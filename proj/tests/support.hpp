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

#ifndef TURBOLAB_TESTS_SUPPORT_HPP
#define TURBOLAB_TESTS_SUPPORT_HPP

#include <filesystem>
#include <string>

#include "oracles.hpp"
#include "turbolab/convolutional.hpp"
#include "turbolab/rng.hpp"
#include "turbolab/spec_io.hpp"

namespace testsupport {

inline std::filesystem::path corpus(const std::string& name) {
    return std::filesystem::path(TURBOLAB_CORPUS_DIR) / name;
}

inline turbolab::SeedMorphism load_seed(const std::string& file) {
    return *turbolab::load_encoder_spec(corpus(file)).seed;
}

inline turbolab::BlockEncoder load_block(const std::string& file) {
    return *turbolab::load_encoder_spec(corpus(file)).block;
}

inline oracle::Ints z_letters(const turbolab::LetterSpace& space) {
    return oracle::Ints(space.z_elements().begin(), space.z_elements().end());
}

inline oracle::Seed to_oracle(const turbolab::SeedMorphism& s) {
    oracle::Seed o;
    o.rows = s.matrix().to_strings();
    o.b = s.space().bits();
    o.n = s.n();
    o.k = s.k();
    o.s = s.s();
    o.m = s.m();
    o.z = z_letters(s.space());
    return o;
}

inline oracle::Block to_oracle(const turbolab::BlockEncoder& e) {
    oracle::Block o;
    o.rows = e.matrix().to_strings();
    o.b = e.space().bits();
    o.n = e.n();
    o.k = e.k();
    o.z = z_letters(e.space());
    return o;
}

inline turbolab::BitMatrix random_invertible(std::size_t side, turbolab::Rng& rng) {
    while (true) {
        turbolab::BitMatrix m(side, side);
        for (std::size_t r = 0; r < side; ++r) {
            m.set_row(r, rng.next() & ((std::uint64_t{1} << side) - 1));
        }
        if (m.is_invertible()) {
            return m;
        }
    }
}

/// Random [[n,k,m]] seed encoder; b = 2 uses the Pauli layout without the
/// symplectic constraint.
inline turbolab::SeedMorphism random_seed(int b, int n, int k, int m, turbolab::Rng& rng) {
    const turbolab::LetterSpace space = b == 1 ? turbolab::LetterSpace::classical() : turbolab::LetterSpace::quantum();
    return turbolab::SeedMorphism::make_encoder(space, n, k, m,
                                                random_invertible(static_cast<std::size_t>(b * (n + m)), rng));
}

inline turbolab::Letters random_letters(turbolab::Rng& rng, std::size_t count, const turbolab::LetterSpace& space,
                                        bool undetected) {
    turbolab::Letters out(count);
    for (auto& x : out) {
        x = undetected ? space.z_elements()[rng.uniform_below(space.z_size())]
                       : static_cast<turbolab::Letter>(rng.uniform_below(space.size()));
    }
    return out;
}

inline turbolab::ConvInput random_input(turbolab::Rng& rng, const turbolab::SeedMorphism& seed, int N,
                                        bool zero_memory, bool undetected) {
    turbolab::ConvInput in;
    in.memory = zero_memory ? turbolab::Letters(static_cast<std::size_t>(seed.m()), 0)
                            : random_letters(rng, static_cast<std::size_t>(seed.m()), seed.space(), false);
    for (int i = 0; i < N; ++i) {
        in.info.push_back(random_letters(rng, static_cast<std::size_t>(seed.k()), seed.space(), false));
        in.stab.push_back(random_letters(rng, static_cast<std::size_t>(seed.s()), seed.space(), undetected));
    }
    return in;
}

inline oracle::Ints ints(const turbolab::Letters& x) { return oracle::Ints(x.begin(), x.end()); }

}  // namespace testsupport

#endif
