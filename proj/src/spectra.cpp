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

#include "turbolab/spectra.hpp"

#include <omp.h>

#include <set>
#include <stdexcept>

#include "turbolab/parallel.hpp"

namespace turbolab {

namespace {

InnerSpectrum empty_spectrum(int N, int w_max, int d_max) {
    InnerSpectrum s;
    s.N = N;
    s.w_max = w_max;
    s.d_max = d_max;
    s.exact.assign(static_cast<std::size_t>(w_max + 1), std::vector<mpz_class>(static_cast<std::size_t>(d_max + 1), 0));
    s.at_most = s.exact;
    return s;
}

void check_spectrum_args(const SeedMorphism& seed, int N, int w_max, int d_max) {
    if (N < 0 || w_max < 0 || d_max < 0 || d_max > 63) {
        throw std::invalid_argument("spectrum needs N, w_max >= 0 and 0 <= d_max <= 63");
    }
    if (seed.m() + seed.k() * N > 64) {
        throw std::length_error("spectrum supports at most 64 input letters");
    }
}

// Next k-subset of {0..n-1} in lexicographic order; false after the last.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) {
        --i;
    }
    if (i < 0) {
        return false;
    }
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return true;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<mpz_class> poly_pow(std::vector<mpz_class> base, int e) {
    std::vector<mpz_class> out{1};
    while (e > 0) {
        if (e & 1) {
            out = poly_mul(out, base);
        }
        e >>= 1;
        if (e > 0) {
            base = poly_mul(base, base);
        }
    }
    return out;
}

}  // namespace

InnerSpectrum inner_spectrum_trellis(const SeedMorphism& seed, int N, int w_max, int d_max) {
    if (N < 0 || w_max < 0 || d_max < 0 || d_max > 63) {
        throw std::invalid_argument("spectrum needs N, w_max >= 0 and 0 <= d_max <= 63");
    }
    const StepTable table(seed);
    if (table.stab_count() != 1) {
        throw std::invalid_argument("trellis spectrum needs a single stabilizer choice per step");
    }
    if (seed.space().bits() * seed.k() > 20) {
        throw std::length_error("trellis spectrum supports at most 20 information bits per step");
    }
    const std::uint32_t states = table.state_count();
    const std::uint64_t blocks = std::uint64_t{1} << (seed.space().bits() * seed.k());
    // Output weights above d_max share one overflow bucket.
    const auto W = static_cast<std::size_t>(w_max + 1);
    const auto D = static_cast<std::size_t>(d_max + 2);
    auto at = [&](std::uint32_t st, std::size_t w, std::size_t d) { return (st * W + w) * D + d; };
    std::vector<mpz_class> cur(states * W * D, 0);
    std::vector<mpz_class> next(cur.size(), 0);
    for (std::uint32_t st = 0; st < states; ++st) {
        const auto w = static_cast<std::size_t>(table.memory_weight(st));
        if (w < W) {
            cur[at(st, w, 0)] = 1;
        }
    }
    std::vector<std::uint64_t> images(blocks);
    std::vector<int> info_weights(blocks);
    for (std::uint64_t x = 0; x < blocks; ++x) {
        images[x] = table.info_image(x);
        info_weights[x] = table.info_weight(x);
    }
    for (int step = 0; step < N; ++step) {
        for (auto& v : next) {
            v = 0;
        }
        for (std::uint32_t st = 0; st < states; ++st) {
            for (std::size_t w = 0; w < W; ++w) {
                for (std::size_t d = 0; d < D; ++d) {
                    const mpz_class& c = cur[at(st, w, d)];
                    if (c == 0) {
                        continue;
                    }
                    for (std::uint64_t x = 0; x < blocks; ++x) {
                        const std::size_t nw = w + static_cast<std::size_t>(info_weights[x]);
                        if (nw >= W) {
                            continue;
                        }
                        const std::uint64_t out = table.step(st, images[x], 0);
                        const std::size_t nd = std::min(d + static_cast<std::size_t>(table.physical_weight(out)), D - 1);
                        next[at(table.next_state(out), nw, nd)] += c;
                    }
                }
            }
        }
        cur.swap(next);
    }
    InnerSpectrum out = empty_spectrum(N, w_max, d_max);
    for (std::uint32_t st = 0; st < states; ++st) {
        for (std::size_t w = 0; w < W; ++w) {
            for (std::size_t d = 0; d < D; ++d) {
                const std::size_t fd = std::min(d + static_cast<std::size_t>(table.memory_weight(st)), D - 1);
                if (fd <= static_cast<std::size_t>(d_max)) {
                    out.exact[w][fd] += cur[at(st, w, d)];
                }
            }
        }
    }
    for (std::size_t w = 0; w < W; ++w) {
        mpz_class run = 0;
        for (std::size_t d = 0; d + 1 < D; ++d) {
            run += out.exact[w][d];
            out.at_most[w][d] = run;
        }
    }
    return out;
}

InnerSpectrum inner_spectrum(const SeedMorphism& seed, int N, int w_max, int d_max, std::uint64_t budget) {
    if (StepTable(seed).stab_count() == 1 && seed.space().bits() * seed.k() <= 20) {
        return inner_spectrum_trellis(seed, N, w_max, d_max);
    }
    return inner_spectrum_enumerate(seed, N, w_max, d_max, budget);
}

InnerSpectrum inner_spectrum_enumerate(const SeedMorphism& seed, int N, int w_max, int d_max, std::uint64_t budget) {
    check_spectrum_args(seed, N, w_max, d_max);
    const StepTable table(seed);
    const int b = seed.space().bits();
    const int m = seed.m();
    const int k = seed.k();
    const int positions = m + k * N;
    const int top = std::min(w_max, positions);
    const std::uint64_t nonzero = seed.space().size() - 1;

    // All position subsets of size <= top, flattened.
    std::vector<std::vector<int>> subsets;
    std::uint64_t tuples = 0;
    for (int w = 0; w <= top; ++w) {
        std::vector<int> c(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) {
            c[static_cast<std::size_t>(i)] = i;
        }
        std::uint64_t per = 1;
        for (int i = 0; i < w; ++i) {
            per *= nonzero;
        }
        do {
            subsets.push_back(c);
            tuples += per;
            if (tuples > budget) {
                throw std::length_error("inner spectrum enumeration exceeds budget");
            }
        } while (next_combination(c, positions));
    }

    const std::size_t cells = static_cast<std::size_t>(w_max + 1) * static_cast<std::size_t>(d_max + 1);
    std::vector<std::uint64_t> exact(cells, 0);
    std::vector<std::uint64_t> at_most(cells, 0);
    const auto count = static_cast<std::int64_t>(subsets.size());

#pragma omp parallel num_threads(lab_threads())
    {
        std::vector<std::uint64_t> local_exact(cells, 0);
        std::vector<std::uint64_t> local_at_most(cells, 0);
        std::vector<std::uint64_t> info(static_cast<std::size_t>(N));
        std::vector<std::uint64_t> digits;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            const auto& pos = subsets[static_cast<std::size_t>(idx)];
            const int w = static_cast<int>(pos.size());
            digits.assign(pos.size(), 1);
            while (true) {
                std::uint32_t memory = 0;
                std::fill(info.begin(), info.end(), 0);
                for (std::size_t i = 0; i < pos.size(); ++i) {
                    const int p = pos[i];
                    if (p < m) {
                        memory |= static_cast<std::uint32_t>(digits[i] << (p * b));
                    } else {
                        const int q = p - m;
                        info[static_cast<std::size_t>(q / k)] |= digits[i] << ((q % k) * b);
                    }
                }
                const std::uint64_t mask = achievable_weight_mask(table, memory, info, d_max);
                const std::size_t row = static_cast<std::size_t>(w) * static_cast<std::size_t>(d_max + 1);
                for (int d = 0; d <= d_max; ++d) {
                    local_exact[row + static_cast<std::size_t>(d)] += (mask >> d) & 1;
                    const std::uint64_t low = d == 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << d) - 1;
                    local_at_most[row + static_cast<std::size_t>(d)] += (mask & low) != 0 ? 1 : 0;
                }
                // Odometer over nonzero letters.
                std::size_t i = 0;
                while (i < digits.size() && digits[i] == nonzero) {
                    digits[i] = 1;
                    ++i;
                }
                if (i == digits.size()) {
                    break;
                }
                ++digits[i];
            }
        }
#pragma omp critical(turbolab_inner_spectrum_merge)
        for (std::size_t c = 0; c < cells; ++c) {
            exact[c] += local_exact[c];
            at_most[c] += local_at_most[c];
        }
    }

    InnerSpectrum out = empty_spectrum(N, w_max, d_max);
    for (int w = 0; w <= w_max; ++w) {
        for (int d = 0; d <= d_max; ++d) {
            const std::size_t c = static_cast<std::size_t>(w) * static_cast<std::size_t>(d_max + 1) + static_cast<std::size_t>(d);
            out.exact[static_cast<std::size_t>(w)][static_cast<std::size_t>(d)] = mpz_class(std::to_string(exact[c]));
            out.at_most[static_cast<std::size_t>(w)][static_cast<std::size_t>(d)] = mpz_class(std::to_string(at_most[c]));
        }
    }
    return out;
}

InnerSpectrum inner_spectrum_reference(const SeedMorphism& seed, int N, int w_max, int d_max) {
    check_spectrum_args(seed, N, w_max, d_max);
    const LetterSpace& space = seed.space();
    const int b = space.bits();
    const auto m = static_cast<std::size_t>(seed.m());
    const auto k = static_cast<std::size_t>(seed.k());
    const auto s = static_cast<std::size_t>(seed.s());
    const std::size_t letters = m + k * static_cast<std::size_t>(N);
    if (letters * static_cast<std::size_t>(b) > 30) {
        throw std::length_error("reference spectrum limited to 30 input bits");
    }
    const auto& z = space.z_elements();
    const std::size_t stab_letters = s * static_cast<std::size_t>(N);
    InnerSpectrum out = empty_spectrum(N, w_max, d_max);

    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (letters * static_cast<std::size_t>(b))); ++code) {
        const Letters word = unpack_letters(code, letters, b);
        const int w = static_cast<int>(weight(word));
        if (w > w_max) {
            continue;
        }
        std::set<int> weights;
        std::vector<std::size_t> choice(stab_letters, 0);
        while (true) {
            Letters memory(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(m));
            int total = 0;
            for (std::size_t i = 0; i < static_cast<std::size_t>(N); ++i) {
                const Letters info(word.begin() + static_cast<std::ptrdiff_t>(m + i * k),
                                   word.begin() + static_cast<std::ptrdiff_t>(m + (i + 1) * k));
                Letters stab(s);
                for (std::size_t j = 0; j < s; ++j) {
                    stab[j] = z[choice[i * s + j]];
                }
                auto [p, next] = seed.step(memory, info, stab);
                total += static_cast<int>(weight(p));
                memory = std::move(next);
            }
            total += static_cast<int>(weight(memory));
            weights.insert(total);
            std::size_t i = 0;
            while (i < choice.size() && choice[i] + 1 == z.size()) {
                choice[i] = 0;
                ++i;
            }
            if (i == choice.size()) {
                break;
            }
            ++choice[i];
        }
        for (int d = 0; d <= d_max; ++d) {
            if (weights.count(d)) {
                ++out.exact[static_cast<std::size_t>(w)][static_cast<std::size_t>(d)];
            }
            if (*weights.begin() <= d) {
                ++out.at_most[static_cast<std::size_t>(w)][static_cast<std::size_t>(d)];
            }
        }
    }
    return out;
}

BlockEnumerator block_enumerator(const BlockEncoder& encoder, std::uint64_t budget) {
    const auto basis = encoder.undetected_input_basis();
    const std::size_t dim = basis.size();
    if (dim >= 63 || (std::uint64_t{1} << dim) > budget) {
        throw std::length_error("block enumeration exceeds budget");
    }
    const int b = encoder.space().bits();
    const std::uint64_t lsb = letter_lsb_mask(b, static_cast<std::size_t>(encoder.n()));
    std::vector<std::uint64_t> images(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        images[i] = encoder.apply_bits(basis[i]);
    }
    const std::uint64_t info_mask = (std::uint64_t{1} << encoder.information_generator_count()) - 1;
    std::vector<std::uint64_t> harmless(static_cast<std::size_t>(encoder.n() + 1), 0);
    std::vector<std::uint64_t> harmful(harmless.size(), 0);
    harmless[0] = 1;
    std::uint64_t image = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim); ++i) {
        image ^= images[static_cast<std::size_t>(std::countr_zero(i))];
        const std::uint64_t gray = i ^ (i >> 1);
        const auto w = static_cast<std::size_t>(packed_weight(image, b, lsb));
        ((gray & info_mask) != 0 ? harmful : harmless)[w] += 1;
    }
    BlockEnumerator out;
    for (std::size_t d = 0; d < harmless.size(); ++d) {
        out.harmless.emplace_back(std::to_string(harmless[d]));
        out.harmful.emplace_back(std::to_string(harmful[d]));
    }
    return out;
}

OuterSpectrum outer_spectrum(const BlockEncoder& encoder, int N) {
    if (N < 0) {
        throw std::invalid_argument("N must be nonnegative");
    }
    const BlockEnumerator e = block_enumerator(encoder);
    std::vector<mpz_class> all(e.harmless.size());
    for (std::size_t d = 0; d < all.size(); ++d) {
        all[d] = e.harmless[d] + e.harmful[d];
    }
    const auto total = poly_pow(all, N);
    const auto trivial = poly_pow(e.harmless, N);
    OuterSpectrum out;
    out.N = N;
    out.counts = total;
    for (std::size_t d = 0; d < trivial.size(); ++d) {
        out.counts[d] -= trivial[d];
    }
    return out;
}

OuterSpectrum outer_spectrum_reference(const BlockEncoder& encoder, int N) {
    const auto basis = encoder.undetected_input_basis();
    const std::size_t dim = basis.size();
    const std::size_t total_bits = dim * static_cast<std::size_t>(N);
    if (total_bits > 26) {
        throw std::length_error("reference outer spectrum limited to 26 generator bits");
    }
    const int b = encoder.space().bits();
    const std::uint64_t info_mask = (std::uint64_t{1} << encoder.information_generator_count()) - 1;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(encoder.n() * N + 1), 0);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << total_bits); ++code) {
        bool harmful = false;
        std::size_t w = 0;
        for (int blk = 0; blk < N; ++blk) {
            const std::uint64_t coeffs = (code >> (static_cast<std::size_t>(blk) * dim)) & ((std::uint64_t{1} << dim) - 1);
            harmful = harmful || (coeffs & info_mask) != 0;
            std::uint64_t input = 0;
            for (std::size_t g = 0; g < dim; ++g) {
                if ((coeffs >> g) & 1) {
                    input ^= basis[g];
                }
            }
            w += weight(encoder.apply(unpack_letters(input, static_cast<std::size_t>(encoder.n()), b)));
        }
        if (harmful) {
            ++counts[w];
        }
    }
    OuterSpectrum out;
    out.N = N;
    for (std::uint64_t c : counts) {
        out.counts.emplace_back(std::to_string(c));
    }
    return out;
}

}  // namespace turbolab
