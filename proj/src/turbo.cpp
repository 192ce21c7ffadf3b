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

#include "turbolab/turbo.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "turbolab/parallel.hpp"

namespace turbolab {

Interleaver::Interleaver(std::vector<std::uint32_t> perm, std::vector<LetterAutomorphism> autos)
    : perm_(std::move(perm)), autos_(std::move(autos)) {
    if (perm_.size() != autos_.size()) {
        throw std::invalid_argument("interleaver needs one automorphism per position");
    }
    std::vector<std::uint8_t> seen(perm_.size(), 0);
    for (std::uint32_t p : perm_) {
        if (p >= perm_.size() || seen[p]) {
            throw std::invalid_argument("interleaver positions do not form a permutation");
        }
        seen[p] = 1;
    }
}

Interleaver Interleaver::identity(std::size_t size, int bits) {
    std::vector<std::uint32_t> perm(size);
    for (std::size_t i = 0; i < size; ++i) {
        perm[i] = static_cast<std::uint32_t>(i);
    }
    return Interleaver(std::move(perm), std::vector<LetterAutomorphism>(size, LetterAutomorphism::identity(bits)));
}

Letters Interleaver::apply(std::span<const Letter> word) const {
    if (word.size() != size()) {
        throw std::invalid_argument("interleaver input has the wrong length");
    }
    Letters out(size());
    for (std::size_t j = 0; j < size(); ++j) {
        out[j] = autos_[j](word[perm_[j]]);
    }
    return out;
}

Letters Interleaver::invert(std::span<const Letter> word) const {
    if (word.size() != size()) {
        throw std::invalid_argument("interleaver input has the wrong length");
    }
    Letters out(size());
    for (std::size_t j = 0; j < size(); ++j) {
        out[perm_[j]] = autos_[j].inverse()(word[j]);
    }
    return out;
}

Interleaver sample_interleaver(Rng& rng, std::size_t size, const std::vector<LetterAutomorphism>& group) {
    if (group.empty()) {
        throw std::invalid_argument("automorphism group is empty");
    }
    std::vector<std::uint32_t> perm(size);
    for (std::size_t i = 0; i < size; ++i) {
        perm[i] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t i = size; i > 1; --i) {
        const std::size_t j = rng.uniform_below(i);
        std::swap(perm[i - 1], perm[j]);
    }
    std::vector<LetterAutomorphism> autos;
    autos.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        autos.push_back(group[rng.uniform_below(group.size())]);
    }
    return Interleaver(std::move(perm), std::move(autos));
}

Interleaver sample_interleaver(Rng& rng, std::size_t size, const LetterSpace& space) {
    return sample_interleaver(rng, size, automorphism_group(space));
}

std::vector<LetterAutomorphism> z_preserving_automorphisms(const LetterSpace& space) {
    std::vector<LetterAutomorphism> out;
    for (auto& a : automorphism_group(space)) {
        bool keeps = true;
        for (Letter z : space.z_elements()) {
            keeps = keeps && space.in_z(a(z));
        }
        if (keeps) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<EligibleLength> eligible_lengths(const BlockEncoder& outer, const SeedMorphism& inner, int n_lo, int n_hi) {
    std::vector<EligibleLength> out;
    for (int N = std::max(n_lo, 1); N <= n_hi; ++N) {
        const int rest = N * outer.n() - inner.m();
        if (inner.k() == 0) {
            continue;
        }
        if (rest >= inner.k() && rest % inner.k() == 0) {
            out.push_back({N, rest / inner.k()});
        }
    }
    return out;
}

TurboInstance::TurboInstance(BlockEncoder outer, SeedMorphism inner, Interleaver interleaver, int N)
    : outer_(std::move(outer)), inner_(std::move(inner)), interleaver_(std::move(interleaver)), N_(N), N_in_(0) {
    if (!(outer_.space() == inner_.space())) {
        throw std::invalid_argument("outer and inner encoders use different letter spaces");
    }
    if (inner_.kind() != MorphismKind::encoder) {
        throw std::invalid_argument("inner morphism must be an encoder");
    }
    const auto lengths = eligible_lengths(outer_, inner_, N, N);
    if (lengths.empty()) {
        throw std::invalid_argument("N = " + std::to_string(N) + " is not eligible");
    }
    N_in_ = lengths[0].N_in;
    if (interleaver_.size() != static_cast<std::size_t>(N_ * outer_.n())) {
        throw std::invalid_argument("interleaver size must be N n_out");
    }
}

std::size_t TurboInstance::info_letters() const { return static_cast<std::size_t>(N_ * outer_.k()); }
std::size_t TurboInstance::outer_stab_letters() const { return static_cast<std::size_t>(N_ * (outer_.n() - outer_.k())); }
std::size_t TurboInstance::inner_stab_letters() const { return static_cast<std::size_t>(N_in_ * inner_.s()); }
std::size_t TurboInstance::output_letters() const { return static_cast<std::size_t>(N_in_ * inner_.n() + inner_.m()); }

TurboTrace turbo_trace(const TurboInstance& t, const TurboInput& input) {
    if (input.info.size() != t.info_letters() || input.stab.size() != t.outer_stab_letters() ||
        input.inner_stab.size() != t.inner_stab_letters()) {
        throw std::invalid_argument("turbo input blocks have the wrong sizes");
    }
    TurboTrace tr;
    tr.outer_output = blockwise_apply(t.outer(), t.N(), input.info, input.stab);
    tr.interleaved = t.interleaver().apply(tr.outer_output);
    const auto m = static_cast<std::size_t>(t.inner().m());
    const auto k = static_cast<std::size_t>(t.inner().k());
    const auto s = static_cast<std::size_t>(t.inner().s());
    ConvInput conv;
    conv.memory.assign(tr.interleaved.begin(), tr.interleaved.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t i = 0; i < static_cast<std::size_t>(t.N_in()); ++i) {
        const auto at = static_cast<std::ptrdiff_t>(m + i * k);
        conv.info.emplace_back(tr.interleaved.begin() + at, tr.interleaved.begin() + at + static_cast<std::ptrdiff_t>(k));
        const auto st = static_cast<std::ptrdiff_t>(i * s);
        conv.stab.emplace_back(input.inner_stab.begin() + st, input.inner_stab.begin() + st + static_cast<std::ptrdiff_t>(s));
    }
    tr.inner_output = conv_apply(t.inner(), conv);
    tr.output = tr.inner_output.physical_word();
    tr.output.insert(tr.output.end(), tr.inner_output.final_memory.begin(), tr.inner_output.final_memory.end());
    return tr;
}

Letters turbo_apply(const TurboInstance& t, const TurboInput& input) { return turbo_trace(t, input).output; }

TurboInput turbo_decode(const TurboInstance& t, std::span<const Letter> output) {
    if (output.size() != t.output_letters()) {
        throw std::invalid_argument("turbo output has the wrong length");
    }
    const auto n_in = static_cast<std::size_t>(t.inner().n());
    std::vector<std::vector<Letter>> physical;
    for (std::size_t i = 0; i < static_cast<std::size_t>(t.N_in()); ++i) {
        physical.emplace_back(output.begin() + static_cast<std::ptrdiff_t>(i * n_in),
                              output.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_in));
    }
    const std::span<const Letter> memory = output.subspan(static_cast<std::size_t>(t.N_in()) * n_in);
    const ConvInput conv = conv_invert(t.inner(), memory, physical);

    TurboInput out;
    Letters interleaved = conv.memory;
    for (std::size_t i = 0; i < conv.steps(); ++i) {
        interleaved.insert(interleaved.end(), conv.info[i].begin(), conv.info[i].end());
        out.inner_stab.insert(out.inner_stab.end(), conv.stab[i].begin(), conv.stab[i].end());
    }
    const Letters outer_output = t.interleaver().invert(interleaved);
    const auto n_out = static_cast<std::size_t>(t.outer().n());
    const auto k_out = static_cast<std::size_t>(t.outer().k());
    Letters stab;
    for (std::size_t blk = 0; blk < static_cast<std::size_t>(t.N()); ++blk) {
        const std::span<const Letter> block(outer_output.data() + blk * n_out, n_out);
        const Letters input = t.outer().invert(block);
        out.info.insert(out.info.end(), input.begin(), input.begin() + static_cast<std::ptrdiff_t>(k_out));
        stab.insert(stab.end(), input.begin() + static_cast<std::ptrdiff_t>(k_out), input.end());
    }
    out.stab = std::move(stab);
    return out;
}

namespace {

constexpr int kUnreached = INT_MAX;

// Linear images of the outer undetected-input generators, with all
// information generators first so that an input is harmful iff one of the
// low `info_count` coefficients is set.
class OuterGenerators {
   public:
    explicit OuterGenerators(const TurboInstance& t) : t_(t), table_(t.inner()) {
        const BlockEncoder& outer = t.outer();
        const int b = outer.space().bits();
        const auto basis = outer.undetected_input_basis();
        const auto per_info = static_cast<std::size_t>(outer.information_generator_count());
        const auto k_out = static_cast<std::size_t>(outer.k());
        const auto n_out = static_cast<std::size_t>(outer.n());
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t blk = 0; blk < static_cast<std::size_t>(t.N()); ++blk) {
                for (std::size_t g = 0; g < basis.size(); ++g) {
                    if ((g < per_info) != (pass == 0)) {
                        continue;
                    }
                    const Letters letters = unpack_letters(basis[g], n_out, b);
                    TurboInput in;
                    in.info.assign(t.info_letters(), 0);
                    in.stab.assign(t.outer_stab_letters(), 0);
                    in.inner_stab.assign(t.inner_stab_letters(), 0);
                    for (std::size_t j = 0; j < k_out; ++j) {
                        in.info[blk * k_out + j] = letters[j];
                    }
                    for (std::size_t j = k_out; j < n_out; ++j) {
                        in.stab[blk * (n_out - k_out) + (j - k_out)] = letters[j];
                    }
                    inputs_.push_back(std::move(in));
                }
            }
            if (pass == 0) {
                info_count_ = inputs_.size();
            }
        }
        for (const auto& in : inputs_) {
            const TurboTrace tr = turbo_trace(t, in);
            perm_blocks_.push_back(pack_interleaved(tr.interleaved));
            outer_words_.push_back(pack_word(tr.outer_output));
        }
    }

    std::size_t size() const { return inputs_.size(); }
    std::size_t info_count() const { return info_count_; }
    const StepTable& table() const { return table_; }

    // Interleaved word as (memory | info block 1 | ... | info block N_in).
    std::vector<std::uint64_t> pack_interleaved(const Letters& w) const {
        const int b = t_.inner().space().bits();
        const auto m = static_cast<std::size_t>(t_.inner().m());
        const auto k = static_cast<std::size_t>(t_.inner().k());
        std::vector<std::uint64_t> out;
        out.push_back(pack_letters(std::span<const Letter>(w.data(), m), b));
        for (std::size_t i = 0; i < static_cast<std::size_t>(t_.N_in()); ++i) {
            out.push_back(pack_letters(std::span<const Letter>(w.data() + m + i * k, k), b));
        }
        return out;
    }

    PackedWord pack_word(const Letters& w) const {
        PackedWord p(w.size(), t_.outer().space().bits());
        for (std::size_t i = 0; i < w.size(); ++i) {
            p.set(i, w[i]);
        }
        return p;
    }

    const std::vector<std::uint64_t>& perm_block(std::size_t g) const { return perm_blocks_[g]; }
    const PackedWord& outer_word(std::size_t g) const { return outer_words_[g]; }

    TurboInput input_for(std::uint64_t coeffs) const {
        TurboInput in;
        in.info.assign(t_.info_letters(), 0);
        in.stab.assign(t_.outer_stab_letters(), 0);
        in.inner_stab.assign(t_.inner_stab_letters(), 0);
        for (std::size_t g = 0; g < inputs_.size(); ++g) {
            if ((coeffs >> g) & 1) {
                for (std::size_t i = 0; i < in.info.size(); ++i) {
                    in.info[i] ^= inputs_[g].info[i];
                }
                for (std::size_t i = 0; i < in.stab.size(); ++i) {
                    in.stab[i] ^= inputs_[g].stab[i];
                }
            }
        }
        return in;
    }

   private:
    const TurboInstance& t_;
    StepTable table_;
    std::vector<TurboInput> inputs_;
    std::size_t info_count_ = 0;
    std::vector<std::vector<std::uint64_t>> perm_blocks_;
    std::vector<PackedWord> outer_words_;
};

// Minimum-weight completion over S' with backpointers; when `nonzero` is set
// only S' sequences with some nonzero block count.
std::pair<int, std::vector<std::size_t>> best_completion(const StepTable& table, std::uint32_t memory,
                                                         std::span<const std::uint64_t> info, bool nonzero) {
    const std::uint32_t states = table.state_count();
    const std::size_t layers = nonzero ? 2 : 1;
    auto at = [&](std::uint32_t st, std::size_t flag) { return static_cast<std::size_t>(st) * layers + flag; };
    std::vector<int> cur(states * layers, kUnreached);
    std::vector<int> next(states * layers, kUnreached);
    struct Back {
        std::size_t prev;
        std::size_t choice;
    };
    std::vector<std::vector<Back>> trail;
    cur[at(memory, 0)] = 0;
    for (std::uint64_t block : info) {
        const std::uint64_t img = table.info_image(block);
        std::fill(next.begin(), next.end(), kUnreached);
        std::vector<Back> back(states * layers, Back{0, 0});
        for (std::uint32_t st = 0; st < states; ++st) {
            for (std::size_t f = 0; f < layers; ++f) {
                const int base = cur[at(st, f)];
                if (base == kUnreached) {
                    continue;
                }
                for (std::size_t j = 0; j < table.stab_count(); ++j) {
                    const std::uint64_t out = table.step(st, img, j);
                    const std::size_t nf = nonzero ? (f | (table.stab_choice(j) != 0 ? 1 : 0)) : 0;
                    const std::size_t slot = at(table.next_state(out), nf);
                    const int w = base + table.physical_weight(out);
                    if (w < next[slot]) {
                        next[slot] = w;
                        back[slot] = Back{at(st, f), j};
                    }
                }
            }
        }
        trail.push_back(std::move(back));
        cur.swap(next);
    }
    int best = kUnreached;
    std::size_t best_slot = 0;
    for (std::uint32_t st = 0; st < states; ++st) {
        const std::size_t slot = at(st, layers - 1);
        if (cur[slot] != kUnreached && cur[slot] + table.memory_weight(st) < best) {
            best = cur[slot] + table.memory_weight(st);
            best_slot = slot;
        }
    }
    std::vector<std::size_t> choices(info.size(), 0);
    if (best != kUnreached) {
        std::size_t slot = best_slot;
        for (std::size_t i = info.size(); i-- > 0;) {
            choices[i] = trail[i][slot].choice;
            slot = trail[i][slot].prev;
        }
    }
    return {best, choices};
}

Letters stab_sequence(const StepTable& table, const std::vector<std::size_t>& choices, int s) {
    Letters out;
    for (std::size_t j : choices) {
        const Letters block = unpack_letters(table.stab_choice(j), static_cast<std::size_t>(s), table.bits());
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace

TurboDistance turbo_distance_exact(const TurboInstance& t, bool want_dq, std::uint64_t budget) {
    const OuterGenerators gens(t);
    const std::size_t dim = gens.size();
    if (dim >= 63 || (std::uint64_t{1} << dim) > budget) {
        throw std::length_error("turbo distance enumeration exceeds budget");
    }
    const StepTable& table = gens.table();
    const std::uint64_t info_mask = (std::uint64_t{1} << gens.info_count()) - 1;
    const bool single_choice = table.stab_count() == 1;

    TurboDistance out;
    out.outer_inputs = std::uint64_t{1} << dim;
    std::vector<std::uint64_t> word(static_cast<std::size_t>(t.N_in()) + 1, 0);
    int best_c = kUnreached;
    int best_q = kUnreached;
    std::uint64_t arg_c = 0;
    std::uint64_t arg_q = 0;
    bool q_from_zero = false;
    if (want_dq && !single_choice) {
        const auto [w, choices] = best_completion(table, 0, std::span<const std::uint64_t>(word).subspan(1), true);
        if (w != kUnreached) {
            best_q = w;
            q_from_zero = true;
        }
    }
    for (std::uint64_t i = 1; i < out.outer_inputs; ++i) {
        const auto& g = gens.perm_block(static_cast<std::size_t>(std::countr_zero(i)));
        for (std::size_t j = 0; j < word.size(); ++j) {
            word[j] ^= g[j];
        }
        const std::uint64_t gray = i ^ (i >> 1);
        const auto memory = static_cast<std::uint32_t>(word[0]);
        const std::span<const std::uint64_t> info = std::span<const std::uint64_t>(word).subspan(1);
        const int w = min_weight_over_stabilizers(table, memory, info);
        if ((gray & info_mask) != 0 && w < best_c) {
            best_c = w;
            arg_c = gray;
        }
        if (want_dq && w < best_q) {
            best_q = w;
            arg_q = gray;
            q_from_zero = false;
        }
    }

    auto witness = [&](std::uint64_t coeffs, bool nonzero_stab) {
        TurboInput in = gens.input_for(coeffs);
        const Letters interleaved = turbo_trace(t, in).interleaved;
        const auto blocks = gens.pack_interleaved(interleaved);
        const auto [w, choices] = best_completion(table, static_cast<std::uint32_t>(blocks[0]),
                                                  std::span<const std::uint64_t>(blocks).subspan(1), nonzero_stab);
        in.inner_stab = stab_sequence(table, choices, t.inner().s());
        return in;
    };
    if (best_c != kUnreached) {
        out.d_c = best_c;
        out.witness_c = witness(arg_c, false);
    }
    if (want_dq && best_q != kUnreached) {
        out.d_q = best_q;
        out.witness_q = q_from_zero ? witness(0, true) : witness(arg_q, false);
    }
    return out;
}

Interleaver trial_interleaver(const BlockEncoder& outer, int N, std::uint64_t master_seed, std::uint64_t trial,
                              bool preserve_z) {
    Rng rng(trial_seed(master_seed, trial));
    const auto group = preserve_z ? z_preserving_automorphisms(outer.space()) : automorphism_group(outer.space());
    return sample_interleaver(rng, static_cast<std::size_t>(N * outer.n()), group);
}

namespace {

DistanceSample run_trial(const BlockEncoder& outer, const SeedMorphism& inner, int N, const McOptions& options,
                         const std::vector<LetterAutomorphism>& group, std::uint64_t trial) {
    DistanceSample s;
    s.trial = trial;
    s.seed = trial_seed(options.master_seed, trial);
    Rng rng(s.seed);
    Interleaver pi = sample_interleaver(rng, static_cast<std::size_t>(N * outer.n()), group);
    const TurboInstance t(outer, inner, std::move(pi), N);
    const TurboDistance d = turbo_distance_exact(t, options.want_dq, options.budget);
    s.d_c = d.d_c;
    s.d_q = d.d_q;
    s.witness = d.witness_c;
    return s;
}

}  // namespace

std::vector<DistanceSample> monte_carlo_distance(const BlockEncoder& outer, const SeedMorphism& inner, int N,
                                                 const McOptions& options) {
    const auto group =
        options.preserve_z ? z_preserving_automorphisms(outer.space()) : automorphism_group(outer.space());
    std::vector<DistanceSample> out(options.trials);
    const auto trials = static_cast<std::int64_t>(options.trials);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(lab_threads())
    for (std::int64_t i = 0; i < trials; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = run_trial(outer, inner, N, options, group, static_cast<std::uint64_t>(i));
        } catch (...) {
#pragma omp critical(turbolab_mc_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

std::vector<DistanceSample> monte_carlo_distance_serial(const BlockEncoder& outer, const SeedMorphism& inner, int N,
                                                        const McOptions& options) {
    const auto group =
        options.preserve_z ? z_preserving_automorphisms(outer.space()) : automorphism_group(outer.space());
    std::vector<DistanceSample> out;
    out.reserve(options.trials);
    for (std::uint64_t i = 0; i < options.trials; ++i) {
        out.push_back(run_trial(outer, inner, N, options, group, i));
    }
    return out;
}

McSummary summarize(const std::vector<DistanceSample>& samples, const std::vector<int>& thresholds) {
    McSummary s;
    s.trials = samples.size();
    std::vector<int> values;
    for (const auto& x : samples) {
        if (x.d_c) {
            values.push_back(*x.d_c);
        }
    }
    std::sort(values.begin(), values.end());
    if (!values.empty()) {
        s.min = values.front();
        s.max = values.back();
        const std::size_t h = values.size() / 2;
        s.median = values.size() % 2 == 1 ? static_cast<double>(values[h])
                                           : (static_cast<double>(values[h - 1]) + static_cast<double>(values[h])) / 2.0;
    }
    for (int D : thresholds) {
        const auto hits = std::count_if(values.begin(), values.end(), [D](int v) { return v <= D; });
        s.below.emplace_back(D, samples.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples.size()));
    }
    return s;
}

EmpiricalP empirical_p(const BlockEncoder& outer, const SeedMorphism& inner, int N, int w, int d, std::uint64_t trials,
                       std::uint64_t master_seed, bool at_most) {
    EmpiricalP out;
    out.trials = trials;
    if (w < 0 || w > N * outer.n() || d < 0 || d > 63 || trials == 0) {
        return out;
    }
    const auto group = automorphism_group(outer.space());
    const auto count = static_cast<std::int64_t>(trials);
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : hits) num_threads(lab_threads())
    for (std::int64_t trial = 0; trial < count; ++trial) {
        Rng rng(trial_seed(master_seed, static_cast<std::uint64_t>(trial)));
        Interleaver pi = sample_interleaver(rng, static_cast<std::size_t>(N * outer.n()), group);
        const TurboInstance t(outer, inner, std::move(pi), N);
        const OuterGenerators gens(t);
        const std::size_t dim = gens.size();
        if (dim >= 40) {
            continue;
        }
        const std::uint64_t info_mask = (std::uint64_t{1} << gens.info_count()) - 1;
        std::vector<std::uint64_t> word(static_cast<std::size_t>(t.N_in()) + 1, 0);
        PackedWord eprime(static_cast<std::size_t>(N * outer.n()), outer.space().bits());
        const std::uint64_t low = d == 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << d) - 1;
        bool hit = false;
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << dim) && !hit; ++i) {
            const auto g = static_cast<std::size_t>(std::countr_zero(i));
            const auto& blocks = gens.perm_block(g);
            for (std::size_t j = 0; j < word.size(); ++j) {
                word[j] ^= blocks[j];
            }
            eprime.xor_with(gens.outer_word(g));
            const std::uint64_t gray = i ^ (i >> 1);
            if ((gray & info_mask) == 0 || eprime.weight() != w) {
                continue;
            }
            const std::uint64_t mask = achievable_weight_mask(gens.table(), static_cast<std::uint32_t>(word[0]),
                                                              std::span<const std::uint64_t>(word).subspan(1), d);
            hit = at_most ? (mask & low) != 0 : ((mask >> d) & 1) != 0;
        }
        hits += hit ? 1 : 0;
    }
    out.hits = hits;
    out.frequency = static_cast<double>(hits) / static_cast<double>(trials);
    out.sigma = std::sqrt(out.frequency * (1.0 - out.frequency) / static_cast<double>(trials));
    return out;
}

}  // namespace turbolab
