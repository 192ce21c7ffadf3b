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

#include "turbolab/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "turbolab/bounds.hpp"
#include "turbolab/classify.hpp"
#include "turbolab/rng.hpp"
#include "turbolab/spec_io.hpp"
#include "turbolab/spectra.hpp"
#include "turbolab/trace.hpp"

namespace turbolab {

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

namespace {

Letters random_letters(Rng& rng, std::size_t count, const LetterSpace& space) {
    Letters out(count);
    for (auto& x : out) {
        x = static_cast<Letter>(rng.uniform_below(space.size()));
    }
    return out;
}

Letters random_z_letters(Rng& rng, std::size_t count, const LetterSpace& space) {
    Letters out(count);
    for (auto& x : out) {
        x = space.z_elements()[rng.uniform_below(space.z_size())];
    }
    return out;
}

ConvInput random_conv_input(Rng& rng, const SeedMorphism& seed, int steps, bool zero_memory, bool z_stab) {
    const LetterSpace& sp = seed.space();
    ConvInput in;
    in.memory = zero_memory ? Letters(static_cast<std::size_t>(seed.m()), 0)
                            : random_letters(rng, static_cast<std::size_t>(seed.m()), sp);
    for (int i = 0; i < steps; ++i) {
        in.info.push_back(random_letters(rng, static_cast<std::size_t>(seed.k()), sp));
        in.stab.push_back(z_stab ? random_z_letters(rng, static_cast<std::size_t>(seed.s()), sp)
                                 : random_letters(rng, static_cast<std::size_t>(seed.s()), sp));
    }
    return in;
}

bool same_input(const ConvInput& a, const ConvInput& b) {
    return a.memory == b.memory && a.info == b.info && a.stab == b.stab;
}

class Checker {
   public:
    Checker(VerifyReport& report, std::string subject) : report_(report), subject_(std::move(subject)) {}

    // Runs `body`; it returns an empty string on success or a diagnostic.
    void run(const std::string& check, const std::function<std::string()>& body) {
        CheckResult r{subject_, check, false, ""};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(r));
    }
    void warn(const std::string& text) { report_.warnings.push_back(subject_ + ": " + text); }

   private:
    VerifyReport& report_;
    std::string subject_;
};

void check_block(Checker& ck, const BlockEncoder& enc, const VerifyOptions& opt) {
    ck.run("round_trip", [&]() -> std::string {
        const int bits = enc.space().bits() * enc.n();
        Rng rng(opt.seed);
        const bool exhaustive = bits <= 16;
        const std::uint64_t total = exhaustive ? (std::uint64_t{1} << bits) : static_cast<std::uint64_t>(opt.random_blocks);
        const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
        for (std::uint64_t i = 0; i < total; ++i) {
            const std::uint64_t x = exhaustive ? i : (rng.next() & mask);
            if (enc.invert_bits(enc.apply_bits(x)) != x) {
                return "decode(encode(x)) != x for packed input " + std::to_string(x);
            }
        }
        return "";
    });
    const DistancePair d = distances(enc);
    ck.run("distance_order", [&]() -> std::string {
        if (d.d_c && d.d_q && *d.d_q > *d.d_c) {
            return "d_q > d_c";
        }
        return "";
    });
    ck.run("outer_spectrum", [&]() -> std::string {
        const int gen_bits = enc.information_generator_count() + enc.space().z_rank() * (enc.n() - enc.k());
        const int p_size = static_cast<int>(enc.space().size());
        for (int N = 1; N <= 3 && gen_bits * N <= 26; ++N) {
            const OuterSpectrum fast = outer_spectrum(enc, N);
            const OuterSpectrum ref = outer_spectrum_reference(enc, N);
            for (int w = 0; w <= N * enc.n(); ++w) {
                if (fast.a(w) != ref.a(w)) {
                    return "N = " + std::to_string(N) + ", weight " + std::to_string(w) + ": " + fast.a(w).get_str() +
                           " vs brute force " + ref.a(w).get_str();
                }
                if (d.d_c && d.d_q && fast.a(w) > bound_1E(enc.n(), *d.d_c, *d.d_q, p_size, w, N).sum) {
                    return "bound 1E violated at N = " + std::to_string(N) + ", d = " + std::to_string(w);
                }
            }
        }
        return "";
    });
}

void check_seed(Checker& ck, const SeedMorphism& seed, const VerifyOptions& opt) {
    const LetterSpace& sp = seed.space();
    const bool encoder = seed.kind() == MorphismKind::encoder;
    if (encoder) {
        ck.run("round_trip", [&]() -> std::string {
            const int bits = sp.bits() * seed.output_letters();
            if (bits <= 16) {
                for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x) {
                    const Letters in = unpack_letters(x, static_cast<std::size_t>(seed.input_letters()), sp.bits());
                    if (seed.invert(seed.apply(in)) != in) {
                        return "step inverse fails on packed input " + std::to_string(x);
                    }
                }
            }
            Rng rng(opt.seed);
            for (int r = 0; r < opt.random_runs; ++r) {
                const ConvInput in = random_conv_input(rng, seed, 1 + static_cast<int>(rng.uniform_below(12)), false, false);
                const ConvOutput out = conv_apply(seed, in);
                if (!same_input(conv_invert(seed, out.final_memory, out.physical), in)) {
                    return "convolutional inverse fails on run " + std::to_string(r);
                }
            }
            return "";
        });
        ck.run("truncated_decoder", [&]() -> std::string {
            Rng rng(opt.seed + 1);
            for (int r = 0; r < opt.random_runs; ++r) {
                const ConvInput in = random_conv_input(rng, seed, 1 + static_cast<int>(rng.uniform_below(12)), false, false);
                const ConvOutput out = conv_apply(seed, in);
                const TruncatedDecodeResult dec = conv_truncated_decode(seed, out.final_memory, out.physical);
                std::vector<Letters> memories{in.memory};
                memories.insert(memories.end(), out.memories.begin(), out.memories.end());
                if (dec.info != in.info || dec.initial_memory != in.memory || dec.memories != memories) {
                    return "truncated decode disagrees on run " + std::to_string(r);
                }
            }
            return "";
        });
    }

    const TransitionGraph graph(seed);
    const MemoryClassification cls = classify(graph);
    const StepTable& table = graph.table();
    const std::optional<int> eta = cls.eta();
    if (eta) {
        ck.run("speed", [&]() -> std::string {
            const std::vector<std::uint64_t> zeros(static_cast<std::size_t>(*eta), 0);
            for (std::uint32_t st = 0; st < graph.state_count(); ++st) {
                if (cls.is_m1(st) && min_weight_over_stabilizers(table, st, zeros, false) < 1) {
                    return "state " + std::to_string(st) + " emits nothing for " + std::to_string(*eta) + " steps";
                }
            }
            const SpeedWitness& w = *cls.speed;
            if (!cls.is_m1(w.start) || static_cast<int>(w.choices.size()) != *eta - 1) {
                return "malformed speed witness";
            }
            std::uint32_t st = w.start;
            for (std::size_t j : w.choices) {
                const std::uint64_t out = table.step(st, 0, j);
                if (table.physical_weight(out) != 0) {
                    return "speed witness emits output";
                }
                st = table.next_state(out);
            }
            return "";
        });
        ck.run("m1_lower_bound", [&]() -> std::string {
            for (int N = 1; N <= 3 * *eta; ++N) {
                const std::vector<std::uint64_t> zeros(static_cast<std::size_t>(N), 0);
                for (std::uint32_t st = 0; st < graph.state_count(); ++st) {
                    if (cls.is_m1(st) && min_weight_over_stabilizers(table, st, zeros, false) < N / *eta) {
                        return "N = " + std::to_string(N) + ", state " + std::to_string(st);
                    }
                }
            }
            return "";
        });
    }

    const RecursionVerdict rec = is_recursive(graph, cls);
    if (!rec.recursive) {
        return;
    }
    ck.run("trace_invariants", [&]() -> std::string {
        Rng rng(opt.seed + 2);
        for (int r = 0; r < opt.random_runs; ++r) {
            const int N = 1 + static_cast<int>(rng.uniform_below(12));
            const ConvInput in = random_conv_input(rng, seed, N, true, true);
            const TraceDecomposition t = trace_and_detours(seed, cls, in);
            const int w = t.info_weight();
            for (int i = 0; i < w; ++i) {
                if (t.bits[static_cast<std::size_t>(i)] == 0 && t.bits[static_cast<std::size_t>(i) + 1] == 0) {
                    return "two consecutive zero trace bits on run " + std::to_string(r);
                }
            }
            if (t.detour_count() > w / 2 + 1) {
                return "too many detours on run " + std::to_string(r);
            }
            const long cap = std::min<long>(static_cast<long>(seed.k()) * N,
                                            static_cast<long>(*eta) * seed.k() * (w + t.output_weight));
            if (t.delta_p_sum() > cap) {
                return "detour lengths exceed the bound on run " + std::to_string(r);
            }
        }
        return "";
    });
    ck.run("inner_dominance", [&]() -> std::string {
        const int p_size = static_cast<int>(sp.size());
        for (int N = 1; N <= 6; ++N) {
            InnerSpectrum s;
            try {
                s = inner_spectrum(seed, N, 4, 4);
            } catch (const std::length_error&) {
                ck.warn("inner spectrum over budget at N = " + std::to_string(N));
                break;
            }
            for (int w = 0; w <= 4; ++w) {
                for (int d = 0; d <= 4; ++d) {
                    const mpz_class bound = theorem_inner_bound(seed.m(), seed.k(), w, d, N, *eta, p_size);
                    if (s.a(w, d) > bound || s.a_leq(w, d) > bound) {
                        return "N = " + std::to_string(N) + ", (w, d) = (" + std::to_string(w) + ", " +
                               std::to_string(d) + ")";
                    }
                }
            }
        }
        return "";
    });
    ck.run("inner_spectrum_oracle", [&]() -> std::string {
        for (int N = 1; N <= 3; ++N) {
            if (sp.bits() * (seed.m() + N * (seed.k() + seed.s())) > 30) {
                break;
            }
            const InnerSpectrum fast = inner_spectrum(seed, N, 4, 6);
            const InnerSpectrum ref = inner_spectrum_reference(seed, N, 4, 6);
            if (fast.exact != ref.exact || fast.at_most != ref.at_most) {
                return "inner spectrum disagrees with brute force at N = " + std::to_string(N);
            }
        }
        return "";
    });
    if (encoder) {
        const SystematicReport sys = is_systematic(seed);
        if (sys.verdict == SystematicVerdict::structural_pass) {
            ck.run("systematic_vanishing", [&]() -> std::string {
                for (int N = 1; N <= 6; ++N) {
                    InnerSpectrum s;
                    try {
                        s = inner_spectrum(seed, N, 6, 6);
                    } catch (const std::length_error&) {
                        break;
                    }
                    for (int w = 0; w <= 6; ++w) {
                        for (int d = 0; d < w; ++d) {
                            if (s.a(w, d) != 0) {
                                return "a_N(w, d) > 0 with w > d at N = " + std::to_string(N);
                            }
                        }
                    }
                }
                return "";
            });
        } else if (sys.verdict == SystematicVerdict::falsified) {
            ck.run("systematic_witness", [&]() -> std::string {
                const ConvInput& in = *sys.witness;
                std::size_t info_weight = 0;
                for (const auto& blk : in.info) {
                    info_weight += weight(blk);
                }
                if (conv_apply(seed, in).weight() >= info_weight) {
                    return "witness does not lose weight";
                }
                return "";
            });
        }
    }
}

}  // namespace

VerifyReport run_verify(const std::filesystem::path& corpus_dir, const VerifyOptions& options) {
    VerifyReport report;
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(corpus_dir)) {
        report.checks.push_back({corpus_dir.string(), "corpus", false, "not a directory"});
        return report;
    }
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        report.warnings.push_back(corpus_dir.string() + ": no specs found");
        return report;
    }
    for (const auto& path : files) {
        Checker ck(report, path.filename().string());
        std::optional<EncoderSpec> spec;
        ck.run("validation", [&]() -> std::string {
            spec = load_encoder_spec(path);
            return "";
        });
        if (!spec) {
            continue;
        }
        if (spec->is_seed()) {
            check_seed(ck, *spec->seed, options);
        } else {
            check_block(ck, *spec->block, options);
        }
    }
    return report;
}

}  // namespace turbolab
