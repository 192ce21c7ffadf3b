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

// Command-line front end. Exit codes: 0 ok, 1 check failure, 2 usage or
// parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "turbolab/bounds.hpp"
#include "turbolab/classify.hpp"
#include "turbolab/experiment.hpp"
#include "turbolab/parallel.hpp"
#include "turbolab/spec_io.hpp"
#include "turbolab/spectra.hpp"
#include "turbolab/trace.hpp"
#include "turbolab/turbo.hpp"
#include "turbolab/verify.hpp"

namespace {

using namespace turbolab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "4,6,8", "4:12" or "4:12:2".
std::vector<int> parse_grid(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty() || v < 0) {
            throw UsageError("bad --n-grid entry '" + s + "'");
        }
        return v;
    };
    while (std::getline(ss, item, ',')) {
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(num(item));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        const int lo = num(item.substr(0, c1));
        const int hi = num(item.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
        const int step = c2 == std::string::npos ? 1 : num(item.substr(c2 + 1));
        if (step <= 0) {
            throw UsageError("--n-grid step must be positive");
        }
        for (int v = lo; v <= hi; v += step) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw UsageError("--n-grid is empty");
    }
    return out;
}

// Writes to --out when given, else stdout.
class Output {
   public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw UsageError("cannot write " + path);
            }
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

   private:
    std::ofstream file_;
};

EncoderSpec load_block(const std::string& path) {
    EncoderSpec s = load_encoder_spec(path);
    if (s.is_seed()) {
        throw UsageError(path + ": expected a block encoder spec (no \"m\")");
    }
    return s;
}

EncoderSpec load_seed(const std::string& path) {
    EncoderSpec s = load_encoder_spec(path);
    if (!s.is_seed()) {
        throw UsageError(path + ": expected a seed spec (with \"m\")");
    }
    return s;
}

Letters parse_word_arg(const LetterSpace& sp, const std::string& text) {
    try {
        return sp.parse_word(text);
    } catch (const std::exception& e) {
        throw UsageError("cannot parse word '" + text + "': " + e.what());
    }
}

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"turbolab: error propagation analysis for quantum and classical turbo codes"};
    app.set_version_flag("--version", std::string(TURBOLAB_VERSION));
    app.require_subcommand(1);

    std::string out_path;
    std::string grid_text;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t budget = 0;
    std::string alpha_text;
    std::string x_text;
    std::string mode_text = "poly";
    std::vector<std::string> positional;

    auto* classify_cmd = app.add_subcommand("classify", "classify an encoder spec (JSON report)");
    classify_cmd->add_option("spec", positional, "encoder spec")->required()->expected(1);
    classify_cmd->add_option("--out", out_path, "output file");
    bool want_dot = false;
    classify_cmd->add_flag("--dot", want_dot, "emit the memory graph in Graphviz form instead");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "weight spectrum as CSV");
    spectrum_cmd->add_option("spec", positional, "encoder spec")->required()->expected(1);
    spectrum_cmd->add_option("--n-grid", grid_text, "lengths, e.g. 1,2,3 or 1:4")->required();
    int w_max = 4;
    int d_max = 4;
    spectrum_cmd->add_option("--w-max", w_max, "largest input weight (seeds)")->check(CLI::Range(0, 64));
    spectrum_cmd->add_option("--d-max", d_max, "largest output weight (seeds)")->check(CLI::Range(0, 4096));
    spectrum_cmd->add_option("--budget", budget, "enumeration budget");
    spectrum_cmd->add_option("--out", out_path, "output file");

    auto* bounds_cmd = app.add_subcommand("bounds", "three partial sums per N as CSV");
    bounds_cmd->add_option("specs", positional, "outer and inner specs")->required()->expected(2);
    bounds_cmd->add_option("--n-grid", grid_text, "lengths")->required();
    bounds_cmd->add_option("--mode", mode_text, "poly or sublog");
    bounds_cmd->add_option("--alpha", alpha_text, "alpha as decimal or a/b")->required();
    bounds_cmd->add_option("--x", x_text, "x as decimal or a/b")->required();
    bounds_cmd->add_option("--budget", budget, "inner spectrum budget");
    bounds_cmd->add_option("--out", out_path, "output file");

    auto* trace_cmd = app.add_subcommand("trace", "trace and detours of an input");
    trace_cmd->add_option("spec", positional, "seed spec")->required()->expected(1);
    std::string info_text;
    std::string stab_text;
    trace_cmd->add_option("--info", info_text, "information letters L_1 L_2 ... concatenated")->required();
    trace_cmd->add_option("--stab", stab_text, "stabilizer letters (default all identity)");
    trace_cmd->add_option("--out", out_path, "output file");

    auto* td_cmd = app.add_subcommand("turbo-distance", "exact distance of one sampled turbo instance");
    td_cmd->add_option("specs", positional, "outer and inner specs")->required()->expected(2);
    td_cmd->add_option("--n-grid", grid_text, "outer length N (first entry used)")->required();
    td_cmd->add_option("--seed", seed, "master seed");
    std::uint64_t trial = 0;
    td_cmd->add_option("--trial", trial, "trial index");
    bool want_dq = false;
    td_cmd->add_flag("--dq", want_dq, "also compute d_q");
    td_cmd->add_option("--budget", budget, "outer input budget");
    td_cmd->add_option("--out", out_path, "output file");

    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo distance over random interleavers (JSON lines)");
    mc_cmd->add_option("specs", positional, "outer and inner specs")->required()->expected(2);
    mc_cmd->add_option("--n-grid", grid_text, "lengths")->required();
    mc_cmd->add_option("--trials", trials, "trials per N")->required();
    mc_cmd->add_option("--seed", seed, "master seed");
    mc_cmd->add_flag("--dq", want_dq, "also compute d_q");
    std::vector<int> thresholds;
    mc_cmd->add_option("--D", thresholds, "thresholds for P(d_c <= D)")->delimiter(',');
    std::string csv_path;
    mc_cmd->add_option("--csv", csv_path, "also write N,trial,d_c as CSV");
    mc_cmd->add_option("--budget", budget, "outer input budget per trial");
    mc_cmd->add_option("--out", out_path, "output file");

    auto* exp_cmd = app.add_subcommand("experiment", "run a configured experiment into a run directory");
    exp_cmd->add_option("config", positional, "experiment config JSON")->required()->expected(1);
    exp_cmd->add_option("--out", out_path, "base directory (default: runs)");
    std::optional<std::uint64_t> seed_override;
    std::optional<std::uint64_t> trials_override;
    exp_cmd->add_option("--seed", seed_override, "override master_seed");
    exp_cmd->add_option("--trials", trials_override, "override trials");
    exp_cmd->add_option("--n-grid", grid_text, "override n_grid");
    exp_cmd->add_option("--mode", mode_text, "override mode");
    exp_cmd->add_option("--alpha", alpha_text, "override alpha");
    exp_cmd->add_option("--x", x_text, "override x");
    exp_cmd->add_option("--budget", budget, "override distance_budget");

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant checks on a corpus directory");
    verify_cmd->add_option("corpus", positional, "corpus directory")->expected(0, 1);
    verify_cmd->add_option("--seed", seed, "seed for random checks");
    verify_cmd->add_option("--trials", trials, "random runs per seed (default 1000)");
    verify_cmd->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        (void)lab_threads();
        Output out(*exp_cmd ? std::string() : out_path);
        std::ostream& os = out.os();

        if (*classify_cmd) {
            const EncoderSpec spec = load_encoder_spec(positional[0]);
            if (want_dot) {
                if (!spec.is_seed()) {
                    throw UsageError("--dot needs a seed spec");
                }
                const TransitionGraph g(*spec.seed);
                os << to_dot(g, classify(g));
            } else {
                os << classification_report(spec).dump(2) << '\n';
            }
            return kExitOk;
        }

        if (*spectrum_cmd) {
            const EncoderSpec spec = load_encoder_spec(positional[0]);
            const auto grid = parse_grid(grid_text);
            if (spec.is_seed()) {
                os << "N,w,d,exact,at_most\n";
                for (int N : grid) {
                    const InnerSpectrum s = inner_spectrum(*spec.seed, N, w_max, d_max,
                                                           budget ? budget : kDefaultSpectrumBudget);
                    for (int w = 0; w <= w_max; ++w) {
                        for (int d = 0; d <= d_max; ++d) {
                            os << N << ',' << w << ',' << d << ',' << s.a(w, d).get_str() << ','
                               << s.a_leq(w, d).get_str() << '\n';
                        }
                    }
                }
            } else {
                os << "N,d,a\n";
                for (int N : grid) {
                    const OuterSpectrum s = outer_spectrum(*spec.block, N);
                    for (std::size_t d = 0; d < s.counts.size(); ++d) {
                        os << N << ',' << d << ',' << s.counts[d].get_str() << '\n';
                    }
                }
            }
            return kExitOk;
        }

        if (*bounds_cmd) {
            const EncoderSpec outer = load_block(positional[0]);
            const EncoderSpec inner = load_seed(positional[1]);
            const SumMode mode = parse_sum_mode(mode_text);
            const mpq_class alpha = parse_rational(alpha_text);
            const mpq_class x = parse_rational(x_text);
            const BlockEncoder& enc = *outer.block;
            validate_parameters(mode, alpha, x, distances(enc));
            os << "N,N_in,D_floor,xN_floor,first,second,third,total\n";
            for (int N : parse_grid(grid_text)) {
                const auto e = eligible_lengths(enc, *inner.seed, N, N);
                if (e.empty()) {
                    std::cerr << "N = " << N << " is not eligible; skipped\n";
                    continue;
                }
                if (mode == SumMode::sublog && N < 3) {
                    std::cerr << "N = " << N << ": llog N needs N >= 3; skipped\n";
                    continue;
                }
                const long D = mode == SumMode::poly ? floor_power(N, alpha) : floor_alpha_llog(N, alpha);
                const InnerSpectrum is = inner_spectrum(*inner.seed, e[0].N_in, N * enc.n(),
                                                        static_cast<int>(std::max(D, 0L)),
                                                        budget ? budget : kDefaultSpectrumBudget);
                const PartialSums ps = partial_sums(mode, alpha, x, N, enc.n(), static_cast<int>(enc.space().size()),
                                                    outer_spectrum(enc, N), is);
                os << N << ',' << e[0].N_in << ',' << ps.D_floor << ',' << ps.xN_floor << ','
                   << rational_string(ps.first) << ',' << rational_string(ps.second) << ','
                   << rational_string(ps.third) << ',' << rational_string(ps.total()) << '\n';
            }
            return kExitOk;
        }

        if (*trace_cmd) {
            const EncoderSpec spec = load_seed(positional[0]);
            const SeedMorphism& s = *spec.seed;
            const LetterSpace& sp = s.space();
            const Letters info = parse_word_arg(sp, info_text);
            if (s.k() == 0 || info.size() % static_cast<std::size_t>(s.k()) != 0) {
                throw UsageError("--info length must be a multiple of k");
            }
            const std::size_t N = info.size() / static_cast<std::size_t>(s.k());
            Letters stab = stab_text.empty() ? Letters(N * static_cast<std::size_t>(s.s()), 0) : parse_word_arg(sp, stab_text);
            if (stab.size() != N * static_cast<std::size_t>(s.s())) {
                throw UsageError("--stab must have N s letters");
            }
            ConvInput in;
            in.memory.assign(static_cast<std::size_t>(s.m()), 0);
            for (std::size_t i = 0; i < N; ++i) {
                const auto k = static_cast<std::size_t>(s.k());
                const auto st = static_cast<std::size_t>(s.s());
                in.info.emplace_back(info.begin() + static_cast<std::ptrdiff_t>(i * k),
                                     info.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
                in.stab.emplace_back(stab.begin() + static_cast<std::ptrdiff_t>(i * st),
                                     stab.begin() + static_cast<std::ptrdiff_t>((i + 1) * st));
            }
            const MemoryClassification cls = classify(s);
            const TraceDecomposition t = trace_and_detours(s, cls, in);
            json j;
            j["bits"] = t.bits;
            j["positions"] = t.positions;
            j["block_indices"] = t.block_indices;
            json mems = json::array();
            for (const auto& m : t.memories) {
                mems.push_back(sp.format_word(m));
            }
            j["memories"] = mems;
            j["detour_starts"] = t.detour_starts;
            j["delta_p"] = t.delta_p;
            j["terminating"] = t.terminating;
            j["info_weight"] = t.info_weight();
            j["output_weight"] = t.output_weight;
            os << j.dump(2) << '\n';
            return kExitOk;
        }

        if (*td_cmd) {
            const EncoderSpec outer = load_block(positional[0]);
            const EncoderSpec inner = load_seed(positional[1]);
            const int N = parse_grid(grid_text).front();
            const TurboInstance t(*outer.block, *inner.seed,
                                  trial_interleaver(*outer.block, N, seed, trial), N);
            const TurboDistance d = turbo_distance_exact(t, want_dq, budget ? budget : (std::uint64_t{1} << 22));
            json j;
            j["N"] = N;
            j["N_in"] = t.N_in();
            j["trial"] = trial;
            j["d_c"] = d.d_c ? json(*d.d_c) : json(nullptr);
            if (want_dq) {
                j["d_q"] = d.d_q ? json(*d.d_q) : json(nullptr);
            }
            j["outer_inputs"] = d.outer_inputs;
            j["witness"] = d.d_c ? turbo_input_json(outer.space(), d.witness_c) : json(nullptr);
            os << j.dump() << '\n';
            return kExitOk;
        }

        if (*mc_cmd) {
            const EncoderSpec outer = load_block(positional[0]);
            const EncoderSpec inner = load_seed(positional[1]);
            std::unique_ptr<std::ofstream> csv;
            if (!csv_path.empty()) {
                csv = std::make_unique<std::ofstream>(csv_path, std::ios::binary);
                *csv << "N,trial,d_c\n";
            }
            for (int N : parse_grid(grid_text)) {
                if (eligible_lengths(*outer.block, *inner.seed, N, N).empty()) {
                    std::cerr << "N = " << N << " is not eligible; skipped\n";
                    continue;
                }
                McOptions opt;
                opt.trials = trials;
                opt.master_seed = seed;
                opt.want_dq = want_dq;
                if (budget) {
                    opt.budget = budget;
                }
                const auto samples = monte_carlo_distance(*outer.block, *inner.seed, N, opt);
                for (const auto& s : samples) {
                    os << sample_json(outer.space(), N, s, want_dq).dump() << '\n';
                    if (csv) {
                        *csv << N << ',' << s.trial << ',' << cell(s.d_c) << '\n';
                    }
                }
                os << summary_json(N, summarize(samples, thresholds)).dump() << '\n';
            }
            return kExitOk;
        }

        if (*exp_cmd) {
            ExperimentConfig c = load_experiment_config(positional[0]);
            if (seed_override) {
                c.master_seed = *seed_override;
            }
            if (trials_override) {
                c.trials = *trials_override;
            }
            if (!grid_text.empty()) {
                c.n_grid = parse_grid(grid_text);
            }
            if (exp_cmd->count("--mode")) {
                c.mode = parse_sum_mode(mode_text);
            }
            if (!alpha_text.empty()) {
                c.alpha = parse_rational(alpha_text);
            }
            if (!x_text.empty()) {
                c.x = parse_rational(x_text);
            }
            if (budget) {
                c.distance_budget = budget;
            }
            const ExperimentResult r = run_experiment(c, out_path.empty() ? "runs" : out_path, &std::cerr);
            std::cout << r.run_dir.string() << '\n';
            return kExitOk;
        }

        if (*verify_cmd) {
            VerifyOptions opt;
            opt.seed = seed ? seed : 1;
            if (trials) {
                opt.random_runs = static_cast<int>(trials);
            }
            const VerifyReport r = run_verify(positional.empty() ? "corpus" : positional[0], opt);
            for (const auto& c : r.checks) {
                os << (c.passed ? "PASS " : "FAIL ") << c.subject << ' ' << c.check
                   << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
            }
            for (const auto& w : r.warnings) {
                os << "WARN " << w << '\n';
            }
            os << r.checks.size() - r.failures() << " passed, " << r.failures() << " failed\n";
            return r.ok() ? kExitOk : kExitCheck;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheck;
    }
    return kExitUsage;
}
