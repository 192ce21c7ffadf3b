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

#include "turbolab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "turbolab/classify.hpp"
#include "turbolab/parallel.hpp"
#include "turbolab/rng.hpp"
#include "turbolab/spectra.hpp"

namespace turbolab {

using nlohmann::json;

namespace {

std::uint64_t get_u64(const json& j, const char* key, std::uint64_t fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ConfigError(std::string("config field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

mpq_class get_rational(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw ConfigError(std::string("config is missing \"") + key + "\"");
    }
    const auto& v = j.at(key);
    try {
        if (v.is_string()) {
            return parse_rational(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return mpq_class(v.get<long>());
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config field \"") + key + "\": " + e.what());
    }
    throw ConfigError(std::string("config field \"") + key + "\" must be a string such as \"1/4\" or \"0.25\"");
}

std::vector<int> get_int_list(const json& j, const char* key) {
    std::vector<int> out;
    if (!j.contains(key)) {
        return out;
    }
    if (!j.at(key).is_array()) {
        throw ConfigError(std::string("config field \"") + key + "\" must be an array of integers");
    }
    for (const auto& e : j.at(key)) {
        if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1000000) {
            throw ConfigError(std::string("config field \"") + key + "\" must hold integers in [0, 10^6]");
        }
        out.push_back(e.get<int>());
    }
    return out;
}

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string utc_now(const char* format) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, format);
    return ss.str();
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

// Fixed-format doubles keep data files byte-stable.
std::string fixed(double v, int digits = 6) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
}

class CsvFile {
   public:
    CsvFile(const std::filesystem::path& path, const std::vector<std::string>& header) : out_(path, std::ios::binary) {
        if (!out_) {
            throw std::runtime_error("cannot write " + path.string());
        }
        row(header);
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out_ << (i ? "," : "") << cells[i];
        }
        out_ << '\n';
    }

   private:
    std::ofstream out_;
};

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

}  // namespace

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json ExperimentConfig::to_json() const {
    json j;
    j["outer"] = outer_path.string();
    j["inner"] = inner_path.string();
    j["n_grid"] = n_grid;
    j["trials"] = trials;
    j["master_seed"] = master_seed;
    j["mode"] = turbolab::to_string(mode);
    j["alpha"] = rational_string(alpha);
    j["x"] = rational_string(x);
    j["D"] = D_values;
    j["distance_budget"] = distance_budget;
    j["spectrum_budget"] = spectrum_budget;
    j["want_dq"] = want_dq;
    j["preserve_z"] = preserve_z;
    return j;
}

ExperimentConfig parse_experiment_config(const std::string& text, const std::string& source,
                                         const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw ConfigError(source + ":" + std::to_string(line) + ": malformed JSON");
    }
    if (!j.is_object()) {
        throw ConfigError(source + ": config must be a JSON object");
    }
    static const std::set<std::string> known = {"outer", "inner", "n_grid", "trials", "master_seed", "mode",
                                                "alpha", "x", "D", "distance_budget", "spectrum_budget",
                                                "want_dq", "preserve_z"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) {
            throw ConfigError(source + ": unknown config field \"" + key + "\"");
        }
    }
    ExperimentConfig c;
    try {
        for (const char* key : {"outer", "inner"}) {
            if (!j.contains(key) || !j.at(key).is_string()) {
                throw ConfigError(std::string("config field \"") + key + "\" must be a spec path");
            }
        }
        auto resolve = [&](const std::string& p) {
            const std::filesystem::path path(p);
            return path.is_absolute() ? path : base_dir / path;
        };
        c.outer_path = resolve(j.at("outer").get<std::string>());
        c.inner_path = resolve(j.at("inner").get<std::string>());
        c.n_grid = get_int_list(j, "n_grid");
        c.trials = get_u64(j, "trials", 0);
        c.master_seed = get_u64(j, "master_seed", 0);
        try {
            c.mode = parse_sum_mode(j.value("mode", std::string("poly")));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        c.alpha = get_rational(j, "alpha");
        c.x = get_rational(j, "x");
        c.D_values = get_int_list(j, "D");
        c.distance_budget = get_u64(j, "distance_budget", c.distance_budget);
        c.spectrum_budget = get_u64(j, "spectrum_budget", c.spectrum_budget);
        c.want_dq = j.value("want_dq", false);
        c.preserve_z = j.value("preserve_z", false);
    } catch (const json::exception& e) {
        throw ConfigError(source + ": " + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    if (c.distance_budget == 0 || c.spectrum_budget == 0) {
        throw ConfigError(source + ": budgets must be positive");
    }
    return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
    }
    return parse_experiment_config(text, path.string(), path.parent_path());
}

void validate_parameters(SumMode mode, const mpq_class& alpha, const mpq_class& x, const DistancePair& outer) {
    if (alpha <= 0) {
        throw ConfigError("alpha must be positive");
    }
    if (x <= 0) {
        throw ConfigError("x must be positive");
    }
    if (mode == SumMode::poly) {
        if (!outer.d_q || *outer.d_q <= 2) {
            throw ConfigError("poly mode needs an outer code with d_q > 2");
        }
        const mpq_class limit(*outer.d_q - 2, *outer.d_q);
        if (alpha >= limit) {
            throw ConfigError("alpha = " + rational_string(alpha) + " must be below (d_q - 2)/d_q = " +
                              rational_string(limit));
        }
    } else {
        if (!outer.d_c) {
            throw ConfigError("sublog mode needs an outer code with finite d_c");
        }
        if (alpha >= *outer.d_c - 2) {
            throw ConfigError("alpha = " + rational_string(alpha) + " must be below d_c - 2 = " +
                              std::to_string(*outer.d_c - 2));
        }
    }
}

json classification_report(const EncoderSpec& spec) {
    json j;
    j["name"] = spec.name;
    if (!spec.is_seed()) {
        const BlockEncoder& enc = *spec.block;
        const DistancePair d = distances(enc);
        j["kind"] = "block";
        j["n"] = enc.n();
        j["k"] = enc.k();
        j["d_c"] = optional_int(d.d_c);
        j["d_q"] = optional_int(d.d_q);
        return j;
    }
    const SeedMorphism& seed = *spec.seed;
    const TransitionGraph graph(seed);
    const MemoryClassification cls = classify(graph);
    const RecursionVerdict rec = is_recursive(graph, cls);
    j["kind"] = "seed";
    j["n"] = seed.n();
    j["k"] = seed.k();
    j["m"] = seed.m();
    j["s"] = seed.s();
    j["recursive"] = rec.recursive;
    j["eta"] = optional_int(cls.eta());
    j["count_I"] = cls.count_i();
    j["count_M0"] = cls.count_m0();
    j["count_M1"] = cls.count_m1();
    if (seed.kind() == MorphismKind::encoder) {
        j["totally_recursive"] = is_totally_recursive(seed).recursive;
        const SystematicReport sys = is_systematic(seed);
        j["systematic"] = to_string(sys.verdict);
    }
    if (rec.witness) {
        const LetterSpace& sp = seed.space();
        json w;
        w["memory"] = sp.format_word(rec.witness->memory);
        w["impulse"] = sp.format_word(rec.witness->impulse);
        w["impulse_stab"] = sp.format_word(rec.witness->impulse_stab);
        w["prefix_steps"] = rec.witness->prefix.size();
        w["tail_steps"] = rec.witness->tail.size();
        w["finite_weight"] = rec.witness->finite_weight;
        j["finite_impulse"] = w;
    }
    return j;
}

json turbo_input_json(const LetterSpace& space, const TurboInput& input) {
    return {{"info", space.format_word(input.info)},
            {"stab", space.format_word(input.stab)},
            {"inner_stab", space.format_word(input.inner_stab)}};
}

json sample_json(const LetterSpace& space, int N, const DistanceSample& sample, bool want_dq) {
    json j;
    j["type"] = "sample";
    j["N"] = N;
    j["trial"] = sample.trial;
    j["seed"] = hex64(sample.seed);
    j["d_c"] = optional_int(sample.d_c);
    if (want_dq) {
        j["d_q"] = optional_int(sample.d_q);
    }
    j["witness"] = sample.d_c ? turbo_input_json(space, sample.witness) : json(nullptr);
    return j;
}

json summary_json(int N, const McSummary& summary) {
    json j;
    j["type"] = "summary";
    j["N"] = N;
    j["trials"] = summary.trials;
    j["min"] = optional_int(summary.min);
    j["median"] = summary.median ? json(*summary.median) : json(nullptr);
    j["max"] = optional_int(summary.max);
    json below = json::array();
    for (const auto& [D, frac] : summary.below) {
        below.push_back({{"D", D}, {"fraction", frac}});
    }
    j["below"] = below;
    return j;
}

std::string run_directory_name(std::uint64_t master_seed) {
    return "run-" + utc_now("%Y%m%dT%H%M%SZ") + "-" + hex64(splitmix64(master_seed)).substr(0, 8);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_base,
                                std::ostream* log) {
    std::filesystem::path dir = out_base / run_directory_name(config.master_seed);
    for (int i = 1; std::filesystem::exists(dir); ++i) {
        dir = out_base / (run_directory_name(config.master_seed) + "-" + std::to_string(i));
    }
    return run_experiment_in(config, dir, log);
}

namespace {

struct Loaded {
    EncoderSpec outer;
    EncoderSpec inner;
};

Loaded load_pair(const ExperimentConfig& config) {
    Loaded l;
    try {
        l.outer = load_encoder_spec(config.outer_path);
        l.inner = load_encoder_spec(config.inner_path);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (l.outer.is_seed()) {
        throw ConfigError(config.outer_path.string() + ": outer spec must be a block encoder");
    }
    if (!l.inner.is_seed() || l.inner.seed->kind() != MorphismKind::encoder) {
        throw ConfigError(config.inner_path.string() + ": inner spec must be a seed encoder");
    }
    if (!(l.outer.space() == l.inner.space())) {
        throw ConfigError("outer and inner specs use different letter spaces");
    }
    return l;
}

}  // namespace

ExperimentResult run_experiment_in(const ExperimentConfig& config, const std::filesystem::path& run_dir,
                                   std::ostream* log) {
    const std::string started = utc_now("%Y-%m-%dT%H:%M:%SZ");
    const Loaded specs = load_pair(config);
    const BlockEncoder& outer = *specs.outer.block;
    const SeedMorphism& inner = *specs.inner.seed;
    const DistancePair outer_d = distances(outer);
    validate_parameters(config.mode, config.alpha, config.x, outer_d);

    ExperimentResult res;
    res.run_dir = run_dir;
    std::filesystem::create_directories(run_dir);
    auto note = [&](const std::string& s) {
        res.notices.push_back(s);
        if (log) {
            *log << s << '\n';
        }
    };

    std::vector<EligibleLength> grid;
    for (int N : config.n_grid) {
        const auto e = eligible_lengths(outer, inner, N, N);
        if (e.empty()) {
            res.skipped_n.push_back(N);
            note("N = " + std::to_string(N) + " is not eligible; skipped");
        } else if (config.mode == SumMode::sublog && N < 3) {
            res.skipped_n.push_back(N);
            note("N = " + std::to_string(N) + ": llog N needs N >= 3; skipped");
        } else {
            grid.push_back(e[0]);
        }
    }

    if (config.trials > 0) {
        for (const char* sub : {"classify", "spectra", "bounds", "mc"}) {
            std::filesystem::create_directories(run_dir / sub);
        }
        write_json(run_dir / "classify/outer.json", classification_report(specs.outer));
        write_json(run_dir / "classify/inner.json", classification_report(specs.inner));
        res.files.push_back("classify/outer.json");
        res.files.push_back("classify/inner.json");

        const int p_size = static_cast<int>(outer.space().size());
        std::optional<ConstantC> cc;
        if (p_size > 2 && outer_d.d_q && *outer_d.d_q >= 2) {
            cc = constant_c(outer);
        }

        CsvFile sums(run_dir / "bounds/partial_sums.csv",
                     {"N", "N_in", "D_floor", "xN_floor", "first", "second", "third", "total", "status"});
        CsvFile obounds(run_dir / "bounds/outer_bounds.csv", {"N", "d", "a_out", "bound_1E", "bound_2E"});
        CsvFile dc(run_dir / "mc/d_c.csv", {"N", "trial", "d_c"});
        CsvFile trend(run_dir / "trend.csv",
                      {"N", "N_in", "trials", "min_d_c", "median_d_c", "max_d_c", "threshold", "D_floor"});
        res.files.insert(res.files.end(), {"bounds/partial_sums.csv", "bounds/outer_bounds.csv", "mc/d_c.csv",
                                           "trend.csv"});

        for (const auto& [N, N_in] : grid) {
            const std::string tag = "N" + std::to_string(N);
            const OuterSpectrum os = outer_spectrum(outer, N);
            {
                const std::string name = "spectra/outer_" + tag + ".csv";
                CsvFile f(run_dir / name, {"d", "a"});
                for (std::size_t d = 0; d < os.counts.size(); ++d) {
                    f.row({std::to_string(d), os.counts[d].get_str()});
                }
                res.files.push_back(name);
            }
            const int w_top = N * outer.n();
            for (int d = 0; d <= w_top; ++d) {
                std::string b1 = "";
                if (outer_d.d_c && outer_d.d_q) {
                    b1 = bound_1E(outer.n(), *outer_d.d_c, *outer_d.d_q, p_size, d, N).sum.get_str();
                }
                const std::string b2 = cc ? rational_string(bound_2E(*cc, p_size, outer.n(), N, d)) : "";
                obounds.row({std::to_string(N), std::to_string(d), os.a(d).get_str(), b1, b2});
            }

            const long D_floor = config.mode == SumMode::poly ? floor_power(N, config.alpha)
                                                              : floor_alpha_llog(N, config.alpha);
            mpz_class xn;
            const mpq_class prod = config.x * N;
            mpz_fdiv_q(xn.get_mpz_t(), prod.get_num_mpz_t(), prod.get_den_mpz_t());
            try {
                const InnerSpectrum is = inner_spectrum(inner, N_in, w_top, static_cast<int>(std::max(D_floor, 0L)),
                                                        config.spectrum_budget);
                const std::string name = "spectra/inner_" + tag + ".csv";
                CsvFile f(run_dir / name, {"w", "d", "exact", "at_most"});
                for (int w = 0; w <= is.w_max; ++w) {
                    for (int d = 0; d <= is.d_max; ++d) {
                        f.row({std::to_string(w), std::to_string(d), is.a(w, d).get_str(), is.a_leq(w, d).get_str()});
                    }
                }
                res.files.push_back(name);
                const PartialSums ps = partial_sums(config.mode, config.alpha, config.x, N, outer.n(), p_size, os, is);
                sums.row({std::to_string(N), std::to_string(N_in), std::to_string(ps.D_floor),
                          std::to_string(ps.xN_floor), rational_string(ps.first), rational_string(ps.second),
                          rational_string(ps.third), rational_string(ps.total()), "ok"});
            } catch (const std::length_error&) {
                sums.row({std::to_string(N), std::to_string(N_in), std::to_string(D_floor), xn.get_str(), "", "", "",
                          "", "over_budget"});
                note("N = " + std::to_string(N) + ": inner spectrum exceeds spectrum_budget; partial sums skipped");
            }

            McOptions opt;
            opt.trials = config.trials;
            opt.master_seed = config.master_seed ^ (static_cast<std::uint64_t>(N) * 0x9E3779B97F4A7C15ULL);
            opt.want_dq = config.want_dq;
            opt.preserve_z = config.preserve_z;
            opt.budget = config.distance_budget;
            const auto samples = monte_carlo_distance(outer, inner, N, opt);
            std::vector<int> thresholds = config.D_values;
            thresholds.push_back(static_cast<int>(D_floor));
            std::sort(thresholds.begin(), thresholds.end());
            thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
            const McSummary summary = summarize(samples, thresholds);
            {
                const std::string name = "mc/" + tag + ".jsonl";
                std::ofstream f(run_dir / name, std::ios::binary);
                for (const auto& s : samples) {
                    f << sample_json(outer.space(), N, s, config.want_dq).dump() << '\n';
                    dc.row({std::to_string(N), std::to_string(s.trial), s.d_c ? std::to_string(*s.d_c) : ""});
                }
                f << summary_json(N, summary).dump() << '\n';
                res.files.push_back(name);
            }
            auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
            trend.row({std::to_string(N), std::to_string(N_in), std::to_string(summary.trials), cell(summary.min),
                       summary.median ? fixed(*summary.median, 1) : "", cell(summary.max),
                       fixed(threshold_value(config.mode, N, config.alpha)), std::to_string(D_floor)});
            if (log) {
                *log << "N = " << N << ": median d_c "
                     << (summary.median ? fixed(*summary.median, 1) : std::string("-")) << " over " << config.trials
                     << " trials\n";
            }
        }
    } else {
        note("trials = 0; manifest only");
    }

    json manifest;
    manifest["tool"] = "turbolab";
    manifest["version"] = TURBOLAB_VERSION;
    manifest["config"] = config.to_json();
    manifest["master_seed"] = config.master_seed;
    manifest["outer_spec"] = to_json(outer, specs.outer.name);
    manifest["inner_spec"] = to_json(inner, specs.inner.name);
    manifest["outer_distances"] = {{"d_c", optional_int(outer_d.d_c)}, {"d_q", optional_int(outer_d.d_q)}};
    manifest["eligible"] = json::array();
    for (const auto& e : grid) {
        manifest["eligible"].push_back({{"N", e.N}, {"N_in", e.N_in}});
    }
    manifest["skipped_n"] = res.skipped_n;
    manifest["notices"] = res.notices;
    manifest["files"] = res.files;
    manifest["threads"] = lab_threads();
    manifest["started_at"] = started;
    manifest["finished_at"] = utc_now("%Y-%m-%dT%H:%M:%SZ");
    write_json(run_dir / "manifest.json", manifest);
    validate_run_outputs(run_dir);
    return res;
}

namespace {

const std::map<std::string, std::vector<std::string>>& csv_schemas() {
    static const std::map<std::string, std::vector<std::string>> s = {
        {"partial_sums.csv", {"N", "N_in", "D_floor", "xN_floor", "first", "second", "third", "total", "status"}},
        {"outer_bounds.csv", {"N", "d", "a_out", "bound_1E", "bound_2E"}},
        {"d_c.csv", {"N", "trial", "d_c"}},
        {"trend.csv", {"N", "N_in", "trials", "min_d_c", "median_d_c", "max_d_c", "threshold", "D_floor"}},
        {"outer", {"d", "a"}},
        {"inner", {"w", "d", "exact", "at_most"}},
    };
    return s;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

void require_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    for (const char* k : keys) {
        if (!j.contains(k)) {
            throw std::runtime_error(where + ": missing key \"" + k + "\"");
        }
    }
}

void validate_csv(const std::filesystem::path& path, const std::vector<std::string>& header) {
    std::ifstream in(path);
    std::string line;
    if (!std::getline(in, line) || split_csv(line) != header) {
        throw std::runtime_error(path.string() + ": unexpected CSV header");
    }
    for (int n = 2; std::getline(in, line); ++n) {
        if (split_csv(line).size() != header.size()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(n) + ": wrong number of columns");
        }
    }
}

}  // namespace

void validate_run_outputs(const std::filesystem::path& run_dir) {
    const std::filesystem::path mpath = run_dir / "manifest.json";
    json manifest;
    try {
        manifest = json::parse(read_text_file(mpath));
    } catch (const std::exception& e) {
        throw std::runtime_error(mpath.string() + ": " + e.what());
    }
    require_keys(manifest, {"tool", "version", "config", "master_seed", "files", "started_at", "finished_at"},
                 mpath.string());
    for (const auto& f : manifest.at("files")) {
        const std::filesystem::path path = run_dir / f.get<std::string>();
        if (!std::filesystem::exists(path)) {
            throw std::runtime_error(path.string() + ": listed in manifest but missing");
        }
        const std::string name = path.filename().string();
        if (path.extension() == ".csv") {
            const auto& schemas = csv_schemas();
            auto it = schemas.find(name);
            if (it == schemas.end()) {
                it = schemas.find(name.substr(0, name.find('_')));
            }
            if (it == schemas.end()) {
                throw std::runtime_error(path.string() + ": no schema for this file");
            }
            validate_csv(path, it->second);
        } else if (path.extension() == ".jsonl") {
            std::ifstream in(path);
            std::string line;
            bool summary = false;
            for (int n = 1; std::getline(in, line); ++n) {
                const std::string where = path.string() + ":" + std::to_string(n);
                json j;
                try {
                    j = json::parse(line);
                } catch (const json::exception& e) {
                    throw std::runtime_error(where + ": " + e.what());
                }
                require_keys(j, {"type", "N"}, where);
                if (summary) {
                    throw std::runtime_error(where + ": record after the summary");
                }
                if (j.at("type") == "sample") {
                    require_keys(j, {"trial", "seed", "d_c", "witness"}, where);
                } else if (j.at("type") == "summary") {
                    require_keys(j, {"trials", "min", "median", "max", "below"}, where);
                    summary = true;
                } else {
                    throw std::runtime_error(where + ": unknown record type");
                }
            }
            if (!summary) {
                throw std::runtime_error(path.string() + ": no summary record");
            }
        } else if (path.extension() == ".json") {
            json j;
            try {
                j = json::parse(read_text_file(path));
            } catch (const std::exception& e) {
                throw std::runtime_error(path.string() + ": " + e.what());
            }
            require_keys(j, {"name", "kind", "n", "k"}, path.string());
        } else {
            throw std::runtime_error(path.string() + ": no schema for this file");
        }
    }
}

}  // namespace turbolab
