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

#include <fstream>
#include <regex>
#include <sstream>

#include "support.hpp"
#include "turbolab/experiment.hpp"
#include "turbolab/parallel.hpp"
#include "turbolab/verify.hpp"

using namespace turbolab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("turbolab_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(Spec, ParsesBlockAndSeed) {
    const EncoderSpec rep = load_encoder_spec(testsupport::corpus("rep3.json"));
    EXPECT_EQ(rep.name, "rep3");
    ASSERT_TRUE(rep.block.has_value());
    EXPECT_FALSE(rep.is_seed());
    EXPECT_EQ(rep.block->n(), 3);
    const EncoderSpec q = load_encoder_spec(testsupport::corpus("qseed_rec.json"));
    ASSERT_TRUE(q.is_seed());
    EXPECT_EQ(q.seed->m(), 2);
    EXPECT_TRUE(q.space().is_pauli_layout());
}

TEST(Spec, JsonRoundTrip) {
    for (const char* file : {"rep3.json", "quantum_5_1.json", "seed_SYS.json", "qseed_rec.json"}) {
        const EncoderSpec s = load_encoder_spec(testsupport::corpus(file));
        const nlohmann::json j = s.is_seed() ? to_json(*s.seed, s.name) : to_json(*s.block, s.name);
        const EncoderSpec back = parse_encoder_spec(j.dump(2), "roundtrip");
        EXPECT_EQ(back.name, s.name);
        if (s.is_seed()) {
            EXPECT_EQ(back.seed->matrix(), s.seed->matrix());
        } else {
            EXPECT_EQ(back.block->matrix(), s.block->matrix());
        }
    }
}

TEST(Spec, GenericLetterSpace) {
    const std::string text = R"({"name": "g", "letter_dim": 2, "z_basis": ["11"], "n": 1, "k": 1,
        "matrix": ["01", "10"]})";
    const EncoderSpec s = parse_encoder_spec(text);
    EXPECT_EQ(s.space().bits(), 2);
    EXPECT_TRUE(s.space().in_z(3));
}

TEST(Spec, ErrorsNameTheLine) {
    const std::string ragged = "{\n  \"space\": \"classical\",\n  \"n\": 2,\n  \"k\": 1,\n  \"matrix\": [\n    \"10\",\n    \"1\"\n  ]\n}\n";
    try {
        parse_encoder_spec(ragged, "ragged.json");
        FAIL() << "expected an error";
    } catch (const SpecError& e) {
        EXPECT_EQ(e.line(), 7);
        EXPECT_NE(std::string(e.what()).find("ragged.json:7:"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos);
    }
    EXPECT_THROW(parse_encoder_spec("{\"space\": \"classical\",", "bad.json"), SpecError);
    EXPECT_THROW(parse_encoder_spec(R"({"space": "classical", "n": 2, "k": 1, "matrix": ["11", "11"]})"), SpecError);
    EXPECT_THROW(parse_encoder_spec(R"({"space": "weird", "n": 1, "k": 1, "matrix": ["1"]})"), SpecError);
    EXPECT_THROW(load_encoder_spec("/nonexistent/spec.json"), std::runtime_error);
}

TEST(Config, ParsesShippedConfig) {
    const ExperimentConfig c = load_experiment_config(fs::path(TURBOLAB_CONFIG_DIR) / "distance_trend.json");
    EXPECT_EQ(c.n_grid, (std::vector<int>{4, 6, 8, 10, 12}));
    EXPECT_EQ(c.trials, 50u);
    EXPECT_EQ(c.alpha, mpq_class(1, 4));
    EXPECT_TRUE(fs::exists(c.outer_path));
    EXPECT_TRUE(fs::exists(c.inner_path));
}

TEST(Config, RejectsUnknownAndMissingFields) {
    EXPECT_THROW(parse_experiment_config(R"({"outer": "a", "inner": "b", "n_grid": [1], "alpha": "1", "x": "1",
        "D": [], "bogus": 1})", "c.json", "."), ConfigError);
    EXPECT_THROW(parse_experiment_config(R"({"inner": "b"})", "c.json", "."), ConfigError);
    EXPECT_THROW(parse_experiment_config("[1, 2", "c.json", "."), ConfigError);
}

TEST(Config, ParameterHypotheses) {
    const DistancePair rep{3, 3};
    EXPECT_NO_THROW(validate_parameters(SumMode::poly, mpq_class(1, 4), mpq_class(1, 2), rep));
    EXPECT_THROW(validate_parameters(SumMode::poly, mpq_class(1, 2), mpq_class(1, 2), rep), ConfigError);
    EXPECT_THROW(validate_parameters(SumMode::poly, mpq_class(1, 4), mpq_class(0), rep), ConfigError);
    EXPECT_THROW(validate_parameters(SumMode::poly, mpq_class(1, 10), mpq_class(1, 2), DistancePair{2, 2}), ConfigError);
    EXPECT_NO_THROW(validate_parameters(SumMode::sublog, mpq_class(1, 2), mpq_class(1, 2), rep));
    EXPECT_THROW(validate_parameters(SumMode::sublog, mpq_class(1), mpq_class(1, 2), rep), ConfigError);
}

TEST(Experiment, RunDirectoryName) {
    const std::string name = run_directory_name(42);
    EXPECT_TRUE(std::regex_match(name, std::regex("run-[0-9]{8}T[0-9]{6}Z-[0-9a-f]{8}"))) << name;
}

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.outer_path = testsupport::corpus("rep3.json");
    c.inner_path = testsupport::corpus("seed_SYS.json");
    c.n_grid = {2, 4, 6};
    c.trials = 6;
    c.master_seed = 5;
    c.mode = SumMode::poly;
    c.alpha = mpq_class(1, 4);
    c.x = mpq_class(1, 2);
    c.D_values = {2, 4};
    return c;
}

TEST(Experiment, OutputsValidateAndRepeat) {
    const fs::path a = scratch("exp_a");
    const fs::path b = scratch("exp_b");
    std::ostringstream log;
    set_thread_override(1);
    const ExperimentResult ra = run_experiment_in(small_config(), a / "run", &log);
    set_thread_override(4);
    const ExperimentResult rb = run_experiment_in(small_config(), b / "run", nullptr);
    set_thread_override(0);
    EXPECT_NO_THROW(validate_run_outputs(ra.run_dir));
    EXPECT_NO_THROW(validate_run_outputs(rb.run_dir));
    ASSERT_EQ(ra.files, rb.files);
    EXPECT_FALSE(ra.files.empty());
    for (const auto& f : ra.files) {
        EXPECT_EQ(slurp(ra.run_dir / f), slurp(rb.run_dir / f)) << f;
    }
    EXPECT_TRUE(fs::exists(ra.run_dir / "manifest.json"));
    EXPECT_TRUE(fs::exists(ra.run_dir / "trend.csv"));
    const auto manifest = nlohmann::json::parse(slurp(ra.run_dir / "manifest.json"));
    EXPECT_EQ(manifest.at("master_seed").get<std::uint64_t>(), 5u);
}

TEST(Experiment, ZeroTrialsWritesManifestOnly) {
    ExperimentConfig c = small_config();
    c.trials = 0;
    const fs::path d = scratch("exp_zero");
    const ExperimentResult r = run_experiment_in(c, d / "run");
    EXPECT_TRUE(fs::exists(r.run_dir / "manifest.json"));
    EXPECT_TRUE(r.files.empty());
}

TEST(Experiment, CorruptOutputIsDetected) {
    const fs::path d = scratch("exp_bad");
    const ExperimentResult r = run_experiment_in(small_config(), d / "run");
    std::ofstream(r.run_dir / "trend.csv") << "N,oops\n1\n";
    EXPECT_THROW(validate_run_outputs(r.run_dir), std::runtime_error);
}

TEST(Verify, CorpusPasses) {
    VerifyOptions opt;
    opt.random_runs = 200;
    opt.random_blocks = 2000;
    const VerifyReport r = run_verify(TURBOLAB_CORPUS_DIR, opt);
    for (const auto& c : r.checks) {
        EXPECT_TRUE(c.passed) << c.subject << " " << c.check << ": " << c.detail;
    }
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.checks.size(), 20u);
}

TEST(Verify, BrokenSpecFails) {
    const fs::path d = scratch("verify_bad");
    std::ofstream(d / "broken.json") << "{\"space\": \"classical\", \"n\": 2}";
    const VerifyReport r = run_verify(d);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.failures(), 1u);
    const fs::path empty = scratch("verify_empty");
    const VerifyReport e = run_verify(empty);
    EXPECT_TRUE(e.ok());
    EXPECT_FALSE(e.warnings.empty());
}

}  // namespace
