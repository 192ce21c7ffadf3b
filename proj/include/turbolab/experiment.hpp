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

#ifndef TURBOLAB_EXPERIMENT_HPP
#define TURBOLAB_EXPERIMENT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "turbolab/bounds.hpp"
#include "turbolab/spec_io.hpp"
#include "turbolab/turbo.hpp"

namespace turbolab {

/// Raised when a config or a spec is invalid; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::filesystem::path outer_path;
    std::filesystem::path inner_path;
    std::vector<int> n_grid;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    SumMode mode = SumMode::poly;
    mpq_class alpha = 0;
    mpq_class x = 0;
    std::vector<int> D_values;
    std::uint64_t distance_budget = std::uint64_t{1} << 22;
    std::uint64_t spectrum_budget = std::uint64_t{1} << 22;
    bool want_dq = false;
    bool preserve_z = false;

    nlohmann::json to_json() const;
};

/// Relative spec paths resolve against `base_dir`.
ExperimentConfig parse_experiment_config(const std::string& text, const std::string& source,
                                         const std::filesystem::path& base_dir);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Throws ConfigError unless alpha and x fit the hypotheses of the bounds for the
/// outer distances: alpha < (d_q - 2)/d_q for poly, alpha < d_c - 2 for
/// sublog, 0 < x.
void validate_parameters(SumMode mode, const mpq_class& alpha, const mpq_class& x, const DistancePair& outer);

std::string rational_string(const mpq_class& q);

/// JSON report for `classify`: distances for block encoders, memory
/// classification and recursion/systematic verdicts for seeds.
nlohmann::json classification_report(const EncoderSpec& spec);

nlohmann::json turbo_input_json(const LetterSpace& space, const TurboInput& input);
nlohmann::json sample_json(const LetterSpace& space, int N, const DistanceSample& sample, bool want_dq);
nlohmann::json summary_json(int N, const McSummary& summary);

struct ExperimentResult {
    std::filesystem::path run_dir;
    /// Paths relative to run_dir, manifest excluded.
    std::vector<std::string> files;
    std::vector<int> skipped_n;
    std::vector<std::string> notices;
};

/// "run-<UTC timestamp>-<seed hash>".
std::string run_directory_name(std::uint64_t master_seed);

/// Creates out_base/run-.../ and fills it.
ExperimentResult run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_base,
                                std::ostream* log = nullptr);
/// Same, into an explicit directory (created if missing).
ExperimentResult run_experiment_in(const ExperimentConfig& config, const std::filesystem::path& run_dir,
                                   std::ostream* log = nullptr);

/// Checks every file listed in the manifest against its schema; throws
/// std::runtime_error naming the first offending file.
void validate_run_outputs(const std::filesystem::path& run_dir);

}  // namespace turbolab

#endif
