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

#ifndef TURBOLAB_VERIFY_HPP
#define TURBOLAB_VERIFY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace turbolab {

struct CheckResult {
    std::string subject;
    std::string check;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool ok() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Random convolutional runs per seed for the round-trip and trace checks.
    int random_runs = 1000;
    /// Random block inputs when exhaustive round trips exceed 16 bits.
    int random_blocks = 10000;
};

/// Runs the invariant checks on every *.json spec in `corpus_dir` (sorted by
/// name). A spec that fails to load is reported as a failed validation check.
VerifyReport run_verify(const std::filesystem::path& corpus_dir, const VerifyOptions& options = {});

}  // namespace turbolab

#endif
