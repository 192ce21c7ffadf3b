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

#ifndef TURBOLAB_SPEC_IO_HPP
#define TURBOLAB_SPEC_IO_HPP

// Textual encoder specs. A spec is one JSON object:
//
//   {"name": "R", "space": "classical", "n": 1, "k": 1, "m": 1,
//    "matrix": ["10", "11"]}
//
// "space" is "classical" or "quantum"; a custom space uses "letter_dim" and
// "z_basis" (bit strings) instead. A spec with "m" is a seed, otherwise a
// block encoder. Matrix rows are output coordinates.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "turbolab/encoders.hpp"

namespace turbolab {

/// Parse or validation failure; what() starts with "<source>:<line>: ".
class SpecError : public std::runtime_error {
   public:
    SpecError(const std::string& source, int line, const std::string& message);
    int line() const { return line_; }

   private:
    int line_;
};

struct EncoderSpec {
    std::string name;
    std::optional<BlockEncoder> block;
    std::optional<SeedMorphism> seed;

    bool is_seed() const { return seed.has_value(); }
    const LetterSpace& space() const { return seed ? seed->space() : block->space(); }
};

EncoderSpec parse_encoder_spec(const std::string& text, const std::string& source = "<spec>");
EncoderSpec load_encoder_spec(const std::filesystem::path& path);

nlohmann::json space_to_json(const LetterSpace& space);
nlohmann::json to_json(const BlockEncoder& encoder, const std::string& name);
nlohmann::json to_json(const SeedMorphism& seed, const std::string& name);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace turbolab

#endif
