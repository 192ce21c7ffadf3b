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

#include "turbolab/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace turbolab {

namespace {

int line_at(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of `"key"` as an object key; falls back to 1.
std::size_t key_offset(const std::string& text, const std::string& key) {
    const std::size_t at = text.find("\"" + key + "\"");
    return at == std::string::npos ? 0 : at;
}

class Reader {
   public:
    Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

    [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
        throw SpecError(source_, line_at(text_, offset), message);
    }
    [[noreturn]] void fail_key(const std::string& key, const std::string& message) const {
        fail(key_offset(text_, key), message);
    }

    int get_int(const nlohmann::json& j, const std::string& key, int lo, int hi) const {
        if (!j.contains(key)) {
            fail(0, "missing field \"" + key + "\"");
        }
        const auto& v = j.at(key);
        if (!v.is_number_integer()) {
            fail_key(key, "field \"" + key + "\" must be an integer");
        }
        const auto x = v.get<long long>();
        if (x < lo || x > hi) {
            fail_key(key, "field \"" + key + "\" = " + std::to_string(x) + " is outside [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
        }
        return static_cast<int>(x);
    }

    LetterSpace space(const nlohmann::json& j) const {
        if (j.contains("space")) {
            const auto& v = j.at("space");
            if (v == "classical") {
                return LetterSpace::classical();
            }
            if (v == "quantum") {
                return LetterSpace::quantum();
            }
            fail_key("space", "field \"space\" must be \"classical\" or \"quantum\"");
        }
        const int bits = get_int(j, "letter_dim", 1, kMaxLetterBits);
        std::vector<Letter> basis;
        if (j.contains("z_basis")) {
            if (!j.at("z_basis").is_array()) {
                fail_key("z_basis", "field \"z_basis\" must be an array of bit strings");
            }
            for (const auto& e : j.at("z_basis")) {
                if (!e.is_string() || e.get<std::string>().size() != static_cast<std::size_t>(bits)) {
                    fail_key("z_basis", "z_basis entries must be bit strings of length " + std::to_string(bits));
                }
                try {
                    basis.push_back(LetterSpace(bits, {}).parse_bit_string(e.get<std::string>()));
                } catch (const std::exception& ex) {
                    fail_key("z_basis", ex.what());
                }
            }
        }
        try {
            return LetterSpace(bits, basis);
        } catch (const std::exception& ex) {
            fail_key("z_basis", ex.what());
        }
    }

    BitMatrix matrix(const nlohmann::json& j, int side) const {
        if (!j.contains("matrix") || !j.at("matrix").is_array()) {
            fail_key("matrix", "field \"matrix\" must be an array of row strings");
        }
        const auto& rows = j.at("matrix");
        const std::size_t base = key_offset(text_, "matrix");
        if (rows.size() != static_cast<std::size_t>(side)) {
            fail(base, "matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(side));
        }
        BitMatrix out(side, side);
        std::size_t cursor = base;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].is_string()) {
                fail(cursor, "matrix row " + std::to_string(r) + " is not a string");
            }
            const std::string row = rows[r].get<std::string>();
            const std::size_t at = text_.find("\"" + row + "\"", cursor);
            if (at != std::string::npos) {
                cursor = at + row.size() + 2;
            }
            const std::size_t where = at == std::string::npos ? base : at;
            if (row.size() != static_cast<std::size_t>(side)) {
                fail(where, "matrix row " + std::to_string(r) + " has length " + std::to_string(row.size()) +
                                ", expected " + std::to_string(side));
            }
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] != '0' && row[c] != '1') {
                    fail(where, "matrix row " + std::to_string(r) + " has a character other than 0/1");
                }
                out.set(static_cast<int>(r), static_cast<int>(c), row[c] == '1');
            }
        }
        return out;
    }

   private:
    const std::string& text_;
    std::string source_;
};

}  // namespace

SpecError::SpecError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

EncoderSpec parse_encoder_spec(const std::string& text, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(source, line_at(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
    }
    const Reader rd(text, source);
    if (!j.is_object()) {
        rd.fail(0, "spec must be a JSON object");
    }
    EncoderSpec spec;
    spec.name = j.value("name", std::string());
    const LetterSpace space = rd.space(j);
    const int n = rd.get_int(j, "n", 1, 64);
    const int k = rd.get_int(j, "k", 0, n);
    if (j.contains("m")) {
        const int m = rd.get_int(j, "m", 0, 64);
        const int s = j.contains("s") ? rd.get_int(j, "s", 0, 64) : n - k;
        const int in_side = space.bits() * (m + k + s);
        const int out_side = space.bits() * (n + m);
        if (in_side != out_side || in_side > 64) {
            rd.fail_key("n", "seed dimensions give a " + std::to_string(out_side) + "x" + std::to_string(in_side) +
                                 " matrix; encoders need a square matrix of side at most 64");
        }
        BitMatrix mat = rd.matrix(j, in_side);
        try {
            spec.seed = s == n - k ? SeedMorphism::make_encoder(space, n, k, m, std::move(mat))
                                   : SeedMorphism::make_generic(space, n, k, s, m, std::move(mat));
        } catch (const std::exception& e) {
            rd.fail_key("matrix", e.what());
        }
    } else {
        const int side = space.bits() * n;
        if (side > 64) {
            rd.fail_key("n", "block encoder side exceeds 64 bits");
        }
        BitMatrix mat = rd.matrix(j, side);
        try {
            spec.block = BlockEncoder::make(space, n, k, std::move(mat));
        } catch (const std::exception& e) {
            rd.fail_key("matrix", e.what());
        }
    }
    return spec;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

EncoderSpec load_encoder_spec(const std::filesystem::path& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        // An unreadable spec is an input problem, same as a malformed one.
        throw SpecError(path.string(), 0, "cannot open file");
    }
    EncoderSpec spec = parse_encoder_spec(text, path.string());
    if (spec.name.empty()) {
        spec.name = path.stem().string();
    }
    return spec;
}

nlohmann::json space_to_json(const LetterSpace& space) {
    if (space == LetterSpace::classical()) {
        return "classical";
    }
    if (space == LetterSpace::quantum()) {
        return "quantum";
    }
    nlohmann::json basis = nlohmann::json::array();
    for (Letter z : space.z_basis()) {
        basis.push_back(space.bit_string(z));
    }
    return {{"letter_dim", space.bits()}, {"z_basis", basis}};
}

namespace {

void put_space(nlohmann::json& j, const LetterSpace& space) {
    const nlohmann::json s = space_to_json(space);
    if (s.is_string()) {
        j["space"] = s;
    } else {
        j["letter_dim"] = s["letter_dim"];
        j["z_basis"] = s["z_basis"];
    }
}

}  // namespace

nlohmann::json to_json(const BlockEncoder& encoder, const std::string& name) {
    nlohmann::json j;
    j["name"] = name;
    put_space(j, encoder.space());
    j["n"] = encoder.n();
    j["k"] = encoder.k();
    j["matrix"] = encoder.matrix().to_strings();
    return j;
}

nlohmann::json to_json(const SeedMorphism& seed, const std::string& name) {
    nlohmann::json j;
    j["name"] = name;
    put_space(j, seed.space());
    j["n"] = seed.n();
    j["k"] = seed.k();
    j["m"] = seed.m();
    j["s"] = seed.s();
    j["matrix"] = seed.matrix().to_strings();
    return j;
}

}  // namespace turbolab
