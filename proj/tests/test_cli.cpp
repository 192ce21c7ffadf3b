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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(TURBOLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string corpus(const std::string& f) { return (fs::path(TURBOLAB_CORPUS_DIR) / f).string(); }

TEST(Cli, HelpAndUsageErrors) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("no-such-command").code, 2);
    EXPECT_EQ(run("classify").code, 2);
    EXPECT_EQ(run("classify /nonexistent.json").code, 2);
    EXPECT_EQ(run("spectrum " + corpus("seed_R.json") + " --n-grid 1:x").code, 2);
    EXPECT_EQ(run("bounds " + corpus("rep3.json") + " " + corpus("seed_R.json") +
                  " --n-grid 4 --alpha 0.9 --x 1/2").code,
              2);
}

TEST(Cli, ClassifySeed) {
    const CliResult r = run("classify " + corpus("seed_SYS.json"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("recursive"), true);
    EXPECT_EQ(j.at("eta"), 1);
    EXPECT_EQ(j.at("systematic"), "structural_pass");
    const CliResult dot = run("classify --dot " + corpus("seed_R.json"));
    EXPECT_EQ(dot.code, 0);
    EXPECT_NE(dot.out.find("digraph"), std::string::npos);
}

TEST(Cli, ClassifyBlock) {
    const CliResult r = run("classify " + corpus("quantum_5_1.json"));
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("d_c"), 3);
    EXPECT_EQ(j.at("d_q"), 3);
}

TEST(Cli, SpectrumCsv) {
    const CliResult r = run("spectrum " + corpus("seed_R.json") + " --n-grid 2 --w-max 3 --d-max 4");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')).find("N,"), 0u);
    EXPECT_NE(r.out.find("\n2,2,1,"), std::string::npos) << r.out;
}

TEST(Cli, BoundsAndTrace) {
    const CliResult b = run("bounds " + corpus("rep3.json") + " " + corpus("seed_R.json") +
                      " --n-grid 2:8:2 --alpha 1/4 --x 1/2");
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(std::count(b.out.begin(), b.out.end(), '\n'), 5);
    const CliResult t = run("trace " + corpus("seed_R.json") + " --info 1001");
    ASSERT_EQ(t.code, 0);
    const auto j = nlohmann::json::parse(t.out);
    EXPECT_EQ(j.at("bits"), nlohmann::json::parse("[0,1,0]"));
}

TEST(Cli, TurboDistanceAndMc) {
    const CliResult d = run("turbo-distance " + corpus("rep3.json") + " " + corpus("seed_SYS.json") +
                      " --n-grid 4 --seed 9 --dq");
    ASSERT_EQ(d.code, 0);
    const auto j = nlohmann::json::parse(d.out);
    EXPECT_TRUE(j.contains("d_c"));
    const CliResult mc = run("mc " + corpus("rep3.json") + " " + corpus("seed_SYS.json") +
                       " --n-grid 4,6 --trials 5 --seed 3 --D 3,5");
    ASSERT_EQ(mc.code, 0);
    EXPECT_EQ(std::count(mc.out.begin(), mc.out.end(), '\n'), 12);
    const CliResult again = run("mc " + corpus("rep3.json") + " " + corpus("seed_SYS.json") +
                          " --n-grid 4,6 --trials 5 --seed 3 --D 3,5");
    EXPECT_EQ(again.out, mc.out);
}

TEST(Cli, Verify) {
    const CliResult r = run("verify " + std::string(TURBOLAB_CORPUS_DIR) + " --trials 100");
    EXPECT_EQ(r.code, 0) << r.out;
    const fs::path bad = fs::temp_directory_path() / "turbolab_cli_bad";
    fs::remove_all(bad);
    fs::create_directories(bad);
    { FILE* f = std::fopen((bad / "x.json").c_str(), "w"); std::fputs("{", f); std::fclose(f); }
    EXPECT_EQ(run("verify " + bad.string()).code, 1);
}

TEST(Cli, Experiment) {
    const fs::path out = fs::temp_directory_path() / "turbolab_cli_runs";
    fs::remove_all(out);
    const CliResult r = run("experiment " + (fs::path(TURBOLAB_CONFIG_DIR) / "distance_trend.json").string() +
                      " --trials 3 --n-grid 4,6 --out " + out.string());
    ASSERT_EQ(r.code, 0);
    int dirs = 0;
    for (const auto& e : fs::directory_iterator(out)) {
        ++dirs;
        EXPECT_TRUE(fs::exists(e.path() / "manifest.json"));
    }
    EXPECT_EQ(dirs, 1);
}

TEST(Cli, ThreadKnob) {
    EXPECT_EQ(run("classify " + corpus("seed_R.json")).code, 0);
    const std::string bad = "LAB_THREADS=abc " + std::string(TURBOLAB_CLI_PATH) + " spectrum " + corpus("seed_R.json") +
                            " --n-grid 2 > /dev/null 2>&1";
    const int status = std::system(bad.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
