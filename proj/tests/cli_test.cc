// Copyright 2026 The chanspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "chanspec/io.h"

namespace chanspec::cli {
namespace {

const Complex kI(0.0, 1.0);

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("chanspec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::filesystem::path dir_;
};

TEST(ParseComplexMultiset, Mixed) {
    const auto s = parse_complex_multiset("1, -0.5, 0.2+0.3i, 0.2-0.3i");
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0], Complex(1.0));
    EXPECT_EQ(s[1], Complex(-0.5));
    EXPECT_EQ(s[2], Complex(0.2, 0.3));
    EXPECT_EQ(s[3], Complex(0.2, -0.3));
}

TEST(ParseComplexMultiset, BareImaginaryUnit) {
    const auto s = parse_complex_multiset("1, i, -i");
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[1], kI);
    EXPECT_EQ(s[2], -kI);
}

TEST(ParseComplexMultiset, Forms) {
    const auto s = parse_complex_multiset(" 0.2 + 0.3i ,2.5i,-1e-3, 1-i ");
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0], Complex(0.2, 0.3));
    EXPECT_EQ(s[1], Complex(0.0, 2.5));
    EXPECT_EQ(s[2], Complex(-1e-3));
    EXPECT_EQ(s[3], Complex(1.0, -1.0));
}

TEST(ParseComplexMultiset, ErrorColumn) {
    try {
        (void)parse_complex_multiset("1, 0.5+");
        FAIL();
    } catch (const UsageError &e) {
        EXPECT_EQ(e.column(), 8u);
    }
    for (const char *bad : {"", "1,,2", "1 2", "abc", "1, 0.5+0.3"}) {
        EXPECT_THROW(parse_complex_multiset(bad), UsageError) << bad;
    }
}

TEST(Run, QubitCpNegativeCitesFacet) {
    const auto r = invoke({"check-spectrum", "--values", "1,1,1,-1", "--mode", "qubit-cp"});
    EXPECT_EQ(r.code, kNegative);
    const Json j = Json::parse(r.out);
    EXPECT_FALSE(j["verdict"]["realizable"].get<bool>());
    ASSERT_EQ(j["violated_facets"].size(), 1u);
    EXPECT_EQ(j["violated_facets"][0]["facet"], "1-s1-s2+s3 >= 0");
}

TEST(Run, QubitPosAffirmative) {
    EXPECT_EQ(invoke({"check-spectrum", "--values", "1,1,1,-1", "--mode", "qubit-pos"}).code, kOk);
}

TEST(Run, MomentsMode) {
    EXPECT_EQ(invoke({"check-spectrum", "--values", "1,-0.5,-0.3", "--mode", "moments"}).code, kOk);
    EXPECT_EQ(invoke({"check-spectrum", "--values", "1,0.6+0.6i,0.6-0.6i", "--mode", "moments"}).code, kNegative);
}

TEST(Run, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    EXPECT_EQ(invoke({"check-spectrum", "--values", "1, 0.5+", "--mode", "qubit-cp"}).code, kUsage);
    EXPECT_EQ(invoke({"check-spectrum", "--values", "1", "--mode", "nope"}).code, kUsage);
    EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(CliFiles, SynthNonzeroThenAnalyze) {
    const auto r = invoke({"synth", "--mode", "nonzero", "--values", "1,1,1,-1", "--out", path("c.json")});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Json report = Json::parse(r.out);
    EXPECT_EQ(report["d"], 4);
    const Channel c = channel_from_json(read_json_file(path("c.json")));
    EXPECT_EQ(c.dim(), 4);

    const auto a = invoke({"analyze", path("c.json"), "--moments", "4"});
    EXPECT_NE(a.code, kUsage);
    const Json analysis = Json::parse(a.out);
    EXPECT_TRUE(multiset_match(spectrum_from_json(analysis["spectrum"]), spectrum_from_json(report["achieved"]), 1e-8)
                    .matched);
    EXPECT_EQ(analysis["moments"].size(), 4u);
}

TEST_F(CliFiles, SynthOutputsReanalyze) {
    const std::vector<std::vector<std::string>> commands = {
        {"synth", "--mode", "qubit", "--values", "1,0.5i,-0.5i,0.5"},
        {"synth", "--mode", "set", "--values", "1,i,-i,0.5"},
        {"synth", "--mode", "full-rank", "--values", "1,-0.2,-0.2"},
    };
    int k = 0;
    for (auto args : commands) {
        const std::string file = path("out" + std::to_string(k++) + ".json");
        args.push_back("--out");
        args.push_back(file);
        const auto r = invoke(args);
        ASSERT_EQ(r.code, kOk) << r.err;
        const auto a = invoke({"analyze", file});
        const Json report = Json::parse(r.out);
        const Json analysis = Json::parse(a.out);
        EXPECT_TRUE(
            multiset_match(spectrum_from_json(analysis["spectrum"]), spectrum_from_json(report["achieved"]), 1e-8)
                .matched);
    }
}

TEST_F(CliFiles, SynthCycles) {
    {
        std::ofstream f(path("spec.json"));
        f << R"({"cycles": [{"n": 3, "d": 1, "mu": [[1, 0]]}]})";
    }
    const auto r = invoke({"synth", "--mode", "cycles", "--spec", path("spec.json")});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["d"], 3);
    EXPECT_EQ(j["kernel_added"], 6);
    EXPECT_EQ(j["channel"]["repr"], "kraus");
}

TEST(Run, SynthInfeasible) {
    EXPECT_EQ(invoke({"synth", "--mode", "nonzero", "--values", "1,0.6+0.6i,0.6-0.6i"}).code, kNegative);
    EXPECT_EQ(invoke({"synth", "--mode", "qubit", "--values", "1,1,1,-1"}).code, kNegative);
}

TEST_F(CliFiles, Lift) {
    {
        std::ofstream f(path("s.json"));
        f << R"({"n": 2, "data": [0, 1, 1, 0]})";
    }
    const auto r = invoke({"lift", path("s.json"), "--out", path("c.json")});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Channel c = channel_from_json(read_json_file(path("c.json")));
    EXPECT_EQ(c.native_repr(), Repr::choi);
    const auto a = invoke({"analyze", path("c.json")});
    EXPECT_EQ(a.code, kNegative);  // irreducible but not primitive
    const Json j = Json::parse(a.out);
    EXPECT_TRUE(j["irreducible"].get<bool>());
    EXPECT_FALSE(j["primitivity"]["primitive"].get<bool>());
}

TEST_F(CliFiles, SeriesRoundTrip) {
    for (const auto &[x, code] : std::vector<std::pair<std::string, int>>{{"0.58", kOk}, {"0.59", kNegative}}) {
        const std::string csv = path("rot" + x + ".csv");
        ASSERT_EQ(invoke({"series-gen", "--example", "damped-rotation", "--x", x, "--steps", "64", "--out", csv}).code, kOk);
        const auto r = invoke({"series-fit", csv, "--plot-data", path("plot")});
        EXPECT_EQ(r.code, code) << r.err;
        const Json j = Json::parse(r.out);
        EXPECT_EQ(j["model"]["order"], 3);
        EXPECT_TRUE(std::filesystem::exists(path("plot.csv")));
        EXPECT_TRUE(std::filesystem::exists(path("plot.json")));
    }
}

TEST_F(CliFiles, SeriesFromChannel) {
    ASSERT_EQ(invoke({"synth", "--mode", "qubit", "--values", "1,0.5,0.5,0.2", "--out", path("c.json")}).code, kOk);
    const auto r = invoke({"series-gen", "--channel", path("c.json"), "--A", "[[0,0],[0,1]]", "--steps", "20"});
    ASSERT_EQ(r.code, kOk) << r.err;
    std::istringstream in(r.out);
    EXPECT_EQ(read_series_csv(in).size(), 20u);
}

TEST(Run, DeterministicOutput) {
    const std::vector<std::string> args = {"--seed", "7", "synth", "--mode", "nonzero", "--values", "1,0.3,-0.4,0.1"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    auto parallel = args;
    parallel.insert(parallel.begin(), {"--jobs", "3"});
    EXPECT_EQ(invoke(parallel).out, a.out);
}

}  // namespace
}  // namespace chanspec::cli
