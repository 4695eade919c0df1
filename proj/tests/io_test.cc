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


#include "chanspec/io.h"

#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "chanspec/errors.h"

namespace chanspec {
namespace {

TEST(DumpJson, FixedPrecisionAndSortedKeys) {
    Json j = {{"b", 0.1}, {"a", 1}, {"c", {1.5, 2.0}}};
    EXPECT_EQ(dump_json(j), "{\n  \"a\": 1,\n  \"b\": 0.10000000000000001,\n  \"c\": [1.5, 2]\n}\n");
}

TEST(DumpJson, NonFiniteIsNull) {
    Json j = {{"x", std::numeric_limits<double>::quiet_NaN()}};
    EXPECT_NE(dump_json(j).find("null"), std::string::npos);
}

TEST(DumpJson, RoundTripsDoublesExactly) {
    const double v = 0.1 + 0.2;
    const Json back = Json::parse(dump_json(Json{{"v", v}}));
    EXPECT_EQ(back["v"].get<double>(), v);
}

TEST(ComplexJson, Forms) {
    EXPECT_EQ(complex_from_json(Json(2.5)), Complex(2.5));
    EXPECT_EQ(complex_from_json(Json::parse("[1, -2]")), Complex(1.0, -2.0));
    EXPECT_THROW(complex_from_json(Json::parse("[1, 2, 3]")), PreconditionError);
    EXPECT_EQ(complex_to_json(Complex(0.5, 1.0)), Json::parse("[0.5, 1]"));
}

TEST(ChannelJson, RoundTripAllRepresentations) {
    const Channel c = random_channel(2, 3, 51);
    for (const Repr r : {Repr::kraus, Repr::superop, Repr::choi}) {
        const Json j = channel_to_json(c, r);
        EXPECT_EQ(j["repr"], std::string(to_string(r)));
        EXPECT_EQ(j["d"], 2);
        const Channel back = channel_from_json(Json::parse(dump_json(j)));
        EXPECT_EQ(back.native_repr(), r);
        EXPECT_LE((back.superop() - c.superop()).norm(), 1e-12);
    }
}

TEST(ChannelJson, Errors) {
    EXPECT_THROW(channel_from_json(Json::parse(R"({"d": 2, "repr": "bogus", "data": []})")), PreconditionError);
    EXPECT_THROW(channel_from_json(Json::parse(R"({"d": 2, "repr": "superop", "data": [[[1,0]]]})")),
                 PreconditionError);
    EXPECT_THROW(channel_from_json(Json::parse(R"({"repr": "kraus"})")), PreconditionError);
}

TEST(StochasticJson, FlatAndNested) {
    RealMatrix s(2, 2);
    s << 0.2, 0.7, 0.8, 0.3;
    const Json j = stochastic_to_json(s);
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["data"].size(), 4u);
    EXPECT_EQ(j["data"][1], 0.7);
    EXPECT_EQ(stochastic_from_json(j), s);
    EXPECT_EQ(stochastic_from_json(Json::parse(R"({"n": 2, "data": [[0.2, 0.7], [0.8, 0.3]]})")), s);
    EXPECT_THROW(stochastic_from_json(Json::parse(R"({"n": 3, "data": [1, 0]})")), PreconditionError);
}

TEST(CycleSpecJson, RoundTrip) {
    const Json j = Json::parse(R"({"cycles": [{"n": 2, "d": 2, "mu": [[1, 0], [0, 1]]}, {"n": 3, "d": 1, "mu": [1]}]})");
    const CycleSpec spec = cycle_spec_from_json(j);
    ASSERT_EQ(spec.cycles.size(), 2u);
    EXPECT_EQ(spec.cycles[0].length, 2);
    EXPECT_EQ(spec.cycles[0].phases[1], Complex(0.0, 1.0));
    EXPECT_EQ(cycle_spec_from_json(cycle_spec_to_json(spec)).peripheral_count(), spec.peripheral_count());
    EXPECT_THROW(cycle_spec_from_json(Json::parse(R"({"cycles": [{"n": 1, "d": 1, "mu": [0.5]}]})")),
                 PreconditionError);
}

TEST(SeriesCsv, RealAndComplex) {
    std::istringstream in("# comment\n1\n0.5, 0.25\n\n-2e-3\n");
    const Series s = read_series_csv(in);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.values[1], Complex(0.5, 0.25));
    EXPECT_EQ(s.values[2], Complex(-2e-3));
    std::ostringstream out;
    write_series_csv(out, s);
    std::istringstream again(out.str());
    const Series back = read_series_csv(again);
    EXPECT_EQ(back.values, s.values);
}

TEST(SeriesCsv, Malformed) {
    std::istringstream in("1\nabc\n");
    EXPECT_THROW(read_series_csv(in), PreconditionError);
}

TEST(SynthesisReport, Fields) {
    const auto o = synth_spectral_set({1.0, -1.0});
    const Json j = synthesis_report_to_json(o);
    EXPECT_EQ(j["status"], "ok");
    EXPECT_EQ(j["route"], "qubit-blocks");
    EXPECT_EQ(j["d"], 2);
    EXPECT_TRUE(j.contains("target"));
    EXPECT_TRUE(j.contains("achieved"));
    EXPECT_TRUE(j.contains("kernel_added"));
    EXPECT_TRUE(j["residuals"].contains("cp_margin"));
}

}  // namespace
}  // namespace chanspec
