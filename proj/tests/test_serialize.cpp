// Copyright 2026 The Dualis Authors
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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "dualis/error.hpp"
#include "dualis/fixtures.hpp"
#include "dualis/serialize.hpp"
#include "dualis/suites.hpp"

using namespace dualis;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("dualis_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}

ErrorCode parse_code(const std::string& text) {
    try {
        map_from_json(parse_json(text));
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Io;
}

}  // namespace

TEST(Json, FloatsRoundTripBitForBit) {
    json j = {{"a", 0.1}, {"b", 1.0 / 3.0}, {"c", 1e-300}, {"d", 2.0}, {"e", NAN}};
    const std::string text = dump_json(j);
    const json back = parse_json(text);
    EXPECT_EQ(back["a"].get<double>(), 0.1);
    EXPECT_EQ(back["b"].get<double>(), 1.0 / 3.0);
    EXPECT_EQ(back["c"].get<double>(), 1e-300);
    EXPECT_NE(text.find("2.0"), std::string::npos);
    EXPECT_TRUE(back["e"].is_null());
}

TEST(Json, MatrixRoundTrip) {
    const auto u = random_unitary(3, 5);
    const auto back = matrix_from_json(parse_json(dump_json(to_json(u))));
    EXPECT_EQ(back, u);
}

TEST(Json, MapRoundTripAllScalings) {
    Rng rng(3);
    const auto inner = std::make_shared<const DualityMap>(
        DualityMap::random(4, 1, 0, rng, ScalingFunction::kramers_wannier(1.0, 0.4)));
    const std::vector<ScalingFunction> fs{
        ScalingFunction::constant(1.5), ScalingFunction::kramers_wannier(2.0, 0.3),
        ScalingFunction::table({{{1, 2, 3, 4}, 0.5}}, 0.1),
        ScalingFunction::composed(ScalingFunction::constant(3.0), inner)};
    for (const auto& f : fs) {
        const auto phi = DualityMap::random(4, 1, 1, rng, f);
        const auto back = map_from_json(parse_json(dump_json(to_json(phi))));
        EXPECT_EQ(back.unitary(), phi.unitary());
        EXPECT_EQ(back.p(), 1);
        EXPECT_EQ(back.q(), 1);
        const auto a = HermitianOperator::diagonal(std::vector<double>{1, 2, 3, 4});
        EXPECT_EQ(back.scaling().evaluate(a), phi.scaling().evaluate(a));
    }
}

TEST(Json, MalformedInputs) {
    EXPECT_EQ(parse_code("{bad"), ErrorCode::Parse);
    EXPECT_EQ(parse_code("{\"n\": 2}"), ErrorCode::Parse);
    EXPECT_EQ(parse_code("[1,2]"), ErrorCode::Parse);
}

TEST(Json, PowerSumsShape) {
    PowerSumSequence ps;
    ps.alpha_num = 3;
    ps.alpha_den = 2;
    ps.sums = {1, 2};
    const json j = to_json(ps);
    EXPECT_EQ(j["alpha"], json::array({3, 2}));
    const auto back = power_sums_from_json(j);
    EXPECT_EQ(back.sums, ps.sums);
    EXPECT_EQ(back.alpha_den, 2);
}

TEST(Config, Validation) {
    EXPECT_THROW(config_from_json(json{{"tol", -1.0}}), Error);
    EXPECT_THROW(config_from_json(json{{"dims", {0}}}), Error);
    EXPECT_THROW(config_from_json(json{{"arities", {{0, 0}}}}), Error);
    EXPECT_THROW(config_from_json(json{{"K", {-0.2}}}), Error);
    EXPECT_THROW(config_from_json(json::array()), Error);
    const auto c = config_from_json(json{{"seed", 9}, {"dims", {2, 3}}, {"arities", {{1, 0}}}});
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.dims.size(), 2u);
    EXPECT_THROW(run_suite("nonsense", c), Error);
}

TEST(Suites, AllPassWithSummaryMatchingRecords) {
    for (const char* name : {"verify-map", "equivalence", "approx-audit", "kw", "recover-spectrum"}) {
        SuiteConfig c;
        c.seed = 13;
        const auto r = run_suite(name, c);
        EXPECT_TRUE(r.ok()) << name;
        for (const auto& chk : r.checks)
            if (!chk.pass) ADD_FAILURE() << name << ": " << chk.name << " " << chk.error;
        const json doc = parse_json(report_json(r));
        EXPECT_EQ(doc["schema"], "dualis/1");
        EXPECT_EQ(doc["summary"]["total"].get<std::size_t>(), doc["checks"].size());
        std::size_t passed = 0;
        for (const auto& chk : doc["checks"]) passed += chk["pass"].get<bool>();
        EXPECT_EQ(doc["summary"]["passed"].get<std::size_t>(), passed);
        EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                                   [](const auto& a, const auto& b) { return a.name < b.name; }));
    }
}

TEST(Suites, DeterministicReports) {
    SuiteConfig c;
    c.seed = 21;
    EXPECT_EQ(report_json(run_suite("all", c)), report_json(run_suite("all", c)));
    SuiteConfig d = c;
    d.seed = 22;
    EXPECT_NE(report_json(run_suite("verify-map", c)), report_json(run_suite("verify-map", d)));
}

TEST(Suites, RecoverSpectrumPrintsRoots) {
    SuiteConfig c;
    c.moments = {6, 14, 36};
    c.d = 3;
    const auto r = run_suite("recover-spectrum", c);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(report_text(r).substr(0, 6), "1 2 3\n");
}

TEST(Suites, KwCsvColumns) {
    SuiteConfig c;
    c.couplings = {0.3};
    c.self_dual = true;
    const auto r = run_suite("kw", c);
    const std::string csv = report_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "K,K_dual,Z,Z_dual,residual_f,residual_Z");
    EXPECT_TRUE(r.ok());
}

TEST(Fixtures, GenerateThenCheck) {
    const auto dir = scratch("fx_ok");
    write_fixtures(dir.string(), 7);
    EXPECT_TRUE(check_fixtures(dir.string(), 7).empty());
    EXPECT_FALSE(check_fixtures(dir.string(), 8).empty());
    std::filesystem::remove_all(dir);
}

TEST(Fixtures, CorruptedValueIsNamed) {
    const auto dir = scratch("fx_bad");
    write_fixtures(dir.string(), 7);
    const auto path = dir / "ising.json";
    json j = parse_json([&] {
        std::ifstream in(path);
        return std::string(std::istreambuf_iterator<char>(in), {});
    }());
    j["dual_coupling_0.5"] = j["dual_coupling_0.5"].get<double>() + 1e-3;
    std::ofstream(path) << dump_json(j);
    const auto diffs = check_fixtures(dir.string(), 7);
    ASSERT_EQ(diffs.size(), 1u);
    EXPECT_NE(diffs[0].find("ising.json/dual_coupling_0.5"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Fixtures, MissingDirectoryIsIoError) {
    try {
        check_fixtures(scratch("fx_none").string(), 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}
