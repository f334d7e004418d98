// Copyright 2026 The usynth Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "commands.hpp"
#include "oracles.hpp"
#include "usynth/channels.hpp"
#include "usynth/json_io.hpp"
#include "usynth/random.hpp"

namespace usynth {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using oracle::kPi;

struct Outcome {
    int code = -1;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Outcome run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run_cli(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("usynth_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        const fs::path p = dir_ / name;
        fs::create_directories(p.parent_path());
        std::ofstream(p) << text;
        return p.string();
    }
    std::string write_unitary(const std::string &name, const ComplexMatrix &m) {
        return write(name, matrix_to_json(m));
    }

    fs::path dir_;
};

TEST(ParseAngleTest, Forms) {
    EXPECT_DOUBLE_EQ(cli::parse_angle("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(cli::parse_angle("pi"), kPi);
    EXPECT_DOUBLE_EQ(cli::parse_angle("-pi/4"), -kPi / 4);
    EXPECT_DOUBLE_EQ(cli::parse_angle("2*pi/3"), 2 * kPi / 3);
    EXPECT_DOUBLE_EQ(cli::parse_angle("3pi/2"), 1.5 * kPi);
    EXPECT_DOUBLE_EQ(cli::parse_angle(" 1e-3 "), 1e-3);
    for (const char *bad : {"", "abc", "1.0x", "pi*2", "pi/0", "inf"}) {
        EXPECT_THROW(cli::parse_angle(bad), Error) << bad;
    }
}

TEST(NamedUnitaryTest, KnownNames) {
    // sqrt(1 - r^2) near r = 1 limits these to about 1e-8.
    EXPECT_NEAR(unitary_distance(cli::named_unitary("Rz(pi/4)"), cli::named_unitary("T")), 0.0, 1e-7);
    EXPECT_NEAR(unitary_distance(cli::named_unitary("Rz(pi/2)"), cli::named_unitary("S")), 0.0, 1e-7);
    EXPECT_NEAR(unitary_distance(cli::named_unitary("I"), cli::named_unitary("X")), 1.0, 1e-12);
    EXPECT_NEAR(unitary_distance(cli::named_unitary("Sdg"), Unitary(oracle::phase(-kPi / 2))), 0.0, 1e-7);
    EXPECT_THROW(cli::named_unitary("Q"), Error);
    EXPECT_THROW(cli::named_unitary("Rz()"), Error);
}

TEST_F(CliTest, DiamondExamples) {
    const auto same = write_unitary("h.json", cli::named_unitary("H").matrix());
    auto r = run({"diamond", same, same});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(r.doc()["value"].get<double>(), 0.0, 1e-6);
    r = run({"diamond", "I", "X"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(r.doc()["value"].get<double>(), 1.0, 1e-6);
    EXPECT_TRUE(r.doc().contains("gap"));
}

TEST_F(CliTest, DiamondMatchesUnitaryDistance) {
    Rng rng(51);
    for (int t = 0; t < 5; ++t) {
        const auto u = haar_unitary(2, rng), v = haar_unitary(2, rng);
        const auto r = run({"diamond", write_unitary("u.json", u.matrix()),
                            write("v.json", json{{"unitary", json::parse(matrix_to_json(v.matrix()))}}.dump())});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_NEAR(r.doc()["value"].get<double>(), unitary_distance(u, v), 1e-6);
    }
}

TEST_F(CliTest, DiamondAcceptsChoiFiles) {
    const auto c = choi(cli::named_unitary("X"));
    json j{{"choi", json::parse(matrix_to_json(c.j.matrix()))}, {"d1", 2}, {"d2", 2}};
    const auto r = run({"diamond", write("x.json", j.dump()), "X"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(r.doc()["value"].get<double>(), 0.0, 1e-6);
    j["d2"] = 3;
    EXPECT_EQ(run({"diamond", write("bad.json", j.dump()), "X"}).code, cli::kExitUsage);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"nonsense"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"diamond", "I"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"diamond", write("broken.json", "{\"rows\": 2,"), "I"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"diamond", write("nonunitary.json", matrix_to_json(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}})), "I"})
                  .code,
              cli::kExitUsage);
    EXPECT_EQ(run({"diamond", "I", "NotAGate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"sharpness", "--eps", "0.5", "--family", "middle"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"bounds", "--eps-grid", "0:1"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"axial", "--target-theta", "0", "--thetas", "0,x"}).code, cli::kExitUsage);

    const auto sdp = run({"diamond", "H", "T", "--max-iter", "2"});
    EXPECT_EQ(sdp.code, cli::kExitSdp);
    EXPECT_NE(sdp.err.find("SdpFailure"), std::string::npos);

    const auto cov = run({"synth1q", "--target", "T", "--eps", "0.1", "--max-length", "4"});
    EXPECT_EQ(cov.code, cli::kExitCovering);
    EXPECT_NE(cov.err.find("achieved covering radius"), std::string::npos);

    const auto help = run({"--help"});
    EXPECT_EQ(help.code, cli::kExitOk);
    EXPECT_NE(help.out.find("synth1q"), std::string::npos);
}

TEST_F(CliTest, MixoptHexagon) {
    for (int k = 0; k < 6; ++k)
        write_unitary("cands/c" + std::to_string(k) + ".json", oracle::phase(k * kPi / 3));
    const auto out = (dir_ / "p.json").string();
    const auto r = run({"mixopt", "Rz(pi/2)", (dir_ / "cands").string(), "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(out);
    const json j = json::parse(in);
    const double s = std::sin(kPi / 12);
    EXPECT_NEAR(j["value"].get<double>(), s * s, 1e-7);
    EXPECT_NEAR(j["p"][1].get<double>(), 0.5, 1e-6);
    EXPECT_NEAR(j["p"][2].get<double>(), 0.5, 1e-6);
    EXPECT_EQ(j["candidates"][0], "c0.json");
    EXPECT_NEAR(j["best_single"].get<double>(), s, 1e-9);
    EXPECT_LE(j["value"].get<double>(), j["best_single"].get<double>());
}

TEST_F(CliTest, MixoptTargetAmongCandidates) {
    write_unitary("c/a.json", cli::named_unitary("H").matrix());
    write_unitary("c/b.json", cli::named_unitary("S").matrix());
    const auto r = run({"mixopt", "S", (dir_ / "c").string(), "--paranoid", "--lowering", "primal"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(r.doc()["value"].get<double>(), 0.0, 1e-7);
    EXPECT_NEAR(r.doc()["cross_check_value"].get<double>(), 0.0, 1e-7);
    EXPECT_NEAR(r.doc()["best_single"].get<double>(), 0.0, 1e-12);
    fs::create_directories(dir_ / "empty");
    EXPECT_EQ(run({"mixopt", "S", (dir_ / "empty").string()}).code, cli::kExitUsage);
}

TEST_F(CliTest, Synth1qExactTargetAndDeterminism) {
    const std::vector<std::string> args{"synth1q", "--target", "T", "--eps", "0.3", "--samples", "6", "--seed", "9"};
    const auto a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    const json j = a.doc();
    EXPECT_EQ(j["det_error"].get<double>(), 0.0);
    EXPECT_EQ(j["prob_error"].get<double>(), 0.0);
    ASSERT_EQ(j["samples"].size(), 6u);
    for (const auto &s : j["samples"]) EXPECT_EQ(s, json::array({"T"}));
    EXPECT_EQ(run(args).out, a.out);
}

TEST_F(CliTest, Synth1qErrorBoundAndReproducibility) {
    const std::string out1 = (dir_ / "a.json").string(), out2 = (dir_ / "b.json").string();
    for (const auto &o : {out1, out2}) {
        const auto r = run({"synth1q", "--target", "Rz(0.3)", "--eps", "0.35", "--samples", "20", "--seed", "4",
                            "--out", o});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    std::ifstream f1(out1), f2(out2);
    const std::string s1((std::istreambuf_iterator<char>(f1)), {}), s2((std::istreambuf_iterator<char>(f2)), {});
    EXPECT_EQ(s1, s2);
    const json j = json::parse(s1);
    const double eps = j["eps"], delta = j["delta"];
    EXPECT_LE(j["prob_error"].get<double>(), eps * eps + delta);
    EXPECT_LE(j["det_error"].get<double>(), eps);
}

TEST_F(CliTest, Synth1qCustomGateSet) {
    json gates = json::array();
    gates.push_back({{"label", "h"}, {"matrix", json::parse(matrix_to_json(cli::named_unitary("H").matrix()))}});
    gates.push_back({{"label", "t"}, {"matrix", json::parse(matrix_to_json(cli::named_unitary("T").matrix()))}});
    const auto gs = write("gs.json", json{{"gates", gates}}.dump());
    const auto r = run({"synth1q", "--target", "S", "--eps", "0.49", "--gateset", gs, "--max-length", "14"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc()["support"][0], json::array({"t", "t"}));
    EXPECT_EQ(run({"synth1q", "--target", "S", "--eps", "0.4", "--gateset", write("bad.json", "{}")}).code,
              cli::kExitUsage);
}

TEST_F(CliTest, BoundsCsv) {
    const auto r = run({"bounds", "--d", "2", "--eps-grid", "0:1:0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "eps,delta,lower,upper");
    int rows = 0;
    while (std::getline(in, line)) {
        double e, d, lo, up;
        ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &e, &d, &lo, &up), 4);
        EXPECT_NEAR(lo, up, 1e-12);
        ++rows;
    }
    EXPECT_EQ(rows, 11);
    const auto file = (dir_ / "c.csv").string();
    ASSERT_EQ(run({"bounds", "--d", "4", "--eps-grid", "0:1:0.5", "--out", file}).code, 0);
    std::ifstream f(file);
    const std::string text((std::istreambuf_iterator<char>(f)), {});
    EXPECT_EQ(text, "eps,delta,lower,upper\n0,0,0,0\n0.5,0.133974596216,0.129487298108,0.25\n1,1,0.75,1\n");
}

TEST_F(CliTest, SharpnessLowerQutrit) {
    const auto r = run({"sharpness", "--d", "3", "--eps", "0.6", "--family", "lower", "--mesh", "0.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.doc();
    EXPECT_NEAR(j["bound"].get<double>(), 0.248888888889, 1e-12);
    EXPECT_NEAR(j["value"].get<double>(), j["bound"].get<double>(), 1e-6);
    EXPECT_EQ(run({"sharpness", "--d", "3", "--eps", "0.1", "--family", "lower", "--mesh", "0.5"}).code,
              cli::kExitUsage);
}

TEST_F(CliTest, AxialFigureInstance) {
    const auto r = run({"axial", "--target-theta", "pi/2", "--thetas", "0,pi/3,2pi/3,pi,4pi/3,5pi/3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(r.doc()["value"].get<double>(), 0.0669872981078, 1e-12);
    EXPECT_EQ(r.out, "{\"p\":[0.0,0.5,0.5,0.0,0.0,0.0],\"value\":0.0669872981078}\n");
}

}  // namespace
}  // namespace usynth
