// Copyright 2026 The clusterqec Authors
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

#include "cli/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "clusterqec/serialization.h"

namespace clusterqec::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "clusterqec");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Json parse(const Outcome& o) { return Json::parse(o.out); }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("clusterqec_cli_test_" + name);
}

TEST(CliTest, LatticeEnvelope) {
    auto o = invoke({"lattice", "--D", "1", "--L", "4", "--obc"});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    Json j = parse(o);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["command"], "lattice");
    EXPECT_EQ(j["config"]["boundary"], "obc");
    EXPECT_EQ(j["result"]["group"]["generators"][0], "+XZII");
}

TEST(CliTest, UniformityVerdictAndAssert) {
    auto pass = invoke({"uniformity", "--D", "1", "--L", "8", "--m", "2"});
    ASSERT_EQ(pass.code, kExitOk) << pass.err;
    EXPECT_EQ(parse(pass)["result"]["uniform"], true);
    auto fail = invoke({"uniformity", "--D", "1", "--L", "8", "--m", "3", "--assert"});
    EXPECT_EQ(fail.code, kExitCheckFailed);
    EXPECT_EQ(parse(fail)["result"]["verdict"], "fail");
    auto sweep = invoke({"uniformity", "--D", "1", "--L", "8", "--m", "2", "--method", "subset-sweep"});
    ASSERT_EQ(sweep.code, kExitOk) << sweep.err;
    EXPECT_EQ(parse(sweep)["result"]["uniform"], true);
}

TEST(CliTest, MinweightIsByteIdenticalAcrossThreadCounts) {
    auto a = invoke({"minweight", "--D", "2", "--L", "4", "--threads", "1"});
    auto b = invoke({"minweight", "--D", "2", "--L", "4", "--threads", "4"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(parse(a)["result"]["min_support"], 4);
    EXPECT_EQ(parse(a)["result"].count("wall_time_seconds"), 0u);
    auto timed = invoke({"minweight", "--D", "2", "--L", "4", "--timing"});
    EXPECT_EQ(parse(timed)["result"].count("wall_time_seconds"), 1u);
    auto win = invoke({"minweight", "--D", "2", "--L", "4", "--method", "windowed"});
    EXPECT_EQ(parse(win)["result"]["min_support"], 4);
}

TEST(CliTest, SyndromesIdentify) {
    auto o = invoke({"syndromes", "--D", "1", "--L", "6", "--t", "1", "--identify", "011100", "--assert"});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    Json j = parse(o);
    EXPECT_EQ(j["result"]["table"]["pure"], true);
    EXPECT_EQ(j["result"]["identifications"][0]["status"], "identified");
    auto bad = invoke({"syndromes", "--D", "1", "--L", "6", "--identify", "01x"});
    EXPECT_EQ(bad.code, kExitInvalidInput);
}

TEST(CliTest, BenchThenFit) {
    auto csv = temp_path("bench.csv");
    auto o = invoke({"bench", "--engine", "exact", "--delays", "0:0.4:0.05", "--readout", "0.02", "--out",
                     csv.string()});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    std::ifstream in(csv);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.rfind("# clusterqec bench schema_version=1", 0), 0u);
    auto f = invoke({"fit", "--in", csv.string()});
    ASSERT_EQ(f.code, kExitOk) << f.err;
    Json j = parse(f);
    EXPECT_EQ(j["result"]["num_points"], 9);
    EXPECT_FALSE(j["result"]["T2_est_us"].is_null());
    std::filesystem::remove(csv);
}

TEST(CliTest, SampledBenchIsDeterministic) {
    std::vector<std::string> args = {"bench", "--delays", "0,5,10", "--shots", "2000", "--realizations", "2",
                                     "--seed", "3"};
    auto a = invoke(args);
    args.insert(args.end(), {"--threads", "3"});
    auto b = invoke(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, EncodeChecks) {
    auto o = invoke({"encode", "--D", "1", "--L", "10", "--A", "0,1,2,3,4,5,6", "--m", "2", "--statevector"});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    Json j = parse(o);
    EXPECT_EQ(j["result"]["uniform"], true);
    EXPECT_LT(j["result"]["statevector"]["max_abs_difference"].get<double>(), 1e-12);
    auto small = invoke({"encode", "--D", "1", "--L", "10", "--A", "0", "--m", "1", "--assert"});
    EXPECT_EQ(small.code, kExitCheckFailed);
    auto search = invoke({"encode", "--D", "1", "--L", "10", "--m", "2", "--search", "contiguous"});
    ASSERT_EQ(search.code, kExitOk) << search.err;
    EXPECT_FALSE(parse(search)["result"]["witness"].is_null());
}

TEST(CliTest, GeneratorsAndEdgeFiles) {
    auto gens = temp_path("gens.json");
    std::ofstream(gens) << R"(["XZZ", "ZXI", "ZIX"])";
    auto o = invoke({"minweight", "--generators", gens.string()});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    EXPECT_EQ(parse(o)["result"]["min_support"], 2);
    auto edges = temp_path("edges.txt");
    std::ofstream(edges) << "# star\n0 1\n0 2\n";
    auto e = invoke({"minweight", "--edges", edges.string()});
    ASSERT_EQ(e.code, kExitOk) << e.err;
    EXPECT_EQ(parse(e)["result"]["min_support"], 2);
    std::filesystem::remove(gens);
    std::filesystem::remove(edges);
}

TEST(CliTest, ExitCodes) {
    EXPECT_EQ(invoke({"lattice", "--help"}).code, kExitOk);
    EXPECT_EQ(invoke({}).code, kExitInvalidInput);
    EXPECT_EQ(invoke({"lattice", "--D", "1", "--L", "2", "--pbc"}).code, kExitInvalidInput);
    EXPECT_EQ(invoke({"lattice", "--L", "4", "--pbc", "--obc"}).code, kExitInvalidInput);
    EXPECT_EQ(invoke({"minweight", "--D", "1", "--L", "20", "--max-log2", "10"}).code, kExitResourceLimit);
    EXPECT_EQ(invoke({"fit", "--in", "/nonexistent/file.csv"}).code, kExitInvalidInput);
    EXPECT_EQ(invoke({"bench", "--t1", "10", "--t2", "30"}).code, kExitInvalidInput);
}

}  // namespace
}  // namespace clusterqec::cli
