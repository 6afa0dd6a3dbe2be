#include <gtest/gtest.h>

#include <fstream>

#include <json.hpp>
#include <novikov/novikov.hpp>

#include "oracles.hpp"

using namespace novikov;

namespace {

const std::string cli = NOVIKOV_CLI;
const std::string data = NOVIKOV_DATA;
const std::string scratch = NOVIKOV_SCRATCH;

oracle::Run cli_run(const std::string& args) { return oracle::run("'" + cli + "' " + args); }

std::string in_data(const std::string& name) { return "'" + data + "/" + name + "'"; }

nlohmann::json json_of(const oracle::Run& r) { return nlohmann::json::parse(r.output); }

} // namespace

TEST(Cli, BettiDefaultsToTranscendental) {
    auto r = cli_run("betti -c " + in_data("map_torus.json"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(oracle::contains(r.output, "b0=0 b1=0")) << r.output;
    EXPECT_TRUE(oracle::contains(r.output, "Q(t)")) << r.output;
}

TEST(Cli, BettiAtAlexanderRoot) {
    auto r = cli_run("betti -c " + in_data("map_torus.json") + " --at root:t^2-t+1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(oracle::contains(r.output, "b0=1 b1=1")) << r.output;
}

TEST(Cli, BettiBoundaryCases) {
    auto q = json_of(cli_run("--format json betti -c " + in_data("acyclic.json") + " --at zero"));
    EXPECT_EQ(q["betti"], nlohmann::json::parse("[0, 0]"));
    EXPECT_EQ(q["ideal"], "(t)");
    auto z = json_of(cli_run("--format json betti -c " + in_data("zero.json")));
    EXPECT_EQ(z["betti"], nlohmann::json::parse("[0]"));
}

TEST(Cli, BettiAcceptsPresentations) {
    auto r = json_of(cli_run("--format json betti -c " + in_data("trefoil_n3.json") + " --at int:2"));
    EXPECT_EQ(r["betti"], nlohmann::json::parse("[0, 6]"));
    EXPECT_EQ(r["euler_characteristic"], -6);
}

TEST(Cli, BoundsForThreeTrefoils) {
    auto r = cli_run("bounds -c " + in_data("trefoil_n3.json") + " --a rat:1/2 --dim-e 2");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(oracle::contains(r.output, "c_1 >= 3")) << r.output;
    auto j = json_of(cli_run("--format json bounds -c " + in_data("trefoil_n3.json") + " --a rat:1/2 --dim-e 2"));
    EXPECT_EQ(j["route"], "direct");
    EXPECT_EQ(j["p"], 2);
    EXPECT_EQ(j["weak"][1]["ceiling"], 3);
}

TEST(Cli, BoundsRefusesUnits) {
    auto r = cli_run("bounds -c " + in_data("trefoil_n3.json") + " --a root:t^2-t+1 --dim-e 2");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_TRUE(oracle::contains(r.output, "t^2 - t + 1")) << r.output;
}

TEST(Cli, Jumps) {
    auto r = cli_run("jumps -c " + in_data("golden_torus.json"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(oracle::contains(r.output, "t^2 - 3*t + 1")) << r.output;
    EXPECT_TRUE(oracle::contains(r.output, "confirmed")) << r.output;
    auto j = json_of(cli_run("--format json jumps -c " + in_data("map_torus.json") + " --degree 1"));
    EXPECT_TRUE(oracle::contains(j.dump(), "t^2 - t + 1")) << j.dump();
}

TEST(Cli, UnitCheck) {
    auto u = cli_run("unit-check root:t^2-t+1");
    EXPECT_EQ(u.exit_code, 0);
    EXPECT_TRUE(oracle::contains(u.output, "Dirichlet unit: yes"));
    EXPECT_TRUE(oracle::contains(u.output, "classification: unit"));
    EXPECT_TRUE(oracle::contains(cli_run("unit-check int:2").output, "classification: integer-not-unit"));
    EXPECT_TRUE(oracle::contains(cli_run("unit-check rat:1/2").output, "classification: not-integer"));
    EXPECT_TRUE(oracle::contains(cli_run("unit-check transcendental").output, "classification: transcendental"));
}

TEST(Cli, VerifyOrder) {
    auto yes = cli_run("verify-order --lhs 1,1 --rhs 0");
    EXPECT_EQ(yes.exit_code, 0);
    EXPECT_TRUE(oracle::contains(yes.output, "dominates: true, T = 1")) << yes.output;
    auto no = cli_run("verify-order --lhs 0,1 --rhs 1");
    EXPECT_TRUE(oracle::contains(no.output, "dominates: false")) << no.output;
    EXPECT_TRUE(oracle::contains(no.output, "r = 0")) << no.output;
}

TEST(Cli, Theorem22) {
    auto r = cli_run("theorem22 -c " + in_data("map_torus.json") + " --a rat:1/2");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(oracle::contains(r.output, "dominates: true")) << r.output;
    EXPECT_EQ(cli_run("theorem22 -c " + in_data("map_torus.json") + " --a int:2").exit_code, 3);
    EXPECT_EQ(cli_run("theorem22 -c " + in_data("map_torus.json") + " --a rat:1/3 --p 2").exit_code, 1);
}

TEST(Cli, BottCheck) {
    auto r = cli_run("bott-check --components @" + in_data("bott_circle.json") + " --rhs 1,0");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(oracle::contains(r.output, "dominates: false")) << r.output;
    auto ok = cli_run("bott-check --components '[{\"index\":0,\"dims\":[1,1]}]' --rhs 0");
    EXPECT_TRUE(oracle::contains(ok.output, "dominates: true")) << ok.output;
}

TEST(Cli, TrefoilExample) {
    for (int n = 1; n <= 3; ++n) {
        auto r = cli_run("example trefoil --n " + std::to_string(n));
        EXPECT_EQ(r.exit_code, 0);
        EXPECT_TRUE(oracle::contains(r.output, "dim H1(X;F) = " + std::to_string(2 * n))) << r.output;
    }
}

TEST(Cli, EmittedComplexesFeedBack) {
    std::string t = scratch + "/cli_trefoil.json";
    ASSERT_EQ(cli_run("example trefoil --n 2 --emit-complex '" + t + "'").exit_code, 0);
    auto b = json_of(cli_run("--format json betti -c '" + t + "' --at int:2"));
    EXPECT_EQ(b["betti"], nlohmann::json::parse("[0, 4]"));

    std::string m = scratch + "/cli_torus.json";
    ASSERT_EQ(cli_run("example mapping-torus --matrix '[[2,1],[1,1]]' -o '" + m + "'").exit_code, 0);
    EXPECT_EQ(io::read_complex(m).boundaries, mapping_torus(IntMatrix::from_rows({{2, 1}, {1, 1}})).complex.boundaries);
}

TEST(Cli, SeededOutputIsDeterministic) {
    auto a = cli_run("--seed 11 example random-complex");
    auto b = cli_run("--seed 11 example random-complex");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
    EXPECT_NE(a.output, cli_run("--seed 12 example random-complex").output);
    auto j1 = cli_run("--format json jumps -c " + in_data("golden_torus.json"));
    EXPECT_EQ(j1.output, cli_run("--format json jumps -c " + in_data("golden_torus.json")).output);
}

TEST(Cli, RandomComplexRoundTripsThroughFile) {
    std::string f = scratch + "/cli_random.json";
    ASSERT_EQ(cli_run("--seed 5 example random-complex -o '" + f + "'").exit_code, 0);
    std::ifstream in(f);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(io::dump(io::complex_to_json(io::parse_complex(text))) + "\n", text);
    auto direct = json_of(cli_run("--format json betti -c '" + f + "'"));
    auto c = io::parse_complex(text);
    EXPECT_EQ(direct["betti"].get<std::vector<std::int64_t>>(), betti(c, generic_target()).values);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli_run("betti -c '" + scratch + "/missing.json'").exit_code, 2);
    EXPECT_EQ(cli_run("unit-check root:t^2-1").exit_code, 2);
    EXPECT_EQ(cli_run("unit-check nonsense").exit_code, 2);
    EXPECT_EQ(cli_run("bogus").exit_code, 2);
    EXPECT_EQ(cli_run("example mapping-torus --matrix '[[2]]'").exit_code, 3);
    std::string bad = scratch + "/cli_bad.json";
    std::ofstream(bad) << R"({"ranks":[1,1,1],"boundaries":[[["1"]],[["1"]]]})";
    auto r = cli_run("betti -c '" + bad + "'");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(oracle::contains(r.output, "degree 1")) << r.output;
}
