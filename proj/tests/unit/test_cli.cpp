#include <gtest/gtest.h>

#include <sstream>

#include "coble_cli/commands.hpp"
#include "coble_cli/serialize.hpp"

using namespace coble;
using namespace coble::cli;

namespace {
struct CliRun {
    int code;
    json out;
    std::string err;
};

CliRun run_cli(std::vector<const char*> args) {
    args.insert(args.begin(), "coble");
    std::ostringstream out, err;
    const int code = run(static_cast<int>(args.size()), args.data(), out, err);
    json j;
    if (!out.str().empty() && out.str()[0] == '{') j = json::parse(out.str());
    return {code, j, err.str()};
}
}  // namespace

TEST(Cli, InvariantsDim) {
    const CliRun r = run_cli({"invariants", "dim", "--degree", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out["outputs"]["dimension"], 43);
    EXPECT_EQ(r.out["command"], "invariants dim");
    for (const auto& c : r.out["checks"]) EXPECT_TRUE(c["pass"].get<bool>());
}

TEST(Cli, DegreeDual) {
    const CliRun r = run_cli({"enum", "degree-dual"});
    EXPECT_EQ(r.code, 0);
    bool found = false;
    for (const auto& c : r.out["checks"])
        if (c["name"] == "degree of the dual") {
            found = true;
            EXPECT_EQ(c["expected"], "6");
            EXPECT_EQ(c["provenance"], "paper");
        }
    EXPECT_TRUE(found);
}

TEST(Cli, ArtifactHashIsReproducible) {
    const CliRun a = run_cli({"prym", "check"});
    const CliRun b = run_cli({"prym", "check"});
    EXPECT_EQ(a.out["artifact_hash"], b.out["artifact_hash"]);
    EXPECT_EQ(a.out["artifact_hash"].get<std::string>().size(), 64u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"nonsense"}).code, 2);
    EXPECT_EQ(run_cli({"invariants", "dim", "--degree", "4"}).code, 2);
    EXPECT_EQ(run_cli({"hesse", "dual", "--lambda", "x"}).code, 2);
    EXPECT_EQ(run_cli({"hesse", "dual", "--lambda", "2", "--oracle-prime", "11"}).code, 2);
    EXPECT_EQ(run_cli({"prym", "genus", "--n", "2", "--g", "2", "--t", "6"}).code, 1);
    EXPECT_EQ(run_cli({"hesse", "dual", "--lambda", "3", "--oracle-prime", "13"}).code, 1);
    EXPECT_EQ(run_cli({"hesse", "dual", "--lambda", "2"}).code, 0);
}

TEST(Cli, TextFormat) {
    std::ostringstream out, err;
    const char* args[] = {"coble", "enum", "zagier", "--h", "1", "--format", "text"};
    EXPECT_EQ(run(7, args, out, err), 0);
    EXPECT_NE(out.str().find("PASS  v_111"), std::string::npos);
}

TEST(Cli, ProgressGoesToStderr) {
    const CliRun r = run_cli({"nu", "kernel"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("nu:"), std::string::npos);
    EXPECT_EQ(r.out["outputs"]["kernel"].size(), 4u);
}

TEST(Serialize, PolynomialRoundTrip) {
    const Poly p = cst(Eisenstein(ratio(1, 2), -3)) * X(0, 0).pow(2) * var(beta(1)) + X(2, 2);
    const json j = to_json(p);
    EXPECT_EQ(j[0]["coeff"]["re"], "1/2");
    EXPECT_EQ(j[0]["coeff"]["om"], "-3");
    EXPECT_EQ(j[0]["exps"].size(), 24u);
    EXPECT_EQ(poly_from_json(j), p);
}

TEST(Serialize, HeisenbergElement) {
    const json j = to_json(make_element(2, {1, 0}, {0, 2}));
    EXPECT_EQ(j, (json{{"t", 2}, {"x", {1, 0}}, {"xstar", {0, 2}}}));
}
