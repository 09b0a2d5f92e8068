// Runs the built `spfk` binary and checks output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " SPFK_CLI_PATH " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, VerifyJson) {
    const auto r = run("verify pfab --n 2 --format json");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["id"], "pfab");
    EXPECT_EQ(j["equal"], true);
    EXPECT_EQ(j["params"]["n"], 2);
    EXPECT_EQ(j["lhs_digest"], j["rhs_digest"]);
}

TEST(Cli, ErratumExitsOne) {
    const auto r = run("verify fhaff1 --n 2 --coeff paper --format json");
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["equal"], false);
    EXPECT_TRUE(j.contains("counterexample"));
    EXPECT_EQ(run("verify schur_hyper --n 1 --coeff paper").code, 1);
    EXPECT_EQ(run("verify schur_hyper --n 1").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("verify nosuch").code, 2);
    EXPECT_EQ(run("verify pfab --n 9").code, 2);
    EXPECT_EQ(run("verify pfab --format xml").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("suite --max bogus=1").code, 2);
    EXPECT_EQ(run("suite --max 2mn").code, 2);
    EXPECT_EQ(run("pf /nonexistent.json").code, 2);
    EXPECT_EQ(run("pf " SPFK_DATA_DIR "/hpf_order4_dim8.json").code, 2);
}

TEST(Cli, UnknownIdListsKnownIds) {
    const std::string cmd = SPFK_CLI_PATH " verify nosuch 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    EXPECT_NE(out.find("pfab"), std::string::npos);
    EXPECT_NE(out.find("debruijn_even"), std::string::npos);
}

TEST(Cli, KernelCommands) {
    auto pf = run("pf " SPFK_DATA_DIR "/pf_2x2.json");
    EXPECT_EQ(pf.code, 0);
    EXPECT_EQ(pf.out, "1/1\n");
    auto hf = run("hf " SPFK_DATA_DIR "/hf_ones_4x4.json");
    EXPECT_EQ(hf.code, 0);
    EXPECT_EQ(hf.out, "3/1\n");
    auto hpf = run("hpf " SPFK_DATA_DIR "/hpf_order4_dim8.json");
    EXPECT_EQ(hpf.code, 0);
    EXPECT_NE(hpf.out.find('/'), std::string::npos);
    auto hhf = run("hhf " SPFK_DATA_DIR "/hf_ones_4x4.json");
    EXPECT_EQ(hhf.code, 0);
    EXPECT_EQ(hhf.out, "3/1\n");
}

TEST(Cli, SuiteReducedMatrix) {
    const auto r = run("suite --max 2mn=6 --max size=6");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("checks passed (seed 42)"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, SuiteJsonIsDeterministic) {
    const auto a = run("suite --seed 42 --json --max size=4");
    const auto b = run("suite --seed 42 --json --max size=4 --jobs 2");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    ASSERT_TRUE(j.is_array());
    for (std::size_t i = 1; i < j.size(); ++i) EXPECT_LE(j[i - 1]["id"], j[i]["id"]);
}

TEST(Cli, SeedFromEnvironment) {
    const auto env = run("verify sum --format json", "SPFK_SEED=7");
    const auto flag = run("verify sum --format json --seed 7");
    const auto def = run("verify sum --format json");
    ASSERT_EQ(env.code, 0);
    const auto je = nlohmann::json::parse(env.out), jf = nlohmann::json::parse(flag.out), jd = nlohmann::json::parse(def.out);
    EXPECT_EQ(je["lhs_digest"], jf["lhs_digest"]);
    EXPECT_NE(je["lhs_digest"], jd["lhs_digest"]);
    EXPECT_EQ(je["seeds"], nlohmann::json::array({7}));
}

TEST(Cli, ListMatchesRegistry) {
    const auto r = run("list");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("xipfashu\n"), std::string::npos);
}
