#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "brauerlab/cli.hpp"

namespace brauerlab::cli {
namespace {

const std::string kData = BRAUERLAB_TEST_DATA_DIR;

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, FrobeniusOfNuggets) {
  const auto r = run({"dioph", "frobenius", "6", "9", "20"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "43\n");
}

TEST(Cli, GtEquationWithFrobenius) {
  const auto r = run({"gt", "equation", "--n", "4", "--frobenius"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "6 13 22 12 / 33\n");
}

TEST(Cli, BrauerBuildConfigSix) {
  const auto r = run({"brauer", "build", kData + "/config6.json"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "12")) << r.out;
  EXPECT_TRUE(contains(r.out, "cycle-difference: a0_1 a0_2 - l1_3 a1_1 a1_2 = 0")) << r.out;
}

TEST(Cli, BasisListsTwelveElements) {
  const auto r = run({"brauer", "basis", kData + "/config6.json"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "e_V1\n"));
  EXPECT_TRUE(contains(r.out, "count 12\n"));
}

TEST(Cli, KeyScheduleMatchesReferenceFile) {
  const auto r = run({"aes", "schedule", "--key", "2b7e151628aed2a6abf7158809cf4f3c"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, slurp(kData + "/fips197_schedule.txt"));
}

TEST(Cli, MessageToDiophantine) {
  const auto r = run({"dioph", "from-message", "AFC01310D0B38AF2CEC4623DA274797D"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "(ac03d27)^3(f14)^2(b8e69)^1")) << r.out;
  EXPECT_TRUE(contains(r.out, "7,3,5")) << r.out;
}

TEST(Cli, MutateAcceptsHexAndJsonSeeds) {
  const auto hex = run({"mutate", "run", "--seed", kData + "/fips197.key", "--rounds", "1"});
  EXPECT_EQ(hex.exit_code, 0) << hex.err;
  EXPECT_TRUE(contains(hex.out, "a0fafe17")) << hex.out;
  const auto period = run({"mutate", "period", "--seed", kData + "/gf4_seed.json", "--max", "50"});
  EXPECT_EQ(period.exit_code, 0) << period.err;
}

TEST(Cli, NfaAcceptance) {
  EXPECT_EQ(run({"nfa", "accept", kData + "/config6.json", "--word", "a0_1,a0_2"}).out, "accepted\n");
  EXPECT_EQ(run({"nfa", "accept", kData + "/config6.json", "--word", "l1_3,a0_1"}).out, "rejected\n");
  const auto bad = run({"nfa", "accept", kData + "/config6.json", "--word", "zz"});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, JsonEnvelope) {
  const auto r = run({"--json", "gt", "hearts", "--r", "2", "--covers"});
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema"), "brauerlab/1");
  EXPECT_EQ(j.at("command"), "gt hearts");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"nosuch"}).exit_code, 2);
  EXPECT_EQ(run({"dioph", "solve", "--n1", "3"}).exit_code, 2);
  EXPECT_EQ(run({"dioph", "gaps", "4", "6"}).exit_code, 1);
  EXPECT_EQ(run({"brauer", "build", kData + "/malformed.json"}).exit_code, 1);
  EXPECT_EQ(run({"brauer", "build", kData + "/absent_vertex.json"}).exit_code, 1);
  EXPECT_EQ(run({"brauer", "build", kData + "/shared_vertex.json"}).exit_code, 1);
  EXPECT_EQ(run({"--skip-truncated", "brauer", "build", kData + "/shared_vertex.json"}).exit_code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"gt", "table", "--from", "4", "--to", "12"},
      {"nfa", "build", kData + "/config6.json", "--dot"},
      {"--json", "brauer", "build", kData + "/config6.json"},
  };
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.exit_code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace brauerlab::cli
