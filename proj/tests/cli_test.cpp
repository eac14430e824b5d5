#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result gubin(const std::string &args, const std::string &env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + GUBIN_CLI + std::string(" ") + args + " 2>/dev/null";
  Result r;
  FILE *pipe = ::popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string &name) { return std::string(GUBIN_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / "gubin_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

} // namespace

TEST(Cli, GubinVerdictExitCodes) {
  EXPECT_EQ(gubin("gubin " + data("cube2.cnf")).code, 20);
  const Result triple = gubin("gubin " + data("triple.cnf"));
  EXPECT_EQ(triple.code, 10);
  EXPECT_EQ(triple.out, "SAT\n");
  EXPECT_EQ(gubin("gubin " + data("sample3.cnf") + " --mode full").code, 10);
}

TEST(Cli, GubinTraceFile) {
  const fs::path trace = scratch("cube2.json");
  EXPECT_EQ(gubin("gubin " + data("cube2.cnf") + " --mode full --trace " + trace.string()).code, 20);
  const auto j = nlohmann::json::parse(slurp(trace));
  EXPECT_EQ(j.at("verdict"), "UNSAT");
  EXPECT_EQ(j.at("first_zero_matrix"), nlohmann::json::array({3, 4}));
  EXPECT_EQ(j.at("final_matrices").at("3,4"), nlohmann::json::array({"0000", "0000", "0000", "0000"}));
  EXPECT_EQ(j.at("rounds").size(), 2U);
}

TEST(Cli, OracleWitnessAndMethods) {
  const Result bf = gubin("oracle " + data("sample3.cnf") + " --witness");
  EXPECT_EQ(bf.code, 10);
  EXPECT_EQ(bf.out, "SAT\nv -1 -2 3 0\n");
  EXPECT_EQ(gubin("oracle " + data("triple.cnf") + " --method dpll").code, 20);
  const auto j = nlohmann::json::parse(gubin("oracle " + data("triple.cnf") + " --json").out);
  EXPECT_EQ(j.at("verdict"), "UNSAT");
  EXPECT_TRUE(j.at("witness").is_null());
}

TEST(Cli, OracleCapFromEnvironment) {
  EXPECT_EQ(gubin("oracle " + data("triple.cnf"), "GUBIN_ORACLE_CAP=2").code, 2);
  EXPECT_EQ(gubin("oracle " + data("triple.cnf"), "GUBIN_ORACLE_CAP=3").code, 20);
  EXPECT_EQ(gubin("oracle " + data("triple.cnf") + " --method dpll", "GUBIN_ORACLE_CAP=2").code, 20);
}

TEST(Cli, Diff) {
  const Result bad = gubin("diff " + data("triple.cnf"));
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.out, "MISMATCH gubin=SAT oracle=UNSAT\n");
  EXPECT_EQ(gubin("diff " + data("cube2.cnf")).out, "AGREE gubin=UNSAT oracle=UNSAT\n");
}

TEST(Cli, Patterns) {
  const Result cube = gubin("patterns " + data("cube2.cnf"));
  EXPECT_EQ(cube.out, "pattern2 (1,2)\ngubin=UNSAT consistent_with_claim=true\n");
  const Result chain = gubin("patterns " + data("unit_chain.cnf"));
  EXPECT_EQ(chain.out, "no pattern\ngubin=UNSAT consistent_with_claim=false\n");
}

TEST(Cli, Reduce) {
  const fs::path out = scratch("reduced.cnf");
  const Result r = gubin("reduce " + data("triple.cnf") + " --out " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reduction_sound=false"), std::string::npos);
  EXPECT_EQ(slurp(out), "p cnf 4 4\n1 0\n-2 0\n-3 0\n-4 0\n");
}

TEST(Cli, Minimize) {
  const Result r = gubin("minimize " + data("padded.cnf"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p cnf 3 4\n1 2 3 0\n-1 0\n-2 0\n-3 0\n");
  EXPECT_EQ(gubin("minimize " + data("cube2.cnf")).code, 2);
}

TEST(Cli, Permutations) {
  const Result r = gubin("perm " + data("triple.cnf"));
  EXPECT_NE(r.out.find("orderings=24 correct=18 fraction=0.75"), std::string::npos);
  const auto j = nlohmann::json::parse(gubin("perm " + data("triple.cnf") + " --sample 5 --seed 3 --json").out);
  EXPECT_EQ(j.at("orderings_tested"), 5);
}

TEST(Cli, MineWritesCorpus) {
  const fs::path dir = scratch("corpus");
  fs::remove_all(dir);
  const Result r = gubin("mine --vars 5 --clauses 8 --count 2000 --minimize --corpus " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("tested 2000 mismatches ", 0), 0U);
  ASSERT_TRUE(fs::exists(dir / "index.json"));
  const auto index = nlohmann::json::parse(slurp(dir / "index.json"));
  for (const auto &e : index)
    EXPECT_TRUE(fs::exists(dir / (e.at("hash").get<std::string>() + ".cnf")));
  const std::string again = gubin("mine --vars 5 --clauses 8 --count 2000 --minimize --json").out;
  EXPECT_EQ(nlohmann::json::parse(again).at("index"), index);
}

TEST(Cli, ReplayAndProbe) {
  const Result replay = gubin("replay");
  EXPECT_EQ(replay.code, 0);
  EXPECT_EQ(replay.out.find("[FAIL]"), std::string::npos);
  const auto probe = nlohmann::json::parse(gubin("probe --sizes 4,8 --json").out);
  ASSERT_EQ(probe.size(), 2U);
  EXPECT_EQ(probe[0].at("m"), 4);
}

TEST(Cli, Errors) {
  EXPECT_EQ(gubin("gubin " + data("malformed.cnf")).code, 2);
  EXPECT_EQ(gubin("gubin " + data("no_such_file.cnf")).code, 2);
  EXPECT_EQ(gubin("").code, 2);
  EXPECT_EQ(gubin("gubin " + data("cube2.cnf") + " --mode sideways").code, 2);
}
