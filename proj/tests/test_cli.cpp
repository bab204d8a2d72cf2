#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run ccf(const std::string& args) {
  const std::string cmd = std::string("'") + CCF_CLI_PATH + "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const Run& r, const std::string& text) { return r.out.find(text) != std::string::npos; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json strip_timing(nlohmann::json j) {
  j.erase("total_elapsed_ms");
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j;
}

} // namespace

TEST(Cli, EvalPrintsCanonicalFormulaValues) {
  const auto r = ccf("eval 'cf(1,i,j,k)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true; lhs=(j-k)/2 rhs=-(i+j)/2\n");
}

TEST(Cli, EvalExamples) {
  EXPECT_EQ(ccf("eval '{i,j}'").out, "0\n");
  EXPECT_EQ(ccf("eval 'phi(1,i)'").out, "(1-i)/√2\n");
  EXPECT_EQ(ccf("eval 'lambda(j)'").out, "-i\n");
  const auto j = nlohmann::json::parse(ccf("eval '{1-i : j-k}' --json").out);
  EXPECT_EQ(j["label"], "j-k");
  EXPECT_EQ(j["value"].size(), 4u);
}

TEST(Cli, EvalErrorsExitOne) {
  const auto r = ccf("eval 'phi(1,1)'");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r, "error"));
  const auto lex = ccf("eval '1 @ i'");
  EXPECT_EQ(lex.code, 1);
  EXPECT_TRUE(has(lex, "offset 2"));
  EXPECT_EQ(ccf("eval '2^-1'").code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(ccf("").code, 2);
  EXPECT_EQ(ccf("frobnicate").code, 2);
  EXPECT_EQ(ccf("group show Nope").code, 2);
  EXPECT_EQ(ccf("group explode Q").code, 2);
  EXPECT_EQ(ccf("verify everything").code, 2);
  EXPECT_EQ(ccf("verify cf --convention sideways").code, 2);
  EXPECT_EQ(ccf("eval").code, 2);
  EXPECT_EQ(ccf("--help").code, 0);
}

TEST(Cli, VerifyExitCodes) {
  const auto braid = ccf("verify braid");
  EXPECT_EQ(braid.code, 0);
  EXPECT_TRUE(has(braid, "braid.kernel-claim: discrepancy"));
  const auto seq = ccf("verify sequences");
  EXPECT_EQ(seq.code, 0);
  EXPECT_TRUE(has(seq, "table.row.Q.nonsplit: pass"));
  const auto aut = ccf("verify aut");
  EXPECT_EQ(aut.code, 0);
  EXPECT_TRUE(has(aut, "aut.2O.paper-claim: discrepancy"));
  const auto cf = ccf("verify cf");
  EXPECT_TRUE(has(cf, "cf.quadruple.1ijk.plain: pass"));
  EXPECT_EQ(cf.code, 1); // equivariance under the whole of Aut(Q) fails
  EXPECT_EQ(ccf("verify jordan --convention star").code, 0);
  EXPECT_EQ(ccf("verify matrix-iso").code, 0);
}

TEST(Cli, VerifyJsonIsStable) {
  const std::string a = testing::TempDir() + "ccf_a.json", b = testing::TempDir() + "ccf_b.json";
  ccf("verify all --json '" + a + "'");
  ccf("verify all --json '" + b + "'");
  const auto ja = nlohmann::json::parse(read_file(a)), jb = nlohmann::json::parse(read_file(b));
  EXPECT_EQ(strip_timing(ja).dump(), strip_timing(jb).dump());
  EXPECT_TRUE(ja.contains("total_elapsed_ms"));
}

TEST(Cli, GroupCommands) {
  EXPECT_EQ(ccf("group aut Q").out, "order 24, isomorphic to S4\n");
  const auto dot = ccf("group lattice-dot V").out;
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  EXPECT_EQ(nodes, 5u);
  const auto show = nlohmann::json::parse(ccf("group show Q --format json").out);
  EXPECT_EQ(show["order"], 8);
  EXPECT_EQ(show["elements"].size(), 8u);
  EXPECT_EQ(show["table"].size(), 8u);
  EXPECT_EQ(show["elements"][2]["label"], "i");
  EXPECT_EQ(show["elements"][2]["realization"]["kind"], "quaternion");
  EXPECT_TRUE(has(ccf("group subgroups Q"), "{1, -1}"));
  EXPECT_TRUE(has(ccf("group table V"), "| **I** |"));
}

TEST(Cli, CatalogAndBraid) {
  const auto list = ccf("catalog list");
  EXPECT_EQ(list.code, 0);
  EXPECT_TRUE(has(list, "2O\t48\tquaternion"));
  const auto b = nlohmann::json::parse(ccf("braid 'a b a^-1'").out);
  EXPECT_EQ(b["word"], "abA");
  EXPECT_EQ(ccf("braid 'a c'").code, 1);
}
