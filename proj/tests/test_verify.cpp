#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "ccf/verify.hpp"

using namespace ccf;

namespace {

nlohmann::json strip_timing(nlohmann::json j) {
  j.erase("total_elapsed_ms");
  for (auto& c : j["checks"]) c.erase("elapsed_ms");
  return j;
}

const RunReport& full_run() {
  static const RunReport r = run_verify({});
  return r;
}

Status status_of(const std::string& id) {
  const auto* c = full_run().find(id);
  EXPECT_NE(c, nullptr) << id;
  return c ? c->status : Status::Skipped;
}

} // namespace

TEST(Verify, IdsUniqueAndSorted) {
  const auto& r = full_run();
  std::set<std::string> seen;
  for (const auto& c : r.checks) EXPECT_TRUE(seen.insert(c.id).second) << c.id;
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  EXPECT_GT(r.checks.size(), 60u);
}

TEST(Verify, PaperReproductions) {
  for (const char* id : {"cf.quadruple.1ijk.plain", "cf.quadruple.1ijk.star", "cf.printed-values.plain",
                         "cf.lambda.basis", "cf.lambda.anti-automorphism.2O", "cf.exercise-iii.semidirect",
                         "catalog.orders", "catalog.2O.closed", "aut.Q.S4", "aut.Q.inner-V", "aut.2T.S4",
                         "matrix.SL2(2).iso-S3", "matrix.SL2(3).iso-2T", "table.row.Q.nonsplit",
                         "table.row.2O.nonsplit-Q", "braid.relation", "braid.sl2.full-twist"}) {
    EXPECT_EQ(status_of(id), Status::Pass) << id;
  }
}

TEST(Verify, DiscrepanciesAreReported) {
  for (const char* id : {"aut.2O.paper-claim", "table.row.2O.quotient-type", "braid.kernel-claim",
                         "cf.printed-values.star", "jordan.inverse-identity.printed"}) {
    EXPECT_EQ(status_of(id), Status::Discrepancy) << id;
  }
  const auto* aut = full_run().find("aut.2O.paper-claim");
  ASSERT_NE(aut, nullptr);
  EXPECT_EQ(aut->payload["order"], 48);
  EXPECT_EQ(aut->payload["identified"], "C2×S4");
  EXPECT_EQ(aut->payload["vs_C2x2T"]["isomorphic"], false);
  EXPECT_EQ(aut->payload["vs_C2xS4"]["isomorphic"], true);
}

TEST(Verify, EquivarianceFindingIsRecorded) {
  const auto* c = full_run().find("cf.equivariance.plain");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  EXPECT_EQ(c->payload["stabilizer_order"], 3);
  EXPECT_TRUE(c->payload.contains("witness"));
  EXPECT_EQ(status_of("cf.equivariance.admissible"), Status::Pass);
  EXPECT_EQ(exit_code(full_run()), 1);
}

TEST(Verify, ScopesSelectSuites) {
  const auto r = run_verify({Scope::Braid, {RatioConvention::Plain}});
  for (const auto& c : r.checks) EXPECT_EQ(c.id.rfind("braid.", 0), 0u) << c.id;
  EXPECT_EQ(exit_code(r), 0);
  const auto j = run_verify({Scope::Jordan, {RatioConvention::Star}});
  EXPECT_NE(j.find("jordan.ratio-conj.star"), nullptr);
  EXPECT_EQ(j.find("jordan.ratio-conj.plain"), nullptr);
  EXPECT_EQ(parse_scope("matrix-iso"), Scope::MatrixIso);
  EXPECT_THROW(parse_scope("everything"), std::invalid_argument);
}

TEST(Verify, MarkdownLines) {
  const auto md = report_markdown(full_run());
  EXPECT_NE(md.find("cf.quadruple.1ijk.plain: pass"), std::string::npos);
  EXPECT_NE(md.find("table.row.Q.nonsplit: pass"), std::string::npos);
  EXPECT_NE(md.find("## Discrepancies"), std::string::npos);
}

TEST(Verify, DeterministicModuloTiming) {
  const auto a = strip_timing(report_json(run_verify({})));
  const auto b = strip_timing(report_json(full_run()));
  EXPECT_EQ(a.dump(2), b.dump(2));
}

TEST(Verify, Golden) {
  const std::string text = strip_timing(report_json(full_run())).dump(2) + "\n";
  const std::string path = std::string(CCF_GOLDEN_DIR) + "/verify_all.json";
  if (std::getenv("CCF_UPDATE_GOLDEN")) {
    std::ofstream(path) << text;
    return;
  }
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  ASSERT_FALSE(ss.str().empty()) << "missing " << path;
  EXPECT_EQ(text, ss.str());
}
