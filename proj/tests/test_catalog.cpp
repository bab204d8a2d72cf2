#include <map>
#include <set>

#include <gtest/gtest.h>

#include "ccf/catalog.hpp"
#include "ccf/errors.hpp"

using namespace ccf;

namespace {

std::size_t det_one_count(int p) {
  std::size_t n = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) n += ((a * d - b * c) % p + p) % p == 1;
  return n;
}

std::set<Quat, QuatKeyLess> as_set(const std::vector<Quat>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Catalog, Orders) {
  const std::map<std::string, std::size_t> expect{
      {"C1", 1}, {"C3", 3}, {"C8", 8}, {"S3", 6}, {"S4", 24}, {"S5", 120}, {"V", 4}, {"Q", 8},
      {"A4", 12}, {"2T", 24}, {"2O", 48}, {"SL2(2)", 6}, {"SL2(3)", 24}, {"SL2(5)", 120}};
  for (const auto& [name, order] : expect) EXPECT_EQ(build(name)->order(), order) << name;
}

TEST(Catalog, SpecialLinearMatchesEnumeration) {
  for (int p : {2, 3, 5}) EXPECT_EQ(build(CatalogName{CatalogName::Kind::SpecialLinear, p})->order(), det_one_count(p));
}

TEST(Catalog, NamesAndAliases) {
  EXPECT_EQ(CatalogName::parse("T2").str(), "2T");
  EXPECT_EQ(CatalogName::parse("O2").str(), "2O");
  EXPECT_EQ(CatalogName::parse("Sym3").str(), "S3");
  EXPECT_EQ(CatalogName::parse("C(5)").str(), "C5");
  EXPECT_EQ(CatalogName::parse("SL2_3").str(), "SL2(3)");
  EXPECT_THROW(CatalogName::parse("S6"), UnknownGroup);
  EXPECT_THROW(CatalogName::parse("SL2(4)"), UnknownGroup);
  EXPECT_EQ(CatalogName::parse("C1024").str(), "C1024");
  EXPECT_THROW(CatalogName::parse("C1025"), UnknownGroup);
  EXPECT_THROW(build("nope"), UnknownGroup);
  for (const auto& n : catalog_names()) EXPECT_EQ(CatalogName::parse(n.str()), n);
}

TEST(Catalog, DeterministicOrder) {
  const auto q = build("Q");
  std::vector<std::string> labels;
  for (const auto& e : q->elements()) labels.push_back(e.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"}));
  const auto a = build("2O"), b = build("2O");
  for (ElemId x = 0; x < a->order(); ++x) EXPECT_EQ(a->label(x), b->label(x));
}

TEST(SpecialElements, CountNormAndDisjointness) {
  const auto specials = special_elements();
  EXPECT_EQ(specials.size(), 24u);
  EXPECT_EQ(as_set(specials).size(), 24u);
  const auto t = build("2T");
  for (const auto& s : specials) {
    EXPECT_EQ(quat_norm2(s), ScalarQ(1));
    EXPECT_FALSE(t->find_quat(s));
    EXPECT_TRUE(is_special_element(s));
    int nonzero = 0;
    for (const auto& c : s.coords()) nonzero += !c.is_zero();
    EXPECT_EQ(nonzero, 2);
  }
  EXPECT_TRUE(as_set(specials).count(quat_scale(ScalarQ::inv_sqrt2(), Quat::one() - Quat::i())));
  EXPECT_FALSE(is_special_element(Quat::i()));
}

TEST(BinaryOctahedral, UnionAndClosureAgree) {
  const auto o = build("2O");
  auto units = hurwitz_units();
  EXPECT_EQ(units.size(), 24u);
  for (const auto& s : special_elements()) units.push_back(s);
  std::vector<Quat> elems;
  for (const auto& e : o->elements()) elems.push_back(std::get<QuatRealization>(e.realization).value);
  EXPECT_EQ(as_set(units), as_set(elems));
  std::vector<Quat> closed;
  for (const auto& e : binary_octahedral_by_closure()->elements()) closed.push_back(std::get<QuatRealization>(e.realization).value);
  EXPECT_EQ(as_set(closed), as_set(elems));
  for (const auto& u : elems)
    for (const auto& v : elems) ASSERT_TRUE(o->find_quat(u * v));
}

TEST(BinaryTetrahedral, QNormalOfIndexThree) {
  const auto t = build("2T");
  ElemSet q;
  for (const auto& x : lipschitz_units()) q.push_back(*t->find_quat(x));
  std::sort(q.begin(), q.end());
  EXPECT_TRUE(is_normal(*t, q));
  EXPECT_EQ(t->order() / q.size(), 3u);
}

TEST(Klein, FromC2xC2) {
  const auto h = klein_from_c2xc2();
  EXPECT_TRUE(h.is_bijective());
  const auto& v = *h.target();
  EXPECT_EQ(v.label(h(*h.source()->find(IdPair{1, 0}))), "I");
  EXPECT_EQ(v.label(h(*h.source()->find(IdPair{0, 1}))), "J");
  EXPECT_EQ(v.label(h(*h.source()->find(IdPair{1, 1}))), "K");
}

TEST(Identify, KnownTypes) {
  EXPECT_EQ(identify(build("SL2(2)")), "S3");
  EXPECT_EQ(identify(build("SL2(3)")), "2T");
  EXPECT_EQ(identify(build("Q")), "Q");
  EXPECT_EQ(identify(build("C6")), "C6");
  EXPECT_EQ(identify(automorphism_group(build("Q"))), "S4");
  const auto o = build("2O");
  EXPECT_EQ(identify(quotient(o, center(*o)).group), "S4");
}

TEST(Table, RowStatuses) {
  const auto rows = verify_table();
  std::map<std::string, std::string> status;
  for (const auto& r : rows) {
    EXPECT_TRUE(status.emplace(r.id, r.status).second) << "duplicate " << r.id;
    EXPECT_NE(r.status, "fail") << r.id << ": " << r.details;
  }
  EXPECT_EQ(status.at("table.row.Q.nonsplit"), "pass");
  EXPECT_EQ(status.at("table.row.A4.semidirect"), "pass");
  EXPECT_EQ(status.at("table.row.2O.nonsplit-Q"), "pass");
  EXPECT_EQ(status.at("table.row.2O.quotient-type"), "discrepancy");
  for (const char* split : {"table.row.S3.split", "table.row.A4.split", "table.row.S4.split", "table.row.2T.split"})
    EXPECT_EQ(status.at(split), "pass") << split;
}
