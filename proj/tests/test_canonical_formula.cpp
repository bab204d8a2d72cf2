#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ccf/canonical_formula.hpp"
#include "ccf/catalog.hpp"
#include "ccf/errors.hpp"

using namespace ccf;

namespace {

const Quat one = Quat::one(), qi = Quat::i(), qj = Quat::j(), qk = Quat::k();
const Rat half(1, 2);

// Integer quaternions for the brute-force oracle.
using IQ = std::array<long long, 4>;

IQ imul(const IQ& p, const IQ& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}
IQ iadd(const IQ& p, const IQ& q) { return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]}; }
IQ isub(const IQ& p, const IQ& q) { return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]}; }
IQ iconj(const IQ& p) { return {p[0], -p[1], -p[2], -p[3]}; }
IQ ineg(const IQ& p) { return {-p[0], -p[1], -p[2], -p[3]}; }
IQ ilambda(const IQ& p) { return {p[0], -p[2], p[3], p[1]}; }

// 4·{Φ_x(a):Φ_y(b)} = u v' + v' u with u = x - a, v' = y - b or its conjugate
IQ four_ratio(const IQ& u, const IQ& v, bool star) {
  const IQ w = star ? iconj(v) : v;
  return iadd(imul(u, w), imul(w, u));
}

struct OracleCounts {
  std::size_t inadmissible = 0, holds = 0, fails = 0;
  std::vector<std::array<ElemId, 4>> holds_set;
};

OracleCounts oracle_scan(bool star) {
  // Element order of the catalog Q: 1, -1, i, -i, j, -j, k, -k.
  std::array<IQ, 8> e{};
  for (int n = 0; n < 4; ++n) {
    e[2 * n][n] = 1;
    e[2 * n + 1][n] = -1;
  }
  auto pm = [&](const IQ& p, const IQ& q) { return p == q || p == ineg(q); };
  OracleCounts out;
  for (ElemId x = 0; x < 8; ++x)
    for (ElemId a = 0; a < 8; ++a)
      for (ElemId y = 0; y < 8; ++y)
        for (ElemId b = 0; b < 8; ++b) {
          const IQ ainv = iconj(e[a]);
          if (pm(e[x], e[a]) || pm(e[y], e[b]) || pm(e[x], e[b]) || pm(ainv, e[y])) {
            ++out.inadmissible;
            continue;
          }
          const IQ lhs = four_ratio(isub(e[x], e[a]), isub(e[y], e[b]), star);
          const IQ rhs = four_ratio(isub(e[x], e[b]), isub(ainv, e[y]), star);
          if (ilambda(lhs) == rhs) {
            ++out.holds;
            out.holds_set.push_back({x, a, y, b});
          } else {
            ++out.fails;
          }
        }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(CCF_GOLDEN_DIR) + "/" + name;
  if (std::getenv("CCF_UPDATE_GOLDEN")) {
    std::ofstream(path) << text;
    return;
  }
  const std::string golden = read_file(path);
  ASSERT_FALSE(golden.empty()) << "missing golden file " << path;
  EXPECT_EQ(text, golden) << name;
}

Quat sp(const Quat& v) { return quat_scale(ScalarQ::inv_sqrt2(), v); }

} // namespace

TEST(Phi, Examples) {
  EXPECT_EQ(phi(one, qi).value, sp(one - qi));
  EXPECT_EQ(phi(qj, qk).value, sp(qj - qk));
  EXPECT_EQ(phi(one, qi).x, one);
  EXPECT_THROW(phi(one, -one), DegenerateValence);
  EXPECT_THROW(phi(qi, qi), DegenerateValence);
}

TEST(Phi, ValuesAreSpecial) {
  for (const auto& x : lipschitz_units())
    for (const auto& a : lipschitz_units())
      if (!(x == a) && !(x == -a)) EXPECT_TRUE(is_special_element(phi(x, a).value));
}

TEST(Lambda, BasisImages) {
  EXPECT_EQ(lambda_map(one), one);
  EXPECT_EQ(lambda_map(qi), qk);
  EXPECT_EQ(lambda_map(qj), -qi);
  EXPECT_EQ(lambda_map(qk), qj);
  EXPECT_EQ(lambda_map(quat_scale(half, qj - qk)), quat_scale(-half, qi + qj));
}

TEST(Lambda, AntiAutomorphismOn2O) {
  const auto o = build("2O");
  for (const auto& u : o->elements())
    for (const auto& v : o->elements()) {
      const Quat a = std::get<QuatRealization>(u.realization).value;
      const Quat b = std::get<QuatRealization>(v.realization).value;
      ASSERT_EQ(lambda_map(a * b), lambda_map(b) * lambda_map(a));
    }
}

TEST(Lambda, CompositionAgrees) {
  for (const auto& e : build("2O")->elements()) {
    const Quat q = std::get<QuatRealization>(e.realization).value;
    EXPECT_EQ(lambda_map(q), lambda_by_composition(q));
  }
}

TEST(Lambda, OrderSixOnQ) {
  Quat q = qi;
  int n = 0;
  do {
    q = lambda_map(q);
    ++n;
  } while (!(q == qi));
  EXPECT_EQ(n, 6);
}

TEST(CanonicalFormula, PrintedValuesPlain) {
  const auto s = cf_sides({one, qi, qj, qk}, RatioConvention::Plain);
  EXPECT_EQ(s.lhs, quat_scale(half, qj - qk));
  EXPECT_EQ(s.rhs, quat_scale(-half, qi + qj));
  EXPECT_EQ(lambda_map(s.lhs), s.rhs);
}

TEST(CanonicalFormula, StarFlipsBothSigns) {
  const auto s = cf_sides({one, qi, qj, qk}, RatioConvention::Star);
  EXPECT_EQ(s.lhs, quat_scale(half, qk - qj));
  EXPECT_EQ(s.rhs, quat_scale(half, qi + qj));
}

TEST(CanonicalFormula, HoldsUnderBothConventions) {
  EXPECT_TRUE(cf_check({one, qi, qj, qk}, RatioConvention::Plain).holds);
  EXPECT_TRUE(cf_check({one, qi, qj, qk}, RatioConvention::Star).holds);
}

TEST(CanonicalFormula, InadmissibleNamesThePair) {
  try {
    cf_sides({one, qi, qi, qk}, RatioConvention::Plain);
    FAIL() << "expected InadmissibleQuadruple";
  } catch (const InadmissibleQuadruple& e) {
    EXPECT_EQ(e.pair(), "(a^-1,y)");
  }
  EXPECT_EQ(inadmissible_pair({one, one, qj, qk}), "(x,a)");
  EXPECT_EQ(inadmissible_pair({one, qi, qj, -qj}), "(y,b)");
  EXPECT_EQ(inadmissible_pair({one, qi, qj, -one}), "(x,b)");
  EXPECT_FALSE(inadmissible_pair({one, qi, qj, qk}));
  EXPECT_THROW(cf_check({qi, qi, qj, qk}, RatioConvention::Star), InadmissibleQuadruple);
}

TEST(CanonicalFormula, ExpansionExamples) {
  EXPECT_TRUE(ratio_expansion_check({one, qi, qj, qk}, RatioConvention::Plain));
  EXPECT_TRUE(ratio_expansion_check({one, qj, qi, qk}, RatioConvention::Plain));
}

TEST(Scan, MatchesIntegerOracle) {
  for (const auto c : {RatioConvention::Plain, RatioConvention::Star}) {
    const auto s = cf_scan(c);
    const auto o = oracle_scan(c == RatioConvention::Star);
    EXPECT_EQ(s.inadmissible, o.inadmissible);
    EXPECT_EQ(s.holds, o.holds);
    EXPECT_EQ(s.fails, o.fails);
    EXPECT_EQ(s.holds_set, o.holds_set);
    EXPECT_EQ(s.classes.size(), 4096u);
    EXPECT_EQ(s.inadmissible + s.holds + s.fails, 4096u);
  }
}

TEST(Scan, ContainsOneIJKAndDiagonalIsInadmissible) {
  const auto q = build("Q");
  const std::array<ElemId, 4> t{*q->find_quat(one), *q->find_quat(qi), *q->find_quat(qj), *q->find_quat(qk)};
  for (const auto c : {RatioConvention::Plain, RatioConvention::Star}) {
    const auto s = cf_scan(c);
    EXPECT_NE(std::find(s.holds_set.begin(), s.holds_set.end(), t), s.holds_set.end());
    for (ElemId x = 0; x < 8; ++x)
      for (ElemId y = 0; y < 8; ++y)
        for (ElemId b = 0; b < 8; ++b) EXPECT_EQ(s.classes[((x * 8 + x) * 8 + y) * 8 + b], CFClass::Inadmissible);
  }
}

TEST(Scan, ExpansionHoldsEverywhere) {
  const auto q = lipschitz_units();
  for (const auto c : {RatioConvention::Plain, RatioConvention::Star})
    for (const auto& x : q)
      for (const auto& a : q)
        for (const auto& y : q)
          for (const auto& b : q) {
            const CFQuadruple t{x, a, y, b};
            if (admissible(t)) ASSERT_TRUE(ratio_expansion_check(t, c));
          }
}

TEST(Scan, Golden) {
  check_golden("cf_scan_plain.json", scan_json(cf_scan(RatioConvention::Plain)).dump(2) + "\n");
  check_golden("cf_scan_star.json", scan_json(cf_scan(RatioConvention::Star)).dump(2) + "\n");
}

TEST(AutAction, Examples) {
  const auto q = build("Q");
  const auto aut = automorphism_group(q);
  const ElemId i = *q->find_quat(qi), j = *q->find_quat(qj), k = *q->find_quat(qk);
  std::optional<ElemId> sigma, big_i;
  for (ElemId a = 0; a < aut->order(); ++a) {
    if (apply_automorphism(*aut, a, i) == j && apply_automorphism(*aut, a, j) == k) sigma = a;
    if (apply_automorphism(*aut, a, i) == i && apply_automorphism(*aut, a, j) == *q->find_quat(-qj)) big_i = a;
  }
  ASSERT_TRUE(sigma && big_i);
  EXPECT_EQ(aut_q_action(*q, *aut, *sigma, sp(one - qi)), sp(one - qj));
  EXPECT_EQ(aut_q_action(*q, *aut, *big_i, qj), -qj);
  EXPECT_EQ(aut_q_action(*q, *aut, 0, quat_scale(half, one + qi - qj + qk)), quat_scale(half, one + qi - qj + qk));
}

TEST(AutAction, PreservesSpecialsAndRatios) {
  const auto q = build("Q");
  const auto aut = automorphism_group(q);
  const auto specials = special_elements();
  for (ElemId a = 0; a < aut->order(); ++a)
    for (const auto& u : specials) {
      ASSERT_TRUE(is_special_element(aut_q_action(*q, *aut, a, u)));
      for (const auto& v : specials)
        ASSERT_EQ(aut_q_action(*q, *aut, a, jordan_ratio(u, v, RatioConvention::Star)),
                  jordan_ratio(aut_q_action(*q, *aut, a, u), aut_q_action(*q, *aut, a, v), RatioConvention::Star));
    }
}

// The classification is carried along exactly by the automorphisms that
// commute with lambda; the others move some holding quadruple to a failing one.
TEST(Equivariance, StabilizerIsCentralizerOfLambda) {
  const auto q = build("Q");
  const auto aut = automorphism_group(q);
  const auto s = cf_scan(RatioConvention::Plain);
  std::vector<ElemId> stabilizer, commuting;
  for (ElemId a = 0; a < aut->order(); ++a) {
    std::array<ElemId, 8> f{};
    for (ElemId e = 0; e < 8; ++e) f[e] = apply_automorphism(*aut, a, e);
    bool same = true;
    for (std::size_t n = 0; n < 4096 && same; ++n) {
      const ElemId x = n >> 9, aa = (n >> 6) & 7, y = (n >> 3) & 7, b = n & 7;
      const auto before = s.classes[n];
      const auto after = s.classes[((f[x] * 8 + f[aa]) * 8 + f[y]) * 8 + f[b]];
      EXPECT_EQ(before == CFClass::Inadmissible, after == CFClass::Inadmissible);
      same = before == after;
    }
    if (same) stabilizer.push_back(a);
    bool commutes = true;
    for (const auto& basis : {qi, qj, qk})
      commutes = commutes && aut_q_action(*q, *aut, a, lambda_map(basis)) == lambda_map(aut_q_action(*q, *aut, a, basis));
    if (commutes) commuting.push_back(a);
  }
  EXPECT_EQ(stabilizer, commuting);
  EXPECT_EQ(stabilizer.size(), 3u);
  EXPECT_LT(stabilizer.size(), aut->order());
}
