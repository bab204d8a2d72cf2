#include "ccf/canonical_formula.hpp"

#include "ccf/catalog.hpp"
#include "ccf/errors.hpp"

namespace ccf {

namespace {

bool plus_or_minus(const Quat& u, const Quat& v) { return u == v || u == -v; }

// σ²: i → k, j → i, k → j.
Quat sigma_squared(const Quat& q) { return {q[0], q[2], q[3], q[1]}; }
// I: fixes i, negates j and k.
Quat inner_i(const Quat& q) { return {q[0], q[1], -q[2], -q[3]}; }

} // namespace

bool in_q(const Quat& q) {
  int nonzero = 0;
  for (const auto& c : q.coords()) {
    if (c.is_zero()) continue;
    if (c != ScalarQ(1) && c != ScalarQ(-1)) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

Valence phi(const Quat& x, const Quat& a) {
  if (x == a) throw DegenerateValence("Φ_x(a) with x = a is zero");
  if (x == -a) throw DegenerateValence("Φ_x(a) with x = −a has norm 2");
  return {ScalarQ::inv_sqrt2() * (x - a), x, a};
}

Quat lambda_map(const Quat& q) {
  // images of the basis: 1 → 1, i → k, j → −i, k → j
  return {q[0], -q[2], q[3], q[1]};
}

Quat lambda_by_composition(const Quat& q) { return quat_conj(inner_i(sigma_squared(q))); }

std::optional<std::string> inadmissible_pair(const CFQuadruple& q) {
  if (plus_or_minus(q.x, q.a)) return "(x,a)";
  if (plus_or_minus(q.y, q.b)) return "(y,b)";
  if (plus_or_minus(q.x, q.b)) return "(x,b)";
  if (plus_or_minus(quat_inv(q.a), q.y)) return "(a^-1,y)";
  return std::nullopt;
}

bool admissible(const CFQuadruple& q) { return !inadmissible_pair(q).has_value(); }

CFSides cf_sides(const CFQuadruple& q, RatioConvention c) {
  if (auto pair = inadmissible_pair(q)) {
    throw InadmissibleQuadruple(*pair, "inadmissible quadruple: " + *pair + " are equal up to sign");
  }
  const Quat a_inv = quat_inv(q.a);
  return {jordan_ratio(phi(q.x, q.a).value, phi(q.y, q.b).value, c),
          jordan_ratio(phi(q.x, q.b).value, phi(a_inv, q.y).value, c)};
}

CFCheck cf_check(const CFQuadruple& q, RatioConvention c) {
  CFCheck out;
  out.sides = cf_sides(q, c);
  out.holds = lambda_map(out.sides.lhs) == out.sides.rhs;
  return out;
}

bool ratio_expansion_check(const CFQuadruple& q, RatioConvention c) {
  const Quat direct = cf_sides(q, c).lhs;
  const Quat expanded = ScalarQ(Rat(1, 2)) * ((jordan_ratio(q.x, q.y, c) + jordan_ratio(q.a, q.b, c)) -
                                              (jordan_ratio(q.a, q.y, c) + jordan_ratio(q.x, q.b, c)));
  return direct == expanded;
}

ScanReport cf_scan(RatioConvention c) {
  const auto q = build(CatalogName{CatalogName::Kind::Quaternion, 0});
  const std::size_t n = q->order();
  auto value = [&](ElemId id) { return std::get<QuatRealization>(q->element(id).realization).value; };
  ScanReport report;
  report.convention = c;
  report.classes.reserve(n * n * n * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId a = 0; a < n; ++a)
      for (ElemId y = 0; y < n; ++y)
        for (ElemId b = 0; b < n; ++b) {
          const CFQuadruple quad{value(x), value(a), value(y), value(b)};
          if (!admissible(quad)) {
            report.classes.push_back(CFClass::Inadmissible);
            ++report.inadmissible;
          } else if (cf_check(quad, c).holds) {
            report.classes.push_back(CFClass::Holds);
            report.holds_set.push_back({x, a, y, b});
            ++report.holds;
          } else {
            report.classes.push_back(CFClass::Fails);
            ++report.fails;
          }
        }
  return report;
}

nlohmann::json scan_json(const ScanReport& r) {
  const auto q = build(CatalogName{CatalogName::Kind::Quaternion, 0});
  nlohmann::json holds = nlohmann::json::array();
  for (const auto& h : r.holds_set) {
    holds.push_back({q->label(h[0]), q->label(h[1]), q->label(h[2]), q->label(h[3])});
  }
  return {{"convention", std::string(convention_name(r.convention))},
          {"counts", {{"inadmissible", r.inadmissible}, {"holds", r.holds}, {"fails", r.fails}}},
          {"holds", holds}};
}

Quat aut_q_action(const FiniteGroup& q_group, const FiniteGroup& aut, ElemId alpha, const Quat& v) {
  Quat out;
  for (int n = 0; n < 4; ++n) {
    if (v[n].is_zero()) continue;
    const ElemId basis = *q_group.find_quat(Quat::basis(n));
    const ElemId image = apply_automorphism(aut, alpha, basis);
    out += v[n] * std::get<QuatRealization>(q_group.element(image).realization).value;
  }
  return out;
}

} // namespace ccf
