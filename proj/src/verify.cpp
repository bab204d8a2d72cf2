#include "ccf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ccf/braid.hpp"
#include "ccf/canonical_formula.hpp"
#include "ccf/catalog.hpp"

namespace ccf {

namespace {

using Kind = CatalogName::Kind;
using json = nlohmann::json;

struct Outcome {
  Status status;
  std::string details;
  json payload = json::object();
};

Outcome pass(std::string details, json payload = json::object()) {
  return {Status::Pass, std::move(details), std::move(payload)};
}
Outcome fail(std::string details, json payload = json::object()) {
  return {Status::Fail, std::move(details), std::move(payload)};
}
Outcome verdict(bool ok, std::string details, json payload = json::object()) {
  return {ok ? Status::Pass : Status::Fail, std::move(details), std::move(payload)};
}

std::string conv(RatioConvention c) { return std::string(convention_name(c)); }

// Groups and scans shared between checks of one run.
class Context {
public:
  const GroupPtr& group(Kind k, int n = 0) {
    const auto key = std::make_pair(static_cast<int>(k), n);
    auto it = groups_.find(key);
    if (it == groups_.end()) it = groups_.emplace(key, build(CatalogName{k, n})).first;
    return it->second;
  }
  const GroupPtr& q() { return group(Kind::Quaternion); }
  const GroupPtr& o2() { return group(Kind::BinaryOctahedral); }

  const GroupPtr& aut(Kind k, int n = 0) {
    const auto key = std::make_pair(static_cast<int>(k), n);
    auto it = auts_.find(key);
    if (it == auts_.end()) it = auts_.emplace(key, automorphism_group(group(k, n))).first;
    return it->second;
  }

  const ScanReport& scan(RatioConvention c) {
    auto it = scans_.find(c);
    if (it == scans_.end()) it = scans_.emplace(c, cf_scan(c)).first;
    return it->second;
  }

private:
  std::map<std::pair<int, int>, GroupPtr> groups_;
  std::map<std::pair<int, int>, GroupPtr> auts_;
  std::map<RatioConvention, ScanReport> scans_;
};

class Runner {
public:
  explicit Runner(Context& ctx) : ctx_(ctx) {}

  void run(std::string id, const std::function<Outcome()>& body) {
    CheckResult r;
    r.id = std::move(id);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.status = o.status;
      r.details = std::move(o.details);
      r.payload = std::move(o.payload);
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.details = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  Context& ctx() { return ctx_; }
  std::vector<CheckResult> take() { return std::move(results_); }

private:
  Context& ctx_;
  std::vector<CheckResult> results_;
};

std::vector<Quat> elements_of(const FiniteGroup& g) {
  std::vector<Quat> out;
  for (const auto& e : g.elements()) out.push_back(std::get<QuatRealization>(e.realization).value);
  return out;
}

Quat random_quat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (;;) {
    std::array<ScalarQ, 4> c;
    for (auto& x : c) x = ScalarQ(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
    Quat q(c[0], c[1], c[2], c[3]);
    if (!q.is_zero()) return q;
  }
}

std::string quad_text(const FiniteGroup& q, const std::array<ElemId, 4>& ids) {
  return "(" + q.label(ids[0]) + "," + q.label(ids[1]) + "," + q.label(ids[2]) + "," + q.label(ids[3]) + ")";
}

std::optional<ElemId> find_automorphism(const FiniteGroup& aut, ElemId x, ElemId fx, ElemId y, ElemId fy) {
  for (ElemId a = 0; a < aut.order(); ++a) {
    if (apply_automorphism(aut, a, x) == fx && apply_automorphism(aut, a, y) == fy) return a;
  }
  return std::nullopt;
}

std::string witness_text(const GroupHom& h) {
  std::ostringstream os;
  const auto& s = *h.source();
  bool first = true;
  for (ElemId g : minimal_generating_sequence(s)) {
    os << (first ? "" : ", ") << s.label(g) << " -> " << h.target()->label(h(g));
    first = false;
  }
  return os.str();
}

json iso_payload(const IsoResult& r) {
  json p = {{"isomorphic", bool(r)}, {"assignments_tried", r.assignments_tried}};
  if (r) p["witness"] = witness_text(*r.witness);
  else p["reason"] = r.reason;
  return p;
}

Outcome iso_check(const GroupPtr& a, const GroupPtr& b, const std::string& what) {
  const auto r = isomorphic(a, b);
  if (!r) return fail(what + " not isomorphic: " + r.reason, iso_payload(r));
  const auto back = inverse_hom(*r.witness);
  const bool ok = r.witness->is_bijective() && back.is_bijective();
  return verdict(ok, what + " via " + witness_text(*r.witness), iso_payload(r));
}

// ---- jordan --------------------------------------------------------------------------

void jordan_suite(Runner& run, const std::vector<RatioConvention>& conventions) {
  auto& ctx = run.ctx();

  run.run("jordan.basis-table", [] {
    const Quat one = Quat::one(), i = Quat::i(), j = Quat::j(), k = Quat::k();
    const bool ok = jordan_product(one, one) == one && jordan_product(i, i) == -one &&
                    jordan_product(j, j) == -one && jordan_product(k, k) == -one &&
                    jordan_product(i, j).is_zero() && jordan_product(j, k).is_zero() &&
                    jordan_product(k, i).is_zero();
    return verdict(ok, "{1,1}=1, {i,i}={j,j}={k,k}=-1, {i,j}={j,k}={k,i}=0");
  });

  run.run("jordan.commutative.2O", [&] {
    const auto e = elements_of(*ctx.o2());
    for (const auto& u : e)
      for (const auto& v : e)
        if (!(jordan_product(u, v) == jordan_product(v, u))) return fail("{u,v} != {v,u} at " + label(u) + ", " + label(v));
    return pass("{u,v} = {v,u} on all 48x48 pairs");
  });

  run.run("jordan.nonassociative-witness", [] {
    const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    const std::array<Quat, 4> basis{Quat::one(), i, j, k};
    for (const auto& u : basis)
      for (const auto& v : basis)
        for (const auto& w : basis) {
          const Quat left = jordan_product(jordan_product(u, v), w);
          const Quat right = jordan_product(u, jordan_product(v, w));
          if (!(left == right)) {
            return pass("{{" + label(u) + "," + label(v) + "}," + label(w) + "} = " + label(left) + " but {" +
                            label(u) + ",{" + label(v) + "," + label(w) + "}} = " + label(right),
                        {{"witness", {label(u), label(v), label(w)}}, {"left", label(left)}, {"right", label(right)}});
          }
        }
    return fail("no nonassociativity witness among basis triples");
  });

  run.run("jordan.conj-antihom.2O", [&] {
    const auto e = elements_of(*ctx.o2());
    for (const auto& u : e)
      for (const auto& v : e)
        if (!(quat_conj(u * v) == quat_conj(v) * quat_conj(u))) return fail("(uv)* != v*u* at " + label(u) + ", " + label(v));
    return pass("(uv)* = v*u* on all 48x48 pairs");
  });

  run.run("jordan.norm-multiplicative.2O", [&] {
    const auto e = elements_of(*ctx.o2());
    for (const auto& u : e)
      for (const auto& v : e)
        if (!(quat_norm2(u * v) == quat_norm2(u) * quat_norm2(v))) return fail("|uv| != |u||v| at " + label(u) + ", " + label(v));
    return pass("|uv|^2 = |u|^2|v|^2 on all 48x48 pairs");
  });

  for (const auto c : conventions) {
    run.run("jordan.ratio-conj." + conv(c), [&, c] {
      const auto e = elements_of(*ctx.o2());
      for (const auto& u : e)
        for (const auto& v : e)
          if (!(quat_conj(jordan_ratio(u, v, c)) == jordan_ratio(quat_conj(u), quat_conj(v), c))) {
            return fail("{u:v}* != {u*:v*} at " + label(u) + ", " + label(v));
          }
      return pass("{u:v}* = {u*:v*} on all 48x48 pairs");
    });

    run.run("jordan.ratio-bilinear." + conv(c), [c] {
      std::mt19937_64 rng(0xb111);
      for (int n = 0; n < 200; ++n) {
        const Quat u = random_quat(rng), u2 = random_quat(rng), v = random_quat(rng), v2 = random_quat(rng);
        const bool left = jordan_ratio(u + u2, v, c) == jordan_ratio(u, v, c) + jordan_ratio(u2, v, c);
        const bool right = jordan_ratio(u, v + v2, c) == jordan_ratio(u, v, c) + jordan_ratio(u, v2, c);
        if (!left || !right) return fail("additivity fails at sample " + std::to_string(n));
      }
      return pass("additive in each variable on 200 random samples");
    });
  }

  run.run("jordan.inverse-identity.corrected", [] {
    std::mt19937_64 rng(0x1dea);
    for (int n = 0; n < 1000; ++n) {
      const Quat u = random_quat(rng), v = random_quat(rng);
      if (!(jordan_product(u, quat_conj(v)) == quat_scale(quat_norm2(v), jordan_product(u, quat_inv(v))))) {
        return fail("{u,v*} != |v|^2{u,v^-1} at u=" + label(u) + ", v=" + label(v));
      }
    }
    return pass("{u,v*} = |v|^2{u,v^-1} on 1000 random nonzero quaternions", {{"samples", 1000}});
  });

  run.run("jordan.inverse-identity.printed", [] {
    // The printed form carries |v|^-2 in place of |v|^2.
    std::mt19937_64 rng(0x1dea);
    for (int n = 0; n < 1000; ++n) {
      const Quat u = random_quat(rng), v = random_quat(rng);
      const Quat lhs = jordan_product(u, quat_conj(v));
      const Quat printed = quat_scale(quat_norm2(v).inverse(), jordan_product(u, quat_inv(v)));
      if (!(lhs == printed)) {
        return Outcome{Status::Discrepancy,
                       "printed {u,v*} = |v|^-2{u,v^-1} fails at u=" + label(u) + ", v=" + label(v) +
                           " (|v|^2=" + quat_norm2(v).str() + "); it holds with |v|^2",
                       {{"u", label(u)}, {"v", label(v)}, {"lhs", label(lhs)}, {"printed_rhs", label(printed)}}};
      }
    }
    return pass("printed form held on all samples");
  });
}

// ---- canonical formula --------------------------------------------------------------

void cf_suite(Runner& run, const std::vector<RatioConvention>& conventions) {
  auto& ctx = run.ctx();
  const Quat one = Quat::one(), i = Quat::i(), j = Quat::j(), k = Quat::k();
  const Rat half(1, 2);

  for (const auto c : conventions) {
    run.run("cf.quadruple.1ijk." + conv(c), [=] {
      const auto r = cf_check({one, i, j, k}, c);
      return verdict(r.holds,
                     std::string(r.holds ? "holds" : "fails") + ": lhs=" + label(r.sides.lhs) +
                         " rhs=" + label(r.sides.rhs) + " lambda(lhs)=" + label(lambda_map(r.sides.lhs)),
                     {{"holds", r.holds}, {"lhs", label(r.sides.lhs)}, {"rhs", label(r.sides.rhs)}});
    });

    run.run("cf.printed-values." + conv(c), [=] {
      const auto s = cf_sides({one, i, j, k}, c);
      const Quat lhs = quat_scale(half, j - k);
      const Quat rhs = quat_scale(-half, i + j);
      json p = {{"lhs", label(s.lhs)}, {"rhs", label(s.rhs)}, {"printed_lhs", label(lhs)}, {"printed_rhs", label(rhs)}};
      if (s.lhs == lhs && s.rhs == rhs) return pass("lhs=(j-k)/2 rhs=-(i+j)/2 as printed", p);
      return Outcome{Status::Discrepancy,
                     "computed lhs=" + label(s.lhs) + " rhs=" + label(s.rhs) + " against printed lhs=" +
                         label(lhs) + " rhs=" + label(rhs) + "; both signs flip and lambda(lhs)=rhs still holds",
                     p};
    });

    run.run("cf.scan." + conv(c), [&, c] {
      const auto& s = ctx.scan(c);
      const auto& q = *ctx.q();
      const std::array<ElemId, 4> target{*q.find_quat(one), *q.find_quat(i), *q.find_quat(j), *q.find_quat(k)};
      const bool contains = std::find(s.holds_set.begin(), s.holds_set.end(), target) != s.holds_set.end();
      const bool total = s.inadmissible + s.holds + s.fails == 4096;
      return verdict(contains && total,
                     "inadmissible=" + std::to_string(s.inadmissible) + " holds=" + std::to_string(s.holds) +
                         " fails=" + std::to_string(s.fails) + (contains ? "; (1,i,j,k) holds" : "; (1,i,j,k) missing"),
                     {{"inadmissible", s.inadmissible}, {"holds", s.holds}, {"fails", s.fails}});
    });

    run.run("cf.expansion." + conv(c), [&, c] {
      const auto& q = *ctx.q();
      std::size_t checked = 0;
      for (ElemId x = 0; x < 8; ++x)
        for (ElemId a = 0; a < 8; ++a)
          for (ElemId y = 0; y < 8; ++y)
            for (ElemId b = 0; b < 8; ++b) {
              const CFQuadruple t{std::get<QuatRealization>(q.element(x).realization).value,
                                  std::get<QuatRealization>(q.element(a).realization).value,
                                  std::get<QuatRealization>(q.element(y).realization).value,
                                  std::get<QuatRealization>(q.element(b).realization).value};
              if (!admissible(t)) continue;
              ++checked;
              if (!ratio_expansion_check(t, c)) return fail("expansion fails at " + quad_text(q, {x, a, y, b}));
            }
      return pass("bilinear expansion holds on all " + std::to_string(checked) + " admissible quadruples",
                  {{"checked", checked}});
    });

    run.run("cf.equivariance." + conv(c), [&, c] {
      const auto& q = *ctx.q();
      const auto& aut_ptr = ctx.aut(Kind::Quaternion);
      const auto& aut = *aut_ptr;
      const auto& s = ctx.scan(c);
      auto index = [](ElemId x, ElemId a, ElemId y, ElemId b) { return ((x * 8 + a) * 8 + y) * 8 + b; };
      std::size_t holds_breaks = 0;
      ElemSet stabilizer;
      json witness;
      for (ElemId alpha = 0; alpha < aut.order(); ++alpha) {
        std::array<ElemId, 8> img{};
        for (ElemId e = 0; e < 8; ++e) img[e] = apply_automorphism(aut, alpha, e);
        std::size_t breaks = 0;
        for (ElemId x = 0; x < 8; ++x)
          for (ElemId a = 0; a < 8; ++a)
            for (ElemId y = 0; y < 8; ++y)
              for (ElemId b = 0; b < 8; ++b) {
                const CFClass before = s.classes[index(x, a, y, b)];
                const CFClass after = s.classes[index(img[x], img[a], img[y], img[b])];
                if (before == after) continue;
                ++breaks;
                if (witness.is_null()) {
                  witness = {{"automorphism", aut.label(alpha)},
                             {"quadruple", quad_text(q, {x, a, y, b})},
                             {"image", quad_text(q, {img[x], img[a], img[y], img[b]})}};
                }
              }
        holds_breaks += breaks;
        if (breaks == 0) stabilizer.push_back(alpha);
      }
      const auto stab_type = identify(induced_subgroup(aut_ptr, stabilizer, "Stab").group);
      json labels = json::array();
      for (auto a : stabilizer) labels.push_back(aut.label(a));
      json p = {{"automorphisms", aut.order()}, {"class_changes", holds_breaks},
                {"stabilizer_order", stabilizer.size()}, {"stabilizer_type", stab_type}, {"stabilizer", labels}};
      std::string details = "holds/fails class changes under Aut(Q): " + std::to_string(holds_breaks) +
                            "; the classification is preserved by " + std::to_string(stabilizer.size()) + " of " +
                            std::to_string(aut.order()) + " automorphisms (a subgroup of type " + stab_type + ")";
      if (!witness.is_null()) {
        p["witness"] = witness;
        details += "; e.g. " + witness["automorphism"].get<std::string>() + " sends " +
                   witness["quadruple"].get<std::string>() + " (holds) to " + witness["image"].get<std::string>();
      }
      return verdict(holds_breaks == 0, details, p);
    });

    run.run("cf.aut-q.ratio-transport." + conv(c), [&, c] {
      const auto& q = *ctx.q();
      const auto& aut = *ctx.aut(Kind::Quaternion);
      const auto specials = special_elements();
      const std::size_t n = specials.size();
      std::map<Quat, std::size_t, QuatKeyLess> index;
      for (std::size_t m = 0; m < n; ++m) index[specials[m]] = m;
      std::vector<Quat> ratio(n * n);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) ratio[u * n + v] = jordan_ratio(specials[u], specials[v], c);
      for (ElemId alpha = 0; alpha < aut.order(); ++alpha) {
        std::vector<std::size_t> image(n);
        for (std::size_t m = 0; m < n; ++m) {
          const auto it = index.find(aut_q_action(q, aut, alpha, specials[m]));
          if (it == index.end()) return fail(aut.label(alpha) + " moves " + label(specials[m]) + " off the special set");
          image[m] = it->second;
        }
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v)
            if (!(aut_q_action(q, aut, alpha, ratio[u * n + v]) == ratio[image[u] * n + image[v]])) {
              return fail(aut.label(alpha) + " does not transport {" + label(specials[u]) + ":" + label(specials[v]) + "}");
            }
      }
      return pass("every automorphism of Q carries Jordan ratios of special elements to Jordan ratios of their images");
    });

    run.run("cf.ratio-transport." + conv(c), [&, c] {
      const auto e = elements_of(*ctx.o2());
      for (const auto& u : e)
        for (const auto& v : e)
          if (!(lambda_map(jordan_ratio(u, v, c)) == jordan_ratio(lambda_map(u), lambda_map(v), c))) {
            return fail("lambda{u:v} != {lambda u:lambda v} at " + label(u) + ", " + label(v));
          }
      return pass("lambda{u:v} = {lambda(u):lambda(v)} on all 48x48 pairs");
    });
  }

  run.run("cf.equivariance.admissible", [&] {
    const auto& aut = *ctx.aut(Kind::Quaternion);
    const auto& classes = ctx.scan(RatioConvention::Plain).classes;
    auto admissible_at = [&](ElemId x, ElemId a, ElemId y, ElemId b) {
      return classes[((x * 8 + a) * 8 + y) * 8 + b] != CFClass::Inadmissible;
    };
    std::size_t changes = 0;
    for (ElemId alpha = 0; alpha < aut.order(); ++alpha) {
      std::array<ElemId, 8> f{};
      for (ElemId e = 0; e < 8; ++e) f[e] = apply_automorphism(aut, alpha, e);
      for (ElemId x = 0; x < 8; ++x)
        for (ElemId a = 0; a < 8; ++a)
          for (ElemId y = 0; y < 8; ++y)
            for (ElemId b = 0; b < 8; ++b) changes += admissible_at(x, a, y, b) != admissible_at(f[x], f[a], f[y], f[b]);
    }
    return verdict(changes == 0, "admissibility is invariant under all " + std::to_string(aut.order()) +
                                     " automorphisms of Q (" + std::to_string(changes) + " changes)");
  });

  run.run("cf.phi.values", [&] {
    const Quat expect = quat_scale(ScalarQ::inv_sqrt2(), one - i);
    if (!(phi(one, i).value == expect)) return fail("phi(1,i) = " + label(phi(one, i).value));
    const auto q = elements_of(*ctx.q());
    std::size_t defined = 0;
    for (const auto& x : q)
      for (const auto& a : q) {
        if (x == a || x == -a) continue;
        ++defined;
        if (!is_special_element(phi(x, a).value)) return fail("phi(" + label(x) + "," + label(a) + ") not special");
      }
    return pass("phi(1,i) = " + label(expect) + "; all " + std::to_string(defined) + " defined values are special elements");
  });

  run.run("cf.lambda.basis", [=] {
    const bool ok = lambda_map(one) == one && lambda_map(i) == k && lambda_map(j) == -i && lambda_map(k) == j;
    return verdict(ok, "lambda(1)=" + label(lambda_map(one)) + " lambda(i)=" + label(lambda_map(i)) +
                           " lambda(j)=" + label(lambda_map(j)) + " lambda(k)=" + label(lambda_map(k)));
  });

  run.run("cf.lambda.worked-example", [=] {
    const Quat in = quat_scale(half, j - k);
    const Quat out = lambda_map(in);
    return verdict(out == quat_scale(-half, i + j), "lambda(" + label(in) + ") = " + label(out));
  });

  run.run("cf.lambda.composition", [&] {
    for (const auto& u : elements_of(*ctx.o2()))
      if (!(lambda_map(u) == lambda_by_composition(u))) return fail("basis formula and composite disagree at " + label(u));
    return pass("basis images agree with conj o I o sigma^2 on 2O");
  });

  run.run("cf.lambda.anti-automorphism.2O", [&] {
    const auto e = elements_of(*ctx.o2());
    for (const auto& u : e)
      for (const auto& v : e)
        if (!(lambda_map(u * v) == lambda_map(v) * lambda_map(u))) return fail("lambda(uv) != lambda(v)lambda(u) at " + label(u) + ", " + label(v));
    return pass("lambda(uv) = lambda(v)lambda(u) on all 48x48 pairs");
  });

  run.run("cf.lambda.preserves-2O", [&] {
    const auto& g = *ctx.o2();
    std::size_t specials = 0;
    for (const auto& u : elements_of(g)) {
      const Quat w = lambda_map(u);
      if (!g.find_quat(w)) return fail("lambda(" + label(u) + ") = " + label(w) + " outside 2O");
      if (is_special_element(u) != is_special_element(w)) return fail("lambda moves " + label(u) + " across the special set");
      specials += is_special_element(w);
    }
    return pass("lambda permutes 2O and its " + std::to_string(specials) + " special elements");
  });

  run.run("cf.lambda.order", [&] {
    const auto& g = *ctx.o2();
    std::vector<ElemId> perm(g.order());
    for (ElemId n = 0; n < g.order(); ++n) perm[n] = *g.find_quat(lambda_map(std::get<QuatRealization>(g.element(n).realization).value));
    std::size_t order = 1;
    std::vector<ElemId> power = perm;
    auto identity = [](const std::vector<ElemId>& p) {
      for (ElemId n = 0; n < p.size(); ++n) if (p[n] != n) return false;
      return true;
    };
    while (!identity(power)) {
      for (auto& x : power) x = perm[x];
      ++order;
    }
    return pass("lambda has order " + std::to_string(order) + " as a permutation of 2O", {{"order", order}});
  });

  run.run("cf.exercise-i.c3-to-autq", [&] {
    const auto& q = *ctx.q();
    const auto& aut = ctx.aut(Kind::Quaternion);
    const ElemId qi = *q.find_quat(i), qj = *q.find_quat(j), qk = *q.find_quat(k);
    const auto sigma = find_automorphism(*aut, qi, qj, qj, qk);
    if (!sigma) return fail("no automorphism i->j, j->k");
    const ElemId gen[] = {1};
    const ElemId img[] = {*sigma};
    const auto h = hom_from_generators(ctx.group(Kind::Cyclic, 3), gen, aut, img);
    return verdict(h.is_injective(), "1 -> " + aut->label(*sigma) + " extends to an injective C3 -> Aut(Q)");
  });

  run.run("cf.aut-q.preserves-specials", [&] {
    const auto& q = *ctx.q();
    const auto& aut = *ctx.aut(Kind::Quaternion);
    const auto specials = special_elements();
    for (ElemId alpha = 0; alpha < aut.order(); ++alpha) {
      for (const auto& s : specials) {
        const Quat w = aut_q_action(q, aut, alpha, s);
        if (!is_special_element(w)) return fail(aut.label(alpha) + " sends " + label(s) + " to " + label(w));
      }
    }
    return pass("all " + std::to_string(aut.order()) + " automorphisms permute the 24 special elements");
  });

  run.run("cf.exercise-iii.semidirect", [&] {
    const auto& v = ctx.group(Kind::Klein);
    const auto& c3 = ctx.group(Kind::Cyclic, 3);
    const auto& aut_v = ctx.aut(Kind::Klein);
    const ElemId vi = *v->find_label("I"), vj = *v->find_label("J"), vk = *v->find_label("K");
    const auto sigma = find_automorphism(*aut_v, vi, vj, vj, vk);
    if (!sigma) return fail("no automorphism I->J->K of V");
    const ElemId s1 = *sigma, s2 = aut_v->mul(s1, s1);
    const auto sd = semidirect_product({v, c3, aut_v, {0, s1, s2}}, "V⋊C3");
    const auto& g = *sd.group;
    const ElemId x = *g.find(IdPair{vi, 2});
    const ElemId product = g.mul(x, x);
    const ElemId expect = *g.find(IdPair{vj, 1});
    return verdict(product == expect && identify(sd.group) == "A4",
                   "(I,σ²)·(I,σ²) = " + g.label(product) + ", expected " + g.label(expect) + "; V⋊C3 ≅ " + identify(sd.group));
  });
}

// ---- sequences / catalog ------------------------------------------------------------

void sequences_suite(Runner& run) {
  auto& ctx = run.ctx();

  run.run("catalog.orders", [&] {
    const auto nq = ctx.q()->order(), nt = ctx.group(Kind::BinaryTetrahedral)->order(), no = ctx.o2()->order();
    const auto ns = special_elements().size();
    return verdict(nq == 8 && nt == 24 && no == 48 && ns == 24,
                   "|Q|=" + std::to_string(nq) + " |2T|=" + std::to_string(nt) + " |2O|=" + std::to_string(no) +
                       " specials=" + std::to_string(ns));
  });

  run.run("catalog.2O.disjoint-union", [&] {
    const auto& o = *ctx.o2();
    const auto& t = *ctx.group(Kind::BinaryTetrahedral);
    std::set<Quat, QuatKeyLess> merged;
    for (const auto& x : elements_of(t)) merged.insert(x);
    for (const auto& s : special_elements()) {
      if (t.find_quat(s)) return fail(label(s) + " is in 2T");
      merged.insert(s);
    }
    bool same = merged.size() == o.order();
    for (const auto& x : elements_of(o)) same = same && merged.count(x);
    return verdict(same, "2T (24) and the 24 special elements are disjoint and together give 2O (48)");
  });

  run.run("catalog.2O.closed", [&] {
    const auto& o = *ctx.o2();
    const auto e = elements_of(o);
    for (const auto& u : e)
      for (const auto& v : e)
        if (!o.find_quat(u * v)) return fail(label(u) + "*" + label(v) + " outside 2O");
    return pass("all 2304 products lie in 2O");
  });

  run.run("catalog.2O.closure-cross-check", [&] {
    const auto g = binary_octahedral_by_closure();
    std::set<Quat, QuatKeyLess> a, b;
    for (const auto& x : elements_of(*g)) a.insert(x);
    for (const auto& x : elements_of(*ctx.o2())) b.insert(x);
    const auto cyclic = closure("C8", {Quat::i(), ScalarQ::inv_sqrt2() * (Quat::one() + Quat::i())});
    return verdict(a == b,
                   "closure of {(1+i)/√2, (1+i+j+k)/2} has " + std::to_string(g->order()) +
                       " elements and equals the union; {i, (1+i)/√2} alone closes to " + identify(cyclic),
                   {{"closure_order", g->order()}, {"i_and_(1+i)/√2_order", cyclic->order()}});
  });

  run.run("catalog.2T.normal-Q-index-3", [&] {
    const auto& t = ctx.group(Kind::BinaryTetrahedral);
    ElemSet q;
    for (const auto& x : lipschitz_units()) q.push_back(*t->find_quat(x));
    std::sort(q.begin(), q.end());
    const bool normal = is_normal(*t, q);
    return verdict(normal && t->order() == 3 * q.size(), "Q is normal in the Hurwitz units with index " +
                                                              std::to_string(t->order() / q.size()));
  });

  run.run("catalog.V.iso-C2xC2", [] {
    const auto h = klein_from_c2xc2();
    return verdict(h.is_bijective(), "(1,0)->I, (0,1)->J is an isomorphism C2×C2 -> V");
  });

  for (const auto& row : verify_table()) {
    run.run(row.id, [row] {
      const Status s = row.status == "pass" ? Status::Pass : row.status == "discrepancy" ? Status::Discrepancy : Status::Fail;
      return Outcome{s, row.claim + ": " + row.details, json::object()};
    });
  }
}

// ---- automorphisms ------------------------------------------------------------------

void aut_suite(Runner& run) {
  auto& ctx = run.ctx();

  run.run("aut.Q.S4", [&] {
    const auto& a = ctx.aut(Kind::Quaternion);
    if (a->order() != 24) return fail("|Aut(Q)| = " + std::to_string(a->order()));
    return iso_check(a, ctx.group(Kind::Symmetric, 4), "Aut(Q) (order 24) ≅ S4");
  });

  run.run("aut.Q.inner-V", [&] {
    const auto inn = inner_automorphism_group(ctx.q());
    return iso_check(inn.group, ctx.group(Kind::Klein), "In(Q) (order " + std::to_string(inn.group->order()) + ") ≅ V");
  });

  run.run("aut.Q.inner-normal", [&] {
    const auto& a = ctx.aut(Kind::Quaternion);
    const auto inn = inner_automorphism_group(ctx.q());
    ElemSet members;
    for (const auto& e : inn.group->elements()) {
      const auto id = a->find(e.realization);
      if (!id) return fail("inner automorphism " + e.label + " missing from Aut(Q)");
      members.push_back(*id);
    }
    std::sort(members.begin(), members.end());
    return verdict(is_normal(*a, members), "In(Q) is a normal subgroup of Aut(Q)");
  });

  run.run("aut.2T.S4", [&] {
    const auto& a = ctx.aut(Kind::BinaryTetrahedral);
    if (a->order() != 24) return fail("|Aut(2T)| = " + std::to_string(a->order()));
    return iso_check(a, ctx.group(Kind::Symmetric, 4), "Aut(2T) (order 24) ≅ S4");
  });

  run.run("aut.V.S3", [&] {
    const auto& a = ctx.aut(Kind::Klein);
    return iso_check(a, ctx.group(Kind::Symmetric, 3), "Aut(V) (order " + std::to_string(a->order()) + ") ≅ S3");
  });

  run.run("aut.2O.paper-claim", [&] {
    const auto& a = ctx.aut(Kind::BinaryOctahedral);
    const auto c2 = ctx.group(Kind::Cyclic, 2);
    const auto c2x2t = direct_product(c2, ctx.group(Kind::BinaryTetrahedral));
    const auto c2xs4 = direct_product(c2, ctx.group(Kind::Symmetric, 4));
    const auto vs_2t = isomorphic(a, c2x2t);
    const auto vs_s4 = isomorphic(a, c2xs4);
    const auto type = identify(a);
    json p = {{"order", a->order()}, {"identified", type}, {"vs_C2x2T", iso_payload(vs_2t)}, {"vs_C2xS4", iso_payload(vs_s4)}};
    std::string details = "|Aut(2O)| = " + std::to_string(a->order()) + ", computed type " + type +
                          "; C2×2T: " + (vs_2t ? "isomorphic" : "not isomorphic (" + vs_2t.reason + ")") +
                          "; C2×S4: " + (vs_s4 ? "isomorphic via " + witness_text(*vs_s4.witness) : "not isomorphic (" + vs_s4.reason + ")");
    if (vs_2t) return pass(details, p);
    return Outcome{Status::Discrepancy, "claimed C2×2T; " + details, p};
  });
}

// ---- matrix groups ------------------------------------------------------------------

void matrix_suite(Runner& run) {
  auto& ctx = run.ctx();
  run.run("matrix.SL2(2).iso-S3", [&] {
    return iso_check(ctx.group(Kind::SpecialLinear, 2), ctx.group(Kind::Symmetric, 3), "SL2(F2) ≅ S3");
  });
  run.run("matrix.SL2(3).iso-2T", [&] {
    return iso_check(ctx.group(Kind::SpecialLinear, 3), ctx.group(Kind::BinaryTetrahedral), "SL2(F3) ≅ 2T");
  });
  run.run("matrix.SL2.orders", [&] {
    const auto n2 = ctx.group(Kind::SpecialLinear, 2)->order();
    const auto n3 = ctx.group(Kind::SpecialLinear, 3)->order();
    const auto n5 = ctx.group(Kind::SpecialLinear, 5)->order();
    return verdict(n2 == 6 && n3 == 24 && n5 == 120, "|SL2(F2)|=" + std::to_string(n2) + " |SL2(F3)|=" +
                                                         std::to_string(n3) + " |SL2(F5)|=" + std::to_string(n5));
  });
}

// ---- braids -------------------------------------------------------------------------

BraidWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<BraidWord::Letter> letters(len(rng));
  for (auto& l : letters) l = static_cast<BraidWord::Letter>(letter(rng));
  return BraidWord(letters);
}

IntMat neg(IntMat m) {
  for (auto& x : m) x = -x;
  return m;
}

void braid_suite(Runner& run) {
  auto& ctx = run.ctx();

  run.run("braid.relation", [] {
    return verdict(burau(parse_braid("aba")) == burau(parse_braid("bab")), "burau(aba) = burau(bab)");
  });

  run.run("braid.full-twist-words", [] {
    const bool eq = braid_equal(parse_braid("abaaba"), parse_braid("ababab"));
    const bool differ = !braid_equal(parse_braid("a"), parse_braid("b"));
    return verdict(eq && differ, "abaaba = ababab; a != b");
  });

  run.run("braid.representation", [] {
    std::mt19937_64 rng(0xb4a1d);
    for (int n = 0; n < 100; ++n) {
      const auto u = random_word(rng, 12), v = random_word(rng, 12);
      if (!(burau(u * v) == burau(u) * burau(v))) return fail("burau(uv) != burau(u)burau(v) at " + u.str() + ", " + v.str());
      if (!(sl2_image(u * v) == sl2_image(u) * sl2_image(v))) return fail("sl2 image not multiplicative at " + u.str() + ", " + v.str());
    }
    return pass("burau and sl2_image multiplicative on 100 random pairs");
  });

  run.run("braid.sl2.full-twist", [] {
    const auto m = sl2_image(parse_braid("ababab"));
    return verdict(m == neg(int_identity()), "sl2_image((ab)^3) = " + matrix_json(m).dump(), {{"matrix", matrix_json(m)}});
  });

  run.run("braid.sl2.full-twist-squared", [] {
    const auto m = sl2_image(parse_braid("ababab").power(2));
    return verdict(m == int_identity(), "sl2_image((ab)^6) = " + matrix_json(m).dump(), {{"matrix", matrix_json(m)}});
  });

  run.run("braid.centrality", [] {
    const auto z = burau(full_twist(1));
    const auto a = burau(parse_braid("a")), b = burau(parse_braid("b"));
    const auto zs = sl2_image(full_twist(1));
    const auto as = sl2_image(parse_braid("a")), bs = sl2_image(parse_braid("b"));
    const bool ok = z * a == a * z && z * b == b * z && zs * as == as * zs && zs * bs == bs * zs;
    return verdict(ok, "the full twist commutes with a and b under burau and at t=-1");
  });

  run.run("braid.permutation-agreement", [&] {
    const auto& sl2 = ctx.group(Kind::SpecialLinear, 2);
    const auto& s3 = ctx.group(Kind::Symmetric, 3);
    auto reduce = [&](const IntMat& m) {
      ModMatrix r{2, {}};
      for (int n = 0; n < 4; ++n) r.entries[n] = static_cast<int>(((m[n] % 2) + 2) % 2);
      return *sl2->find(r);
    };
    const BraidWord a = parse_braid("a"), b = parse_braid("b");
    const ElemId gens[] = {reduce(sl2_image(a)), reduce(sl2_image(b))};
    const ElemId images[] = {*s3->find(braid_permutation(a)), *s3->find(braid_permutation(b))};
    const auto iso = hom_from_generators(sl2, gens, s3, images);
    if (!iso.is_bijective()) return fail("generator assignment is not an isomorphism SL2(F2) -> S3");
    std::mt19937_64 rng(0x5eed5);
    for (int n = 0; n < 100; ++n) {
      const auto w = random_word(rng, 20);
      const ElemId via_matrix = iso(reduce(sl2_image(w)));
      const ElemId direct = *s3->find(braid_permutation(w));
      if (via_matrix != direct) return fail("disagreement at " + w.str());
    }
    return pass("B3 -> SL2(Z) -> SL2(F2) ≅ S3 agrees with the strand permutation on 100 random words");
  });

  run.run("braid.surjectivity-generators", [] {
    const IntMat upper{1, 1, 0, 1}, lower{1, 0, 1, 1};
    const auto a = sl2_image(parse_braid("a"));
    const auto binv = sl2_image(parse_braid("B"));
    return verdict(a == upper && binv == lower, "a -> [[1,1],[0,1]], b^-1 -> [[1,0],[1,1]]");
  });

  run.run("braid.kernel-claim", [] {
    const auto t1 = sl2_image(full_twist(1));
    const auto t2 = sl2_image(full_twist(2));
    json p = {{"full_twist", matrix_json(t1)}, {"full_twist_squared", matrix_json(t2)}};
    if (t1 == int_identity()) return pass("the full twist maps to the identity", p);
    return Outcome{Status::Discrepancy,
                   "the full twist maps to " + matrix_json(t1).dump() + ", not the identity; its square maps to " +
                       matrix_json(t2).dump() + ", so the kernel of B3 -> SL2(Z) is not generated by the full twist",
                   p};
  });
}

} // namespace

std::string_view status_name(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Discrepancy: return "discrepancy";
  case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string_view scope_name(Scope s) {
  switch (s) {
  case Scope::All: return "all";
  case Scope::Cf: return "cf";
  case Scope::Sequences: return "sequences";
  case Scope::Aut: return "aut";
  case Scope::Braid: return "braid";
  case Scope::MatrixIso: return "matrix-iso";
  case Scope::Jordan: return "jordan";
  }
  return "?";
}

Scope parse_scope(std::string_view text) {
  for (auto s : {Scope::All, Scope::Cf, Scope::Sequences, Scope::Aut, Scope::Braid, Scope::MatrixIso, Scope::Jordan}) {
    if (scope_name(s) == text) return s;
  }
  throw std::invalid_argument("unknown scope '" + std::string(text) + "'");
}

std::size_t RunReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

const CheckResult* RunReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

RunReport run_verify(const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  Runner run(ctx);
  auto want = [&](Scope s) { return options.scope == Scope::All || options.scope == s; };
  if (want(Scope::Jordan)) jordan_suite(run, options.conventions);
  if (want(Scope::Cf)) cf_suite(run, options.conventions);
  if (want(Scope::Sequences)) sequences_suite(run);
  if (want(Scope::Aut)) aut_suite(run);
  if (want(Scope::MatrixIso)) matrix_suite(run);
  if (want(Scope::Braid)) braid_suite(run);

  RunReport r;
  r.scope = options.scope;
  r.conventions = options.conventions;
  r.checks = run.take();
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  r.total_elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int exit_code(const RunReport& r) { return r.count(Status::Fail) == 0 ? 0 : 1; }

json report_json(const RunReport& r) {
  json conventions = json::array();
  for (auto c : r.conventions) conventions.push_back(conv(c));
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"status", status_name(c.status)},
                      {"details", c.details},
                      {"payload", c.payload},
                      {"elapsed_ms", c.elapsed_ms}});
  }
  return {{"tool", "ccf"},
          {"version", kToolVersion},
          {"scope", scope_name(r.scope)},
          {"conventions", conventions},
          {"summary",
           {{"pass", r.count(Status::Pass)},
            {"fail", r.count(Status::Fail)},
            {"discrepancy", r.count(Status::Discrepancy)},
            {"skipped", r.count(Status::Skipped)}}},
          {"checks", checks},
          {"total_elapsed_ms", r.total_elapsed_ms}};
}

std::string report_markdown(const RunReport& r) {
  std::ostringstream os;
  os << "# ccf verify " << scope_name(r.scope) << "\n\nconventions:";
  for (auto c : r.conventions) os << " " << convention_name(c);
  os << "\n\n";
  for (const auto& c : r.checks) os << "- " << c.id << ": " << status_name(c.status) << " (" << c.details << ")\n";
  os << "\n" << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
     << r.count(Status::Discrepancy) << " discrepancy\n";
  if (r.count(Status::Discrepancy)) {
    os << "\n## Discrepancies\n\n";
    for (const auto& c : r.checks)
      if (c.status == Status::Discrepancy) os << "- **" << c.id << "**: " << c.details << "\n";
  }
  if (r.count(Status::Fail)) {
    os << "\n## Failures\n\n";
    for (const auto& c : r.checks)
      if (c.status == Status::Fail) os << "- **" << c.id << "**: " << c.details << "\n";
  }
  return os.str();
}

} // namespace ccf
