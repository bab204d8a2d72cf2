// Verification of the table of small groups and their exact sequences.

#include <sstream>

#include "ccf/catalog.hpp"

namespace ccf {

namespace {

using Kind = CatalogName::Kind;

GroupPtr cat(Kind k, int n = 0) { return build(CatalogName{k, n}); }

ElemId quat_id(const GroupPtr& g, const Quat& q) { return *g->find_quat(q); }

// G -> K obtained as G -> G/N followed by an isomorphism G/N -> K.
std::optional<GroupHom> projection_onto(const GroupPtr& g, const ElemSet& normal, const GroupPtr& k) {
  auto quo = quotient(g, normal);
  auto iso = isomorphic(quo.group, k);
  if (!iso) return std::nullopt;
  return compose(quo.projection, *iso.witness);
}

std::string describe(const ExactnessReport& r) {
  std::ostringstream os;
  for (std::size_t n = 0; n < r.junctions.size(); ++n) {
    const auto& j = r.junctions[n];
    if (n) os << "; ";
    os << j.group << ": |im|=" << j.image_size << " |ker|=" << j.kernel_size
       << (j.exact ? " exact" : " NOT exact");
  }
  return os.str();
}

std::string section_text(const GroupHom& rho) {
  std::ostringstream os;
  os << "section";
  const auto& k = *rho.source();
  for (ElemId g : minimal_generating_sequence(k)) {
    os << " " << k.label(g) << "->" << rho.target()->label(rho(g));
  }
  return os.str();
}

struct Rows {
  std::vector<TableRow> rows;

  void add(std::string id, std::string claim, bool ok, std::string details) {
    rows.push_back({std::move(id), std::move(claim), ok ? "pass" : "fail", std::move(details)});
  }

  void exact(const std::string& id, const std::string& claim, const SequenceSpec& seq) {
    const auto r = is_exact(seq);
    add(id, claim, r.exact, describe(r));
  }

  void split(const std::string& id, const std::string& claim, const GroupHom& psi, bool expect_split) {
    const auto s = find_section(psi);
    std::string details = s ? section_text(*s.section)
                            : "no section among " + std::to_string(s.assignments_tried) +
                                  " generator assignments";
    add(id, claim, s.section.has_value() == expect_split, details);
  }

  void iso(const std::string& id, const std::string& claim, const GroupPtr& a, const GroupPtr& b) {
    const auto r = isomorphic(a, b);
    add(id, claim, bool(r), r ? "witness found after " + std::to_string(r.assignments_tried) + " assignments"
                              : r.reason);
  }
};

} // namespace

std::vector<TableRow> verify_table() {
  Rows out;

  // cyclic and symmetric constructors
  {
    bool ok = true;
    std::string details;
    for (int n = 1; n <= 6; ++n) {
      auto c = cat(Kind::Cyclic, n);
      const bool cyclic = minimal_generating_sequence(*c).size() == (n == 1 ? 0u : 1u);
      ok = ok && c->order() == static_cast<std::size_t>(n) && cyclic;
    }
    details = "C1..C6 built with orders 1..6, each generated by one element";
    out.add("table.row.Cn.constructor", "C_n = Z/nZ (constructor only)", ok, details);
  }
  {
    bool ok = true;
    const std::size_t expect[] = {1, 2, 6, 24, 120};
    for (int n = 1; n <= 5; ++n) ok = ok && cat(Kind::Symmetric, n)->order() == expect[n - 1];
    out.add("table.row.Sn.orders", "|Σ_n| = n!", ok, "n = 1..5");
  }

  const auto c2 = cat(Kind::Cyclic, 2);
  const auto c3 = cat(Kind::Cyclic, 3);
  const auto v = cat(Kind::Klein);
  const auto q = cat(Kind::Quaternion);
  const auto s3 = cat(Kind::Symmetric, 3);
  const auto a4 = cat(Kind::Alternating4);
  const auto s4 = cat(Kind::Symmetric, 4);
  const auto t2 = cat(Kind::BinaryTetrahedral);
  const auto o2 = cat(Kind::BinaryOctahedral);
  const ElemId one[] = {1};

  // V ≅ C2 × C2
  {
    const auto k = klein_from_c2xc2();
    out.add("table.row.V.iso-C2xC2", "V ≅ C2×C2 via (1,0)->I, (0,1)->J", k.is_bijective(),
            "(1,1) -> " + v->label(k(*k.source()->find(IdPair{1, 1}))));
  }

  // Σ3 ≅ C3 ⋊ C2
  {
    const ElemId cyc[] = {*s3->find_label("(123)")};
    const auto inc = hom_from_generators(c3, one, s3, cyc);
    const ElemId gens[] = {*s3->find_label("(12)"), *s3->find_label("(23)")};
    const ElemId signs[] = {1, 1};
    const auto sign = hom_from_generators(s3, gens, c2, signs);
    out.exact("table.row.S3.sequence", "1 → C3 → Σ3 → C2 → 1", SequenceSpec{{inc, sign}});
    out.split("table.row.S3.split", "Σ3 → C2 splits", sign, true);
    const auto aut = automorphism_group(c3);
    const ElemId inversion = *aut->find(IdMap{{0, 2, 1}});
    const auto sd = semidirect_product({c3, c2, aut, {0, inversion}}, "C3⋊C2");
    out.iso("table.row.S3.semidirect", "Σ3 ≅ C3 ⋊ C2", sd.group, s3);
  }

  // 1 → C2 → Q → V → 1, non-split
  {
    const ElemId minus_one[] = {quat_id(q, -Quat::one())};
    const auto inc = hom_from_generators(c2, one, q, minus_one);
    const auto in = inner_automorphism_group(q);
    std::vector<ElemId> to_v(q->order());
    for (ElemId x = 0; x < q->order(); ++x) {
      to_v[x] = *v->find(in.group->element(in.from_group(x)).realization);
    }
    const GroupHom psi(q, v, to_v);
    out.exact("table.row.Q.sequence", "1 → C2 → Q → V → 1", SequenceSpec{{inc, psi}});
    out.split("table.row.Q.nonsplit", "Q → V does not split", psi, false);
  }

  // A4 ≅ V ⋊ C3 and Σ4 ≅ V ⋊ Σ3
  {
    const ElemId vgens[] = {*v->find_label("I"), *v->find_label("J")};
    const ElemId a4_images[] = {*a4->find_label("(12)(34)"), *a4->find_label("(13)(24)")};
    const auto inc_a4 = hom_from_generators(v, vgens, a4, a4_images);
    const auto to_c3 = projection_onto(a4, inc_a4.image(), c3);
    out.exact("table.row.A4.sequence", "1 → V → A4 → C3 → 1", SequenceSpec{{inc_a4, *to_c3}});
    out.split("table.row.A4.split", "A4 → C3 splits", *to_c3, true);

    const auto aut_v = automorphism_group(v);
    const ElemId vgens_ij[] = {*v->find_label("I"), *v->find_label("J")};
    const ElemId cycled[] = {*v->find_label("J"), *v->find_label("K")};
    const auto sigma = hom_from_generators(v, vgens_ij, v, cycled);
    const ElemId sigma_id = *aut_v->find(IdMap{sigma.map()});
    const ElemId sig[] = {sigma_id};
    const auto eps = hom_from_generators(c3, one, aut_v, sig);
    const auto sd = semidirect_product({v, c3, aut_v, eps.map()}, "V⋊C3");
    out.iso("table.row.A4.semidirect", "A4 ≅ V ⋊ C3", sd.group, a4);

    const ElemId s4_images[] = {*s4->find_label("(12)(34)"), *s4->find_label("(13)(24)")};
    const auto inc_s4 = hom_from_generators(v, vgens, s4, s4_images);
    const auto to_s3 = projection_onto(s4, inc_s4.image(), s3);
    out.exact("table.row.S4.sequence", "1 → V → Σ4 → Σ3 → 1", SequenceSpec{{inc_s4, *to_s3}});
    out.split("table.row.S4.split", "Σ4 → Σ3 splits", *to_s3, true);
    const auto act = isomorphic(s3, aut_v);
    const auto sd4 = semidirect_product({v, s3, aut_v, act.witness->map()}, "V⋊S3");
    out.iso("table.row.S4.semidirect", "Σ4 ≅ V ⋊ Σ3", sd4.group, s4);
  }

  // 2·T = Q ⋊ C3 and 1 → C2 → 2·T → A4 → 1
  {
    ElemSet lipschitz;
    for (const auto& u : lipschitz_units()) lipschitz.push_back(quat_id(t2, u));
    std::sort(lipschitz.begin(), lipschitz.end());
    const auto qsub = induced_subgroup(t2, lipschitz, "Q");
    const auto to_c3 = projection_onto(t2, lipschitz, c3);
    out.add("table.row.2T.normal-Q", "Q is normal of index 3 in 2·T",
            is_normal(*t2, lipschitz) && t2->order() == 3 * lipschitz.size(), "|2T|/|Q| = 3");
    out.exact("table.row.2T.sequence-Q", "1 → Q → 2·T → C3 → 1",
              SequenceSpec{{qsub.inclusion, *to_c3}});
    out.split("table.row.2T.split", "2·T → C3 splits", *to_c3, true);

    const auto aut_q = automorphism_group(q);
    const ElemId qgens[] = {quat_id(q, Quat::i()), quat_id(q, Quat::j())};
    const ElemId cycled[] = {quat_id(q, Quat::j()), quat_id(q, Quat::k())};
    const auto sigma = hom_from_generators(q, qgens, q, cycled);
    const ElemId sig[] = {*aut_q->find(IdMap{sigma.map()})};
    const auto eps = hom_from_generators(c3, one, aut_q, sig);
    const auto sd = semidirect_product({q, c3, aut_q, eps.map()}, "Q⋊C3");
    out.iso("table.row.2T.semidirect", "2·T ≅ Q ⋊ C3", sd.group, t2);

    const ElemId minus_one[] = {quat_id(t2, -Quat::one())};
    const auto inc = hom_from_generators(c2, one, t2, minus_one);
    const auto to_a4 = projection_onto(t2, center(*t2), a4);
    if (to_a4) {
      out.exact("table.row.2T.sequence", "1 → C2 → 2·T → A4 → 1", SequenceSpec{{inc, *to_a4}});
      out.split("table.row.2T.central-nonsplit", "2·T → A4 does not split", *to_a4, false);
    } else {
      out.add("table.row.2T.sequence", "1 → C2 → 2·T → A4 → 1", false, "2·T/{±1} is not A4");
    }
  }

  // 2·O rows
  {
    const ElemSet z = center(*o2);
    const ElemId minus_one[] = {quat_id(o2, -Quat::one())};
    const auto inc = hom_from_generators(c2, one, o2, minus_one);
    const auto quo = quotient(o2, z);
    out.exact("table.row.2O.sequence", "1 → C2 → 2·O → 2·O/C2 → 1",
              SequenceSpec{{inc, quo.projection}});
    const auto vs_t2 = isomorphic(quo.group, t2);
    const std::string type = identify(quo.group);
    TableRow row{"table.row.2O.quotient-type", "1 → C2 → 2·O → 2·T → 1 (quotient is 2·T)",
                 vs_t2 ? "pass" : "discrepancy",
                 "2·O/{±1} has order " + std::to_string(quo.group->order()) + " and is isomorphic to " +
                     type + "; comparison with 2T: " + (vs_t2 ? "isomorphic" : vs_t2.reason)};
    out.rows.push_back(row);

    ElemSet lipschitz;
    for (const auto& u : lipschitz_units()) lipschitz.push_back(quat_id(o2, u));
    std::sort(lipschitz.begin(), lipschitz.end());
    const auto qsub = induced_subgroup(o2, lipschitz, "Q");
    out.add("table.row.2O.normal-Q", "Q is normal in 2·O", is_normal(*o2, lipschitz), "index 6");
    const auto to_s3 = projection_onto(o2, lipschitz, s3);
    if (to_s3) {
      out.exact("table.row.2O.sequence-Q", "1 → Q → 2·O → Σ3 → 1",
                SequenceSpec{{qsub.inclusion, *to_s3}});
      out.split("table.row.2O.nonsplit-Q", "2·O → Σ3 does not split", *to_s3, false);
    } else {
      out.add("table.row.2O.sequence-Q", "1 → Q → 2·O → Σ3 → 1", false, "2·O/Q is not Σ3");
    }
  }
  return out.rows;
}

} // namespace ccf
