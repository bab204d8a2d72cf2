#include "ccf/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ccf {

namespace {

using Kind = CatalogName::Kind;

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::string cycle_label(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.images.size(), false);
  for (std::size_t start = 0; start < p.images.size(); ++start) {
    if (done[start] || p.images[start] == start) continue;
    out += "(";
    for (std::size_t x = start; !done[x]; x = p.images[x]) {
      done[x] = true;
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

bool is_even(const Permutation& p) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < p.images.size(); ++a)
    for (std::size_t b = a + 1; b < p.images.size(); ++b)
      if (p.images[a] > p.images[b]) ++inversions;
  return inversions % 2 == 0;
}

// Left-to-right product: (p·q)(x) = q(p(x)).
Permutation then(const Permutation& p, const Permutation& q) {
  Permutation out;
  out.images.resize(p.images.size());
  for (std::size_t x = 0; x < p.images.size(); ++x) out.images[x] = q.images[p.images[x]];
  return out;
}

GroupPtr permutation_group(std::string name, int n, bool even_only) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  std::vector<Permutation> perms;
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  std::function<Permutation(const Permutation&, const Permutation&)> mul = then;
  return make_group<Permutation>(std::move(name), perms, mul, [](const Permutation& q) {
    return Element{cycle_label(q), q};
  });
}

GroupPtr cyclic_group(int n) {
  std::vector<Residue> elems;
  for (int r = 0; r < n; ++r) elems.push_back({r, n});
  std::function<Residue(const Residue&, const Residue&)> mul = [n](const Residue& a, const Residue& b) {
    return Residue{(a.value + b.value) % n, n};
  };
  return make_group<Residue>("C" + std::to_string(n), elems, mul, [](const Residue& r) {
    return Element{std::to_string(r.value), r};
  });
}

GroupPtr special_linear_group(int p) {
  std::vector<ModMatrix> elems;
  const ModMatrix identity{p, {1, 0, 0, 1}};
  elems.push_back(identity);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          ModMatrix m{p, {a, b, c, d}};
          if (((a * d - b * c) % p + p) % p == 1 && m != identity) elems.push_back(m);
        }
  std::function<ModMatrix(const ModMatrix&, const ModMatrix&)> mul = [p](const ModMatrix& x,
                                                                         const ModMatrix& y) {
    const auto& e = x.entries;
    const auto& f = y.entries;
    return ModMatrix{p,
                     {(e[0] * f[0] + e[1] * f[2]) % p, (e[0] * f[1] + e[1] * f[3]) % p,
                      (e[2] * f[0] + e[3] * f[2]) % p, (e[2] * f[1] + e[3] * f[3]) % p}};
  };
  return make_group<ModMatrix>("SL2(" + std::to_string(p) + ")", elems, mul, [](const ModMatrix& m) {
    const auto& e = m.entries;
    return Element{"[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" +
                       std::to_string(e[2]) + "," + std::to_string(e[3]) + "]]",
                   m};
  });
}

// V = {1, I, J, K} as the conjugations by 1, i, j, k acting on Q.
GroupPtr klein_group() {
  const auto q = build(CatalogName{Kind::Quaternion, 0});
  std::vector<IdMap> maps;
  for (const Quat& h : {Quat::one(), Quat::i(), Quat::j(), Quat::k()}) {
    const ElemId hid = *q->find_quat(h);
    IdMap m;
    for (ElemId x = 0; x < q->order(); ++x) m.images.push_back(q->conjugate(hid, x));
    maps.push_back(std::move(m));
  }
  const std::vector<std::string> names = {"1", "I", "J", "K"};
  std::function<IdMap(const IdMap&, const IdMap&)> mul = [](const IdMap& a, const IdMap& b) {
    IdMap out;
    for (ElemId x : b.images) out.images.push_back(a.images[x]);
    return out;
  };
  return make_group<IdMap>("V", maps, mul, [&](const IdMap& m) {
    const auto pos = std::find(maps.begin(), maps.end(), m) - maps.begin();
    return Element{names[pos], m};
  });
}

} // namespace

// ---- names ---------------------------------------------------------------------

std::string CatalogName::str() const {
  switch (kind) {
  case Kind::Cyclic: return "C" + std::to_string(n);
  case Kind::Symmetric: return "S" + std::to_string(n);
  case Kind::Klein: return "V";
  case Kind::Quaternion: return "Q";
  case Kind::Alternating4: return "A4";
  case Kind::BinaryTetrahedral: return "2T";
  case Kind::BinaryOctahedral: return "2O";
  case Kind::SpecialLinear: return "SL2(" + std::to_string(n) + ")";
  }
  return "?";
}

CatalogName CatalogName::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto number = [&](std::string_view digits) -> int {
    std::string d(digits);
    if (!d.empty() && d.front() == '(' && d.back() == ')') d = d.substr(1, d.size() - 2);
    if (d.empty() || d.size() > 4 || !std::all_of(d.begin(), d.end(), ::isdigit)) {
      throw UnknownGroup("unknown group name: " + std::string(text));
    }
    return std::stoi(d);
  };
  if (s == "V") return {Kind::Klein, 0};
  if (s == "Q") return {Kind::Quaternion, 0};
  if (s == "A4") return {Kind::Alternating4, 0};
  if (s == "2T" || s == "T2" || s == "2.T") return {Kind::BinaryTetrahedral, 0};
  if (s == "2O" || s == "O2" || s == "2.O") return {Kind::BinaryOctahedral, 0};
  if (s.rfind("SL2", 0) == 0) {
    std::string_view rest = std::string_view(s).substr(3);
    if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
    const int p = number(rest);
    if (p != 2 && p != 3 && p != 5) throw UnknownGroup("SL2(p) is available for p = 2, 3, 5");
    return {Kind::SpecialLinear, p};
  }
  if (s.rfind("Sym", 0) == 0 || (s.size() > 1 && s[0] == 'S')) {
    const int n = number(std::string_view(s).substr(s[1] == 'y' ? 3 : 1));
    if (n < 1 || n > 5) throw UnknownGroup("Sym(n) is available for 1 <= n <= 5");
    return {Kind::Symmetric, n};
  }
  if (s.size() > 1 && s[0] == 'C') {
    const int n = number(std::string_view(s).substr(1));
    if (n < 1 || n > 1024) throw UnknownGroup("C(n) is available for 1 <= n <= 1024");
    return {Kind::Cyclic, n};
  }
  throw UnknownGroup("unknown group name: " + std::string(text));
}

std::vector<CatalogName> catalog_names() {
  std::vector<CatalogName> out;
  for (int n : {1, 2, 3, 4, 6, 8}) out.push_back({Kind::Cyclic, n});
  for (int n = 1; n <= 5; ++n) out.push_back({Kind::Symmetric, n});
  out.push_back({Kind::Klein, 0});
  out.push_back({Kind::Quaternion, 0});
  out.push_back({Kind::Alternating4, 0});
  out.push_back({Kind::BinaryTetrahedral, 0});
  out.push_back({Kind::BinaryOctahedral, 0});
  for (int p : {2, 3, 5}) out.push_back({Kind::SpecialLinear, p});
  return out;
}

std::string realization_kind(const CatalogName& name) {
  switch (name.kind) {
  case Kind::Cyclic: return "residue";
  case Kind::Symmetric:
  case Kind::Alternating4: return "permutation";
  case Kind::Klein: return "map";
  case Kind::Quaternion:
  case Kind::BinaryTetrahedral:
  case Kind::BinaryOctahedral: return "quaternion";
  case Kind::SpecialLinear: return "matrix";
  }
  return "?";
}

// ---- quaternion element sets -------------------------------------------------------

std::vector<Quat> lipschitz_units() {
  std::vector<Quat> out;
  for (int n = 0; n < 4; ++n) {
    out.push_back(Quat::basis(n));
    out.push_back(-Quat::basis(n));
  }
  return out;
}

std::vector<Quat> hurwitz_units() {
  auto out = lipschitz_units();
  const Rat half(1, 2);
  for (int mask = 0; mask < 16; ++mask) {
    std::array<ScalarQ, 4> c;
    for (int n = 0; n < 4; ++n) c[n] = ScalarQ((mask >> n) & 1 ? -half : half);
    out.emplace_back(c[0], c[1], c[2], c[3]);
  }
  return out;
}

std::vector<Quat> special_elements() {
  std::vector<Quat> out;
  const ScalarQ s = ScalarQ::inv_sqrt2();
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      for (int sp : {1, -1})
        for (int sq : {1, -1}) {
          std::array<ScalarQ, 4> c;
          c[p] = sp > 0 ? s : -s;
          c[q] = sq > 0 ? s : -s;
          out.emplace_back(c[0], c[1], c[2], c[3]);
        }
  return out;
}

bool is_special_element(const Quat& q) {
  const ScalarQ s = ScalarQ::inv_sqrt2();
  int nonzero = 0;
  for (const auto& x : q.coords()) {
    if (x.is_zero()) continue;
    if (x != s && x != -s) return false;
    ++nonzero;
  }
  return nonzero == 2;
}

// ---- build -----------------------------------------------------------------------

GroupPtr build(const CatalogName& name) {
  switch (name.kind) {
  case Kind::Cyclic:
    if (name.n < 1) throw UnknownGroup("C(n) needs n >= 1");
    return cyclic_group(name.n);
  case Kind::Symmetric:
    if (name.n < 1 || name.n > 5) throw UnknownGroup("Sym(n) is available for 1 <= n <= 5");
    return permutation_group(name.str(), name.n, false);
  case Kind::Klein: return klein_group();
  case Kind::Quaternion: return make_quaternion_group("Q", lipschitz_units());
  case Kind::Alternating4: return permutation_group("A4", 4, true);
  case Kind::BinaryTetrahedral: return make_quaternion_group("2T", hurwitz_units());
  case Kind::BinaryOctahedral: {
    auto elems = hurwitz_units();
    const auto specials = special_elements();
    elems.insert(elems.end(), specials.begin(), specials.end());
    return make_quaternion_group("2O", std::move(elems));
  }
  case Kind::SpecialLinear:
    if (name.n != 2 && name.n != 3 && name.n != 5) {
      throw UnknownGroup("SL2(p) is available for p = 2, 3, 5");
    }
    return special_linear_group(name.n);
  }
  throw UnknownGroup("unknown catalog entry");
}

GroupPtr build(std::string_view name) { return build(CatalogName::parse(name)); }

GroupPtr binary_octahedral_by_closure() {
  const Rat h(1, 2);
  const Quat g = ScalarQ::inv_sqrt2() * (Quat::one() + Quat::i());
  const Quat w{ScalarQ(h), ScalarQ(h), ScalarQ(h), ScalarQ(h)};
  return closure("2O", std::vector<Quat>{g, w});
}

GroupHom klein_from_c2xc2() {
  const auto c2 = build(CatalogName{Kind::Cyclic, 2});
  const auto c2xc2 = direct_product(c2, c2, "C2×C2");
  const auto v = build(CatalogName{Kind::Klein, 0});
  const ElemId gens[] = {*c2xc2->find(IdPair{1, 0}), *c2xc2->find(IdPair{0, 1})};
  const ElemId images[] = {*v->find_label("I"), *v->find_label("J")};
  return hom_from_generators(c2xc2, gens, v, images);
}

std::string identify(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<std::pair<std::string, std::function<GroupPtr()>>> candidates;
  candidates.emplace_back("C" + std::to_string(n), [n] { return cyclic_group(static_cast<int>(n)); });
  for (int s = 3; s <= 5; ++s) {
    if (static_cast<std::size_t>(factorial(s)) == n) {
      candidates.emplace_back("S" + std::to_string(s), [s] { return build(CatalogName{Kind::Symmetric, s}); });
    }
  }
  auto cat = [](Kind k) { return [k] { return build(CatalogName{k, 0}); }; };
  auto prod = [](int a, int b) { return [a, b] { return direct_product(cyclic_group(a), cyclic_group(b)); }; };
  switch (n) {
  case 4: candidates.emplace_back("V", cat(Kind::Klein)); break;
  case 8:
    candidates.emplace_back("Q", cat(Kind::Quaternion));
    candidates.emplace_back("C4×C2", prod(4, 2));
    candidates.emplace_back("C2×C2×C2", [] {
      auto c2 = cyclic_group(2);
      return direct_product(direct_product(c2, c2), c2);
    });
    candidates.emplace_back("D4", [] {
      auto s4 = build(CatalogName{Kind::Symmetric, 4});
      const ElemId gens[] = {*s4->find_label("(1234)"), *s4->find_label("(13)")};
      return induced_subgroup(s4, subgroup_closure(*s4, gens), "D4").group;
    });
    break;
  case 12:
    candidates.emplace_back("A4", cat(Kind::Alternating4));
    candidates.emplace_back("C6×C2", prod(6, 2));
    candidates.emplace_back("D6", [] { return direct_product(build(CatalogName{Kind::Symmetric, 3}), cyclic_group(2)); });
    candidates.emplace_back("Dic3", [] {
      auto c3 = cyclic_group(3);
      auto aut = automorphism_group(c3);
      ElemId inversion = 0;
      for (ElemId a = 1; a < aut->order(); ++a) inversion = a;
      return semidirect_product({c3, cyclic_group(4), aut, {0, inversion, 0, inversion}}, "Dic3").group;
    });
    break;
  case 16:
    candidates.emplace_back("Q16", [] {
      return closure("Q16", {ScalarQ::inv_sqrt2() * (Quat::one() + Quat::i()), Quat::j()});
    });
    break;
  case 24:
    candidates.emplace_back("2T", cat(Kind::BinaryTetrahedral));
    candidates.emplace_back("C2×A4", [] { return direct_product(cyclic_group(2), build(CatalogName{Kind::Alternating4, 0})); });
    break;
  case 48:
    candidates.emplace_back("2O", cat(Kind::BinaryOctahedral));
    candidates.emplace_back("C2×S4", [] { return direct_product(cyclic_group(2), build(CatalogName{Kind::Symmetric, 4})); });
    candidates.emplace_back("C2×2T", [] { return direct_product(cyclic_group(2), build(CatalogName{Kind::BinaryTetrahedral, 0})); });
    break;
  default: break;
  }
  for (const auto& [name, make] : candidates) {
    if (isomorphic(g, make())) return name;
  }
  return "?";
}

} // namespace ccf
