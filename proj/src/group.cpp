#include "ccf/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

namespace ccf {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 48;
constexpr std::size_t kRandomAssociativityTriples = 100000;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a->name() == b->name() && a->order() == b->order() &&
                    a->elements().size() == b->elements().size());
}

// (element order, conjugacy class size) for every element.
using Fingerprint = std::pair<std::size_t, std::size_t>;

std::vector<Fingerprint> fingerprints(const FiniteGroup& g) {
  const auto classes = conjugacy_class_sizes(g);
  std::vector<Fingerprint> out(g.order());
  for (ElemId x = 0; x < g.order(); ++x) out[x] = {element_order(g, x), classes[x]};
  return out;
}

bool injective_map(const std::vector<ElemId>& map, std::size_t target_order) {
  std::vector<bool> hit(target_order, false);
  for (ElemId y : map) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::string map_label(const FiniteGroup& g, const std::vector<ElemId>& gens,
                      const std::vector<ElemId>& images) {
  std::string out = "[";
  for (std::size_t n = 0; n < gens.size(); ++n) {
    if (n) out += ",";
    out += g.label(gens[n]) + "->" + g.label(images[gens[n]]);
  }
  return out + "]";
}

// Group whose elements are self-maps of `base`, multiplied as maps.
GroupPtr map_group(std::string name, std::vector<IdMap> maps,
                   const std::function<std::string(const IdMap&)>& describe) {
  std::function<IdMap(const IdMap&, const IdMap&)> compose_maps = [](const IdMap& a,
                                                                      const IdMap& b) {
    IdMap out;
    out.images.resize(b.images.size());
    for (std::size_t x = 0; x < b.images.size(); ++x) out.images[x] = a.images[b.images[x]];
    return out;
  };
  return make_group<IdMap>(std::move(name), maps, compose_maps, [&](const IdMap& m) {
    return Element{describe(m), m};
  });
}

// Backtracking over one candidate list per generator.
template <class Visit>
bool backtrack(const std::vector<std::vector<ElemId>>& candidates, std::vector<ElemId>& chosen,
               std::uint64_t& tried, Visit&& visit) {
  if (chosen.size() == candidates.size()) {
    ++tried;
    return visit(chosen);
  }
  for (ElemId c : candidates[chosen.size()]) {
    chosen.push_back(c);
    if (backtrack(candidates, chosen, tried, visit)) return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

nlohmann::json realization_json(const Realization& r) {
  return std::visit(
      Overloaded{
          [](const QuatRealization& q) {
            return nlohmann::json{{"kind", "quaternion"}, {"value", q.value}};
          },
          [](const Permutation& p) {
            nlohmann::json images = nlohmann::json::array();
            for (auto x : p.images) images.push_back(static_cast<int>(x));
            return nlohmann::json{{"kind", "permutation"}, {"images", images}};
          },
          [](const ModMatrix& m) {
            return nlohmann::json{
                {"kind", "matrix"},
                {"p", m.p},
                {"entries", {{m.entries[0], m.entries[1]}, {m.entries[2], m.entries[3]}}}};
          },
          [](const IdPair& p) {
            return nlohmann::json{{"kind", "pair"}, {"first", p.first}, {"second", p.second}};
          },
          [](const Residue& r) {
            return nlohmann::json{{"kind", "residue"}, {"value", r.value}, {"modulus", r.modulus}};
          },
          [](const IdMap& m) { return nlohmann::json{{"kind", "map"}, {"images", m.images}}; },
          [](const Coset& c) { return nlohmann::json{{"kind", "coset"}, {"members", c.members}}; },
      },
      r);
}

// ---- FiniteGroup -------------------------------------------------------------

FiniteGroup::FiniteGroup(std::string name, std::vector<Element> elements,
                         std::vector<ElemId> table)
    : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw InvalidGroup(name_ + ": empty element list");
  if (table_.size() != n * n) throw InvalidGroup(name_ + ": table has wrong shape");
  for (ElemId e : table_) {
    if (e >= n) throw InvalidGroup(name_ + ": table entry out of range");
  }
  inverse_.assign(n, 0);
  for (ElemId a = 0; a < n; ++a) {
    bool found = false;
    for (ElemId b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidGroup(name_ + ": element " + elements_[a].label + " has no inverse");
  }
  audit();
}

void FiniteGroup::audit() const {
  const std::size_t n = order();
  for (ElemId x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) throw InvalidGroup(name_ + ": element 0 is not the identity");
    if (mul(inv(x), x) != 0) throw InvalidGroup(name_ + ": inverse is not two-sided");
  }
  std::vector<char> seen(n);
  for (ElemId a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (ElemId b = 0; b < n; ++b) {
      if (seen[mul(a, b)]++) throw InvalidGroup(name_ + ": table is not a Latin square");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (ElemId b = 0; b < n; ++b) {
      if (seen[mul(b, a)]++) throw InvalidGroup(name_ + ": table is not a Latin square");
    }
  }
  auto assoc = [&](ElemId a, ElemId b, ElemId c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (n <= kExhaustiveAssociativityLimit) {
    for (ElemId a = 0; a < n; ++a)
      for (ElemId b = 0; b < n; ++b)
        for (ElemId c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InvalidGroup(name_ + ": multiplication is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t t = 0; t < kRandomAssociativityTriples; ++t) {
      ElemId a = rng() % n, b = rng() % n, c = rng() % n;
      if (!assoc(a, b, c)) throw InvalidGroup(name_ + ": multiplication is not associative");
    }
  }
}

ElemId FiniteGroup::pow(ElemId a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  ElemId out = 0;
  ElemId base = a;
  while (n > 0) {
    if (n & 1) out = mul(out, base);
    base = mul(base, base);
    n >>= 1;
  }
  return out;
}

std::optional<ElemId> FiniteGroup::find_label(const std::string& label) const {
  for (ElemId id = 0; id < order(); ++id) {
    if (elements_[id].label == label) return id;
  }
  return std::nullopt;
}

std::optional<ElemId> FiniteGroup::find(const Realization& r) const {
  for (ElemId id = 0; id < order(); ++id) {
    if (elements_[id].realization == r) return id;
  }
  return std::nullopt;
}

std::optional<ElemId> FiniteGroup::find_quat(const Quat& q) const {
  return find(QuatRealization{q});
}

ElemSet FiniteGroup::all() const {
  ElemSet out(order());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (ElemId a = 0; a < order(); ++a)
    for (ElemId b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

// ---- quaternion groups -------------------------------------------------------

bool quaternion_display_less(const Quat& u, const Quat& v) {
  auto lead = [](const Quat& q) {
    for (int n = 0; n < 4; ++n) {
      if (!q[n].is_zero()) return n;
    }
    return 4;
  };
  const int lu = lead(u);
  const int lv = lead(v);
  if (lu != lv) return lu < lv;
  if (lu == 4) return false;
  const int su = u[lu].sign();
  const int sv = v[lv].sign();
  if (su != sv) return su > sv;
  const ScalarQ mu = su < 0 ? -u[lu] : u[lu];
  const ScalarQ mv = sv < 0 ? -v[lv] : v[lv];
  if (mu != mv) return mu > mv;
  for (int n = lu + 1; n < 4; ++n) {
    if (u[n] != v[n]) return u[n] > v[n];
  }
  return false;
}

GroupPtr make_quaternion_group(std::string name, std::vector<Quat> elems) {
  std::sort(elems.begin(), elems.end(), quaternion_display_less);
  std::function<Quat(const Quat&, const Quat&)> mul = [](const Quat& a, const Quat& b) {
    return a * b;
  };
  return make_group<Quat, QuatKeyLess>(std::move(name), elems, mul, [](const Quat& q) {
    return Element{label(q), QuatRealization{q}};
  });
}

GroupPtr closure(std::string name, const std::vector<Quat>& generators, std::size_t cap) {
  std::function<Quat(const Quat&, const Quat&)> mul = [](const Quat& a, const Quat& b) {
    return a * b;
  };
  return make_quaternion_group(std::move(name), close_under<Quat, QuatKeyLess>(generators, mul, cap));
}

ElemSet subgroup_closure(const FiniteGroup& g, std::span<const ElemId> gens) {
  std::vector<char> seen(g.order(), 0);
  std::deque<ElemId> frontier{0};
  seen[0] = 1;
  while (!frontier.empty()) {
    ElemId x = frontier.front();
    frontier.pop_front();
    for (ElemId s : gens) {
      ElemId y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  ElemSet out;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

// ---- homomorphisms -----------------------------------------------------------

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<ElemId> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const auto& s = *source_;
  const auto& t = *target_;
  if (map_.size() != s.order()) throw NotAHomomorphism("map is not total on " + s.name());
  for (ElemId y : map_) {
    if (y >= t.order()) throw NotAHomomorphism("map leaves " + t.name());
  }
  if (map_[0] != 0) throw NotAHomomorphism("identity not preserved");
  for (ElemId a = 0; a < s.order(); ++a) {
    for (ElemId b = 0; b < s.order(); ++b) {
      if (map_[s.mul(a, b)] != t.mul(map_[a], map_[b])) {
        throw NotAHomomorphism(s.name() + " -> " + t.name() + " fails at (" + s.label(a) + ", " +
                               s.label(b) + ")");
      }
    }
  }
}

ElemSet GroupHom::image() const {
  std::set<ElemId> img(map_.begin(), map_.end());
  return {img.begin(), img.end()};
}

ElemSet GroupHom::kernel() const {
  ElemSet out;
  for (ElemId x = 0; x < map_.size(); ++x) {
    if (map_[x] == 0) out.push_back(x);
  }
  return out;
}

bool GroupHom::is_injective() const { return kernel().size() == 1; }
bool GroupHom::is_surjective() const { return image().size() == target_->order(); }

GroupHom compose(const GroupHom& first, const GroupHom& second) {
  if (!same_group(first.target(), second.source())) {
    throw NotAHomomorphism("maps are not composable");
  }
  std::vector<ElemId> map(first.map().size());
  for (ElemId x = 0; x < map.size(); ++x) map[x] = second(first(x));
  return GroupHom(first.source(), second.target(), std::move(map));
}

GroupHom identity_hom(const GroupPtr& g) { return GroupHom(g, g, g->all()); }

GroupHom trivial_hom(const GroupPtr& source, const GroupPtr& target) {
  return GroupHom(source, target, std::vector<ElemId>(source->order(), 0));
}

std::optional<std::vector<ElemId>> extend_to_hom(const FiniteGroup& source,
                                                 std::span<const ElemId> gens,
                                                 const FiniteGroup& target,
                                                 std::span<const ElemId> images) {
  constexpr ElemId kUnset = std::numeric_limits<ElemId>::max();
  std::vector<ElemId> map(source.order(), kUnset);
  map[0] = 0;
  std::deque<ElemId> frontier{0};
  std::size_t assigned = 1;
  while (!frontier.empty()) {
    ElemId x = frontier.front();
    frontier.pop_front();
    for (std::size_t n = 0; n < gens.size(); ++n) {
      ElemId y = source.mul(x, gens[n]);
      ElemId img = target.mul(map[x], images[n]);
      if (map[y] == kUnset) {
        map[y] = img;
        ++assigned;
        frontier.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (assigned != source.order()) return std::nullopt;
  return map;
}

GroupHom hom_from_generators(const GroupPtr& source, std::span<const ElemId> gens,
                             const GroupPtr& target, std::span<const ElemId> images) {
  if (gens.size() != images.size()) throw NotAHomomorphism("generator/image count mismatch");
  auto map = extend_to_hom(*source, gens, *target, images);
  if (!map) {
    throw NotAHomomorphism("generator images do not extend to " + source->name() + " -> " +
                           target->name());
  }
  return GroupHom(source, target, std::move(*map));
}

GroupHom inverse_hom(const GroupHom& iso) {
  if (!iso.is_bijective()) throw NotAHomomorphism("map is not bijective");
  std::vector<ElemId> inv(iso.map().size());
  for (ElemId x = 0; x < inv.size(); ++x) inv[iso(x)] = x;
  return GroupHom(iso.target(), iso.source(), std::move(inv));
}

// ---- structure -----------------------------------------------------------------

ElemSet center(const FiniteGroup& g) {
  ElemSet out;
  for (ElemId z = 0; z < g.order(); ++z) {
    bool central = true;
    for (ElemId x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::size_t element_order(const FiniteGroup& g, ElemId x) {
  std::size_t n = 1;
  for (ElemId y = x; y != 0; y = g.mul(y, x)) ++n;
  return n;
}

bool is_subgroup(const FiniteGroup& g, std::span<const ElemId> subset) {
  if (subset.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (ElemId x : subset) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (ElemId a : subset)
    for (ElemId b : subset)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, std::span<const ElemId> subset) {
  if (!is_subgroup(g, subset)) throw NotASubgroup("subset is not a subgroup of " + g.name());
  std::vector<char> in(g.order(), 0);
  for (ElemId x : subset) in[x] = 1;
  for (ElemId h = 0; h < g.order(); ++h)
    for (ElemId x : subset)
      if (!in[g.conjugate(h, x)]) return false;
  return true;
}

std::vector<std::size_t> conjugacy_class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> size(g.order(), 0);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (size[x]) continue;
    std::set<ElemId> cls;
    for (ElemId h = 0; h < g.order(); ++h) cls.insert(g.conjugate(h, x));
    for (ElemId y : cls) size[y] = cls.size();
  }
  return size;
}

SubgroupEmbedding induced_subgroup(const GroupPtr& g, const ElemSet& subset, std::string name) {
  if (!is_subgroup(*g, subset)) throw NotASubgroup("subset is not a subgroup of " + g->name());
  std::vector<ElemId> local(g->order(), 0);
  for (ElemId n = 0; n < subset.size(); ++n) local[subset[n]] = n;
  std::vector<Element> elements;
  for (ElemId x : subset) elements.push_back(g->element(x));
  std::vector<ElemId> table;
  table.reserve(subset.size() * subset.size());
  for (ElemId a : subset)
    for (ElemId b : subset) table.push_back(local[g->mul(a, b)]);
  auto sub = std::make_shared<const FiniteGroup>(std::move(name), std::move(elements), std::move(table));
  return {sub, GroupHom(sub, g, subset)};
}

Quotient quotient(const GroupPtr& g, const ElemSet& normal_subgroup) {
  bool normal = false;
  try {
    normal = is_normal(*g, normal_subgroup);
  } catch (const NotASubgroup&) {
    normal = false;
  }
  if (!normal) throw NotNormal("subset is not a normal subgroup of " + g->name());

  constexpr ElemId kUnset = std::numeric_limits<ElemId>::max();
  std::vector<ElemId> coset_of(g->order(), kUnset);
  std::vector<ElemId> reps;
  std::vector<Element> elements;
  for (ElemId x = 0; x < g->order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    Coset c;
    for (ElemId n : normal_subgroup) c.members.push_back(g->mul(x, n));
    std::sort(c.members.begin(), c.members.end());
    for (ElemId m : c.members) coset_of[m] = static_cast<ElemId>(reps.size());
    reps.push_back(x);
    elements.push_back(Element{"[" + g->label(x) + "]", std::move(c)});
  }
  const std::size_t m = reps.size();
  std::vector<ElemId> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = coset_of[g->mul(reps[a], reps[b])];
  auto q = std::make_shared<const FiniteGroup>(g->name() + "/N" + std::to_string(normal_subgroup.size()),
                                               std::move(elements), std::move(table));
  return {q, GroupHom(g, q, coset_of)};
}

InnerAutomorphisms inner_automorphism_group(const GroupPtr& g) {
  std::vector<IdMap> maps;
  std::map<IdMap, std::string> names;
  std::vector<IdMap> of_element;
  for (ElemId h = 0; h < g->order(); ++h) {
    IdMap m;
    m.images.resize(g->order());
    for (ElemId x = 0; x < g->order(); ++x) m.images[x] = g->conjugate(h, x);
    if (names.emplace(m, "α_" + g->label(h)).second) maps.push_back(m);
    of_element.push_back(std::move(m));
  }
  auto in = map_group("In(" + g->name() + ")", maps, [&](const IdMap& m) { return names.at(m); });
  std::vector<ElemId> hom(g->order());
  for (ElemId h = 0; h < g->order(); ++h) hom[h] = *in->find(of_element[h]);
  return {in, GroupHom(g, in, std::move(hom))};
}

GroupPtr automorphism_group(const GroupPtr& g) {
  if (g->order() > kSearchBound) {
    throw SearchBoundExceeded("automorphism search is bounded by order " +
                              std::to_string(kSearchBound));
  }
  const auto gens = minimal_generating_sequence(*g);
  const auto fp = fingerprints(*g);
  std::vector<std::vector<ElemId>> candidates;
  for (ElemId s : gens) {
    std::vector<ElemId> c;
    for (ElemId y = 0; y < g->order(); ++y) {
      if (fp[y] == fp[s]) c.push_back(y);
    }
    candidates.push_back(std::move(c));
  }
  std::vector<IdMap> autos;
  std::vector<ElemId> chosen;
  std::uint64_t tried = 0;
  backtrack(candidates, chosen, tried, [&](const std::vector<ElemId>& images) {
    auto map = extend_to_hom(*g, gens, *g, images);
    if (map && injective_map(*map, g->order())) autos.push_back(IdMap{std::move(*map)});
    return false;
  });
  IdMap identity{g->all()};
  std::sort(autos.begin(), autos.end(), [&](const IdMap& a, const IdMap& b) {
    if ((a == identity) != (b == identity)) return a == identity;
    return a.images < b.images;
  });
  return map_group("Aut(" + g->name() + ")", std::move(autos),
                   [&](const IdMap& m) { return map_label(*g, gens, m.images); });
}

ElemId apply_automorphism(const FiniteGroup& aut, ElemId alpha, ElemId x) {
  return std::get<IdMap>(aut.element(alpha).realization).images.at(x);
}

std::vector<ElemSet> subgroups(const FiniteGroup& g) {
  if (g.order() > kSearchBound) {
    throw SearchBoundExceeded("subgroup enumeration is bounded by order " +
                              std::to_string(kSearchBound));
  }
  std::set<ElemSet> cyclic;
  std::vector<ElemId> cyclic_gen;
  for (ElemId x = 0; x < g.order(); ++x) {
    const ElemId one[] = {x};
    if (cyclic.insert(subgroup_closure(g, one)).second) cyclic_gen.push_back(x);
  }
  std::set<ElemSet> found(cyclic.begin(), cyclic.end());
  std::deque<ElemSet> work(cyclic.begin(), cyclic.end());
  while (!work.empty()) {
    ElemSet s = work.front();
    work.pop_front();
    for (ElemId c : cyclic_gen) {
      if (std::binary_search(s.begin(), s.end(), c)) continue;
      std::vector<ElemId> gens = s;
      gens.push_back(c);
      ElemSet joined = subgroup_closure(g, gens);
      if (found.insert(joined).second) work.push_back(std::move(joined));
    }
  }
  std::vector<ElemSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<ElemId> minimal_generating_sequence(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  for (std::size_t r = 1; r < n; ++r) {
    // combinations of non-identity ids in lexicographic order
    std::vector<ElemId> combo(r);
    std::iota(combo.begin(), combo.end(), 1);
    while (true) {
      if (subgroup_closure(g, combo).size() == n) return combo;
      std::size_t pos = r;
      while (pos > 0 && combo[pos - 1] == n - r + pos - 1) --pos;
      if (pos == 0) break;
      ++combo[pos - 1];
      for (std::size_t q = pos; q < r; ++q) combo[q] = combo[q - 1] + 1;
    }
  }
  return {};
}

// ---- isomorphism ---------------------------------------------------------------

IsoResult isomorphic(const GroupPtr& g, const GroupPtr& h) {
  IsoResult result;
  if (g->order() != h->order()) {
    result.reason = "orders differ (" + std::to_string(g->order()) + " vs " +
                    std::to_string(h->order()) + ")";
    return result;
  }
  const auto fg = fingerprints(*g);
  const auto fh = fingerprints(*h);
  auto sorted = [](std::vector<Fingerprint> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(fg) != sorted(fh)) {
    result.reason = "element order / class size profiles differ";
    return result;
  }
  const auto gens = minimal_generating_sequence(*g);
  std::vector<std::vector<ElemId>> candidates;
  for (ElemId s : gens) {
    std::vector<ElemId> c;
    for (ElemId y = 0; y < h->order(); ++y) {
      if (fh[y] == fg[s]) c.push_back(y);
    }
    candidates.push_back(std::move(c));
  }
  std::vector<ElemId> chosen;
  backtrack(candidates, chosen, result.assignments_tried, [&](const std::vector<ElemId>& images) {
    auto map = extend_to_hom(*g, gens, *h, images);
    if (!map || !injective_map(*map, h->order())) return false;
    result.witness.emplace(g, h, std::move(*map));
    return true;
  });
  if (!result.witness) {
    result.reason = "no generator assignment extends to an isomorphism (" +
                    std::to_string(result.assignments_tried) + " tried)";
  }
  return result;
}

// ---- sequences -----------------------------------------------------------------

ExactnessReport is_exact(const SequenceSpec& seq) {
  ExactnessReport report;
  if (seq.maps.empty()) return report;
  for (std::size_t n = 0; n + 1 < seq.maps.size(); ++n) {
    if (!same_group(seq.maps[n].target(), seq.maps[n + 1].source())) {
      report.composable = false;
      return report;
    }
  }
  const auto& first = seq.maps.front();
  {
    Junction j{first.source()->name(), 1, first.kernel().size(), false};
    j.exact = j.kernel_size == 1;
    report.junctions.push_back(j);
  }
  for (std::size_t n = 0; n + 1 < seq.maps.size(); ++n) {
    const auto img = seq.maps[n].image();
    const auto ker = seq.maps[n + 1].kernel();
    report.junctions.push_back(
        Junction{seq.maps[n].target()->name(), img.size(), ker.size(), img == ker});
  }
  const auto& last = seq.maps.back();
  {
    const auto img = last.image();
    Junction j{last.target()->name(), img.size(), last.target()->order(), false};
    j.exact = img.size() == last.target()->order();
    report.junctions.push_back(j);
  }
  report.first_injective = report.junctions.front().exact;
  report.last_surjective = report.junctions.back().exact;
  report.exact = std::all_of(report.junctions.begin(), report.junctions.end(),
                             [](const Junction& j) { return j.exact; });
  return report;
}

SectionResult find_section(const GroupHom& psi) {
  if (!psi.is_surjective()) throw NotSurjective(psi.source()->name() + " -> " + psi.target()->name());
  const auto& g = *psi.source();
  const auto& k = *psi.target();
  const auto gens = minimal_generating_sequence(k);
  std::vector<std::vector<ElemId>> candidates;
  for (ElemId s : gens) {
    const std::size_t ord = element_order(k, s);
    std::vector<ElemId> c;
    for (ElemId x = 0; x < g.order(); ++x) {
      if (psi(x) == s && ord % element_order(g, x) == 0) c.push_back(x);
    }
    candidates.push_back(std::move(c));
  }
  SectionResult result;
  std::vector<ElemId> chosen;
  backtrack(candidates, chosen, result.assignments_tried, [&](const std::vector<ElemId>& images) {
    auto map = extend_to_hom(k, gens, g, images);
    if (!map) return false;
    for (ElemId y = 0; y < k.order(); ++y) {
      if (psi((*map)[y]) != y) return false;
    }
    result.section.emplace(psi.target(), psi.source(), std::move(*map));
    return true;
  });
  return result;
}

// ---- products ------------------------------------------------------------------

SemidirectProduct semidirect_product(const SemidirectSpec& spec, std::string name) {
  const auto& h = *spec.normal;
  const auto& k = *spec.acting;
  const auto& aut = *spec.automorphisms;
  if (spec.twist.size() != k.order()) throw InvalidTwist("twist is not total on " + k.name());
  auto action = [&](ElemId kk) -> const std::vector<ElemId>& {
    const auto* m = std::get_if<IdMap>(&aut.element(spec.twist[kk]).realization);
    if (!m || m->images.size() != h.order()) {
      throw InvalidTwist("twist image is not a self-map of " + h.name());
    }
    return m->images;
  };
  for (ElemId kk = 0; kk < k.order(); ++kk) {
    if (spec.twist[kk] >= aut.order()) throw InvalidTwist("twist image out of range");
    const auto& m = action(kk);
    if (!injective_map(m, h.order())) throw InvalidTwist("twist image is not bijective");
    for (ElemId a = 0; a < h.order(); ++a)
      for (ElemId b = 0; b < h.order(); ++b)
        if (m[h.mul(a, b)] != h.mul(m[a], m[b])) throw InvalidTwist("twist image is not an automorphism");
  }
  for (ElemId k0 = 0; k0 < k.order(); ++k0) {
    for (ElemId k1 = 0; k1 < k.order(); ++k1) {
      const auto& m01 = action(k.mul(k0, k1));
      const auto& m0 = action(k0);
      const auto& m1 = action(k1);
      for (ElemId x = 0; x < h.order(); ++x) {
        if (m01[x] != m0[m1[x]]) throw InvalidTwist("twist is not a homomorphism");
      }
    }
  }

  const std::size_t nh = h.order();
  const std::size_t nk = k.order();
  const std::size_t n = nh * nk;
  auto id_of = [nk](ElemId hh, ElemId kk) { return static_cast<ElemId>(hh * nk + kk); };
  std::vector<Element> elements;
  elements.reserve(n);
  for (ElemId hh = 0; hh < nh; ++hh)
    for (ElemId kk = 0; kk < nk; ++kk)
      elements.push_back(Element{"(" + h.label(hh) + "," + k.label(kk) + ")", IdPair{hh, kk}});
  std::vector<ElemId> table(n * n);
  for (ElemId h0 = 0; h0 < nh; ++h0)
    for (ElemId k0 = 0; k0 < nk; ++k0) {
      const auto& twist = action(k0);
      for (ElemId h1 = 0; h1 < nh; ++h1)
        for (ElemId k1 = 0; k1 < nk; ++k1)
          table[id_of(h0, k0) * n + id_of(h1, k1)] = id_of(h.mul(h0, twist[h1]), k.mul(k0, k1));
    }
  if (name.empty()) name = h.name() + "⋊" + k.name();
  auto g = std::make_shared<const FiniteGroup>(std::move(name), std::move(elements), std::move(table));

  std::vector<ElemId> inc(nh), proj(n), sec(nk);
  for (ElemId hh = 0; hh < nh; ++hh) inc[hh] = id_of(hh, 0);
  for (ElemId x = 0; x < n; ++x) proj[x] = x % nk;
  for (ElemId kk = 0; kk < nk; ++kk) sec[kk] = id_of(0, kk);
  return {g, GroupHom(spec.normal, g, std::move(inc)), GroupHom(g, spec.acting, std::move(proj)),
          GroupHom(spec.acting, g, std::move(sec))};
}

GroupPtr direct_product(const GroupPtr& h, const GroupPtr& k, std::string name) {
  const std::size_t nh = h->order();
  const std::size_t nk = k->order();
  const std::size_t n = nh * nk;
  std::vector<Element> elements;
  for (ElemId hh = 0; hh < nh; ++hh)
    for (ElemId kk = 0; kk < nk; ++kk)
      elements.push_back(Element{"(" + h->label(hh) + "," + k->label(kk) + ")", IdPair{hh, kk}});
  std::vector<ElemId> table(n * n);
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b)
      table[a * n + b] = static_cast<ElemId>(h->mul(a / nk, b / nk) * nk + k->mul(a % nk, b % nk));
  if (name.empty()) name = h->name() + "×" + k->name();
  return std::make_shared<const FiniteGroup>(std::move(name), std::move(elements), std::move(table));
}

} // namespace ccf
