#include "ccf/dump.hpp"

#include <algorithm>
#include <sstream>

#include "ccf/catalog.hpp"

namespace ccf {

nlohmann::json group_json(const FiniteGroup& g) {
  nlohmann::json elements = nlohmann::json::array();
  for (ElemId id = 0; id < g.order(); ++id) {
    elements.push_back({{"id", id}, {"label", g.label(id)}, {"realization", realization_json(g.element(id).realization)}});
  }
  nlohmann::json table = nlohmann::json::array();
  for (ElemId a = 0; a < g.order(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (ElemId b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return {{"name", g.name()}, {"order", g.order()}, {"elements", std::move(elements)}, {"table", std::move(table)}};
}

std::string cayley_markdown(const FiniteGroup& g) {
  std::ostringstream os;
  os << "| · |";
  for (ElemId b = 0; b < g.order(); ++b) os << " " << g.label(b) << " |";
  os << "\n|---|";
  for (ElemId b = 0; b < g.order(); ++b) os << "---|";
  os << "\n";
  for (ElemId a = 0; a < g.order(); ++a) {
    os << "| **" << g.label(a) << "** |";
    for (ElemId b = 0; b < g.order(); ++b) os << " " << g.label(g.mul(a, b)) << " |";
    os << "\n";
  }
  return os.str();
}

std::string group_markdown(const FiniteGroup& g) {
  std::ostringstream os;
  os << "# " << g.name() << "\n\norder " << g.order() << (g.is_abelian() ? ", abelian" : ", non-abelian") << "\n\n";
  os << "center: {";
  const auto z = center(g);
  for (std::size_t n = 0; n < z.size(); ++n) os << (n ? ", " : "") << g.label(z[n]);
  os << "}\n\n| id | element | order |\n|---|---|---|\n";
  for (ElemId id = 0; id < g.order(); ++id) {
    os << "| " << id << " | " << g.label(id) << " | " << element_order(g, id) << " |\n";
  }
  return os.str();
}

std::string lattice_dot(const GroupPtr& g) {
  const auto subs = subgroups(*g);
  auto contains = [](const ElemSet& big, const ElemSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  std::ostringstream os;
  os << "digraph \"" << g->name() << "\" {\n  rankdir=BT;\n";
  for (std::size_t n = 0; n < subs.size(); ++n) {
    std::string text = std::to_string(subs[n].size());
    if (subs[n].size() <= 24) {
      const auto type = identify(induced_subgroup(g, subs[n], "H" + std::to_string(n)).group);
      if (type != "?") text += " " + type;
    }
    os << "  s" << n << " [label=\"" << text << "\"];\n";
  }
  for (std::size_t lo = 0; lo < subs.size(); ++lo) {
    for (std::size_t hi = 0; hi < subs.size(); ++hi) {
      if (lo == hi || subs[hi].size() <= subs[lo].size() || !contains(subs[hi], subs[lo])) continue;
      bool maximal = true;
      for (std::size_t mid = 0; mid < subs.size() && maximal; ++mid) {
        if (mid == lo || mid == hi) continue;
        if (subs[mid].size() > subs[lo].size() && subs[mid].size() < subs[hi].size() &&
            contains(subs[mid], subs[lo]) && contains(subs[hi], subs[mid])) {
          maximal = false;
        }
      }
      if (maximal) os << "  s" << lo << " -> s" << hi << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace ccf
