#pragma once

// Template definitions for group.hpp.

#include <deque>
#include <set>

namespace ccf {

template <class T, class Less>
GroupPtr make_group(std::string name, const std::vector<T>& elems,
                    const std::function<T(const T&, const T&)>& mul,
                    const std::function<Element(const T&)>& describe) {
  std::map<T, ElemId, Less> index;
  for (ElemId id = 0; id < elems.size(); ++id) {
    if (!index.emplace(elems[id], id).second) {
      throw InvalidGroup(name + ": duplicate element");
    }
  }
  const std::size_t n = elems.size();
  std::vector<ElemId> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(mul(elems[a], elems[b]));
      if (it == index.end()) throw InvalidGroup(name + ": element list not closed");
      table[a * n + b] = it->second;
    }
  }
  std::vector<Element> described;
  described.reserve(n);
  for (const auto& e : elems) described.push_back(describe(e));
  return std::make_shared<const FiniteGroup>(std::move(name), std::move(described),
                                             std::move(table));
}

template <class T, class Less>
std::vector<T> close_under(const std::vector<T>& generators,
                           const std::function<T(const T&, const T&)>& mul, std::size_t cap) {
  std::set<T, Less> seen;
  std::vector<T> order;
  std::deque<T> frontier;
  auto admit = [&](const T& x) {
    if (seen.insert(x).second) {
      if (seen.size() > cap) {
        throw CapExceeded("closure exceeded " + std::to_string(cap) + " elements");
      }
      order.push_back(x);
      frontier.push_back(x);
    }
  };
  for (const auto& g : generators) admit(g);
  while (!frontier.empty()) {
    T x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) admit(mul(x, g));
  }
  return order;
}

} // namespace ccf
