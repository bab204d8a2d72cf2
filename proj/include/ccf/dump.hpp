#pragma once

#include <string>

#include <json.hpp>

#include "ccf/group.hpp"

namespace ccf {

/// {"name","order","elements":[{"id","label","realization"}],"table":[[id,...]]}
nlohmann::json group_json(const FiniteGroup& g);

/// Cayley table as a Markdown grid of element labels.
std::string cayley_markdown(const FiniteGroup& g);

/// Markdown summary: name, order, center, element orders.
std::string group_markdown(const FiniteGroup& g);

/// Subgroup lattice as a DOT digraph.  Nodes are subgroups labeled by order
/// (and isomorphism type up to order 24); edges are maximal containments.
std::string lattice_dot(const GroupPtr& g);

} // namespace ccf
