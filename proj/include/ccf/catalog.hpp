#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccf/group.hpp"

namespace ccf {

/// A named construction from the table of small groups.
struct CatalogName {
  enum class Kind { Cyclic, Symmetric, Klein, Quaternion, Alternating4, BinaryTetrahedral,
                    BinaryOctahedral, SpecialLinear };
  Kind kind = Kind::Cyclic;
  int n = 1; // C(n), Sym(n) or the prime of SL2(p)

  /// Canonical spelling: "C3", "S4", "V", "Q", "A4", "2T", "2O", "SL2(3)".
  std::string str() const;
  /// Accepts the canonical spelling and a few aliases ("T2", "O2", "Sym3",
  /// "C(5)", "SL2_3").  Throws UnknownGroup.
  static CatalogName parse(std::string_view text);

  friend bool operator==(const CatalogName&, const CatalogName&) = default;
};

/// Names shown by `ccf catalog list`.
std::vector<CatalogName> catalog_names();
/// "quaternion", "permutation", "matrix", "residue" or "map".
std::string realization_kind(const CatalogName& name);

/// Builds the named group with its fixed deterministic element order.
GroupPtr build(const CatalogName& name);
GroupPtr build(std::string_view name);

/// The 24 unit quaternions 2^{-1/2}(±e_p ± e_q), p < q.
std::vector<Quat> special_elements();
bool is_special_element(const Quat& q);

/// The 8 Lipschitz units and the 24 Hurwitz units.
std::vector<Quat> lipschitz_units();
std::vector<Quat> hurwitz_units();

/// 2·O rebuilt by closure from {2^{-1/2}(1+i), ½(1+i+j+k)}.  (The pair
/// {i, 2^{-1/2}(1+i)} commutes and only closes to a cyclic group of order 8.)
GroupPtr binary_octahedral_by_closure();

/// C2 × C2 -> V given by (1,0) -> I, (0,1) -> J.
GroupHom klein_from_c2xc2();

/// Isomorphism type of a small group as a catalog name, tested against
/// the catalog entries of the same order; "?" when none match.
std::string identify(const GroupPtr& g);

/// One row of the table check.
struct TableRow {
  std::string id;
  std::string claim;
  std::string status; // "pass", "fail" or "discrepancy"
  std::string details;
};
std::vector<TableRow> verify_table();

} // namespace ccf
