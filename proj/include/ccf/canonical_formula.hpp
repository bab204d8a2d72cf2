#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ccf/group.hpp"
#include "ccf/quaternion.hpp"

namespace ccf {

/// True for the eight Lipschitz units ±1, ±i, ±j, ±k.
bool in_q(const Quat& q);

/// Φ_x(a) = 2^{-1/2}(x − a) together with the pair it was built from.
struct Valence {
  Quat value;
  Quat x;
  Quat a;
};

/// Throws DegenerateValence when x = ±a and DomainError-free otherwise;
/// for x, a ∈ Q the value is a special element of 2·O.
Valence phi(const Quat& x, const Quat& a);

/// The anti-automorphism λ: apply σ² (i→k, j→i, k→j), then I (negate j and
/// k), then conjugation.  λ(1)=1, λ(i)=k, λ(j)=−i, λ(k)=j.
Quat lambda_map(const Quat& q);
/// Same map assembled from the three constituent steps; used as a cross-check.
Quat lambda_by_composition(const Quat& q);

/// A quadruple {x, a, y, b} of elements of Q.
struct CFQuadruple {
  Quat x, a, y, b;
};

/// Name of the first violated admissibility condition ("(x,a)", "(y,b)",
/// "(x,b)", "(a^-1,y)"), or nullopt when all four valences are defined.
std::optional<std::string> inadmissible_pair(const CFQuadruple& q);
bool admissible(const CFQuadruple& q);

struct CFSides {
  Quat lhs; // {Φ_x(a) : Φ_y(b)}
  Quat rhs; // {Φ_x(b) : Φ_{a^-1}(y)}
};
/// Throws InadmissibleQuadruple naming the offending pair.
CFSides cf_sides(const CFQuadruple& q, RatioConvention c);

struct CFCheck {
  bool holds = false; // λ(lhs) == rhs
  CFSides sides;
};
CFCheck cf_check(const CFQuadruple& q, RatioConvention c);

/// ½[({x:y} + {a:b}) − ({a:y} + {x:b})] compared with the direct lhs.
bool ratio_expansion_check(const CFQuadruple& q, RatioConvention c);

enum class CFClass { Inadmissible, Holds, Fails };

struct ScanReport {
  RatioConvention convention = RatioConvention::Plain;
  std::size_t inadmissible = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  /// Classification of every quadruple, indexed by ((x·8 + a)·8 + y)·8 + b
  /// over the element order of the catalog group Q.
  std::vector<CFClass> classes;
  std::vector<std::array<ElemId, 4>> holds_set; // lexicographic
};

/// Classifies all 8^4 quadruples over Q.
ScanReport cf_scan(RatioConvention c);
/// {"convention","counts":{...},"holds":[[x,a,y,b],...]} with element labels.
nlohmann::json scan_json(const ScanReport& r);

/// Linear extension of an automorphism of Q to all quaternions.  `aut` is an
/// automorphism group of Q (IdMap realizations), `alpha` one of its elements.
Quat aut_q_action(const FiniteGroup& q_group, const FiniteGroup& aut, ElemId alpha, const Quat& v);

} // namespace ccf
