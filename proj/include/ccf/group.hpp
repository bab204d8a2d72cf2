#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ccf/errors.hpp"
#include "ccf/quaternion.hpp"

namespace ccf {

using ElemId = std::uint32_t;
using ElemSet = std::vector<ElemId>; // sorted, duplicate free

// ---- element realizations --------------------------------------------------

/// Permutation of {0..n-1}; images[x] is where x goes.
struct Permutation {
  std::vector<std::uint8_t> images;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// 2x2 matrix over F_p, row-major.
struct ModMatrix {
  int p = 2;
  std::array<int, 4> entries{};
  friend auto operator<=>(const ModMatrix&, const ModMatrix&) = default;
};

/// Element of a product group, given by the ids of its two components.
struct IdPair {
  ElemId first = 0;
  ElemId second = 0;
  friend auto operator<=>(const IdPair&, const IdPair&) = default;
};

/// Residue class modulo n.
struct Residue {
  int value = 0;
  int modulus = 1;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Self-map of another group's element ids (automorphisms, conjugations).
struct IdMap {
  std::vector<ElemId> images;
  friend auto operator<=>(const IdMap&, const IdMap&) = default;
};

/// Coset of a normal subgroup, given by its members in the parent group.
struct Coset {
  ElemSet members;
  friend auto operator<=>(const Coset&, const Coset&) = default;
};

struct QuatRealization {
  Quat value;
  friend bool operator==(const QuatRealization&, const QuatRealization&) = default;
};

using Realization =
    std::variant<QuatRealization, Permutation, ModMatrix, IdPair, Residue, IdMap, Coset>;

struct Element {
  std::string label;
  Realization realization;
};

nlohmann::json realization_json(const Realization& r);

// ---- groups ----------------------------------------------------------------

/// Immutable finite group: element list plus Cayley table.  The identity is
/// always element 0.  Construction audits the group axioms and throws
/// InvalidGroup on failure.
class FiniteGroup {
public:
  FiniteGroup(std::string name, std::vector<Element> elements, std::vector<ElemId> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return elements_.size(); }
  ElemId identity() const noexcept { return 0; }

  ElemId mul(ElemId a, ElemId b) const { return table_[a * order() + b]; }
  ElemId inv(ElemId a) const { return inverse_[a]; }
  ElemId pow(ElemId a, long long n) const;
  ElemId conjugate(ElemId h, ElemId g) const { return mul(mul(h, g), inv(h)); } // h g h^-1

  const Element& element(ElemId id) const { return elements_.at(id); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::string& label(ElemId id) const { return elements_.at(id).label; }
  /// Id of the element with this label or realization.
  std::optional<ElemId> find_label(const std::string& label) const;
  std::optional<ElemId> find(const Realization& r) const;
  std::optional<ElemId> find_quat(const Quat& q) const;

  ElemSet all() const;
  bool is_abelian() const;

private:
  void audit() const;

  std::string name_;
  std::vector<Element> elements_;
  std::vector<ElemId> table_;
  std::vector<ElemId> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Builds a group from an explicit element list; the first element must be
/// the identity.  `mul` must keep the list closed (else InvalidGroup).
template <class T, class Less = std::less<T>>
GroupPtr make_group(std::string name, const std::vector<T>& elems,
                    const std::function<T(const T&, const T&)>& mul,
                    const std::function<Element(const T&)>& describe);

/// Quaternion group from a list of unit quaternions, ordered canonically.
GroupPtr make_quaternion_group(std::string name, std::vector<Quat> elems);

/// Canonical ordering of unit quaternions used for every quaternion group:
/// by first nonzero coordinate, positive before negative, larger leading
/// magnitude first, then remaining coordinates descending.
bool quaternion_display_less(const Quat& u, const Quat& v);

// ---- homomorphisms ---------------------------------------------------------

/// Total map between finite groups, validated as a homomorphism.
class GroupHom {
public:
  /// Throws NotAHomomorphism if the map does not respect multiplication.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<ElemId> map);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<ElemId>& map() const noexcept { return map_; }
  ElemId operator()(ElemId g) const { return map_.at(g); }

  ElemSet image() const;
  ElemSet kernel() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<ElemId> map_;
};

/// this ∘ first: apply `first`, then `second`.
GroupHom compose(const GroupHom& first, const GroupHom& second);
GroupHom identity_hom(const GroupPtr& g);
GroupHom trivial_hom(const GroupPtr& source, const GroupPtr& target);

/// Extends generator images to a map on the whole source via the Cayley
/// graph; nullopt if the assignment is inconsistent or gens do not generate.
std::optional<std::vector<ElemId>> extend_to_hom(const FiniteGroup& source,
                                                 std::span<const ElemId> gens,
                                                 const FiniteGroup& target,
                                                 std::span<const ElemId> images);

/// Checked variant of extend_to_hom; throws NotAHomomorphism.
GroupHom hom_from_generators(const GroupPtr& source, std::span<const ElemId> gens,
                             const GroupPtr& target, std::span<const ElemId> images);

// ---- closure ---------------------------------------------------------------

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Smallest multiplicatively closed set containing the generators.  Elements
/// appear in discovery order.  Throws CapExceeded past `cap` elements.
template <class T, class Less = std::less<T>>
std::vector<T> close_under(const std::vector<T>& generators,
                           const std::function<T(const T&, const T&)>& mul,
                           std::size_t cap = kDefaultClosureCap);

/// Quaternion closure as a group (canonical element order).
GroupPtr closure(std::string name, const std::vector<Quat>& generators,
                 std::size_t cap = kDefaultClosureCap);

/// Closure of a subset inside an existing group.
ElemSet subgroup_closure(const FiniteGroup& g, std::span<const ElemId> gens);

// ---- structure -------------------------------------------------------------

ElemSet center(const FiniteGroup& g);
std::size_t element_order(const FiniteGroup& g, ElemId x);
bool is_subgroup(const FiniteGroup& g, std::span<const ElemId> subset);
/// Throws NotASubgroup.
bool is_normal(const FiniteGroup& g, std::span<const ElemId> subset);
/// Conjugacy class of every element, as class sizes indexed by element id.
std::vector<std::size_t> conjugacy_class_sizes(const FiniteGroup& g);

struct SubgroupEmbedding {
  GroupPtr group;
  GroupHom inclusion;
};
/// Materializes a subgroup as its own group with the inclusion map.
SubgroupEmbedding induced_subgroup(const GroupPtr& g, const ElemSet& subset, std::string name);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};
/// G/N as cosets ordered by smallest member; throws NotNormal.
Quotient quotient(const GroupPtr& g, const ElemSet& normal_subgroup);

struct InnerAutomorphisms {
  GroupPtr group;     // elements are IdMap conjugations, composed as maps
  GroupHom from_group; // h -> α_h
};
InnerAutomorphisms inner_automorphism_group(const GroupPtr& g);

inline constexpr std::size_t kSearchBound = 48;

/// All automorphisms of G, composed as maps ((a·b)(x) = a(b(x))).
/// Throws SearchBoundExceeded when |G| > kSearchBound.
GroupPtr automorphism_group(const GroupPtr& g);

/// Applies an automorphism group element (IdMap realization) to an element
/// of the group it acts on.
ElemId apply_automorphism(const FiniteGroup& aut, ElemId alpha, ElemId x);

/// All subgroups, sorted by (order, members).  Throws SearchBoundExceeded.
std::vector<ElemSet> subgroups(const FiniteGroup& g);

/// Shortest generating sequence; ties broken by element id order.
std::vector<ElemId> minimal_generating_sequence(const FiniteGroup& g);

// ---- isomorphism -----------------------------------------------------------

struct IsoResult {
  std::optional<GroupHom> witness; // nullopt means NotIsomorphic
  std::string reason;              // why not, when no witness
  std::uint64_t assignments_tried = 0;
  explicit operator bool() const { return witness.has_value(); }
};
IsoResult isomorphic(const GroupPtr& g, const GroupPtr& h);

/// Inverse of a bijective homomorphism.
GroupHom inverse_hom(const GroupHom& iso);

// ---- sequences -------------------------------------------------------------

/// 1 -> G0 -> G1 -> ... -> Gm -> 1 given by the m composable maps.
struct SequenceSpec {
  std::vector<GroupHom> maps;
};

struct Junction {
  std::string group;       // the group at this junction
  std::size_t image_size;  // image of the incoming map (1 at the left end)
  std::size_t kernel_size; // kernel of the outgoing map (|G| at the right end)
  bool exact = false;
};

struct ExactnessReport {
  std::vector<Junction> junctions;
  bool composable = true;
  bool exact = false;
  bool first_injective = false; // leftmost map one-to-one
  bool last_surjective = false; // rightmost map onto
};

ExactnessReport is_exact(const SequenceSpec& seq);

struct SectionResult {
  std::optional<GroupHom> section; // nullopt is the NoSection token
  std::uint64_t assignments_tried = 0;
  explicit operator bool() const { return section.has_value(); }
};
/// Exhaustive search for rho with psi∘rho = id; throws NotSurjective.
SectionResult find_section(const GroupHom& psi);

// ---- semidirect products ---------------------------------------------------

/// H ⋊ K twisted by epsilon: K -> Aut(H).  `automorphisms` must have IdMap
/// realizations acting on H; `twist` lists ε(k) as ids in `automorphisms`.
struct SemidirectSpec {
  GroupPtr normal;        // H
  GroupPtr acting;        // K
  GroupPtr automorphisms; // a group of automorphisms of H
  std::vector<ElemId> twist;
};

struct SemidirectProduct {
  GroupPtr group; // elements are IdPair(h, k), ordered h-major
  GroupHom inclusion;  // H -> H⋊K
  GroupHom projection; // H⋊K -> K
  GroupHom section;    // K -> H⋊K
};
/// Throws InvalidTwist when ε is not a homomorphism into automorphisms of H.
SemidirectProduct semidirect_product(const SemidirectSpec& spec, std::string name = {});
GroupPtr direct_product(const GroupPtr& h, const GroupPtr& k, std::string name = {});

} // namespace ccf

#include "ccf/group_impl.hpp"
