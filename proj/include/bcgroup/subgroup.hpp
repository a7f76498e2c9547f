#pragma once

// Subgroups of the pool-update group: closure, the full lattice of a small
// group, cosets, normality, Sylow subgroups and Cauchy witnesses.

#include <cstdint>
#include <utility>
#include <vector>

#include "bcgroup/concrete_group.hpp"
#include "bcgroup/core.hpp"
#include "bcgroup/table.hpp"

namespace bcgroup {

/// Explicit listing of a subgroup, elements in enumeration order.
class Subgroup {
 public:
  /// Sorts and deduplicates; does not check closure (see is_closed_subgroup).
  Subgroup(GroupParams params, std::vector<PoolUpdate> elements);

  const GroupParams& params() const noexcept { return params_; }
  const std::vector<PoolUpdate>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const PoolUpdate& a) const;

  bool operator==(const Subgroup&) const = default;

 private:
  GroupParams params_;
  std::vector<PoolUpdate> elements_;
};

enum class CosetSide { Left, Right };

/// Left cosets are g*H (g acts first), right cosets H*g. Cosets are listed
/// in order of their first element in enumeration order.
struct CosetPartition {
  Subgroup subgroup;
  CosetSide side;
  std::vector<std::vector<PoolUpdate>> cosets;
};

/// Explicit-listing bound for constructions that need no enumeration of the
/// whole group (Sylow products, relabel subgroups).
inline constexpr std::uint64_t kListingCap = 100'000;

/// Contains e, closed under compose and invert.
bool is_closed_subgroup(const Subgroup& h);

/// Breadth-first closure. Throws ClosureExceedsCap, ParamsMismatch.
Subgroup generate_subgroup(const GroupParams& params, const std::vector<PoolUpdate>& generators,
                           std::uint64_t cap = kListingCap);

Subgroup cyclic_subgroup(const PoolUpdate& a);

/// Every subgroup once, sorted by order then element list, plus the proper
/// containment pairs (i, j) meaning subgroups[i] is a proper subgroup of subgroups[j].
struct SubgroupLattice {
  std::vector<Subgroup> subgroups;
  std::vector<std::pair<std::size_t, std::size_t>> containment;
};

/// Throws GroupTooLarge when (r!)^n > cap.
std::vector<Subgroup> all_subgroups(const GroupParams& params, std::uint64_t cap = kDefaultCap);
SubgroupLattice subgroup_lattice(const GroupParams& params, std::uint64_t cap = kDefaultCap);

/// Conjugation check against every group element. Throws GroupTooLarge.
bool is_normal(const Subgroup& h, std::uint64_t cap = kDefaultCap);

CosetPartition cosets(const Subgroup& h, CosetSide side, std::uint64_t cap = kDefaultCap);

/// A subgroup of order equal to the full p-part of (r!)^n: the product over
/// nodes of one Sylow p-subgroup of the permutations of r pools. Throws
/// PrimeNotPresent, InvalidArgument (p not prime), GroupTooLarge (r > 8) and
/// ClosureExceedsCap.
Subgroup sylow_subgroup(const GroupParams& params, std::uint64_t p, std::uint64_t cap = kListingCap);

/// Sylow p-subgroup of the permutations of `points` points, found by search.
std::vector<Permutation> symmetric_sylow(std::size_t points, std::uint64_t p);

/// First element of order p in enumeration order. Throws PrimeNotPresent,
/// InvalidArgument, GroupTooLarge (search longer than cap).
PoolUpdate cauchy_witness(const GroupParams& params, std::uint64_t p, std::uint64_t cap = kDefaultCap);

// Index-level helpers over an enumerated group.
ElementSet to_element_set(const ConcreteGroup& group, const Subgroup& h);
Subgroup to_subgroup(const ConcreteGroup& group, const ElementSet& s);
std::vector<ElementSet> coset_partition(const MultiplicationTable& table, const ElementSet& h,
                                        CosetSide side);

}  // namespace bcgroup
