#pragma once

// Permutation representations of the pool-update group: the regular (Cayley)
// embedding, the action on configurations, the uniform pool-relabel subgroup,
// and isomorphism testing of small multiplication tables.

#include <cstdint>
#include <string>
#include <vector>

#include "bcgroup/concrete_group.hpp"
#include "bcgroup/subgroup.hpp"
#include "bcgroup/table.hpp"

namespace bcgroup {

/// images[i] is the image of elements[i].
struct PermutationRepresentation {
  std::vector<PoolUpdate> elements;
  std::vector<Permutation> images;
};

/// g maps to x -> x*g on enumeration indices, a homomorphism under
/// left-to-right composition. Throws GroupTooLarge.
PermutationRepresentation cayley_embedding(const GroupParams& params, std::uint64_t cap = kDefaultCap);
PermutationRepresentation cayley_embedding(const ConcreteGroup& group);

/// g maps to the permutation it induces on all r^n configurations (indexed
/// by rank_of). Throws StateSpaceTooLarge when r^n > cap, GroupTooLarge when
/// (r!)^n > cap.
PermutationRepresentation action_on_configurations(const GroupParams& params,
                                                   std::uint64_t cap = kDefaultCap);
PermutationRepresentation action_on_configurations(const ConcreteGroup& group, std::uint64_t cap);

/// All nodes carry the same pool permutation; order r!. Throws GroupTooLarge for r > 8.
Subgroup uniform_relabel_subgroup(const GroupParams& params);

/// All permutations of m points in lexicographic order, composed left to
/// right. Throws GroupTooLarge when m! > cap.
MultiplicationTable symmetric_group_table(std::size_t m, std::uint64_t cap = kDefaultCap);
MultiplicationTable cyclic_group_table(std::size_t m);
/// Table over the subgroup's element order.
MultiplicationTable to_table(const Subgroup& g);

inline constexpr std::size_t kExhaustiveIsomorphismLimit = 24;
inline constexpr std::size_t kScreeningIsomorphismLimit = 200;

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };

/// Exhaustive bijection search pruned by element orders. Sizes that differ
/// give false; sizes above kExhaustiveIsomorphismLimit throw TooLargeForExhaustive.
bool is_isomorphic_small(const MultiplicationTable& a, const MultiplicationTable& b);
/// Compares order profiles and commutativity only: NotIsomorphic on a
/// mismatch, Unknown otherwise. Throws TooLargeForExhaustive above 200.
IsoVerdict screen_isomorphism(const MultiplicationTable& a, const MultiplicationTable& b);
/// Exhaustive when small enough, screening otherwise.
IsoVerdict compare_groups(const MultiplicationTable& a, const MultiplicationTable& b);

std::string to_string(IsoVerdict v);
/// Space-separated images, e.g. "1 0 2".
std::string one_line(const Permutation& p);
/// One row per line, entries separated by spaces.
std::string to_text(const MultiplicationTable& t);

}  // namespace bcgroup
