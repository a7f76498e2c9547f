#pragma once

// Exhaustive-search kernels. The functions in bcgroup::kernels are OpenMP
// parallel; bcgroup::kernels::serial holds the single-threaded reference
// versions used by the tests and the benchmark. Results never depend on the
// number of threads.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bcgroup/core.hpp"
#include "bcgroup/table.hpp"

namespace bcgroup::kernels {

using IndexOf = std::function<Index(const PoolUpdate&)>;

/// Failure counts per law over a batch of random trials.
struct AxiomTally {
  std::uint64_t trials = 0;
  std::uint64_t associativity = 0;
  std::uint64_t identity = 0;
  std::uint64_t inverse = 0;
  std::uint64_t double_inverse = 0;
  std::uint64_t action = 0;

  bool ok() const noexcept {
    return associativity == 0 && identity == 0 && inverse == 0 && double_inverse == 0 && action == 0;
  }
  bool operator==(const AxiomTally&) const = default;
};

/// Seed of trial t; independent of how trials are split across workers.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

MultiplicationTable build_table(std::span<const PoolUpdate> elements, const IndexOf& index_of);
AxiomTally check_axioms(const GroupParams& params, std::uint64_t trials, std::uint64_t seed);
/// images[mul(a,b)] == images[a] then images[b] for every pair.
bool preserves_composition(const MultiplicationTable& table, std::span<const Permutation> images);
bool pairwise_distinct(std::span<const Permutation> images);
/// g h g^-1 in h for all g, h.
bool is_normal(const MultiplicationTable& table, const ElementSet& h);
/// Every subgroup once, sorted by ElementSet::canonical_less. Built by
/// extending each known subgroup with one cyclic subgroup at a time.
std::vector<ElementSet> subgroup_lattice(const MultiplicationTable& table);
/// A bijection phi with phi(a*b) = phi(a)*phi(b), or nullopt.
std::optional<std::vector<Index>> find_isomorphism(const MultiplicationTable& a,
                                                   const MultiplicationTable& b);

namespace serial {

MultiplicationTable build_table(std::span<const PoolUpdate> elements, const IndexOf& index_of);
AxiomTally check_axioms(const GroupParams& params, std::uint64_t trials, std::uint64_t seed);
bool preserves_composition(const MultiplicationTable& table, std::span<const Permutation> images);
bool pairwise_distinct(std::span<const Permutation> images);
bool is_normal(const MultiplicationTable& table, const ElementSet& h);
/// Pairwise joins of all known subgroups until nothing new appears.
std::vector<ElementSet> subgroup_lattice(const MultiplicationTable& table);
std::optional<std::vector<Index>> find_isomorphism(const MultiplicationTable& a,
                                                   const MultiplicationTable& b);

}  // namespace serial

}  // namespace bcgroup::kernels
