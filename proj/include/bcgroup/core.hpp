#pragma once

// Group elements of the pool-update group: one pool permutation per node,
// composed left to right (the first operand acts first).

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "bcgroup/error.hpp"

namespace bcgroup {

using Index = std::uint32_t;

/// Number of nodes and number of pools (pool 0 is the singleton pool).
class GroupParams {
 public:
  GroupParams(std::uint32_t node_count, std::uint32_t pool_count);

  std::uint32_t node_count() const noexcept { return node_count_; }
  std::uint32_t pool_count() const noexcept { return pool_count_; }

  bool operator==(const GroupParams&) const = default;

 private:
  std::uint32_t node_count_;
  std::uint32_t pool_count_;
};

/// A bijection on {0..m-1}; position i holds the image of point i.
class Permutation {
 public:
  /// Throws NotABijection on a duplicate or out-of-range entry.
  explicit Permutation(std::vector<Index> mapping);

  static Permutation identity(std::size_t size);
  /// The permutation of rank `rank` in lexicographic order of mappings.
  static Permutation unrank(std::size_t size, std::uint64_t rank);

  std::size_t size() const noexcept { return mapping_.size(); }
  Index operator()(Index point) const { return mapping_[point]; }
  std::span<const Index> mapping() const noexcept { return mapping_; }

  /// `*this` first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Cycle lengths including fixed points, in order of each cycle's least point.
  std::vector<std::size_t> cycle_lengths() const;
  std::uint64_t order() const;
  /// Lexicographic rank among all permutations of size(); size() <= 20.
  std::uint64_t rank() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Index> mapping) : mapping_(std::move(mapping)) {}

  std::vector<Index> mapping_;
};

/// A relabeling of pool indices for one node.
using PoolPermutation = Permutation;

/// Validated constructor accepting arbitrary integers (e.g. parsed input).
PoolPermutation make_pool_permutation(std::span<const std::int64_t> mapping);

/// A group element: node k moves from pool i to pool per_node(k)(i).
class PoolUpdate {
 public:
  PoolUpdate(GroupParams params, std::vector<PoolPermutation> per_node);

  const GroupParams& params() const noexcept { return params_; }
  const std::vector<PoolPermutation>& per_node() const noexcept { return per_node_; }
  const PoolPermutation& node(std::size_t k) const { return per_node_[k]; }

  bool operator==(const PoolUpdate&) const = default;

 private:
  GroupParams params_;
  std::vector<PoolPermutation> per_node_;
};

/// Assignment node -> current pool.
class Configuration {
 public:
  Configuration(GroupParams params, std::vector<Index> assignment);

  const GroupParams& params() const noexcept { return params_; }
  const std::vector<Index>& assignment() const noexcept { return assignment_; }
  Index pool_of(std::size_t node) const { return assignment_[node]; }

  bool operator==(const Configuration&) const = default;

 private:
  GroupParams params_;
  std::vector<Index> assignment_;
};

PoolUpdate identity(const GroupParams& params);
/// Node-wise `a` then `b`. Throws ParamsMismatch.
PoolUpdate compose(const PoolUpdate& a, const PoolUpdate& b);
PoolUpdate invert(const PoolUpdate& a);
/// k-fold composition; negative k uses the inverse.
PoolUpdate power(const PoolUpdate& a, std::int64_t k);
/// Least m >= 1 with a^m = e: the lcm of all per-node cycle lengths.
std::uint64_t element_order(const PoolUpdate& a);
bool is_identity(const PoolUpdate& a) noexcept;
/// Throws ParamsMismatch.
Configuration apply(const PoolUpdate& a, const Configuration& cfg);

/// Total order matching enumeration order: the last node is most
/// significant, each node's permutation compared lexicographically.
bool canonical_less(const PoolUpdate& a, const PoolUpdate& b);

/// Number of elements (r!)^n, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> enumeration_size(const GroupParams& params);
/// Element with enumeration index `rank`: node k carries the permutation of
/// lexicographic rank (rank / (r!)^k) mod r!, so node 0 varies fastest.
PoolUpdate element_at(const GroupParams& params, std::uint64_t rank);
/// Inverse of element_at. Requires enumeration_size(params) to exist.
std::uint64_t rank_of(const PoolUpdate& a);

/// Throws GroupTooLarge unless enumeration_size(params) <= cap.
std::uint64_t checked_enumeration_size(const GroupParams& params, std::uint64_t cap);

/// Every element exactly once, in enumeration order. Lazy.
inline auto enumerate_group(const GroupParams& params, std::uint64_t cap) {
  const auto size = checked_enumeration_size(params, cap);
  return std::views::iota(std::uint64_t{0}, size) |
         std::views::transform([params](std::uint64_t k) { return element_at(params, k); });
}

/// Deterministic stream of uniformly random elements.
class ElementSampler {
 public:
  ElementSampler(GroupParams params, std::uint64_t seed) : params_(params), rng_(seed) {}

  PoolUpdate next();
  Configuration next_configuration();
  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  GroupParams params_;
  std::mt19937_64 rng_;
};

/// Same seed, same element; each node's permutation is an unbiased shuffle.
PoolUpdate random_element(const GroupParams& params, std::uint64_t seed);

/// r^n, or nullopt on overflow.
std::optional<std::uint64_t> configuration_count(const GroupParams& params);
/// Node 0 is the least significant base-r digit.
Configuration configuration_at(const GroupParams& params, std::uint64_t rank);
std::uint64_t rank_of(const Configuration& cfg);

std::string to_string(const Permutation& p);
std::string to_string(const PoolUpdate& a);

}  // namespace bcgroup
