#pragma once

// Index-level view of a finite group: a Cayley (multiplication) table plus a
// bitset type for subsets of its elements.

#include <cstdint>
#include <span>
#include <vector>

#include "bcgroup/core.hpp"

namespace bcgroup {

/// Fixed-universe bitset over element indices 0..size-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Index i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  /// Returns true if i was not present.
  bool insert(Index i) {
    auto& w = words_[i / 64];
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    const bool fresh = !(w & bit);
    w |= bit;
    return fresh;
  }
  std::size_t count() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  /// Members in increasing order.
  std::vector<Index> indices() const;

  bool operator==(const ElementSet&) const = default;
  /// Storage order; only meaningful for use as a map key.
  auto operator<=>(const ElementSet&) const = default;
  /// Orders by size, then by the sorted member list.
  bool canonical_less(const ElementSet& other) const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row a, column b holds the index of a * b (a acts first). Every row and
/// column is a permutation; element `identity()` is a two-sided identity.
class MultiplicationTable {
 public:
  /// Validates the Latin-square and identity invariants (InvalidArgument).
  MultiplicationTable(std::size_t size, std::vector<Index> cells);

  std::size_t size() const noexcept { return size_; }
  Index mul(Index a, Index b) const { return cells_[static_cast<std::size_t>(a) * size_ + b]; }
  std::span<const Index> row(Index a) const {
    return {cells_.data() + static_cast<std::size_t>(a) * size_, size_};
  }
  std::span<const Index> cells() const noexcept { return cells_; }
  Index identity() const noexcept { return identity_; }
  Index inverse(Index a) const { return inverse_[a]; }
  std::uint64_t order(Index a) const { return order_[a]; }
  /// Sorted multiset of element orders.
  std::vector<std::uint64_t> order_profile() const;
  bool is_abelian() const;

  /// Smallest subgroup containing `generators`.
  ElementSet closure(std::span<const Index> generators) const;
  /// {a^0, a^1, ...}.
  ElementSet cyclic(Index a) const;
  bool is_subgroup(const ElementSet& s) const;

  bool operator==(const MultiplicationTable& other) const { return cells_ == other.cells_; }

 private:
  std::size_t size_;
  std::vector<Index> cells_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> order_;
};

}  // namespace bcgroup
