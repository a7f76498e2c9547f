#pragma once

#include <cstdint>
#include <vector>

#include "bcgroup/core.hpp"
#include "bcgroup/table.hpp"

namespace bcgroup {

inline constexpr std::uint64_t kDefaultCap = 200;

/// A fully enumerated group: element i is element_at(params, i), together
/// with its multiplication table.
class ConcreteGroup {
 public:
  /// Throws GroupTooLarge when (r!)^n exceeds cap.
  static ConcreteGroup enumerate(const GroupParams& params, std::uint64_t cap = kDefaultCap);

  const GroupParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<PoolUpdate>& elements() const noexcept { return elements_; }
  const PoolUpdate& element(Index i) const { return elements_[i]; }
  Index index_of(const PoolUpdate& a) const { return static_cast<Index>(rank_of(a)); }
  const MultiplicationTable& table() const noexcept { return table_; }

 private:
  ConcreteGroup(GroupParams params, std::vector<PoolUpdate> elements, MultiplicationTable table)
      : params_(params), elements_(std::move(elements)), table_(std::move(table)) {}

  GroupParams params_;
  std::vector<PoolUpdate> elements_;
  MultiplicationTable table_;
};

}  // namespace bcgroup
