#include "bcgroup/concrete_group.hpp"

#include "bcgroup/kernels.hpp"

namespace bcgroup {

ConcreteGroup ConcreteGroup::enumerate(const GroupParams& params, std::uint64_t cap) {
  std::vector<PoolUpdate> elements;
  for (auto&& a : enumerate_group(params, cap)) elements.push_back(std::move(a));
  auto table = kernels::build_table(elements, [](const PoolUpdate& a) {
    return static_cast<Index>(rank_of(a));
  });
  return ConcreteGroup(params, std::move(elements), std::move(table));
}

}  // namespace bcgroup
