#include "bcgroup/representation.hpp"

#include <algorithm>
#include <sstream>

#include "bcgroup/kernels.hpp"

namespace bcgroup {

PermutationRepresentation cayley_embedding(const ConcreteGroup& group) {
  const auto& t = group.table();
  PermutationRepresentation out{group.elements(), {}};
  out.images.reserve(t.size());
  for (Index g = 0; g < t.size(); ++g) {
    std::vector<Index> m(t.size());
    for (Index x = 0; x < t.size(); ++x) m[x] = t.mul(x, g);
    out.images.emplace_back(std::move(m));
  }
  return out;
}

PermutationRepresentation cayley_embedding(const GroupParams& params, std::uint64_t cap) {
  return cayley_embedding(ConcreteGroup::enumerate(params, cap));
}

PermutationRepresentation action_on_configurations(const ConcreteGroup& group, std::uint64_t cap) {
  const auto& params = group.params();
  const auto states = configuration_count(params);
  if (!states || *states > cap) {
    fail(ErrorKind::StateSpaceTooLarge, "r^n configurations exceed cap " + std::to_string(cap));
  }
  std::vector<Configuration> configs;
  configs.reserve(*states);
  for (std::uint64_t c = 0; c < *states; ++c) configs.push_back(configuration_at(params, c));

  PermutationRepresentation out{group.elements(), {}};
  out.images.reserve(group.size());
  for (const auto& g : group.elements()) {
    std::vector<Index> m(configs.size());
    for (std::size_t c = 0; c < configs.size(); ++c) {
      m[c] = static_cast<Index>(rank_of(apply(g, configs[c])));
    }
    out.images.emplace_back(std::move(m));
  }
  return out;
}

PermutationRepresentation action_on_configurations(const GroupParams& params, std::uint64_t cap) {
  const auto states = configuration_count(params);
  if (!states || *states > cap) {
    fail(ErrorKind::StateSpaceTooLarge, "r^n configurations exceed cap " + std::to_string(cap));
  }
  return action_on_configurations(ConcreteGroup::enumerate(params, cap), cap);
}

Subgroup uniform_relabel_subgroup(const GroupParams& params) {
  const std::size_t r = params.pool_count();
  if (r > 8) fail(ErrorKind::GroupTooLarge, "relabel subgroup listing limited to r <= 8");
  std::uint64_t count = 1;
  for (std::uint64_t k = 2; k <= r; ++k) count *= k;
  std::vector<PoolUpdate> elements;
  elements.reserve(count);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    elements.emplace_back(params, std::vector<PoolPermutation>(params.node_count(),
                                                               Permutation::unrank(r, rank)));
  }
  return Subgroup(params, std::move(elements));
}

MultiplicationTable symmetric_group_table(std::size_t m, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::uint64_t k = 2; k <= m; ++k) {
    count *= k;
    if (count > cap) fail(ErrorKind::GroupTooLarge, std::to_string(m) + "! exceeds cap");
  }
  if (count > cap) fail(ErrorKind::GroupTooLarge, std::to_string(m) + "! exceeds cap");
  std::vector<Permutation> perms;
  perms.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) perms.push_back(Permutation::unrank(m, k));
  std::vector<Index> cells;
  cells.reserve(count * count);
  for (const auto& a : perms) {
    for (const auto& b : perms) cells.push_back(static_cast<Index>(a.then(b).rank()));
  }
  return MultiplicationTable(count, std::move(cells));
}

MultiplicationTable cyclic_group_table(std::size_t m) {
  std::vector<Index> cells;
  cells.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) cells.push_back(static_cast<Index>((a + b) % m));
  }
  return MultiplicationTable(m, std::move(cells));
}

MultiplicationTable to_table(const Subgroup& g) {
  const auto& elements = g.elements();
  return kernels::build_table(elements, [&elements](const PoolUpdate& x) {
    auto it = std::lower_bound(elements.begin(), elements.end(), x,
                               [](const PoolUpdate& a, const PoolUpdate& b) { return canonical_less(a, b); });
    if (it == elements.end() || *it != x) fail(ErrorKind::InvalidArgument, "subgroup is not closed");
    return static_cast<Index>(it - elements.begin());
  });
}

IsoVerdict screen_isomorphism(const MultiplicationTable& a, const MultiplicationTable& b) {
  if (std::max(a.size(), b.size()) > kScreeningIsomorphismLimit) {
    fail(ErrorKind::TooLargeForExhaustive, "screening limited to order <= 200");
  }
  if (a.size() != b.size() || a.order_profile() != b.order_profile() ||
      a.is_abelian() != b.is_abelian()) {
    return IsoVerdict::NotIsomorphic;
  }
  return IsoVerdict::Unknown;
}

bool is_isomorphic_small(const MultiplicationTable& a, const MultiplicationTable& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > kExhaustiveIsomorphismLimit) {
    fail(ErrorKind::TooLargeForExhaustive,
         "exhaustive isomorphism limited to order <= " + std::to_string(kExhaustiveIsomorphismLimit));
  }
  return kernels::find_isomorphism(a, b).has_value();
}

IsoVerdict compare_groups(const MultiplicationTable& a, const MultiplicationTable& b) {
  if (a.size() != b.size()) return IsoVerdict::NotIsomorphic;
  if (a.size() <= kExhaustiveIsomorphismLimit) {
    return is_isomorphic_small(a, b) ? IsoVerdict::Isomorphic : IsoVerdict::NotIsomorphic;
  }
  return screen_isomorphism(a, b);
}

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NotIsomorphic: return "not-isomorphic";
    case IsoVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string one_line(const Permutation& p) {
  std::string out;
  for (auto v : p.mapping()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string to_text(const MultiplicationTable& t) {
  std::ostringstream os;
  for (Index a = 0; a < t.size(); ++a) {
    for (Index b = 0; b < t.size(); ++b) os << (b ? " " : "") << t.mul(a, b);
    os << '\n';
  }
  return os.str();
}

}  // namespace bcgroup
