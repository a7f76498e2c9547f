#include "bcgroup/subgroup.hpp"

#include <algorithm>
#include <set>

#include "bcgroup/kernels.hpp"
#include "bcgroup/order.hpp"

namespace bcgroup {

namespace {

struct CanonicalLess {
  bool operator()(const PoolUpdate& a, const PoolUpdate& b) const { return canonical_less(a, b); }
};

void require_prime_divisor(const GroupParams& params, std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  // p divides (r!)^n exactly when p <= r.
  if (p > params.pool_count()) {
    fail(ErrorKind::PrimeNotPresent,
         std::to_string(p) + " does not divide " + concrete_order(params).str());
  }
}

bool is_power_of(std::uint64_t v, std::uint64_t p) {
  while (v % p == 0) v /= p;
  return v == 1;
}

/// Closure inside the permutations of one point set; nullopt once it grows past limit.
std::optional<std::set<Permutation>> permutation_closure(const std::vector<Permutation>& gens,
                                                         std::size_t points, std::size_t limit) {
  std::set<Permutation> out{Permutation::identity(points)};
  std::vector<Permutation> frontier{Permutation::identity(points)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = x.then(g);
        if (out.insert(y).second) {
          if (out.size() > limit) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

PoolUpdate on_node(const GroupParams& params, std::size_t node, const Permutation& p) {
  std::vector<PoolPermutation> perms(params.node_count(), Permutation::identity(params.pool_count()));
  perms[node] = p;
  return PoolUpdate(params, std::move(perms));
}

}  // namespace

Subgroup::Subgroup(GroupParams params, std::vector<PoolUpdate> elements)
    : params_(params), elements_(std::move(elements)) {
  for (const auto& a : elements_) {
    if (!(a.params() == params_)) fail(ErrorKind::ParamsMismatch, "subgroup element from another group");
  }
  std::sort(elements_.begin(), elements_.end(), CanonicalLess{});
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(const PoolUpdate& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a, CanonicalLess{});
}

bool is_closed_subgroup(const Subgroup& h) {
  if (!h.contains(identity(h.params()))) return false;
  for (const auto& a : h.elements()) {
    if (!h.contains(invert(a))) return false;
    for (const auto& b : h.elements()) {
      if (!h.contains(compose(a, b))) return false;
    }
  }
  return true;
}

Subgroup generate_subgroup(const GroupParams& params, const std::vector<PoolUpdate>& generators,
                           std::uint64_t cap) {
  std::vector<PoolUpdate> gens;
  for (const auto& g : generators) {
    if (!(g.params() == params)) fail(ErrorKind::ParamsMismatch, "generator from another group");
    gens.push_back(g);
    gens.push_back(invert(g));
  }
  std::set<PoolUpdate, CanonicalLess> seen{identity(params)};
  std::vector<PoolUpdate> frontier{identity(params)};
  while (!frontier.empty()) {
    std::vector<PoolUpdate> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = compose(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            fail(ErrorKind::ClosureExceedsCap, "closure exceeds cap " + std::to_string(cap));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup(params, {seen.begin(), seen.end()});
}

Subgroup cyclic_subgroup(const PoolUpdate& a) {
  std::vector<PoolUpdate> powers{identity(a.params())};
  for (auto x = a; !is_identity(x); x = compose(x, a)) powers.push_back(x);
  return Subgroup(a.params(), std::move(powers));
}

ElementSet to_element_set(const ConcreteGroup& group, const Subgroup& h) {
  if (!(h.params() == group.params())) fail(ErrorKind::ParamsMismatch, "subgroup of another group");
  ElementSet out(group.size());
  for (const auto& a : h.elements()) out.insert(group.index_of(a));
  return out;
}

Subgroup to_subgroup(const ConcreteGroup& group, const ElementSet& s) {
  std::vector<PoolUpdate> elements;
  for (Index i : s.indices()) elements.push_back(group.element(i));
  return Subgroup(group.params(), std::move(elements));
}

std::vector<Subgroup> all_subgroups(const GroupParams& params, std::uint64_t cap) {
  return subgroup_lattice(params, cap).subgroups;
}

SubgroupLattice subgroup_lattice(const GroupParams& params, std::uint64_t cap) {
  const auto group = ConcreteGroup::enumerate(params, cap);
  const auto sets = kernels::subgroup_lattice(group.table());
  SubgroupLattice out;
  for (const auto& s : sets) out.subgroups.push_back(to_subgroup(group, s));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].count() < sets[j].count() && sets[i].is_subset_of(sets[j])) {
        out.containment.emplace_back(i, j);
      }
    }
  }
  return out;
}

bool is_normal(const Subgroup& h, std::uint64_t cap) {
  const auto group = ConcreteGroup::enumerate(h.params(), cap);
  return kernels::is_normal(group.table(), to_element_set(group, h));
}

std::vector<ElementSet> coset_partition(const MultiplicationTable& table, const ElementSet& h,
                                        CosetSide side) {
  const auto members = h.indices();
  ElementSet covered(table.size());
  std::vector<ElementSet> out;
  for (Index g = 0; g < table.size(); ++g) {
    if (covered.contains(g)) continue;
    ElementSet coset(table.size());
    for (Index x : members) {
      const Index y = side == CosetSide::Left ? table.mul(g, x) : table.mul(x, g);
      coset.insert(y);
      covered.insert(y);
    }
    out.push_back(std::move(coset));
  }
  return out;
}

CosetPartition cosets(const Subgroup& h, CosetSide side, std::uint64_t cap) {
  const auto group = ConcreteGroup::enumerate(h.params(), cap);
  CosetPartition out{h, side, {}};
  for (const auto& c : coset_partition(group.table(), to_element_set(group, h), side)) {
    std::vector<PoolUpdate> elements;
    for (Index i : c.indices()) elements.push_back(group.element(i));
    out.cosets.push_back(std::move(elements));
  }
  return out;
}

std::vector<Permutation> symmetric_sylow(std::size_t points, std::uint64_t p) {
  if (points > 8) fail(ErrorKind::GroupTooLarge, "Sylow search limited to r <= 8 pools");
  std::uint64_t total = 1;
  for (std::uint64_t k = 2; k <= points; ++k) total *= k;
  std::uint64_t target = 1;
  while (total % p == 0) {
    total /= p;
    target *= p;
  }

  // Every p-subgroup lies in a Sylow p-subgroup, so while H is too small some
  // p-element extends it to a larger p-group; repeat passes until none does.
  std::vector<Permutation> gens;
  std::set<Permutation> h{Permutation::identity(points)};
  std::uint64_t all = 1;
  for (std::uint64_t k = 2; k <= points; ++k) all *= k;
  bool grew = true;
  while (h.size() < target && grew) {
    grew = false;
    for (std::uint64_t rank = 0; rank < all && h.size() < target; ++rank) {
      auto x = Permutation::unrank(points, rank);
      if (h.count(x) || !is_power_of(x.order(), p)) continue;
      auto candidate = gens;
      candidate.push_back(x);
      auto k = permutation_closure(candidate, points, target);
      if (k && is_power_of(k->size(), p)) {
        gens = std::move(candidate);
        h = std::move(*k);
        grew = true;
      }
    }
  }
  return {h.begin(), h.end()};
}

Subgroup sylow_subgroup(const GroupParams& params, std::uint64_t p, std::uint64_t cap) {
  require_prime_divisor(params, p);
  const auto local = symmetric_sylow(params.pool_count(), p);

  BigInt listing = boost::multiprecision::pow(BigInt(local.size()), params.node_count());
  if (listing > cap) {
    fail(ErrorKind::ClosureExceedsCap,
         "Sylow subgroup of order " + listing.str() + " exceeds cap " + std::to_string(cap));
  }

  // Direct product: mixed-radix walk over one local element per node.
  std::vector<PoolUpdate> product;
  const auto total = static_cast<std::uint64_t>(listing);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<PoolPermutation> perms;
    auto rest = k;
    for (std::uint32_t node = 0; node < params.node_count(); ++node) {
      perms.push_back(local[rest % local.size()]);
      rest /= local.size();
    }
    product.emplace_back(params, std::move(perms));
  }
  Subgroup out(params, std::move(product));

  std::vector<PoolUpdate> gens;
  for (std::uint32_t node = 0; node < params.node_count(); ++node) {
    for (const auto& g : local) {
      if (!g.is_identity()) gens.push_back(on_node(params, node, g));
    }
  }
  if (generate_subgroup(params, gens, cap) != out) {
    fail(ErrorKind::InvariantViolation, "Sylow product is not closed");
  }
  return out;
}

PoolUpdate cauchy_witness(const GroupParams& params, std::uint64_t p, std::uint64_t cap) {
  require_prime_divisor(params, p);
  const auto size = enumeration_size(params);
  const std::uint64_t limit = size ? std::min(*size, cap) : cap;
  for (std::uint64_t rank = 0; rank < limit; ++rank) {
    auto a = element_at(params, rank);
    if (element_order(a) == p) return a;
  }
  fail(ErrorKind::GroupTooLarge, "no order-" + std::to_string(p) + " element within the first " +
                                     std::to_string(limit) + " elements");
}

}  // namespace bcgroup
