#include "bcgroup/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>

namespace bcgroup::kernels {

namespace {

struct GenSet {
  ElementSet members;
  std::vector<Index> gens;
};

std::vector<ElementSet> sorted_members(const std::map<ElementSet, std::vector<Index>>& found) {
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (const auto& [set, gens] : found) out.push_back(set);
  std::sort(out.begin(), out.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.canonical_less(b); });
  return out;
}

/// Trivial subgroup plus each distinct cyclic subgroup with its first generator.
std::vector<GenSet> cyclic_subgroups(const MultiplicationTable& table) {
  std::vector<GenSet> out;
  std::map<ElementSet, std::size_t> seen;
  for (Index a = 0; a < table.size(); ++a) {
    ElementSet c = table.cyclic(a);
    if (seen.emplace(c, out.size()).second) {
      std::vector<Index> gens;
      if (a != table.identity()) gens.push_back(a);
      out.push_back({std::move(c), std::move(gens)});
    }
  }
  return out;
}

std::vector<Index> merged(const std::vector<Index>& a, const std::vector<Index>& b) {
  std::vector<Index> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- isomorphism search ----------------------------------------------------

/// Greedy generating set, preferring elements of large order.
std::vector<Index> generating_set(const MultiplicationTable& t) {
  std::vector<Index> candidates(t.size());
  for (Index i = 0; i < t.size(); ++i) candidates[i] = i;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Index x, Index y) { return t.order(x) > t.order(y); });
  std::vector<Index> gens;
  ElementSet span = t.closure(gens);
  for (Index x : candidates) {
    if (span.count() == t.size()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = t.closure(gens);
  }
  return gens;
}

/// Extends generator images to a map on all of `a`; nullopt if inconsistent
/// or not injective.
std::optional<std::vector<Index>> extend(const MultiplicationTable& a, const MultiplicationTable& b,
                                         std::span<const Index> gens, std::span<const Index> images) {
  constexpr Index kUnset = std::numeric_limits<Index>::max();
  std::vector<Index> phi(a.size(), kUnset);
  std::vector<bool> used(b.size(), false);
  phi[a.identity()] = b.identity();
  used[b.identity()] = true;
  std::vector<Index> frontier{a.identity()};
  while (!frontier.empty()) {
    std::vector<Index> next;
    for (Index x : frontier) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Index y = a.mul(x, gens[i]);
        const Index image = b.mul(phi[x], images[i]);
        if (phi[y] == kUnset) {
          if (used[image]) return std::nullopt;
          phi[y] = image;
          used[image] = true;
          next.push_back(y);
        } else if (phi[y] != image) {
          return std::nullopt;
        }
      }
    }
    frontier = std::move(next);
  }
  return phi;
}

bool assign(const MultiplicationTable& a, const MultiplicationTable& b, std::span<const Index> gens,
            std::vector<Index>& images, std::optional<std::vector<Index>>& result) {
  const std::size_t depth = images.size();
  if (depth == gens.size()) {
    result = extend(a, b, gens, images);
    return result.has_value();
  }
  for (Index c = 0; c < b.size(); ++c) {
    if (b.order(c) != a.order(gens[depth])) continue;
    images.push_back(c);
    if (assign(a, b, gens, images, result)) return true;
    images.pop_back();
  }
  return false;
}

bool screen_passes(const MultiplicationTable& a, const MultiplicationTable& b) {
  return a.size() == b.size() && a.order_profile() == b.order_profile();
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

namespace {

void run_trial(const GroupParams& params, std::uint64_t seed, std::uint64_t t, AxiomTally& tally) {
  ElementSampler sampler(params, trial_seed(seed, t));
  const auto a = sampler.next();
  const auto b = sampler.next();
  const auto c = sampler.next();
  const auto cfg = sampler.next_configuration();
  const auto e = identity(params);
  if (compose(compose(a, b), c) != compose(a, compose(b, c))) ++tally.associativity;
  if (compose(e, a) != a || compose(a, e) != a) ++tally.identity;
  const auto inv = invert(a);
  if (compose(a, inv) != e || compose(inv, a) != e) ++tally.inverse;
  if (invert(inv) != a) ++tally.double_inverse;
  if (apply(compose(a, b), cfg) != apply(b, apply(a, cfg))) ++tally.action;
  ++tally.trials;
}

}  // namespace

// ---- parallel --------------------------------------------------------------

MultiplicationTable build_table(std::span<const PoolUpdate> elements, const IndexOf& index_of) {
  const auto n = static_cast<std::int64_t>(elements.size());
  std::vector<Index> cells(elements.size() * elements.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      cells[static_cast<std::size_t>(i * n + j)] =
          index_of(compose(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]));
    }
  }
  return MultiplicationTable(elements.size(), std::move(cells));
}

AxiomTally check_axioms(const GroupParams& params, std::uint64_t trials, std::uint64_t seed) {
  std::uint64_t assoc = 0, ident = 0, inv = 0, dinv = 0, action = 0, done = 0;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : assoc, ident, inv, dinv, action, done)
  for (std::int64_t t = 0; t < n; ++t) {
    AxiomTally local;
    run_trial(params, seed, static_cast<std::uint64_t>(t), local);
    assoc += local.associativity;
    ident += local.identity;
    inv += local.inverse;
    dinv += local.double_inverse;
    action += local.action;
    done += local.trials;
  }
  return {done, assoc, ident, inv, dinv, action};
}

bool preserves_composition(const MultiplicationTable& table, std::span<const Permutation> images) {
  const auto n = static_cast<std::int64_t>(table.size());
  bool ok = images.size() == table.size();
  if (!ok) return false;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      const auto ia = static_cast<Index>(a);
      const auto ib = static_cast<Index>(b);
      ok = ok && images[table.mul(ia, ib)] == images[ia].then(images[ib]);
    }
  }
  return ok;
}

bool pairwise_distinct(std::span<const Permutation> images) {
  const auto n = static_cast<std::int64_t>(images.size());
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = a + 1; b < n; ++b) {
      ok = ok && images[static_cast<std::size_t>(a)] != images[static_cast<std::size_t>(b)];
    }
  }
  return ok;
}

bool is_normal(const MultiplicationTable& table, const ElementSet& h) {
  const auto members = h.indices();
  const auto n = static_cast<std::int64_t>(table.size());
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t g = 0; g < n; ++g) {
    const auto gi = static_cast<Index>(g);
    for (Index x : members) ok = ok && h.contains(table.mul(table.mul(gi, x), table.inverse(gi)));
  }
  return ok;
}

std::vector<ElementSet> subgroup_lattice(const MultiplicationTable& table) {
  const auto cyclics = cyclic_subgroups(table);
  std::map<ElementSet, std::vector<Index>> found;
  std::vector<GenSet> frontier;
  for (const auto& c : cyclics) {
    found.emplace(c.members, c.gens);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    const auto width = static_cast<std::int64_t>(frontier.size());
    std::vector<std::vector<GenSet>> produced(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < width; ++i) {
      const auto& h = frontier[static_cast<std::size_t>(i)];
      auto& out = produced[static_cast<std::size_t>(i)];
      for (const auto& c : cyclics) {
        if (c.gens.empty() || h.members.contains(c.gens.front())) continue;
        auto gens = merged(h.gens, c.gens);
        out.push_back({table.closure(gens), std::move(gens)});
      }
    }
    // Merge in frontier order so the kept generator lists do not depend on scheduling.
    std::vector<GenSet> next;
    for (auto& batch : produced) {
      for (auto& k : batch) {
        if (found.emplace(k.members, k.gens).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return sorted_members(found);
}

std::optional<std::vector<Index>> find_isomorphism(const MultiplicationTable& a,
                                                   const MultiplicationTable& b) {
  if (!screen_passes(a, b)) return std::nullopt;
  const auto gens = generating_set(a);
  if (gens.empty()) return std::vector<Index>{b.identity()};

  std::vector<Index> first;
  for (Index c = 0; c < b.size(); ++c) {
    if (b.order(c) == a.order(gens.front())) first.push_back(c);
  }
  std::vector<std::optional<std::vector<Index>>> results(first.size());
  std::atomic<std::size_t> best{first.size()};
  const auto width = static_cast<std::int64_t>(first.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < width; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k > best.load()) continue;
    std::vector<Index> images{first[k]};
    std::optional<std::vector<Index>> found;
    if (assign(a, b, gens, images, found)) {
      results[k] = std::move(found);
      std::size_t cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
    }
  }
  // The lowest successful first-image wins, matching the serial search.
  for (auto& r : results) {
    if (r) return std::move(r);
  }
  return std::nullopt;
}

// ---- serial ----------------------------------------------------------------

namespace serial {

MultiplicationTable build_table(std::span<const PoolUpdate> elements, const IndexOf& index_of) {
  std::vector<Index> cells;
  cells.reserve(elements.size() * elements.size());
  for (const auto& x : elements) {
    for (const auto& y : elements) cells.push_back(index_of(compose(x, y)));
  }
  return MultiplicationTable(elements.size(), std::move(cells));
}

AxiomTally check_axioms(const GroupParams& params, std::uint64_t trials, std::uint64_t seed) {
  AxiomTally tally;
  for (std::uint64_t t = 0; t < trials; ++t) run_trial(params, seed, t, tally);
  return tally;
}

bool preserves_composition(const MultiplicationTable& table, std::span<const Permutation> images) {
  if (images.size() != table.size()) return false;
  for (Index a = 0; a < table.size(); ++a) {
    for (Index b = 0; b < table.size(); ++b) {
      if (images[table.mul(a, b)] != images[a].then(images[b])) return false;
    }
  }
  return true;
}

bool pairwise_distinct(std::span<const Permutation> images) {
  for (std::size_t a = 0; a < images.size(); ++a) {
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      if (images[a] == images[b]) return false;
    }
  }
  return true;
}

bool is_normal(const MultiplicationTable& table, const ElementSet& h) {
  const auto members = h.indices();
  for (Index g = 0; g < table.size(); ++g) {
    for (Index x : members) {
      if (!h.contains(table.mul(table.mul(g, x), table.inverse(g)))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> subgroup_lattice(const MultiplicationTable& table) {
  std::map<ElementSet, std::vector<Index>> found;
  std::vector<GenSet> known;
  for (auto& c : cyclic_subgroups(table)) {
    if (found.emplace(c.members, c.gens).second) known.push_back(std::move(c));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = known.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (known[j].members.is_subset_of(known[i].members) ||
            known[i].members.is_subset_of(known[j].members)) {
          continue;
        }
        auto gens = merged(known[i].gens, known[j].gens);
        auto members = table.closure(gens);
        if (found.emplace(members, gens).second) {
          known.push_back({std::move(members), std::move(gens)});
          grew = true;
        }
      }
    }
  }
  return sorted_members(found);
}

std::optional<std::vector<Index>> find_isomorphism(const MultiplicationTable& a,
                                                   const MultiplicationTable& b) {
  if (!screen_passes(a, b)) return std::nullopt;
  const auto gens = generating_set(a);
  std::vector<Index> images;
  std::optional<std::vector<Index>> result;
  if (gens.empty()) return std::vector<Index>{b.identity()};
  assign(a, b, gens, images, result);
  return result;
}

}  // namespace serial

}  // namespace bcgroup::kernels
