#pragma once

// Test-only reference computations. They work on raw vectors and brute force
// so they share no code path with the library routines they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Perm = std::vector<std::uint32_t>;
using Element = std::vector<Perm>;  // one Perm per node

/// a acts first.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Element compose(const Element& a, const Element& b) {
  Element out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(compose(a[k], b[k]));
  return out;
}

inline Perm identity_perm(std::size_t r) {
  Perm p(r);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

inline std::vector<Perm> all_perms(std::size_t r) {
  std::vector<Perm> out;
  Perm p = identity_perm(r);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Node 0 varies fastest.
inline std::vector<Element> all_elements(std::size_t n, std::size_t r) {
  const auto local = all_perms(r);
  std::vector<Element> out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= local.size();
  for (std::size_t i = 0; i < total; ++i) {
    Element e;
    std::size_t rest = i;
    for (std::size_t k = 0; k < n; ++k) {
      e.push_back(local[rest % local.size()]);
      rest /= local.size();
    }
    out.push_back(e);
  }
  return out;
}

inline bool is_identity(const Element& a) {
  for (const auto& p : a) {
    if (p != identity_perm(p.size())) return false;
  }
  return true;
}

/// Least m with a^m = e by repeated composition.
inline std::uint64_t iterate_order(const Element& a) {
  Element x = a;
  std::uint64_t m = 1;
  while (!is_identity(x)) {
    x = compose(x, a);
    ++m;
  }
  return m;
}

/// Unique two-sided inverse by exhaustive search over the whole group.
inline Element search_inverse(const Element& a, std::size_t r) {
  for (const auto& cand : all_elements(a.size(), r)) {
    if (is_identity(compose(a, cand)) && is_identity(compose(cand, a))) return cand;
  }
  return {};
}

/// Subgroups as sorted index sets, by checking closure of every subset that
/// contains the identity. Only for groups of order <= 10.
inline std::set<std::vector<std::size_t>> powerset_subgroups(const std::vector<Element>& g) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = g.size();
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[g[i]] = i;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1U)) continue;  // element 0 is the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1U)) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if (!((mask >> b) & 1U)) continue;
        closed = (mask >> index[compose(g[a], g[b])]) & 1U;
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < n; ++a) {
      if ((mask >> a) & 1U) members.push_back(a);
    }
    out.insert(members);
  }
  return out;
}

/// Tries every bijection; tables given as row-major cells. Only for size <= 8.
inline bool brute_isomorphic(std::size_t size, const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> phi(size);
  std::iota(phi.begin(), phi.end(), 0U);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < size && ok; ++x) {
      for (std::size_t y = 0; y < size && ok; ++y) {
        ok = phi[a[x * size + y]] == b[phi[x] * size + phi[y]];
      }
    }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

inline double factorial_log2_bigint(unsigned t) {
  boost::multiprecision::cpp_int f = 1;
  for (unsigned k = 2; k <= t; ++k) f *= k;
  // log2 from the leading 53 bits plus the shift.
  const auto bits = f == 0 ? 0U : static_cast<unsigned>(boost::multiprecision::msb(f)) + 1;
  const unsigned shift = bits > 60 ? bits - 60 : 0;
  const auto top = static_cast<std::uint64_t>(f >> shift);
  return std::log2(static_cast<double>(top)) + shift;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> naive_factor(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    std::uint64_t e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

}  // namespace oracle
