#include "bcgroup/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bcgroup {

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

std::optional<std::uint64_t> factorial(std::uint64_t m) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 2; k <= m; ++k) {
    auto next = checked_mul(out, k);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

void require_same(const GroupParams& a, const GroupParams& b, const char* op) {
  if (!(a == b)) {
    fail(ErrorKind::ParamsMismatch,
         std::string(op) + ": (n=" + std::to_string(a.node_count()) + ", r=" +
             std::to_string(a.pool_count()) + ") vs (n=" + std::to_string(b.node_count()) +
             ", r=" + std::to_string(b.pool_count()) + ")");
  }
}

}  // namespace

GroupParams::GroupParams(std::uint32_t node_count, std::uint32_t pool_count)
    : node_count_(node_count), pool_count_(pool_count) {
  if (node_count < 1 || pool_count < 1) {
    fail(ErrorKind::InvalidArgument, "node_count and pool_count must be >= 1");
  }
}

// ---- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<Index> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    const Index v = mapping_[i];
    if (v >= mapping_.size()) {
      fail(ErrorKind::NotABijection,
           "entry " + std::to_string(v) + " at position " + std::to_string(i) + " out of range");
    }
    if (seen[v]) {
      fail(ErrorKind::NotABijection, "duplicate image " + std::to_string(v));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<Index> m(size);
  std::iota(m.begin(), m.end(), Index{0});
  return Permutation(Unchecked{}, std::move(m));
}

Permutation Permutation::unrank(std::size_t size, std::uint64_t rank) {
  // Factorial number system; digits taken most significant first.
  std::vector<Index> pool(size);
  std::iota(pool.begin(), pool.end(), Index{0});
  std::vector<std::uint64_t> fact(size + 1, 1);
  for (std::size_t k = 1; k <= size; ++k) fact[k] = fact[k - 1] * k;
  std::vector<Index> out;
  out.reserve(size);
  for (std::size_t pos = 0; pos < size; ++pos) {
    const std::uint64_t block = fact[size - 1 - pos];
    const auto digit = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(Unchecked{}, std::move(out));
}

Permutation Permutation::then(const Permutation& next) const {
  std::vector<Index> out(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) out[i] = next.mapping_[mapping_[i]];
  return Permutation(Unchecked{}, std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Index> out(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) out[mapping_[i]] = static_cast<Index>(i);
  return Permutation(Unchecked{}, std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (mapping_[i] != i) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> visited(mapping_.size(), false);
  for (std::size_t start = 0; start < mapping_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !visited[i]; i = mapping_[i]) {
      visited[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t out = 1;
  for (auto len : cycle_lengths()) out = std::lcm(out, static_cast<std::uint64_t>(len));
  return out;
}

std::uint64_t Permutation::rank() const {
  const std::size_t m = mapping_.size();
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (mapping_[j] < mapping_[i]) ++smaller_after;
    }
    out = out * (m - i) + smaller_after;
  }
  return out;
}

PoolPermutation make_pool_permutation(std::span<const std::int64_t> mapping) {
  std::vector<Index> m;
  m.reserve(mapping.size());
  for (auto v : mapping) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= mapping.size()) {
      fail(ErrorKind::NotABijection, "entry " + std::to_string(v) + " out of range");
    }
    m.push_back(static_cast<Index>(v));
  }
  return Permutation(std::move(m));
}

// ---- PoolUpdate / Configuration --------------------------------------------

PoolUpdate::PoolUpdate(GroupParams params, std::vector<PoolPermutation> per_node)
    : params_(params), per_node_(std::move(per_node)) {
  if (per_node_.size() != params_.node_count()) {
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(params_.node_count()) +
                                         " node permutations, got " +
                                         std::to_string(per_node_.size()));
  }
  for (const auto& p : per_node_) {
    if (p.size() != params_.pool_count()) {
      fail(ErrorKind::InvalidArgument, "node permutation has size " + std::to_string(p.size()) +
                                           ", expected " + std::to_string(params_.pool_count()));
    }
  }
}

Configuration::Configuration(GroupParams params, std::vector<Index> assignment)
    : params_(params), assignment_(std::move(assignment)) {
  if (assignment_.size() != params_.node_count()) {
    fail(ErrorKind::InvalidArgument, "assignment length " + std::to_string(assignment_.size()) +
                                         " != node count " +
                                         std::to_string(params_.node_count()));
  }
  for (std::size_t k = 0; k < assignment_.size(); ++k) {
    if (assignment_[k] >= params_.pool_count()) {
      fail(ErrorKind::InvalidArgument, "node " + std::to_string(k) + " assigned to pool " +
                                           std::to_string(assignment_[k]) + " >= r");
    }
  }
}

PoolUpdate identity(const GroupParams& params) {
  return PoolUpdate(params, std::vector<PoolPermutation>(params.node_count(),
                                                         Permutation::identity(params.pool_count())));
}

PoolUpdate compose(const PoolUpdate& a, const PoolUpdate& b) {
  require_same(a.params(), b.params(), "compose");
  std::vector<PoolPermutation> out;
  out.reserve(a.per_node().size());
  for (std::size_t k = 0; k < a.per_node().size(); ++k) out.push_back(a.node(k).then(b.node(k)));
  return PoolUpdate(a.params(), std::move(out));
}

PoolUpdate invert(const PoolUpdate& a) {
  std::vector<PoolPermutation> out;
  out.reserve(a.per_node().size());
  for (const auto& p : a.per_node()) out.push_back(p.inverse());
  return PoolUpdate(a.params(), std::move(out));
}

PoolUpdate power(const PoolUpdate& a, std::int64_t k) {
  PoolUpdate base = k < 0 ? invert(a) : a;
  auto e = k < 0 ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  PoolUpdate acc = identity(a.params());
  // Powers of one element commute, so square-and-multiply order is irrelevant.
  while (e > 0) {
    if (e & 1U) acc = compose(acc, base);
    e >>= 1U;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

std::uint64_t element_order(const PoolUpdate& a) {
  std::uint64_t out = 1;
  for (const auto& p : a.per_node()) out = std::lcm(out, p.order());
  return out;
}

bool is_identity(const PoolUpdate& a) noexcept {
  return std::all_of(a.per_node().begin(), a.per_node().end(),
                     [](const PoolPermutation& p) { return p.is_identity(); });
}

Configuration apply(const PoolUpdate& a, const Configuration& cfg) {
  require_same(a.params(), cfg.params(), "apply");
  std::vector<Index> out(cfg.assignment().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.node(k)(cfg.pool_of(k));
  return Configuration(cfg.params(), std::move(out));
}

bool canonical_less(const PoolUpdate& a, const PoolUpdate& b) {
  require_same(a.params(), b.params(), "canonical_less");
  for (std::size_t k = a.per_node().size(); k-- > 0;) {
    if (a.node(k) != b.node(k)) return a.node(k) < b.node(k);
  }
  return false;
}

// ---- enumeration -----------------------------------------------------------

std::optional<std::uint64_t> enumeration_size(const GroupParams& params) {
  auto per_node = factorial(params.pool_count());
  if (!per_node) return std::nullopt;
  return checked_pow(*per_node, params.node_count());
}

std::uint64_t checked_enumeration_size(const GroupParams& params, std::uint64_t cap) {
  auto size = enumeration_size(params);
  if (!size || *size > cap) {
    fail(ErrorKind::GroupTooLarge,
         "(r!)^n for n=" + std::to_string(params.node_count()) + ", r=" +
             std::to_string(params.pool_count()) + " exceeds cap " + std::to_string(cap));
  }
  return *size;
}

PoolUpdate element_at(const GroupParams& params, std::uint64_t rank) {
  const auto per_node = *factorial(params.pool_count());
  std::vector<PoolPermutation> perms;
  perms.reserve(params.node_count());
  for (std::uint32_t k = 0; k < params.node_count(); ++k) {
    perms.push_back(Permutation::unrank(params.pool_count(), rank % per_node));
    rank /= per_node;
  }
  return PoolUpdate(params, std::move(perms));
}

std::uint64_t rank_of(const PoolUpdate& a) {
  const auto per_node = *factorial(a.params().pool_count());
  std::uint64_t out = 0;
  for (std::size_t k = a.per_node().size(); k-- > 0;) out = out * per_node + a.node(k).rank();
  return out;
}

PoolUpdate ElementSampler::next() {
  std::vector<PoolPermutation> perms;
  perms.reserve(params_.node_count());
  for (std::uint32_t k = 0; k < params_.node_count(); ++k) {
    std::vector<Index> m(params_.pool_count());
    std::iota(m.begin(), m.end(), Index{0});
    std::shuffle(m.begin(), m.end(), rng_);
    perms.emplace_back(std::move(m));
  }
  return PoolUpdate(params_, std::move(perms));
}

Configuration ElementSampler::next_configuration() {
  std::uniform_int_distribution<Index> pool(0, params_.pool_count() - 1);
  std::vector<Index> a(params_.node_count());
  for (auto& v : a) v = pool(rng_);
  return Configuration(params_, std::move(a));
}

PoolUpdate random_element(const GroupParams& params, std::uint64_t seed) {
  return ElementSampler(params, seed).next();
}

std::optional<std::uint64_t> configuration_count(const GroupParams& params) {
  return checked_pow(params.pool_count(), params.node_count());
}

Configuration configuration_at(const GroupParams& params, std::uint64_t rank) {
  std::vector<Index> a(params.node_count());
  for (auto& v : a) {
    v = static_cast<Index>(rank % params.pool_count());
    rank /= params.pool_count();
  }
  return Configuration(params, std::move(a));
}

std::uint64_t rank_of(const Configuration& cfg) {
  std::uint64_t out = 0;
  const auto& a = cfg.assignment();
  for (std::size_t k = a.size(); k-- > 0;) out = out * cfg.params().pool_count() + a[k];
  return out;
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p(static_cast<Index>(i));
  os << ']';
  return os.str();
}

std::string to_string(const PoolUpdate& a) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.per_node().size(); ++k) {
    if (k) out += ",";
    out += to_string(a.node(k));
  }
  return out + ")";
}

}  // namespace bcgroup
