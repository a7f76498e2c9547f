#include "bcgroup/table.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace bcgroup {

std::size_t ElementSet::count() const noexcept {
  std::size_t out = 0;
  for (auto w : words_) out += static_cast<std::size_t>(std::popcount(w));
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<Index> ElementSet::indices() const {
  std::vector<Index> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Index>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

bool ElementSet::canonical_less(const ElementSet& other) const {
  const auto a = count();
  const auto b = other.count();
  if (a != b) return a < b;
  return indices() < other.indices();
}

MultiplicationTable::MultiplicationTable(std::size_t size, std::vector<Index> cells)
    : size_(size), cells_(std::move(cells)) {
  if (size_ == 0 || cells_.size() != size_ * size_) {
    fail(ErrorKind::InvalidArgument, "table must be a non-empty square");
  }
  std::vector<bool> seen(size_);
  auto check_line = [&](auto cell_at, const char* what, std::size_t line) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t k = 0; k < size_; ++k) {
      const Index v = cell_at(k);
      if (v >= size_ || seen[v]) {
        fail(ErrorKind::InvalidArgument,
             std::string(what) + " " + std::to_string(line) + " is not a permutation");
      }
      seen[v] = true;
    }
  };
  for (std::size_t i = 0; i < size_; ++i) {
    check_line([&](std::size_t k) { return cells_[i * size_ + k]; }, "row", i);
    check_line([&](std::size_t k) { return cells_[k * size_ + i]; }, "column", i);
  }

  bool found = false;
  for (Index e = 0; e < size_ && !found; ++e) {
    bool two_sided = true;
    for (Index x = 0; x < size_ && two_sided; ++x) two_sided = mul(e, x) == x && mul(x, e) == x;
    if (two_sided) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::InvalidArgument, "table has no two-sided identity");

  inverse_.resize(size_);
  order_.resize(size_);
  for (Index a = 0; a < size_; ++a) {
    for (Index b = 0; b < size_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    std::uint64_t m = 1;
    for (Index x = a; x != identity_; x = mul(x, a)) ++m;
    order_[a] = m;
  }
}

std::vector<std::uint64_t> MultiplicationTable::order_profile() const {
  std::vector<std::uint64_t> out = order_;
  std::sort(out.begin(), out.end());
  return out;
}

bool MultiplicationTable::is_abelian() const {
  for (Index a = 0; a < size_; ++a) {
    for (Index b = a + 1; b < size_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

ElementSet MultiplicationTable::closure(std::span<const Index> generators) const {
  ElementSet out(size_);
  out.insert(identity_);
  std::vector<Index> frontier{identity_};
  // Right multiplication by generators reaches every word; in a finite group
  // inverses are positive powers, so this is the generated subgroup.
  while (!frontier.empty()) {
    std::vector<Index> next;
    for (Index x : frontier) {
      for (Index g : generators) {
        const Index y = mul(x, g);
        if (out.insert(y)) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

ElementSet MultiplicationTable::cyclic(Index a) const {
  ElementSet out(size_);
  out.insert(identity_);
  for (Index x = a; x != identity_; x = mul(x, a)) out.insert(x);
  return out;
}

bool MultiplicationTable::is_subgroup(const ElementSet& s) const {
  if (!s.contains(identity_)) return false;
  const auto members = s.indices();
  for (Index a : members) {
    if (!s.contains(inverse_[a])) return false;
    for (Index b : members) {
      if (!s.contains(mul(a, b))) return false;
    }
  }
  return true;
}

}  // namespace bcgroup
