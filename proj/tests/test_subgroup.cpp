#include "bcgroup/subgroup.hpp"

#include <gtest/gtest.h>

#include "bcgroup/order.hpp"
#include "oracles.hpp"

namespace bcgroup {
namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GroupError thrown";
  return ErrorKind::InvalidArgument;
}

PoolUpdate single(std::vector<Index> perm) {
  const GroupParams params(1, static_cast<std::uint32_t>(perm.size()));
  return PoolUpdate(params, {Permutation(std::move(perm))});
}

TEST(GenerateSubgroupTest, Examples) {
  const GroupParams p(1, 3);
  EXPECT_EQ(generate_subgroup(p, {}).order(), 1U);
  EXPECT_EQ(generate_subgroup(p, {single({1, 0, 2})}).order(), 2U);
  EXPECT_EQ(generate_subgroup(p, {single({1, 0, 2}), single({0, 2, 1})}).order(), 6U);
  EXPECT_EQ(kind_of([&] { generate_subgroup(p, {single({1, 0, 2}), single({0, 2, 1})}, 5); }),
            ErrorKind::ClosureExceedsCap);
  EXPECT_TRUE(is_closed_subgroup(generate_subgroup(GroupParams(2, 3), {element_at(GroupParams(2, 3), 7)})));
}

TEST(CyclicSubgroupTest, Orders) {
  EXPECT_EQ(cyclic_subgroup(single({1, 2, 0})).order(), 3U);
  const PoolUpdate a(GroupParams(2, 3), {Permutation({1, 2, 0}), Permutation({1, 0, 2})});
  EXPECT_EQ(cyclic_subgroup(a).order(), 6U);
  EXPECT_EQ(cyclic_subgroup(identity(GroupParams(3, 3))).order(), 1U);
}

TEST(LatticeTest, Counts) {
  auto orders = [](const std::vector<Subgroup>& v) {
    std::vector<std::size_t> out;
    for (const auto& h : v) out.push_back(h.order());
    return out;
  };
  const auto l22 = all_subgroups(GroupParams(2, 2));
  EXPECT_EQ(orders(l22), (std::vector<std::size_t>{1, 2, 2, 2, 4}));
  const auto l13 = all_subgroups(GroupParams(1, 3));
  EXPECT_EQ(orders(l13), (std::vector<std::size_t>{1, 2, 2, 2, 3, 6}));
  EXPECT_EQ(all_subgroups(GroupParams(3, 2)).size(), 16U);
  EXPECT_EQ(all_subgroups(GroupParams(2, 3)).size(), 60U);
  EXPECT_EQ(kind_of([] { all_subgroups(GroupParams(3, 3)); }), ErrorKind::GroupTooLarge);
}

TEST(LatticeTest, AgreesWithPowerSetOracle) {
  for (const GroupParams p : {GroupParams(1, 3), GroupParams(2, 2), GroupParams(3, 2)}) {
    const auto elems = oracle::all_elements(p.node_count(), p.pool_count());
    const auto expected = oracle::powerset_subgroups(elems);
    std::set<std::vector<std::size_t>> got;
    for (const auto& h : all_subgroups(p)) {
      std::vector<std::size_t> ix;
      for (const auto& a : h.elements()) ix.push_back(rank_of(a));
      got.insert(ix);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(LatticeTest, ContainmentIsProperInclusion) {
  const auto lat = subgroup_lattice(GroupParams(1, 3));
  // Trivial group is below the other five, which are below S3 except S3 itself.
  std::size_t below_top = 0;
  for (auto [i, j] : lat.containment) {
    EXPECT_LT(lat.subgroups[i].order(), lat.subgroups[j].order());
    for (const auto& a : lat.subgroups[i].elements()) EXPECT_TRUE(lat.subgroups[j].contains(a));
    if (j == 5) ++below_top;
  }
  EXPECT_EQ(below_top, 5U);
  EXPECT_EQ(lat.containment.size(), 9U);
}

TEST(LagrangeTest, CosetsPartitionTheGroup) {
  for (const GroupParams p : {GroupParams(1, 3), GroupParams(2, 2), GroupParams(2, 3), GroupParams(3, 2)}) {
    const auto size = *enumeration_size(p);
    for (const auto& h : all_subgroups(p)) {
      ASSERT_EQ(size % h.order(), 0U);
      for (auto side : {CosetSide::Left, CosetSide::Right}) {
        const auto part = cosets(h, side);
        ASSERT_EQ(part.cosets.size(), size / h.order());
        std::set<std::uint64_t> seen;
        for (const auto& c : part.cosets) {
          ASSERT_EQ(c.size(), h.order());
          for (const auto& a : c) ASSERT_TRUE(seen.insert(rank_of(a)).second);
        }
        ASSERT_EQ(seen.size(), size);
        ASSERT_EQ(BigInt(part.cosets.size()), coset_count(size, h.order()));
      }
    }
  }
}

TEST(NormalTest, Examples) {
  const GroupParams p(1, 3);
  EXPECT_TRUE(is_normal(generate_subgroup(p, {single({1, 2, 0})})));
  EXPECT_FALSE(is_normal(generate_subgroup(p, {single({1, 0, 2})})));
  EXPECT_TRUE(is_normal(generate_subgroup(p, {})));
  for (const auto& h : all_subgroups(GroupParams(2, 2))) EXPECT_TRUE(is_normal(h));
}

TEST(NormalTest, IndexTwoSubgroupsAreNormal) {
  for (const GroupParams p : {GroupParams(1, 3), GroupParams(2, 2), GroupParams(2, 3), GroupParams(3, 2)}) {
    const auto size = *enumeration_size(p);
    for (const auto& h : all_subgroups(p)) {
      if (size / h.order() == 2) EXPECT_TRUE(is_normal(h));
      if (normal_by_index(size, h.order()) == NormalityVerdict::NormalByCriterion) EXPECT_TRUE(is_normal(h));
      const bool left_eq_right = [&] {
        const auto l = cosets(h, CosetSide::Left).cosets;
        const auto r = cosets(h, CosetSide::Right).cosets;
        std::set<std::vector<std::uint64_t>> ls, rs;
        for (auto c : l) {
          std::vector<std::uint64_t> v;
          for (auto& a : c) v.push_back(rank_of(a));
          std::sort(v.begin(), v.end());
          ls.insert(v);
        }
        for (auto c : r) {
          std::vector<std::uint64_t> v;
          for (auto& a : c) v.push_back(rank_of(a));
          std::sort(v.begin(), v.end());
          rs.insert(v);
        }
        return ls == rs;
      }();
      EXPECT_EQ(is_normal(h), left_eq_right);
    }
  }
}

TEST(SylowTest, OrdersMatchPParts) {
  EXPECT_EQ(sylow_subgroup(GroupParams(2, 3), 2).order(), 4U);
  EXPECT_EQ(sylow_subgroup(GroupParams(2, 3), 3).order(), 9U);
  EXPECT_EQ(sylow_subgroup(GroupParams(1, 4), 2).order(), 8U);
  EXPECT_EQ(kind_of([] { sylow_subgroup(GroupParams(2, 3), 5); }), ErrorKind::PrimeNotPresent);
  EXPECT_EQ(kind_of([] { sylow_subgroup(GroupParams(2, 3), 4); }), ErrorKind::InvalidArgument);
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (std::uint32_t r = 2; r <= 6; ++r) {
      const GroupParams p(n, r);
      for (const auto& form : sylow_forms(factorize_concrete_order(p))) {
        const auto h = sylow_subgroup(p, form.prime);
        EXPECT_EQ(BigInt(h.order()), form.p_part) << n << "," << r << " p=" << form.prime;
        EXPECT_TRUE(is_closed_subgroup(h));
      }
    }
  }
}

TEST(SylowTest, SymmetricSylowSizes) {
  // Sylow 2-subgroup of S_8 has order 128.
  auto gens = symmetric_sylow(8, 2);
  std::vector<PoolUpdate> as;
  for (auto& g : gens) as.emplace_back(GroupParams(1, 8), std::vector<PoolPermutation>{g});
  EXPECT_EQ(generate_subgroup(GroupParams(1, 8), as).order(), 128U);
}

TEST(CauchyTest, Witnesses) {
  const auto w = cauchy_witness(GroupParams(2, 3), 3);
  EXPECT_EQ(element_order(w), 3U);
  EXPECT_EQ(cauchy_witness(GroupParams(2, 2), 2), PoolUpdate(GroupParams(2, 2), {Permutation({1, 0}), Permutation({0, 1})}));
  EXPECT_EQ(element_order(cauchy_witness(GroupParams(1, 5), 5)), 5U);
  EXPECT_EQ(kind_of([] { cauchy_witness(GroupParams(2, 3), 5); }), ErrorKind::PrimeNotPresent);
  for (const GroupParams p : {GroupParams(1, 3), GroupParams(2, 2), GroupParams(2, 3), GroupParams(3, 2)}) {
    for (auto prime : cauchy_primes(factorize_concrete_order(p))) {
      EXPECT_EQ(element_order(cauchy_witness(p, prime)), prime);
    }
  }
}

TEST(SubgroupTest, SortsAndDeduplicates) {
  const GroupParams p(1, 3);
  const Subgroup h(p, {single({1, 2, 0}), identity(p), single({1, 2, 0}), single({2, 0, 1})});
  EXPECT_EQ(h.order(), 3U);
  EXPECT_EQ(h.elements().front(), identity(p));
  EXPECT_TRUE(is_closed_subgroup(h));
  EXPECT_FALSE(is_closed_subgroup(Subgroup(p, {identity(p), single({1, 2, 0})})));
}

}  // namespace
}  // namespace bcgroup
