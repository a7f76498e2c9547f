#include "bcgroup/core.hpp"

#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"

namespace bcgroup {
namespace {

PoolUpdate make(std::uint32_t n, std::uint32_t r, std::vector<std::vector<Index>> perms) {
  std::vector<PoolPermutation> per_node;
  for (auto& p : perms) per_node.emplace_back(std::move(p));
  return PoolUpdate(GroupParams(n, r), std::move(per_node));
}

oracle::Element to_oracle(const PoolUpdate& a) {
  oracle::Element out;
  for (const auto& p : a.per_node()) out.emplace_back(p.mapping().begin(), p.mapping().end());
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GroupError thrown";
  return ErrorKind::InvalidArgument;
}

TEST(GroupParamsTest, RejectsZero) {
  EXPECT_EQ(kind_of([] { GroupParams(0, 2); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { GroupParams(2, 0); }), ErrorKind::InvalidArgument);
  EXPECT_NO_THROW(GroupParams(3, 1));
}

TEST(PoolPermutationTest, ValidatedConstructor) {
  const std::vector<std::int64_t> id{0, 1, 2};
  EXPECT_TRUE(make_pool_permutation(id).is_identity());
  const std::vector<std::int64_t> swap{1, 0};
  EXPECT_EQ(make_pool_permutation(swap), Permutation({1, 0}));
  const std::vector<std::int64_t> dup{0, 0, 1};
  EXPECT_EQ(kind_of([&] { make_pool_permutation(dup); }), ErrorKind::NotABijection);
  const std::vector<std::int64_t> neg{0, -1};
  EXPECT_EQ(kind_of([&] { make_pool_permutation(neg); }), ErrorKind::NotABijection);
  const std::vector<std::int64_t> big{0, 2};
  EXPECT_EQ(kind_of([&] { make_pool_permutation(big); }), ErrorKind::NotABijection);
}

TEST(PoolPermutationTest, RankRoundTripIsLexicographic) {
  const auto perms = oracle::all_perms(4);
  for (std::uint64_t k = 0; k < perms.size(); ++k) {
    const auto p = Permutation::unrank(4, k);
    EXPECT_EQ(std::vector<Index>(p.mapping().begin(), p.mapping().end()), perms[k]);
    EXPECT_EQ(p.rank(), k);
  }
}

TEST(IdentityTest, Definition) {
  const GroupParams p(2, 2);
  EXPECT_EQ(identity(p), make(2, 2, {{0, 1}, {0, 1}}));
  ElementSampler s(p, 7);
  for (int i = 0; i < 20; ++i) {
    const auto a = s.next();
    EXPECT_EQ(compose(identity(p), a), a);
    const auto cfg = s.next_configuration();
    EXPECT_EQ(apply(identity(p), cfg), cfg);
  }
}

TEST(ComposeTest, LeftToRight) {
  // Node maps 0 -> 1 in a and 1 -> 2 in b, so 0 -> 2 in a*b.
  const auto a = make(1, 3, {{1, 0, 2}});
  const auto b = make(1, 3, {{0, 2, 1}});
  EXPECT_EQ(compose(a, b).node(0)(0), 2U);

  const auto c = make(1, 3, {{1, 2, 0}});
  const auto d = make(1, 3, {{0, 2, 1}});
  EXPECT_EQ(compose(c, d), make(1, 3, {{2, 1, 0}}));
  EXPECT_EQ(to_oracle(compose(c, d)), oracle::compose(to_oracle(c), to_oracle(d)));

  const auto swap = make(1, 2, {{1, 0}});
  EXPECT_EQ(compose(identity(GroupParams(1, 2)), swap), swap);
}

TEST(ComposeTest, ParamsMismatch) {
  EXPECT_EQ(kind_of([] { compose(identity(GroupParams(1, 2)), identity(GroupParams(2, 2))); }),
            ErrorKind::ParamsMismatch);
  EXPECT_EQ(kind_of([] {
              apply(identity(GroupParams(1, 2)), Configuration(GroupParams(1, 3), {0}));
            }),
            ErrorKind::ParamsMismatch);
}

TEST(InvertTest, Examples) {
  const GroupParams p(3, 4);
  EXPECT_EQ(invert(identity(p)), identity(p));
  EXPECT_EQ(invert(make(1, 2, {{1, 0}})), make(1, 2, {{1, 0}}));
  const auto c = make(1, 3, {{1, 2, 0}});
  EXPECT_EQ(invert(c), make(1, 3, {{2, 0, 1}}));
  EXPECT_EQ(to_oracle(invert(c)), oracle::search_inverse(to_oracle(c), 3));
}

TEST(PowerTest, Examples) {
  const auto c = make(1, 3, {{1, 2, 0}});
  EXPECT_EQ(power(c, 0), identity(c.params()));
  EXPECT_EQ(power(c, 3), identity(c.params()));
  EXPECT_EQ(power(c, -1), invert(c));
  ElementSampler s(GroupParams(3, 5), 11);
  for (int i = 0; i < 50; ++i) {
    const auto a = s.next();
    for (std::int64_t k = -7; k <= 7; ++k) {
      PoolUpdate naive = identity(a.params());
      const auto step = k < 0 ? invert(a) : a;
      for (std::int64_t j = 0; j < (k < 0 ? -k : k); ++j) naive = compose(naive, step);
      EXPECT_EQ(power(a, k), naive);
    }
  }
}

TEST(ElementOrderTest, Examples) {
  EXPECT_EQ(element_order(identity(GroupParams(4, 4))), 1U);
  EXPECT_EQ(element_order(make(2, 3, {{1, 2, 0}, {1, 0, 2}})), 6U);
  EXPECT_EQ(element_order(make(1, 2, {{1, 0}})), 2U);
}

TEST(ElementOrderTest, MatchesIterationOracle) {
  for (std::uint32_t r = 1; r <= 6; ++r) {
    ElementSampler s(GroupParams(3, r), r);
    for (int i = 0; i < 200; ++i) {
      const auto a = s.next();
      EXPECT_EQ(element_order(a), oracle::iterate_order(to_oracle(a)));
      EXPECT_TRUE(is_identity(power(a, static_cast<std::int64_t>(element_order(a)))));
    }
  }
}

TEST(ApplyTest, Examples) {
  const GroupParams p(2, 2);
  EXPECT_EQ(apply(identity(p), Configuration(p, {0, 1})), Configuration(p, {0, 1}));
  EXPECT_EQ(apply(make(2, 2, {{1, 0}, {0, 1}}), Configuration(p, {0, 0})), Configuration(p, {1, 0}));
}

TEST(ApplyTest, ConfigurationValidation) {
  EXPECT_EQ(kind_of([] { Configuration(GroupParams(2, 2), {0, 2}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { Configuration(GroupParams(2, 2), {0}); }), ErrorKind::InvalidArgument);
}

TEST(EnumerateTest, SizesAndOrder) {
  std::vector<PoolUpdate> g22;
  for (auto&& a : enumerate_group(GroupParams(2, 2), 1000)) g22.push_back(a);
  ASSERT_EQ(g22.size(), 4U);
  EXPECT_EQ(g22[0], identity(GroupParams(2, 2)));
  EXPECT_EQ(g22[1], make(2, 2, {{1, 0}, {0, 1}}));  // node 0 varies fastest

  std::size_t count = 0;
  for (auto&& a : enumerate_group(GroupParams(1, 3), 1000)) {
    EXPECT_EQ(rank_of(a), count);
    ++count;
  }
  EXPECT_EQ(count, 6U);

  EXPECT_EQ(kind_of([] { (void)enumerate_group(GroupParams(10, 5), 1'000'000); }), ErrorKind::GroupTooLarge);
}

TEST(EnumerateTest, EveryElementOnceMatchesOracle) {
  const auto expected = oracle::all_elements(2, 3);
  std::size_t k = 0;
  for (auto&& a : enumerate_group(GroupParams(2, 3), 1000)) {
    ASSERT_LT(k, expected.size());
    EXPECT_EQ(to_oracle(a), expected[k]);
    if (k > 0) {
      EXPECT_TRUE(canonical_less(element_at(GroupParams(2, 3), k - 1), a));
    }
    ++k;
  }
  EXPECT_EQ(k, expected.size());
}

TEST(RandomElementTest, Deterministic) {
  const GroupParams p(5, 4);
  EXPECT_EQ(random_element(p, 42), random_element(p, 42));
  EXPECT_EQ(random_element(GroupParams(1, 1), 9), identity(GroupParams(1, 1)));
}

TEST(RandomElementTest, UniformOverSymmetricThree) {
  const GroupParams p(1, 3);
  std::map<std::uint64_t, int> counts;
  for (std::uint64_t seed = 0; seed < 6000; ++seed) ++counts[rank_of(random_element(p, seed))];
  ASSERT_EQ(counts.size(), 6U);
  double chi2 = 0;
  for (const auto& [rank, c] : counts) {
    EXPECT_NEAR(c, 1000, 150) << "rank " << rank;
    chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
  }
  // 5 degrees of freedom, 0.999 quantile.
  EXPECT_LT(chi2, 20.52);
}

// ---- group laws over random samples ------------------------------------------

TEST(GroupLawsTest, AxiomsOnRandomTriples) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t r = 1; r <= 5; ++r) {
      const GroupParams p(n, r);
      ElementSampler s(p, n * 100 + r);
      const auto e = identity(p);
      for (int t = 0; t < 40; ++t) {
        const auto a = s.next();
        const auto b = s.next();
        const auto c = s.next();
        const auto cfg = s.next_configuration();
        ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        ASSERT_EQ(compose(e, a), a);
        ASSERT_EQ(compose(a, e), a);
        ASSERT_EQ(compose(a, invert(a)), e);
        ASSERT_EQ(compose(invert(a), a), e);
        ASSERT_EQ(invert(invert(a)), a);
        ASSERT_EQ(apply(compose(a, b), cfg), apply(b, apply(a, cfg)));
      }
    }
  }
}

TEST(GroupLawsTest, CommutativityBoundary) {
  // r <= 2: every pair commutes, checked exhaustively on small instances.
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t r = 1; r <= 2; ++r) {
      std::vector<PoolUpdate> all;
      for (auto&& a : enumerate_group(GroupParams(n, r), 5000)) all.push_back(a);
      for (const auto& a : all) {
        for (const auto& b : all) ASSERT_EQ(compose(a, b), compose(b, a));
      }
    }
  }
  // r >= 3: (0 1) and (1 2) on one node never commute.
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t r = 3; r <= 7; ++r) {
      const GroupParams p(n, r);
      std::vector<PoolPermutation> x(n, Permutation::identity(r));
      std::vector<PoolPermutation> y(n, Permutation::identity(r));
      std::vector<Index> sx(r), sy(r);
      std::iota(sx.begin(), sx.end(), 0U);
      std::iota(sy.begin(), sy.end(), 0U);
      std::swap(sx[0], sx[1]);
      std::swap(sy[1], sy[2]);
      x[n - 1] = Permutation(sx);
      y[n - 1] = Permutation(sy);
      const PoolUpdate a(p, x), b(p, y);
      EXPECT_NE(compose(a, b), compose(b, a));
    }
  }
}

TEST(GroupLawsTest, ElementOrderDividesGroupSize) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t r = 1; r <= 5; ++r) {
      const auto size = enumeration_size(GroupParams(n, r));
      if (!size || *size > 5000) continue;
      for (auto&& a : enumerate_group(GroupParams(n, r), 5000)) {
        ASSERT_EQ(*size % element_order(a), 0U);
      }
    }
  }
}

TEST(ConfigurationTest, RankRoundTrip) {
  const GroupParams p(3, 4);
  for (std::uint64_t k = 0; k < 64; ++k) EXPECT_EQ(rank_of(configuration_at(p, k)), k);
  EXPECT_EQ(*configuration_count(p), 64U);
}

}  // namespace
}  // namespace bcgroup
