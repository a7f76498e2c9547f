#include "bcgroup/trace.hpp"

#include <gtest/gtest.h>

#include <sstream>

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

std::string what_of(std::string_view text) {
  try {
    parse_trace(text);
  } catch (const GroupError& e) {
    return e.what();
  }
  return {};
}

constexpr std::string_view kOneEvent =
    "{\"n\":2,\"r\":2,\"initial\":[0,0]}\n"
    "{\"epoch\":0,\"seq\":0,\"node\":0,\"from\":0,\"to\":1}\n";

TEST(ParseTraceTest, SampleTrace) {
  const auto t = parse_trace(kOneEvent);
  EXPECT_EQ(t.params, GroupParams(2, 2));
  ASSERT_EQ(t.events.size(), 1U);
  EXPECT_EQ(t.events[0], (SwitchEvent{0, 0, 0, 0, 1}));
  EXPECT_EQ(serialize_trace(t), kOneEvent);
  EXPECT_TRUE(parse_trace("{\"n\":1,\"r\":1,\"initial\":[0]}\n").events.empty());
}

TEST(ParseTraceTest, Errors) {
  EXPECT_EQ(kind_of([] { parse_trace(""); }), ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_trace("{\"n\":2,\"r\":2,\"initial\":[0,0]}\n{\"epoch\":0,\"seq\":0}\n"); }),
            ErrorKind::MalformedLine);
  EXPECT_EQ(kind_of([] { parse_trace("{\"n\":2,\"r\":2,\"initial\":[0,0]}\nnot json\n"); }),
            ErrorKind::MalformedLine);
  EXPECT_NE(what_of("{\"n\":2,\"r\":2,\"initial\":[0,0]}\nnot json\n").find("line 2"), std::string::npos);
  // Node 0 sits in pool 0, not pool 1.
  const std::string mismatch =
      "{\"n\":2,\"r\":2,\"initial\":[0,0]}\n{\"epoch\":0,\"seq\":0,\"node\":0,\"from\":1,\"to\":0}\n";
  EXPECT_EQ(kind_of([&] { parse_trace(mismatch); }), ErrorKind::SourceMismatch);
  EXPECT_NE(what_of(mismatch).find("line 2"), std::string::npos);
  const std::string out_of_range =
      "{\"n\":2,\"r\":2,\"initial\":[0,0]}\n{\"epoch\":0,\"seq\":0,\"node\":2,\"from\":0,\"to\":1}\n";
  EXPECT_EQ(kind_of([&] { parse_trace(out_of_range); }), ErrorKind::InvariantViolation);
  const std::string unordered =
      "{\"n\":2,\"r\":2,\"initial\":[0,0]}\n"
      "{\"epoch\":1,\"seq\":0,\"node\":0,\"from\":0,\"to\":1}\n"
      "{\"epoch\":0,\"seq\":0,\"node\":1,\"from\":0,\"to\":1}\n";
  EXPECT_EQ(kind_of([&] { parse_trace(unordered); }), ErrorKind::InvariantViolation);
  EXPECT_NE(what_of(unordered).find("line 3"), std::string::npos);
}

TEST(FoldTest, TranspositionRule) {
  const auto t = parse_trace(kOneEvent);
  const auto updates = fold_trace(t);
  ASSERT_EQ(updates.size(), 1U);
  EXPECT_EQ(to_string(updates[0]), "([1,0],[0,1])");

  const GroupParams p(1, 3);
  const std::vector<SwitchEvent> two{{0, 0, 0, 0, 1}, {0, 1, 0, 1, 2}};
  EXPECT_EQ(fold_epoch(p, two), PoolUpdate(p, {Permutation({2, 0, 1})}));
  EXPECT_EQ(fold_epoch(p, {}), identity(p));
  const std::vector<SwitchEvent> bad{{0, 1, 0, 0, 1}, {0, 0, 0, 1, 2}};
  EXPECT_EQ(kind_of([&] { fold_epoch(p, bad); }), ErrorKind::InvariantViolation);
}

TEST(FoldTest, EvolveMatchesApply) {
  const auto t = parse_trace(kOneEvent);
  const auto configs = evolve(t);
  ASSERT_EQ(configs.size(), 1U);
  EXPECT_EQ(configs[0], Configuration(GroupParams(2, 2), {1, 0}));
}

TEST(ClosureTest, ThreeCycleRepeated) {
  const GroupParams p(1, 3);
  const PoolUpdate c(p, {Permutation({1, 2, 0})});
  const std::vector<PoolUpdate> updates(6, c);
  EXPECT_EQ(detect_identity_closure(updates), (std::vector<std::uint64_t>{2, 5}));
  const auto snaps = cumulative_snapshots(updates);
  EXPECT_EQ(snaps[0].cumulative, c);
  EXPECT_EQ(snaps[1].cumulative_epoch, 1U);
  const std::vector<PoolUpdate> mixed{c, identity(GroupParams(2, 3))};
  EXPECT_EQ(kind_of([&] { detect_identity_closure(mixed); }), ErrorKind::ParamsMismatch);
}

TEST(GenerateTest, ChurnExtremes) {
  const GroupParams p(5, 3);
  const auto still = generate_random_trace(p, 8, 0.0, 1);
  EXPECT_TRUE(still.events.empty());
  EXPECT_EQ(detect_identity_closure(fold_trace(still, 8)).size(), 8U);
  const auto busy = generate_random_trace(p, 8, 1.0, 1);
  EXPECT_EQ(busy.events.size(), 40U);
  for (const auto& e : busy.events) EXPECT_NE(e.from_pool, e.to_pool);
  EXPECT_NO_THROW(validate_trace(busy));
  EXPECT_EQ(kind_of([&] { generate_random_trace(p, 1, 1.5, 0); }), ErrorKind::InvalidArgument);
  EXPECT_TRUE(generate_random_trace(GroupParams(4, 1), 5, 1.0, 3).events.empty());
}

TEST(GenerateTest, EventCountWithinThreeSigma) {
  const auto t = generate_random_trace(GroupParams(100, 4), 50, 0.1, 12345);
  EXPECT_GE(t.events.size(), 436U);
  EXPECT_LE(t.events.size(), 564U);
  EXPECT_EQ(t, generate_random_trace(GroupParams(100, 4), 50, 0.1, 12345));
}

TEST(InverseTraceTest, ClosesToIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = generate_random_trace(GroupParams(6, 4), 7, 0.4, seed);
    const auto inv = inverse_trace(t);
    EXPECT_NO_THROW(validate_trace(inv));
    EXPECT_EQ(evolve(inv).back(), t.initial);
    const auto both = concatenate(t, inv);
    const auto snaps = cumulative_snapshots(fold_trace(both));
    EXPECT_TRUE(is_identity(snaps.back().cumulative));
  }
}

TEST(RoundTripTest, ByteExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = generate_random_trace(GroupParams(7, 3), 5, 0.5, seed);
    const auto text = serialize_trace(t);
    const auto back = parse_trace(text);
    EXPECT_EQ(back, t);
    EXPECT_EQ(serialize_trace(back), text);
    const auto snaps = cumulative_snapshots(fold_trace(t));
    std::istringstream lines(serialize_snapshots(snaps));
    std::string line;
    std::size_t k = 0;
    while (std::getline(lines, line)) {
      ASSERT_LT(k, snaps.size());
      EXPECT_EQ(snapshot_from_json(Json::parse(line)), snaps[k]);
      ++k;
    }
    EXPECT_EQ(k, snaps.size());
  }
}

}  // namespace
}  // namespace bcgroup
