#include <catwalk/walks.hpp>

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace catwalk;

namespace {

std::vector<int> H(std::initializer_list<int> v) { return v; }

TEST(Heights, Examples) {
  EXPECT_EQ(heights(Walk{1, -1}), H({0, 1, 0}));
  EXPECT_EQ(heights(Walk({}, 5)), H({5}));
  const Walk fig{2, 1, 1, -2, 1, -2, 1, 1, 2, -1, -2, 1, -2, 2, -2, 1, -2};
  EXPECT_EQ(heights(fig), H({0, 2, 3, 4, 2, 3, 1, 2, 3, 5, 4, 2, 3, 1, 3, 1, 2, 0}));
}

TEST(Walk, RejectsBadSteps) {
  EXPECT_THROW(Walk({0}), invalid_input);
  EXPECT_THROW(Walk({3}), invalid_input);
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(Walk{1, 2, -2}), (Walk{2, -2, -1}));
  EXPECT_EQ(reverse(Walk{}), Walk{});
  for (const auto &w : oracle::all_words(4)) EXPECT_EQ(reverse(reverse(Walk(w))), Walk(w));
}

TEST(Concat, Examples) {
  EXPECT_EQ(concat(Walk{1}, Walk{-1}), (Walk{1, -1}));
  const Walk a{2, -1, 1};
  EXPECT_EQ(concat(a, Walk{}), a);
  EXPECT_EQ(concat(a, Walk{1, 1}).size(), 5u);
  EXPECT_EQ(concat(concat(a, a), a), concat(a, concat(a, a)));
}

TEST(IsClass, Examples) {
  EXPECT_TRUE(is_class(Walk{1, -1}, WalkClass::C));
  EXPECT_FALSE(is_class(Walk{2, -2}, WalkClass::C));
  EXPECT_TRUE(is_class(Walk{2, -1}, WalkClass::G));
  EXPECT_FALSE(is_class(Walk{1, -1, 1}, WalkClass::G));
  EXPECT_TRUE(is_class(Walk{}, WalkClass::A));
  EXPECT_TRUE(is_class(Walk{1}, WalkClass::B));
  EXPECT_FALSE(is_class(Walk{2, -2, 1}, WalkClass::B));
}

TEST(Enumerate, SpecExamples) {
  EXPECT_EQ(enumerate(WalkClass::C, 2), std::vector<Walk>{Walk({1, -1})});
  const std::vector<Walk> c4{{1, 1, -1, -1}, {1, 2, -2, -1}, {1, 2, -1, -2}, {2, -1, 1, -2}, {2, 1, -2, -1}};
  EXPECT_EQ(enumerate(WalkClass::C, 4), c4);
  const std::vector<Walk> g3{{1, 1, -1}, {1, 2, -2}, {2, 1, -2}};
  EXPECT_EQ(enumerate(WalkClass::G, 3), g3);
  EXPECT_TRUE(enumerate(WalkClass::C, 0).empty());
  EXPECT_TRUE(enumerate(WalkClass::C, 1).empty());
}

// Pruned search against filtering every word by the class definitions.
TEST(Enumerate, MatchesBruteForceFilter) {
  for (std::size_t n = 0; n <= 9; ++n) {
    std::vector<Walk> a, b, c, g;
    for (const auto &w : oracle::all_words(n)) {
      if (oracle::is_a(w)) a.emplace_back(w);
      if (oracle::is_b(w)) b.emplace_back(w);
      if (oracle::is_c(w)) c.emplace_back(w);
      if (oracle::is_g(w)) g.emplace_back(w);
    }
    EXPECT_EQ(enumerate(WalkClass::A, n), a) << n;
    EXPECT_EQ(enumerate(WalkClass::B, n), b) << n;
    EXPECT_EQ(enumerate(WalkClass::C, n), c) << n;
    EXPECT_EQ(enumerate(WalkClass::G, n), g) << n;
    for (const auto &w : a) EXPECT_TRUE(is_class(w, WalkClass::A));
    for (const auto &w : b) EXPECT_TRUE(is_class(w, WalkClass::B));
  }
}

TEST(Enumerate, StrictlyIncreasing) {
  for (auto cls : {WalkClass::A, WalkClass::B, WalkClass::C, WalkClass::G}) {
    const auto ws = enumerate(cls, 10);
    EXPECT_TRUE(std::adjacent_find(ws.begin(), ws.end(), std::greater_equal<>()) == ws.end());
  }
}

TEST(Enumerate, CatalanCounts) {
  for (std::size_t n = 2; n <= 14; ++n) EXPECT_EQ(count_walks(WalkClass::C, n), oracle::catalan(n - 1)) << n;
}

TEST(Enumerate, ResourceBound) {
  EXPECT_THROW(enumerate(WalkClass::A, 25), resource_limit);
  EXPECT_THROW(enumerate(WalkClass::A, 8, 7), resource_limit);
  try {
    enumerate(WalkClass::G, 30);
  } catch (const resource_limit &e) {
    EXPECT_EQ(e.requested(), 30u);
    EXPECT_EQ(e.bound(), default_max_walk_length);
  }
}

TEST(StepStats, Examples) {
  EXPECT_EQ(step_stats(Walk{1, -1}), (StepStats{1, 0, 0}));
  EXPECT_EQ(step_stats(Walk{1, 1, -2}), (StepStats{1, 1, 0}));
  EXPECT_EQ(step_stats(Walk{2, -1, -1}), (StepStats{1, 0, 1}));
  EXPECT_THROW(step_stats(Walk{1}), invalid_input);
}

TEST(StepStats, SumsToLength) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const auto &w : enumerate(WalkClass::C, n)) {
      const auto s = step_stats(w);
      EXPECT_EQ(2 * s.d + s.l + s.r, n);
    }
  }
}

TEST(StaggeredPairing, Examples) {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  auto p = staggered_pairing(Walk{2, -2});
  EXPECT_EQ(p.pairs, (P{{1, 2}}));
  EXPECT_TRUE(p.staggered.empty());
  p = staggered_pairing(Walk{2, -1});
  EXPECT_TRUE(p.pairs.empty());
  EXPECT_EQ(p.staggered, std::vector<std::size_t>{1});
  p = staggered_pairing(Walk{2, 2, -2, -2});
  EXPECT_EQ(p.pairs, (P{{1, 4}, {2, 3}}));
  EXPECT_TRUE(p.staggered.empty());
}

// Each index is used once, and the count agrees with the open-area
// definition on every word up to length 8.
TEST(StaggeredPairing, MatchingAndDefinition) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto &s : oracle::all_words(n)) {
      const Walk w(s);
      const auto p = staggered_pairing(w);
      std::vector<int> used(n + 1, 0);
      for (auto [i, j] : p.pairs) {
        ++used[i];
        ++used[j];
        EXPECT_EQ(w[i - 1], 2);
        EXPECT_EQ(w[j - 1], -2);
      }
      for (auto i : p.staggered) ++used[i];
      EXPECT_TRUE(std::all_of(used.begin(), used.end(), [](int u) { return u <= 1; }));
      EXPECT_EQ(staggered_count(w), oracle::staggered(s)) << to_text(w);
    }
  }
}

TEST(CSplitBab, Examples) {
  auto s = c_split_bab(Walk{1, -1});
  EXPECT_EQ(s.b1, Walk{1});
  EXPECT_EQ(s.a, Walk{});
  EXPECT_EQ(s.b2rev, Walk{-1});
  s = c_split_bab(Walk{2, -1, 1, -2});
  EXPECT_EQ(s.b1, (Walk{2, -1}));
  EXPECT_EQ(s.a, Walk{});
  EXPECT_EQ(s.b2rev, (Walk{1, -2}));
  s = c_split_bab(Walk{1, 2, -2, -1});
  EXPECT_EQ(s.b1, Walk{1});
  EXPECT_EQ(s.a, (Walk{2, -2}));
  EXPECT_EQ(s.b2rev, Walk{-1});
  EXPECT_THROW(c_split_bab(Walk{2, -2}), invalid_input);
}

TEST(CSplitBab, PiecesHaveTheirClasses) {
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const auto &w : enumerate(WalkClass::C, n)) {
      const auto s = c_split_bab(w);
      EXPECT_TRUE(is_class(s.b1, WalkClass::B));
      EXPECT_TRUE(is_class(s.a, WalkClass::A));
      EXPECT_TRUE(is_class(reverse(s.b2rev), WalkClass::B));
      EXPECT_EQ(concat(s.b1, s.a, s.b2rev), w);
    }
  }
}

TEST(Text, RoundTrip) {
  EXPECT_EQ(to_text(Walk{1, 2, -2, -1}), "1 2 -2 -1");
  EXPECT_EQ(to_text(Walk{}), "");
  EXPECT_EQ(parse_walk("+1 +2 -2 -1"), (Walk{1, 2, -2, -1}));
  EXPECT_EQ(parse_walk(""), Walk{});
  EXPECT_THROW(parse_walk("1 0"), invalid_input);
  EXPECT_THROW(parse_walk("1,2"), invalid_input);
  EXPECT_THROW(parse_walk("- 1"), invalid_input);
}

}  // namespace
