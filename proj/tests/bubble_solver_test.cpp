#include <gtest/gtest.h>

#include "defdom/bubble_solver.hpp"
#include "defdom/error.hpp"
#include "defdom/greedy.hpp"
#include "support.hpp"

namespace defdom {
namespace {

using testing::path;
using V = std::vector<Vertex>;
using Seg = BubbleSolver::Segment;

TEST(OffsetMinHeap, SlackIsKeyMinusOffset) {
  OffsetMinHeap h(5);
  h.push(3, 5);
  h.shift(5);
  EXPECT_EQ(h.top_key() - h.offset(), 0);

  OffsetMinHeap g(5);
  g.push(1, 7);
  g.push(2, 9);
  g.shift(4);
  EXPECT_EQ(g.top(), 1);
  EXPECT_EQ(g.slack(g.top()), 3);
  const auto before = g.snapshot();
  g.shift(2);
  EXPECT_EQ(g.snapshot(), before);
  EXPECT_EQ(g.slack(g.top()), 1);
}

TEST(OffsetMinHeap, TiesGoToTheHigherId) {
  OffsetMinHeap h(10);
  h.push(2, 5);
  h.push(7, 5);
  h.push(4, 5);
  EXPECT_EQ(h.top(), 7);
  h.erase(7);
  EXPECT_EQ(h.top(), 4);
  EXPECT_FALSE(h.contains(7));
}

TEST(OffsetMinHeap, UpdateAndCounters) {
  OffsetMinHeap h(10);
  for (int id = 1; id <= 8; ++id) h.push(id, 100 - id);
  EXPECT_EQ(h.top(), 8);
  h.update(3, 1);
  EXPECT_EQ(h.top(), 3);
  h.update(3, 1);
  h.update(3, 200);
  EXPECT_EQ(h.top(), 8);
  EXPECT_EQ(h.key(3), 200);
  h.erase(8);
  EXPECT_EQ(h.top(), 7);
  EXPECT_EQ(h.inserts(), 8);
  EXPECT_EQ(h.deletes(), 1);
  EXPECT_EQ(h.rekeys(), 2);
  EXPECT_EQ(h.size(), 7);
}

TEST(OffsetMinHeap, MatchesSortedOrder) {
  SplitMix64 rng(1);
  OffsetMinHeap h(200);
  std::vector<std::int64_t> key(201, -1);
  for (int op = 0; op < 20000; ++op) {
    const int id = 1 + static_cast<int>(rng.below(200));
    const auto k = static_cast<std::int64_t>(rng.below(50));
    if (key[id] < 0) {
      h.push(id, k);
      key[id] = k;
    } else if (rng.below(2)) {
      h.update(id, k);
      key[id] = k;
    } else {
      h.erase(id);
      key[id] = -1;
    }
    int best = 0;
    for (int i = 1; i <= 200; ++i) {
      if (key[i] >= 0 && (best == 0 || key[i] < key[best] || (key[i] == key[best] && i > best))) best = i;
    }
    if (best == 0) {
      ASSERT_TRUE(h.empty());
    } else {
      ASSERT_EQ(h.top(), best);
    }
  }
}

TEST(SolveBubble, Examples) {
  EXPECT_EQ(solve_bubble(bubbles_from_pig(path(5)), 2), (V{2, 3, 5}));
  EXPECT_EQ(solve_bubble(bubbles_from_pig(testing::complete(4)), 2), (V{3, 4}));
  EXPECT_EQ(solve_bubble(bubbles_from_pig(testing::diamond()), 2), (V{3, 4}));
}

TEST(SolveBubble, Errors) {
  EXPECT_THROW(solve_bubble(LinearBubbleModel{}, 1), EmptyGraph);
  EXPECT_THROW(solve_bubble(path(3), 0), BadParameters);
  const auto lbm = bubbles_from_pig(path(3));
  EXPECT_THROW(BubbleSolver(lbm, 3), BadParameters);
  EXPECT_THROW(BubbleSolver(lbm, 0), BadParameters);
}

TEST(SolveBubble, ComponentsAndLargeK) {
  EXPECT_EQ(solve_bubble(testing::ranges({2, 2, 4, 4}), 1), (V{2, 4}));
  EXPECT_EQ(solve_bubble(testing::ranges({1, 3, 4, 4}), 2), (V{1, 3, 4}));
  EXPECT_EQ(solve_bubble(path(4), 7), (V{1, 2, 3, 4}));
}

TEST(BubbleSolverTrace, PathOfFive) {
  const auto lbm = bubbles_from_pig(path(5));
  BubbleSolver s(lbm, 2, true);
  s.add_new_vertices(0);
  EXPECT_EQ(s.last_index(), 0);
  EXPECT_TRUE(s.defenders().empty());

  s.add_new_vertices(2);
  EXPECT_EQ(s.first_index(), 1);
  EXPECT_EQ(s.last_index(), 2);
  EXPECT_EQ(s.defenders(), (V{2, 3}));
  EXPECT_EQ(s.segments(), (std::vector<Seg>{{2, 1}, {3, 1}}));
  EXPECT_EQ(s.defended_by(2), 1);
  EXPECT_EQ(s.defended_by(3), 2);
  EXPECT_EQ(s.defended_by(1), std::nullopt);
  EXPECT_EQ(s.slack(), 2);
  s.check_invariants();

  const auto keys = s.heap().snapshot();
  const auto offset = s.heap().offset();
  s.shift(2);
  EXPECT_EQ(s.heap().snapshot(), keys);
  EXPECT_EQ(s.heap().offset(), offset + 2);
  EXPECT_EQ(s.first_index(), 3);
  EXPECT_EQ(s.last_index(), 4);
  EXPECT_EQ(s.defended_by(2), 3);
  EXPECT_EQ(s.defended_by(3), 4);
  EXPECT_EQ(s.slack(), 0);
  EXPECT_EQ(s.bottleneck(), 4);
  s.check_invariants();

  s.remove_left(0);
  EXPECT_EQ(s.segments().size(), 2u);
  s.remove_left(2);
  EXPECT_TRUE(s.segments().empty());
  EXPECT_TRUE(s.heap().empty());
  EXPECT_EQ(s.defenders(), (V{2, 3}));
  EXPECT_THROW(s.remove_left(1), Overflow);

  s.add_new_vertices(1);
  EXPECT_EQ(s.defenders(), (V{2, 3, 5}));
  EXPECT_THROW(s.add_new_vertices(1), Overflow);
}

TEST(BubbleSolverTrace, DiamondInitialisation) {
  const auto lbm = bubbles_from_pig(testing::diamond());
  BubbleSolver s(lbm, 2, true);
  s.add_new_vertices(2);
  EXPECT_EQ(s.defenders(), (V{3, 4}));
  EXPECT_EQ(s.defenders_in(2), 1);
  EXPECT_EQ(s.defenders_in(3), 1);
}

TEST(BubbleSolverTrace, CliqueNeverReachesZeroSlack) {
  const auto lbm = bubbles_from_pig(testing::complete(4));
  BubbleSolver s(lbm, 2, true);
  s.add_new_vertices(2);
  EXPECT_EQ(s.segments(), (std::vector<Seg>{{1, 2}}));
  EXPECT_EQ(s.slack(), 2);
  while (s.step()) EXPECT_GT(s.slack(), -1);
  EXPECT_EQ(s.stats().bottlenecks, 0);
  EXPECT_EQ(s.last_index(), 4);
}

TEST(BubbleSolverTrace, RemoveLeftDropsPartOfABubble) {
  const auto lbm = bubbles_from_pig(testing::complete(5));
  BubbleSolver s(lbm, 3, true);
  s.add_new_vertices(3);
  s.remove_left(2);
  EXPECT_EQ(s.segments(), (std::vector<Seg>{{1, 1}}));
  EXPECT_EQ(s.defenders(), (V{3, 4, 5}));
}

TEST(Properties, AgreesWithGreedyUnderValidation) {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = testing::random_pig(rng, 1 + static_cast<int>(rng.below(trial < 2000 ? 14 : 200)));
    const int k = 1 + static_cast<int>(rng.below(g.n()));
    BubbleSolverStats st;
    const auto lbm = bubbles_from_pig(g);
    ASSERT_EQ(solve_bubble(lbm, k, &st, true), solve_greedy(g, k)) << "trial " << trial;
    ASSERT_LE(st.heap_inserts + st.heap_deletes, 2 * lbm.size());
    ASSERT_LE(st.loop_iterations, 2 * lbm.size() + 2);
    ASSERT_LE(st.list_ops, 8 * lbm.size());
  }
}

TEST(Properties, AgreesOnGeneratedBubbleStructures) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto cb = gen_random_bubbles(60, 8, 6, seed);
    const auto lbm = linear_from_compact(cb);
    const auto g = pig_from_bubbles(cb);
    for (int k : {1, 2, 5, 17}) {
      ASSERT_EQ(solve_bubble(lbm, k, nullptr, true), solve_greedy(g, k)) << "seed " << seed << " k " << k;
    }
  }
}

}  // namespace
}  // namespace defdom
