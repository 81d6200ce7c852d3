#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "defdom/error.hpp"
#include "defdom/pig.hpp"
#include "support.hpp"

namespace defdom {
namespace {

using testing::diamond;
using testing::path;
using testing::ranges;

std::vector<Vertex> max_of(const ProperIntervalGraph& g) {
  return {g.max_nbrs().begin(), g.max_nbrs().end()};
}
std::vector<Vertex> min_of(const ProperIntervalGraph& g) {
  return {g.min_nbrs().begin(), g.min_nbrs().end()};
}

TEST(FromIntervals, SingleInterval) {
  const auto g = from_intervals({{0, 1}});
  EXPECT_EQ(g.n(), 1);
  EXPECT_EQ(max_of(g), std::vector<Vertex>{1});
}

TEST(FromIntervals, ThreeIntervalsGivePath) {
  const auto g = from_intervals({{0, 1}, {Rational(1, 2), Rational(3, 2)}, {Rational(6, 5), Rational(11, 5)}});
  EXPECT_EQ(max_of(g), (std::vector<Vertex>{2, 3, 3}));
}

TEST(FromIntervals, ContainmentNamesThePair) {
  try {
    from_intervals({{0, 2}, {Rational(1, 2), 1}});
    FAIL() << "expected ProperViolation";
  } catch (const ProperViolation& e) {
    EXPECT_EQ(e.outer(), 1);
    EXPECT_EQ(e.inner(), 2);
  }
}

TEST(FromIntervals, ContainmentWithSharedLeftEndpoint) {
  try {
    from_intervals({{0, 1}, {0, 2}});
    FAIL() << "expected ProperViolation";
  } catch (const ProperViolation& e) {
    EXPECT_EQ(e.outer(), 2);
    EXPECT_EQ(e.inner(), 1);
  }
}

TEST(FromIntervals, TouchingEndpointsAreAdjacent) {
  EXPECT_EQ(max_of(from_intervals({{1, 2}, {0, 1}})), (std::vector<Vertex>{2, 2}));
}

TEST(FromIntervals, IdenticalIntervalsAreTwins) {
  const auto g = from_intervals({{0, 1}, {0, 1}, {3, 4}});
  EXPECT_EQ(max_of(g), (std::vector<Vertex>{2, 2, 3}));
  EXPECT_TRUE(are_twins(g, 1, 2));
}

TEST(FromIntervals, EmptyListThrows) { EXPECT_THROW(from_intervals({}), EmptyGraph); }

TEST(FromIntervals, MatchesPairwiseIntersection) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(50));
    const auto list = random_unit_intervals(n, Rational(1 + static_cast<int>(rng.below(8)), 8), rng.next());
    const auto g = from_intervals(list);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return list[a].left != list[b].left ? list[a].left < list[b].left : list[a].right < list[b].right;
    });
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const auto& a = list[order[u]];
        const auto& b = list[order[v]];
        const bool meet = !(a.right < b.left || b.right < a.left);
        ASSERT_EQ(g.adjacent(u + 1, v + 1), meet) << "trial " << trial;
      }
    }
  }
}

TEST(FromNeighborRanges, PathEdges) {
  const auto e = to_edge_list(ranges({2, 3, 4, 5, 5}));
  EXPECT_EQ(e.edges, (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(FromNeighborRanges, DiamondEdges) {
  const auto e = to_edge_list(diamond());
  EXPECT_EQ(e.edges, (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_TRUE(are_twins(diamond(), 2, 3));
}

TEST(FromNeighborRanges, IsolatedVerticesAreValid) {
  const auto g = ranges({1, 2});
  EXPECT_EQ(g.n(), 2);
  EXPECT_TRUE(to_edge_list(g).edges.empty());
  EXPECT_FALSE(is_connected(g));
}

TEST(FromNeighborRanges, RejectsBadSequences) {
  EXPECT_THROW(ranges({2, 1, 3}), InvalidRanges);
  EXPECT_THROW(ranges({3, 2, 3}), InvalidRanges);
  EXPECT_THROW(ranges({2, 3, 4}), InvalidRanges);
  EXPECT_THROW(ranges({0}), InvalidRanges);
  EXPECT_THROW(ranges({}), Error);
}

TEST(FromNeighborRanges, DerivesMinN) {
  EXPECT_EQ(min_of(path(5)), (std::vector<Vertex>{1, 1, 2, 3, 4}));
  EXPECT_EQ(min_of(diamond()), (std::vector<Vertex>{1, 1, 1, 2}));
}

TEST(NeighborhoodOfRange, Examples) {
  EXPECT_EQ(neighborhood_of_range(path(5), 3, 4), std::make_pair(2, 5));
  EXPECT_EQ(neighborhood_of_range(path(5), 1, 1), std::make_pair(1, 2));
  EXPECT_EQ(neighborhood_of_range(diamond(), 2, 3), std::make_pair(1, 4));
}

TEST(NeighborhoodOfRange, EqualsUnionOfClosedNeighbourhoods) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_pig(rng, 1 + static_cast<int>(rng.below(30)));
    for (Vertex i = 1; i <= g.n(); ++i) {
      for (Vertex j = i; j <= g.n(); ++j) {
        std::set<Vertex> nb;
        for (Vertex a = i; a <= j; ++a) {
          for (Vertex v = 1; v <= g.n(); ++v)
            if (v == a || g.adjacent(a, v)) nb.insert(v);
        }
        const auto [lo, hi] = neighborhood_of_range(g, i, j);
        ASSERT_EQ(*nb.begin(), lo);
        ASSERT_EQ(*nb.rbegin(), hi);
        ASSERT_EQ(static_cast<int>(nb.size()), hi - lo + 1);
      }
    }
  }
}

TEST(Components, Examples) {
  EXPECT_TRUE(is_connected(path(5)));
  EXPECT_EQ(components(path(5)), (std::vector<std::pair<Vertex, Vertex>>{{1, 5}}));
  const auto two = ranges({2, 2, 4, 4});
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(components(two), (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {3, 4}}));
  EXPECT_TRUE(is_connected(ranges({1})));
}

TEST(Twins, Examples) {
  EXPECT_TRUE(are_twins(diamond(), 2, 3));
  EXPECT_FALSE(are_twins(path(5), 2, 3));
  EXPECT_TRUE(are_twins(ranges({3, 3, 3}), 1, 3));
}

TEST(Properties, SymmetryAndConsecutiveTwins) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_pig(rng, 1 + static_cast<int>(rng.below(25)));
    const int n = g.n();
    EXPECT_EQ(g.max_nbr(n), n);
    EXPECT_EQ(g.min_nbr(1), 1);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        ASSERT_EQ(g.max_nbr(u) >= v, g.min_nbr(v) <= u);
        if (are_twins(g, u, v)) {
          for (Vertex w = u + 1; w < v; ++w) ASSERT_TRUE(are_twins(g, u, w));
        }
      }
    }
  }
}

TEST(Properties, IntervalModelRoundTrip) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_pig(rng, 1 + static_cast<int>(rng.below(40)));
    ASSERT_EQ(from_intervals(to_intervals(g)), g);
  }
}

TEST(RestrictTo, RenumbersFromOne) {
  const auto g = ranges({2, 2, 4, 5, 5});
  EXPECT_EQ(max_of(restrict_to(g, 3, 5)), (std::vector<Vertex>{2, 3, 3}));
}

}  // namespace
}  // namespace defdom
