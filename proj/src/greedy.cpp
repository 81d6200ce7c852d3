#include "defdom/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "defdom/error.hpp"

namespace defdom {
namespace {

// Feasibility of the rightmost scan when every defender is <= maxN[last].
bool window_defended(const ProperIntervalGraph& g, const std::vector<Vertex>& d, Vertex first,
                     Vertex last, std::int64_t& steps) {
  auto p = static_cast<std::ptrdiff_t>(d.size());
  for (Vertex a = last; a >= first; --a) {
    ++steps;
    while (p > 0 && d[p - 1] > g.max_nbr(a)) {
      ++steps;
      --p;
    }
    if (p == 0 || d[p - 1] < g.min_nbr(a)) return false;
    ++steps;
    --p;
  }
  return true;
}

std::vector<Vertex> greedy_connected(const ProperIntervalGraph& g, int k, GreedyStats& stats,
                                     const GreedyObserver& observer) {
  const int n = g.n();
  std::vector<Vertex> d;
  std::vector<char> in_d(n + 1, 0);
  for (Vertex j = 1; j <= n; ++j) {
    const Vertex first = std::max(1, j - k + 1);
    ++stats.windows;
    if (!window_defended(g, d, first, j, stats.defense_steps)) {
      // D lies inside [1..maxN[j]], so the vertices skipped here are exactly
      // the top of d.
      Vertex pick = g.max_nbr(j);
      std::ptrdiff_t run = 0;
      while (in_d[pick]) {
        ++stats.defense_steps;
        --pick;
        ++run;
      }
      assert(pick >= g.min_nbr(first));
      d.insert(d.end() - run, pick);
      in_d[pick] = 1;
      ++stats.additions;
#ifndef NDEBUG
      std::int64_t scratch = 0;
      assert(window_defended(g, d, first, j, scratch));
#endif
    }
    if (observer) observer(j, d);
  }
  return d;
}

}  // namespace

std::vector<Vertex> solve_greedy(const ProperIntervalGraph& g, int k, GreedyStats* stats,
                                 const GreedyObserver& observer) {
  if (g.n() == 0) throw EmptyGraph();
  if (k < 1) throw BadParameters("k must be at least 1");
  GreedyStats local;
  GreedyStats& s = stats ? *stats : local;

  std::vector<Vertex> out;
  for (const auto& [first, last] : components(g)) {
    const int size = last - first + 1;
    if (k >= size) {
      for (Vertex v = first; v <= last; ++v) out.push_back(v);
      continue;
    }
    const ProperIntervalGraph part = first == 1 && last == g.n() ? g : restrict_to(g, first, last);
    for (Vertex v : greedy_connected(part, k, s, observer)) out.push_back(v + first - 1);
  }
  return out;
}

}  // namespace defdom
