#include "defdom/pig.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "defdom/error.hpp"

namespace defdom {

ProperIntervalGraph from_intervals(const IntervalList& intervals) {
  if (intervals.empty()) throw EmptyGraph();
  const int n = static_cast<int>(intervals.size());
  for (int i = 0; i < n; ++i) {
    if (intervals[i].right < intervals[i].left)
      throw BadParameters("interval " + std::to_string(i + 1) + " has right < left");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = intervals[a];
    const auto& y = intervals[b];
    if (x.left != y.left) return x.left < y.left;
    return x.right < y.right;
  });

  // In (left, right) order the family is proper iff both endpoints strictly
  // increase between non-identical neighbours.
  for (int t = 0; t + 1 < n; ++t) {
    const auto& a = intervals[order[t]];
    const auto& b = intervals[order[t + 1]];
    const bool identical = a.left == b.left && a.right == b.right;
    if (!identical && !(a.left < b.left && a.right < b.right)) {
      // Equal lefts: b contains a. Otherwise b sits inside a.
      const bool b_outer = a.left == b.left;
      const int outer = (b_outer ? order[t + 1] : order[t]) + 1;
      const int inner = (b_outer ? order[t] : order[t + 1]) + 1;
      throw ProperViolation(outer, inner);
    }
  }

  std::vector<Vertex> max_nbr(n);
  int reach = 0;
  for (int t = 0; t < n; ++t) {
    reach = std::max(reach, t);
    const auto& r = intervals[order[t]].right;
    while (reach + 1 < n && intervals[order[reach + 1]].left <= r) ++reach;
    max_nbr[t] = reach + 1;
  }
  return from_neighbor_ranges(max_nbr);
}

ProperIntervalGraph from_neighbor_ranges(std::span<const Vertex> max_nbr) {
  const int n = static_cast<int>(max_nbr.size());
  if (n == 0) throw InvalidRanges("empty neighbour range list");
  for (int j = 1; j <= n; ++j) {
    const Vertex m = max_nbr[j - 1];
    if (m < j || m > n)
      throw InvalidRanges("maxN[" + std::to_string(j) + "] = " + std::to_string(m) +
                          " outside [" + std::to_string(j) + ".." + std::to_string(n) + "]");
    if (j > 1 && m < max_nbr[j - 2])
      throw InvalidRanges("maxN decreases at vertex " + std::to_string(j));
  }

  ProperIntervalGraph g;
  g.max_nbr_.assign(n + 1, 0);
  g.min_nbr_.assign(n + 1, 0);
  std::copy(max_nbr.begin(), max_nbr.end(), g.max_nbr_.begin() + 1);
  Vertex i = 1;
  for (Vertex j = 1; j <= n; ++j) {
    while (g.max_nbr_[i] < j) ++i;
    g.min_nbr_[j] = i;
  }
  return g;
}

std::pair<Vertex, Vertex> neighborhood_of_range(const ProperIntervalGraph& g, Vertex i, Vertex j) {
  return {g.min_nbr(i), g.max_nbr(j)};
}

bool is_connected(const ProperIntervalGraph& g) {
  for (Vertex j = 1; j < g.n(); ++j)
    if (g.max_nbr(j) == j) return false;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> components(const ProperIntervalGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  Vertex start = 1;
  for (Vertex j = 1; j <= g.n(); ++j) {
    if (g.max_nbr(j) == j) {
      out.emplace_back(start, j);
      start = j + 1;
    }
  }
  return out;
}

ProperIntervalGraph restrict_to(const ProperIntervalGraph& g, Vertex first, Vertex last) {
  std::vector<Vertex> m;
  m.reserve(last - first + 1);
  for (Vertex v = first; v <= last; ++v) m.push_back(std::min(g.max_nbr(v), last) - first + 1);
  return from_neighbor_ranges(m);
}

bool are_twins(const ProperIntervalGraph& g, Vertex u, Vertex v) {
  return g.adjacent(u, v) && g.min_nbr(u) == g.min_nbr(v) && g.max_nbr(u) == g.max_nbr(v);
}

EdgeList to_edge_list(const ProperIntervalGraph& g) {
  EdgeList e;
  e.n = g.n();
  for (Vertex u = 1; u <= g.n(); ++u)
    for (Vertex v = u + 1; v <= g.max_nbr(u); ++v) e.edges.emplace_back(u, v);
  return e;
}

IntervalList to_intervals(const ProperIntervalGraph& g) {
  // [v, maxN[v] + (n+1+v)/(2(n+1))]: right ends stay strictly inside
  // (maxN[v], maxN[v]+1) and strictly increase, so no containment.
  const std::int64_t n = g.n();
  const std::int64_t den = 2 * (n + 1);
  IntervalList out;
  out.reserve(n);
  for (Vertex v = 1; v <= g.n(); ++v)
    out.push_back({Rational(v), Rational(den * g.max_nbr(v) + n + 1 + v, den)});
  return out;
}

}  // namespace defdom
