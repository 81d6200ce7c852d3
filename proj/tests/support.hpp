#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "defdom/generators.hpp"
#include "defdom/pig.hpp"

namespace defdom::testing {

inline ProperIntervalGraph ranges(std::vector<Vertex> max_nbr) { return from_neighbor_ranges(max_nbr); }

inline ProperIntervalGraph path(int n) { return gen_family("path", n); }
inline ProperIntervalGraph complete(int n) { return gen_family("complete", n); }
inline ProperIntervalGraph diamond() { return ranges({3, 4, 4, 4}); }

/// Random monotone maxN with reach up to `width` past each vertex. With
/// `connected`, every vertex but the last reaches its successor.
inline ProperIntervalGraph random_pig(SplitMix64& rng, int n, int width, bool connected = false) {
  std::vector<Vertex> m(n);
  Vertex cur = 1;
  for (Vertex j = 1; j <= n; ++j) {
    const Vertex lo = connected && j < n ? j + 1 : j;
    const Vertex reach = std::min<Vertex>(n, j + static_cast<Vertex>(rng.below(width + 1)));
    cur = std::max({cur, reach, lo});
    m[j - 1] = cur;
  }
  return from_neighbor_ranges(m);
}

/// Random graph with a random width, so that both sparse and dense shapes
/// turn up.
inline ProperIntervalGraph random_pig(SplitMix64& rng, int n, bool connected = false) {
  const int width = 1 + static_cast<int>(rng.below(std::max(1, n / (1 + static_cast<int>(rng.below(8))))));
  return random_pig(rng, n, width, connected);
}

/// Every connected proper interval graph on n vertices in canonical order,
/// as maxN sequences.
inline void for_each_connected(int n, const std::function<void(const ProperIntervalGraph&)>& visit) {
  std::vector<Vertex> m(n);
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      visit(from_neighbor_ranges(m));
      return;
    }
    const Vertex lo = std::max(j == 1 ? 1 : m[j - 2], j < n ? j + 1 : j);
    for (Vertex v = lo; v <= n; ++v) {
      m[j - 1] = v;
      rec(j + 1);
    }
  };
  rec(1);
}

inline std::vector<Vertex> members(unsigned mask) {
  std::vector<Vertex> out;
  for (int v = 0; mask >> v; ++v)
    if (mask >> v & 1) out.push_back(v + 1);
  return out;
}

}  // namespace defdom::testing
