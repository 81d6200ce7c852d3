#include "defdom/defense.hpp"

#include <algorithm>

namespace defdom {

std::optional<DefenseAssignment> defends_consecutive(const ProperIntervalGraph& g,
                                                     std::span<const Vertex> defenders,
                                                     AttackRange attack, std::int64_t* steps) {
  std::int64_t count = 0;
  // p is one past the rightmost unused defender.
  auto p = static_cast<std::ptrdiff_t>(
      std::upper_bound(defenders.begin(), defenders.end(), g.max_nbr(attack.last)) -
      defenders.begin());
  DefenseAssignment f;
  f.pairs.resize(attack.size());
  bool ok = true;
  for (Vertex a = attack.last; a >= attack.first; --a) {
    ++count;
    while (p > 0 && defenders[p - 1] > g.max_nbr(a)) {
      ++count;
      --p;
    }
    if (p == 0 || defenders[p - 1] < g.min_nbr(a)) {
      ok = false;
      break;
    }
    ++count;
    --p;
    f.pairs[a - attack.first] = {defenders[p], a};
  }
  if (steps) *steps += count;
  if (!ok) return std::nullopt;
  return f;
}

namespace {

bool augment(int a, const std::vector<std::vector<int>>& adj, std::vector<int>& match_of_defender,
             std::vector<int>& seen, int stamp) {
  for (int d : adj[a]) {
    if (seen[d] == stamp) continue;
    seen[d] = stamp;
    if (match_of_defender[d] < 0 || augment(match_of_defender[d], adj, match_of_defender, seen, stamp)) {
      match_of_defender[d] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

bool defends_matching(const EdgeList& graph, std::span<const Vertex> defenders,
                      std::span<const Vertex> attack) {
  if (attack.size() > defenders.size()) return false;
  const int n = graph.n;
  std::vector<int> defender_slot(n + 1, -1);
  for (std::size_t i = 0; i < defenders.size(); ++i) defender_slot[defenders[i]] = static_cast<int>(i);
  std::vector<int> attack_slot(n + 1, -1);
  for (std::size_t i = 0; i < attack.size(); ++i) attack_slot[attack[i]] = static_cast<int>(i);

  // Defender d may take attacker a iff a is in N[d].
  std::vector<std::vector<int>> adj(attack.size());
  for (std::size_t i = 0; i < attack.size(); ++i)
    if (defender_slot[attack[i]] >= 0) adj[i].push_back(defender_slot[attack[i]]);
  for (const auto& [u, v] : graph.edges) {
    if (attack_slot[u] >= 0 && defender_slot[v] >= 0) adj[attack_slot[u]].push_back(defender_slot[v]);
    if (attack_slot[v] >= 0 && defender_slot[u] >= 0) adj[attack_slot[v]].push_back(defender_slot[u]);
  }

  std::vector<int> match_of_defender(defenders.size(), -1);
  std::vector<int> seen(defenders.size(), -1);
  for (std::size_t a = 0; a < attack.size(); ++a)
    if (!augment(static_cast<int>(a), adj, match_of_defender, seen, static_cast<int>(a))) return false;
  return true;
}

std::optional<AttackRange> first_undefended(const ProperIntervalGraph& g,
                                            std::span<const Vertex> defenders, int k) {
  const int n = g.n();
  const int width = std::min(k, n);
  for (Vertex last = width; last <= n; ++last) {
    const AttackRange a{last - width + 1, last};
    if (!defends_consecutive(g, defenders, a)) return a;
  }
  return std::nullopt;
}

bool is_k_defensive(const ProperIntervalGraph& g, std::span<const Vertex> defenders, int k) {
  return !first_undefended(g, defenders, k).has_value();
}

bool is_bridged(const ProperIntervalGraph& g, std::span<const Vertex> attack) {
  std::vector<Vertex> a(attack.begin(), attack.end());
  std::sort(a.begin(), a.end());
  // Consecutive members are within distance two iff some vertex reaches
  // both, i.e. maxN[a_t] >= minN[a_{t+1}].
  for (std::size_t t = 0; t + 1 < a.size(); ++t)
    if (g.max_nbr(a[t]) < g.min_nbr(a[t + 1])) return false;
  return true;
}

AttackRange range_of(const ProperIntervalGraph&, std::span<const Vertex> attack) {
  const auto [lo, hi] = std::minmax_element(attack.begin(), attack.end());
  return {*lo, *hi};
}

}  // namespace defdom
