#include "defdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "defdom/error.hpp"

namespace defdom {
namespace {

using Mask = std::uint32_t;

// Closed neighbourhoods as bitmasks, bit v-1 for vertex v.
std::vector<Mask> closed_neighbourhoods(const EdgeList& graph) {
  std::vector<Mask> nbr(graph.n);
  for (int v = 0; v < graph.n; ++v) nbr[v] = Mask{1} << v;
  for (const auto& [u, v] : graph.edges) {
    nbr[u - 1] |= Mask{1} << (v - 1);
    nbr[v - 1] |= Mask{1} << (u - 1);
  }
  return nbr;
}

class Matcher {
 public:
  Matcher(const std::vector<Mask>& nbr, Mask defenders) : nbr_(nbr), defenders_(defenders) {}

  bool saturates(Mask attack) {
    if (std::popcount(attack) > std::popcount(defenders_)) return false;
    std::fill(std::begin(owner_), std::end(owner_), -1);
    for (Mask rest = attack; rest; rest &= rest - 1) {
      seen_ = 0;
      if (!augment(std::countr_zero(rest))) return false;
    }
    return true;
  }

 private:
  bool augment(int a) {
    for (Mask cand = nbr_[a] & defenders_ & ~seen_; cand; cand &= cand - 1) {
      const int d = std::countr_zero(cand);
      if (seen_ >> d & 1) continue;
      seen_ |= Mask{1} << d;
      if (owner_[d] < 0 || augment(owner_[d])) {
        owner_[d] = a;
        return true;
      }
    }
    return false;
  }

  const std::vector<Mask>& nbr_;
  Mask defenders_;
  Mask seen_ = 0;
  int owner_[32];
};

// Every c-subset of {0..n-1}; stops early when visit returns false.
template <typename Visit>
bool for_each_subset(int n, int c, Visit visit) {
  if (c == 0) return visit(Mask{0});
  if (c > n) return true;
  Mask s = (Mask{1} << c) - 1;
  const Mask limit = Mask{1} << n;
  while (s < limit) {
    if (!visit(s)) return false;
    // Gosper's hack: next larger integer with the same popcount.
    const Mask low = s & -s;
    const Mask ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
  return true;
}

bool defensive(const std::vector<Mask>& nbr, Mask defenders, int n, int k) {
  Matcher m(nbr, defenders);
  const int top = std::min(k, n);
  for (int c = 1; c <= top; ++c) {
    if (!for_each_subset(n, c, [&](Mask a) { return m.saturates(a); })) return false;
  }
  return true;
}

std::vector<Vertex> members(Mask s) {
  std::vector<Vertex> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

// c-subsets of {from..n-1} in lexicographic order of their sorted lists.
template <typename Visit>
bool for_each_lex_subset(int n, int c, int from, Mask chosen, Visit& visit) {
  if (c == 0) return visit(chosen);
  for (int v = from; v <= n - c; ++v) {
    if (!for_each_lex_subset(n, c - 1, v + 1, chosen | Mask{1} << v, visit)) return false;
  }
  return true;
}

void check_size(const EdgeList& graph, int cap) {
  if (graph.n > cap) {
    throw TooLarge("brute force is limited to " + std::to_string(cap) + " vertices, got " +
                   std::to_string(graph.n));
  }
  if (graph.n > 31) throw TooLarge("brute force supports at most 31 vertices");
}

}  // namespace

bool is_k_defensive_bruteforce(const EdgeList& graph, std::span<const Vertex> defenders, int k,
                               int cap) {
  if (k < 1) throw BadParameters("k must be at least 1");
  check_size(graph, cap);
  Mask d = 0;
  for (Vertex v : defenders) {
    if (v < 1 || v > graph.n) throw BadParameters("defender " + std::to_string(v) + " out of range");
    d |= Mask{1} << (v - 1);
  }
  return defensive(closed_neighbourhoods(graph), d, graph.n, k);
}

std::pair<int, std::vector<Vertex>> min_defensive_bruteforce(const EdgeList& graph, int k, int cap) {
  if (k < 1) throw BadParameters("k must be at least 1");
  check_size(graph, cap);
  if (graph.n == 0) throw EmptyGraph();
  const auto nbr = closed_neighbourhoods(graph);
  const int n = graph.n;
  // An attack of min(k, n) vertices needs that many distinct defenders.
  for (int c = std::min(k, n); c <= n; ++c) {
    Mask found = 0;
    bool hit = false;
    auto visit = [&](Mask s) {
      if (!defensive(nbr, s, n, k)) return true;
      found = s;
      hit = true;
      return false;
    };
    for_each_lex_subset(n, c, 0, Mask{0}, visit);
    if (hit) return {c, members(found)};
  }
  // The whole vertex set always defends, so this is unreachable.
  return {n, members((Mask{1} << n) - 1)};
}

}  // namespace defdom
