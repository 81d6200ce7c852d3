#pragma once

#include <span>
#include <utility>
#include <vector>

#include "defdom/pig.hpp"

namespace defdom {

inline constexpr int kDefensiveCheckCap = 16;
inline constexpr int kMinimumSearchCap = 12;

/// Checks every attack of at most min(k, n) vertices by bipartite matching.
/// Makes no use of interval structure. Throws TooLarge when n > cap.
bool is_k_defensive_bruteforce(const EdgeList& graph, std::span<const Vertex> defenders, int k,
                               int cap = kDefensiveCheckCap);

/// Minimum k-defensive set by exhaustive search over subsets in order of
/// cardinality, then lexicographically. Returns (size, sorted witness).
std::pair<int, std::vector<Vertex>> min_defensive_bruteforce(const EdgeList& graph, int k,
                                                             int cap = kMinimumSearchCap);

}  // namespace defdom
