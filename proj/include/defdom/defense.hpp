#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "defdom/pig.hpp"

namespace defdom {

/// Consecutive attack [first..last].
struct AttackRange {
  Vertex first = 1;
  Vertex last = 0;

  int size() const { return last - first + 1; }

  friend bool operator==(const AttackRange&, const AttackRange&) = default;
};

struct DefensePair {
  Vertex defender = 0;
  Vertex attacker = 0;

  friend bool operator==(const DefensePair&, const DefensePair&) = default;
};

/// Defender -> attacker pairs, listed in increasing attacker order.
struct DefenseAssignment {
  std::vector<DefensePair> pairs;

  friend bool operator==(const DefenseAssignment&, const DefenseAssignment&) = default;
};

/// Rightmost monotonic defense of a sorted defender list against a
/// consecutive attack, or nullopt if none exists.
///
/// Attackers are scanned from last to first; each takes the rightmost
/// unused defender in its closed neighbourhood. `steps`, when given, is
/// incremented once per attacker handled and once per defender inspected.
std::optional<DefenseAssignment> defends_consecutive(const ProperIntervalGraph& g,
                                                     std::span<const Vertex> defenders,
                                                     AttackRange attack,
                                                     std::int64_t* steps = nullptr);

/// Feasibility of a defense on an arbitrary graph by maximum bipartite
/// matching between attackers and defenders.
bool defends_matching(const EdgeList& graph, std::span<const Vertex> defenders,
                      std::span<const Vertex> attack);

/// First consecutive attack of size min(k, n) that `defenders` fails.
std::optional<AttackRange> first_undefended(const ProperIntervalGraph& g,
                                            std::span<const Vertex> defenders, int k);

bool is_k_defensive(const ProperIntervalGraph& g, std::span<const Vertex> defenders, int k);

/// Every gap of the union of the attack's intervals is spanned by a vertex.
bool is_bridged(const ProperIntervalGraph& g, std::span<const Vertex> attack);

AttackRange range_of(const ProperIntervalGraph& g, std::span<const Vertex> attack);

}  // namespace defdom
