#pragma once

#include <span>
#include <utility>
#include <vector>

#include "defdom/rational.hpp"

namespace defdom {

/// 1-based vertex index.
using Vertex = int;

struct Interval {
  Rational left;
  Rational right;
};

using IntervalList = std::vector<Interval>;

/// Undirected simple graph on vertices 1..n, used by the structure-free
/// checkers.
struct EdgeList {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted
};

/// Proper interval graph in canonical left-endpoint order.
///
/// Adjacency is fully described by the closed-neighbourhood extremes:
/// for u < v, u ~ v iff max_nbr(u) >= v. Immutable once constructed.
class ProperIntervalGraph {
 public:
  ProperIntervalGraph() = default;

  int n() const { return static_cast<int>(max_nbr_.size()) - 1; }

  /// max N[v]; 1-based.
  Vertex max_nbr(Vertex v) const { return max_nbr_[v]; }
  /// min N[v]; 1-based.
  Vertex min_nbr(Vertex v) const { return min_nbr_[v]; }

  /// maxN for vertices 1..n in order.
  std::span<const Vertex> max_nbrs() const { return std::span(max_nbr_).subspan(1); }
  std::span<const Vertex> min_nbrs() const { return std::span(min_nbr_).subspan(1); }

  bool adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return max_nbr_[u] >= v;
  }

  friend bool operator==(const ProperIntervalGraph&, const ProperIntervalGraph&) = default;

 private:
  friend ProperIntervalGraph from_neighbor_ranges(std::span<const Vertex> max_nbr);

  // Slot 0 is the empty sentinel so that vertex v lives at index v.
  std::vector<Vertex> max_nbr_{0};
  std::vector<Vertex> min_nbr_{0};
};

/// Canonical graph of a proper interval family (closed intervals).
/// Throws ProperViolation naming the first offending pair of input positions.
ProperIntervalGraph from_intervals(const IntervalList& intervals);

/// Validates maxN (1-based values, one per vertex) and derives minN.
/// Throws InvalidRanges on a non-monotone or out-of-range sequence.
ProperIntervalGraph from_neighbor_ranges(std::span<const Vertex> max_nbr);

/// N[[i..j]] as the range (minN[i], maxN[j]).
std::pair<Vertex, Vertex> neighborhood_of_range(const ProperIntervalGraph& g, Vertex i, Vertex j);

bool is_connected(const ProperIntervalGraph& g);

/// Maximal consecutive vertex ranges with no edge between them.
std::vector<std::pair<Vertex, Vertex>> components(const ProperIntervalGraph& g);

/// Induced subgraph on [first..last], renumbered from 1.
ProperIntervalGraph restrict_to(const ProperIntervalGraph& g, Vertex first, Vertex last);

bool are_twins(const ProperIntervalGraph& g, Vertex u, Vertex v);

EdgeList to_edge_list(const ProperIntervalGraph& g);

/// A proper interval model of g with integer left endpoints, suitable for
/// writing out in the `intervals` format.
IntervalList to_intervals(const ProperIntervalGraph& g);

}  // namespace defdom
