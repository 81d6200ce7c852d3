#pragma once

#include <vector>

#include "defdom/pig.hpp"

namespace defdom {

/// A non-empty bubble of a compact (2-D) bubble structure.
struct BubbleCell {
  int row = 0;
  int size = 0;

  friend bool operator==(const BubbleCell&, const BubbleCell&) = default;
};

/// Columns of non-empty bubbles, each column listed in increasing row order.
///
/// Vertex u in column j+1 is adjacent to v in column j iff row(u) < row(v);
/// every column is a clique; there are no other edges.
struct CompactBubbleStructure {
  std::vector<std::vector<BubbleCell>> columns;

  int vertex_count() const;
  int bubble_count() const;

  friend bool operator==(const CompactBubbleStructure&, const CompactBubbleStructure&) = default;
};

/// Throws InvalidBubbles on an empty column, a zero size, or rows that are
/// not strictly increasing within a column.
void validate(const CompactBubbleStructure& cb);

struct Bubble {
  int size = 0;
  Vertex min_v = 0;
  Vertex max_v = 0;
  Vertex min_nbr = 0;
  Vertex max_nbr = 0;

  friend bool operator==(const Bubble&, const Bubble&) = default;
};

/// Linear bubble representation. Bubble i (1-based) holds vertices
/// min_v..max_v; index 0 is the artificial empty bubble with max_v = 0.
class LinearBubbleModel {
 public:
  LinearBubbleModel() : bubbles_(1) {}
  explicit LinearBubbleModel(std::vector<Bubble> bubbles);

  int size() const { return static_cast<int>(bubbles_.size()) - 1; }
  int n() const { return bubbles_.back().max_v; }

  const Bubble& operator[](int i) const { return bubbles_[i]; }

  /// Bubble holding vertex v, by binary search.
  int bubble_of(Vertex v) const;

  friend bool operator==(const LinearBubbleModel&, const LinearBubbleModel&) = default;

 private:
  std::vector<Bubble> bubbles_;
};

/// Twin classes of g as maximal runs with equal (minN, maxN).
LinearBubbleModel bubbles_from_pig(const ProperIntervalGraph& g);

/// Linear model of a compact structure via the per-column-pair pMax sweep.
LinearBubbleModel linear_from_compact(const CompactBubbleStructure& cb);

/// Graph defined by a compact structure, vertices in linear-bubble order.
ProperIntervalGraph pig_from_bubbles(const CompactBubbleStructure& cb);

/// A compact structure whose bubbles are exactly the twin classes of g.
CompactBubbleStructure compact_from_pig(const ProperIntervalGraph& g);

/// Graph whose maxN is read off a linear model.
ProperIntervalGraph pig_from_linear(const LinearBubbleModel& lbm);

}  // namespace defdom
