#include "defdom/bubbles.hpp"

#include <algorithm>
#include <iterator>
#include <list>
#include <string>

#include "defdom/error.hpp"

namespace defdom {

int CompactBubbleStructure::vertex_count() const {
  int total = 0;
  for (const auto& col : columns)
    for (const auto& b : col) total += b.size;
  return total;
}

int CompactBubbleStructure::bubble_count() const {
  int total = 0;
  for (const auto& col : columns) total += static_cast<int>(col.size());
  return total;
}

void validate(const CompactBubbleStructure& cb) {
  if (cb.columns.empty()) throw InvalidBubbles("bubble structure has no columns");
  for (std::size_t j = 0; j < cb.columns.size(); ++j) {
    const auto& col = cb.columns[j];
    const std::string where = "column " + std::to_string(j + 1);
    if (col.empty()) throw InvalidBubbles(where + " is empty");
    for (std::size_t p = 0; p < col.size(); ++p) {
      if (col[p].size <= 0) throw InvalidBubbles(where + ": bubble with non-positive size");
      if (col[p].row <= 0) throw InvalidBubbles(where + ": row numbers start at 1");
      if (p > 0 && col[p].row == col[p - 1].row)
        throw InvalidBubbles(where + ": duplicated row " + std::to_string(col[p].row));
      if (p > 0 && col[p].row < col[p - 1].row)
        throw InvalidBubbles(where + ": rows not increasing");
    }
  }
}

LinearBubbleModel::LinearBubbleModel(std::vector<Bubble> bubbles) : bubbles_(1) {
  bubbles_.reserve(bubbles.size() + 1);
  for (auto& b : bubbles) {
    const Bubble& prev = bubbles_.back();
    if (b.size <= 0 || b.min_v != prev.max_v + 1 || b.max_v != b.min_v + b.size - 1)
      throw InvalidBubbles("inconsistent bubble " + std::to_string(bubbles_.size()));
    if (b.max_nbr < b.max_v || b.min_nbr > b.min_v || b.max_nbr < prev.max_nbr ||
        b.min_nbr < prev.min_nbr)
      throw InvalidBubbles("non-monotone neighbourhood at bubble " +
                           std::to_string(bubbles_.size()));
    bubbles_.push_back(b);
  }
}

int LinearBubbleModel::bubble_of(Vertex v) const {
  auto it = std::lower_bound(bubbles_.begin() + 1, bubbles_.end(), v,
                             [](const Bubble& b, Vertex x) { return b.max_v < x; });
  return static_cast<int>(it - bubbles_.begin());
}

LinearBubbleModel bubbles_from_pig(const ProperIntervalGraph& g) {
  std::vector<Bubble> out;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (!out.empty() && out.back().min_nbr == g.min_nbr(v) && out.back().max_nbr == g.max_nbr(v)) {
      ++out.back().size;
      ++out.back().max_v;
    } else {
      out.push_back({1, v, v, g.min_nbr(v), g.max_nbr(v)});
    }
  }
  return LinearBubbleModel(std::move(out));
}

LinearBubbleModel linear_from_compact(const CompactBubbleStructure& cb) {
  validate(cb);
  const auto& cols = cb.columns;
  const int c = static_cast<int>(cols.size());

  // Global 1-based index of the first bubble of each column.
  std::vector<int> first(c + 1, 1);
  for (int j = 0; j < c; ++j) first[j + 1] = first[j] + static_cast<int>(cols[j].size());
  const int m = first[c] - 1;

  std::vector<int> p_max(m + 1), p_min(m + 1);
  for (int j = 0; j < c; ++j) {
    const auto& col = cols[j];
    const int len = static_cast<int>(col.size());
    const int col_last = first[j] + len - 1;

    // Decreasing rows: the last bubble of column j+1 strictly above row r.
    if (j + 1 < c) {
      const auto& next = cols[j + 1];
      int q = static_cast<int>(next.size()) - 1;
      for (int p = len - 1; p >= 0; --p) {
        while (q >= 0 && next[q].row >= col[p].row) --q;
        p_max[first[j] + p] = q >= 0 ? first[j + 1] + q : col_last;
      }
    } else {
      for (int p = 0; p < len; ++p) p_max[first[j] + p] = col_last;
    }

    // Increasing rows: the first bubble of column j-1 strictly below row r.
    if (j > 0) {
      const auto& prev = cols[j - 1];
      const int prev_len = static_cast<int>(prev.size());
      int q = 0;
      for (int p = 0; p < len; ++p) {
        while (q < prev_len && prev[q].row <= col[p].row) ++q;
        p_min[first[j] + p] = q < prev_len ? first[j - 1] + q : first[j];
      }
    } else {
      for (int p = 0; p < len; ++p) p_min[first[j] + p] = first[j];
    }
  }

  std::vector<Vertex> max_v(m + 1, 0);
  {
    int i = 1;
    for (const auto& col : cols)
      for (const auto& b : col) {
        max_v[i] = max_v[i - 1] + b.size;
        ++i;
      }
  }

  std::vector<Bubble> out;
  out.reserve(m);
  {
    int i = 1;
    for (const auto& col : cols)
      for (const auto& b : col) {
        out.push_back({b.size, max_v[i - 1] + 1, max_v[i], max_v[p_min[i] - 1] + 1, max_v[p_max[i]]});
        ++i;
      }
  }
  return LinearBubbleModel(std::move(out));
}

ProperIntervalGraph pig_from_bubbles(const CompactBubbleStructure& cb) {
  validate(cb);
  const auto& cols = cb.columns;
  const int c = static_cast<int>(cols.size());

  // Last vertex of each bubble, per column.
  std::vector<std::vector<Vertex>> last_vertex(c);
  Vertex v = 0;
  for (int j = 0; j < c; ++j)
    for (const auto& b : cols[j]) last_vertex[j].push_back(v += b.size);

  std::vector<Vertex> max_nbr;
  max_nbr.reserve(v);
  for (int j = 0; j < c; ++j) {
    for (const auto& b : cols[j]) {
      Vertex reach = last_vertex[j].back();
      if (j + 1 < c) {
        const auto& next = cols[j + 1];
        auto it = std::lower_bound(next.begin(), next.end(), b.row,
                                   [](const BubbleCell& x, int r) { return x.row < r; });
        if (it != next.begin()) reach = last_vertex[j + 1][std::distance(next.begin(), it) - 1];
      }
      max_nbr.insert(max_nbr.end(), b.size, reach);
    }
  }
  try {
    return from_neighbor_ranges(max_nbr);
  } catch (const InvalidRanges& e) {
    throw InvalidBubbles(std::string("bubble structure does not define a proper interval graph: ") +
                         e.what());
  }
}

CompactBubbleStructure compact_from_pig(const ProperIntervalGraph& g) {
  const LinearBubbleModel lbm = bubbles_from_pig(g);
  const int m = lbm.size();

  // Columns are the cliques [s .. maxN[s]] starting at s = 1; twin classes
  // never straddle such a boundary.
  std::vector<std::vector<int>> col_bubbles;
  for (int i = 1; i <= m;) {
    const Vertex end = lbm[i].max_nbr;
    col_bubbles.emplace_back();
    while (i <= m && lbm[i].max_v <= end) col_bubbles.back().push_back(i++);
  }

  // Rows come from one global order: each bubble of column j+1 goes right
  // before the first bubble of column j it is adjacent to. Only comparisons
  // between neighbouring columns carry meaning, so one shared order works.
  std::list<int> order;
  std::vector<std::list<int>::iterator> pos(m + 1);
  for (int b : col_bubbles[0]) pos[b] = order.insert(order.end(), b);
  for (std::size_t j = 0; j + 1 < col_bubbles.size(); ++j) {
    const auto& cur = col_bubbles[j];
    std::size_t q = 0;
    std::size_t prev_q = cur.size() + 1;
    std::list<int>::iterator prev_it;
    for (int b : col_bubbles[j + 1]) {
      while (q < cur.size() && lbm[cur[q]].min_v < lbm[b].min_nbr) ++q;
      std::list<int>::iterator at;
      if (q == prev_q) {
        at = std::next(prev_it);
      } else if (q == 0) {
        at = pos[cur[0]];
      } else {
        at = std::next(pos[cur[q - 1]]);
      }
      prev_it = pos[b] = order.insert(at, b);
      prev_q = q;
    }
  }

  std::vector<int> row(m + 1);
  int r = 0;
  for (int b : order) row[b] = ++r;

  CompactBubbleStructure cb;
  for (const auto& col : col_bubbles) {
    cb.columns.emplace_back();
    for (int b : col) cb.columns.back().push_back({row[b], lbm[b].size});
  }
  return cb;
}

ProperIntervalGraph pig_from_linear(const LinearBubbleModel& lbm) {
  std::vector<Vertex> max_nbr;
  max_nbr.reserve(lbm.n());
  for (int i = 1; i <= lbm.size(); ++i) max_nbr.insert(max_nbr.end(), lbm[i].size, lbm[i].max_nbr);
  return from_neighbor_ranges(max_nbr);
}

}  // namespace defdom
