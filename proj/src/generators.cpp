#include "defdom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "defdom/error.hpp"

namespace defdom {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw BadParameters("empty sampling range");
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

namespace {

ProperIntervalGraph chain_of_cliques(const std::vector<int>& sizes) {
  std::vector<Vertex> max_nbr;
  Vertex end = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    // Clique i covers [start..end]; its first vertex is the previous
    // clique's last, whose maxN moves up to the new end.
    const Vertex start = i == 0 ? 1 : end;
    end = start + sizes[i] - 1;
    if (i > 0) max_nbr.back() = end;
    for (Vertex v = i == 0 ? start : start + 1; v <= end; ++v) max_nbr.push_back(end);
  }
  return from_neighbor_ranges(max_nbr);
}

}  // namespace

ProperIntervalGraph gen_family(std::string_view name, int n, const FamilyParams& params) {
  if (n < 1) throw BadParameters("n must be at least 1");
  std::vector<Vertex> max_nbr(n);
  if (name == "path") {
    for (Vertex j = 1; j <= n; ++j) max_nbr[j - 1] = std::min(j + 1, n);
    return from_neighbor_ranges(max_nbr);
  }
  if (name == "complete") {
    std::fill(max_nbr.begin(), max_nbr.end(), n);
    return from_neighbor_ranges(max_nbr);
  }
  if (name != "clique_chain") throw BadParameters("unknown family '" + std::string(name) + "'");

  std::vector<int> sizes = params.sizes;
  if (sizes.empty()) {
    if (params.clique < 2) throw BadParameters("clique size must be at least 2");
    sizes.push_back(std::min(params.clique, n));
    for (int covered = sizes.back(); covered < n;) {
      const int add = std::min(params.clique - 1, n - covered);
      sizes.push_back(add + 1);
      covered += add;
    }
  }
  long total = 0;
  for (int s : sizes) {
    if (s < (sizes.size() == 1 ? 1 : 2)) throw BadParameters("clique sizes must be at least 2");
    total += s - 1;
  }
  if (total + 1 != n) {
    throw BadParameters("clique sizes give " + std::to_string(total + 1) + " vertices, expected " +
                        std::to_string(n));
  }
  return chain_of_cliques(sizes);
}

IntervalList random_unit_intervals(int n, Rational spread, std::uint64_t seed) {
  if (n < 1) throw BadParameters("n must be at least 1");
  if (spread < Rational(0)) throw BadParameters("spread must be non-negative");
  constexpr std::int64_t kScale = std::int64_t{1} << 20;
  __extension__ using Wide = __int128;
  const Wide span = static_cast<Wide>(spread.num()) * n * kScale / spread.den();
  if (span > (Wide{1} << 62)) throw Overflow("spread * n too large");
  SplitMix64 rng(seed);
  IntervalList out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto u = rng.between(0, static_cast<std::int64_t>(span));
    out.push_back({Rational(u, kScale), Rational(u + kScale, kScale)});
  }
  return out;
}

ProperIntervalGraph gen_random_unit_intervals(int n, Rational spread, std::uint64_t seed,
                                              bool connected, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto g = from_intervals(random_unit_intervals(n, spread, seed + attempt));
    if (!connected || is_connected(g)) return g;
  }
  throw BadParameters("no connected draw in " + std::to_string(max_attempts) + " attempts");
}

CompactBubbleStructure gen_random_bubbles(int n, int max_columns, int max_rows, std::uint64_t seed) {
  if (n < 1 || max_columns < 1 || max_rows < 1) throw BadParameters("n, columns and rows must be positive");
  SplitMix64 rng(seed);
  const int columns = static_cast<int>(rng.between(1, std::min(max_columns, n)));

  // Every column needs one bubble; extra bubbles only while vertices last.
  int budget = n - columns;
  std::vector<int> counts(columns, 1);
  for (int& c : counts) {
    const int extra = static_cast<int>(rng.between(0, std::min(max_rows - 1, budget)));
    c += extra;
    budget -= extra;
  }

  CompactBubbleStructure cb;
  std::vector<int> rows(max_rows);
  int bubbles = 0;
  for (int c : counts) {
    std::iota(rows.begin(), rows.end(), 1);
    for (int i = 0; i < c; ++i) {
      const auto j = static_cast<std::size_t>(rng.between(i, max_rows - 1));
      std::swap(rows[i], rows[j]);
    }
    std::vector<int> picked(rows.begin(), rows.begin() + c);
    std::sort(picked.begin(), picked.end());
    auto& column = cb.columns.emplace_back();
    for (int r : picked) column.push_back({r, 1});
    bubbles += c;
  }

  std::vector<BubbleCell*> cells;
  for (auto& column : cb.columns) {
    for (auto& cell : column) cells.push_back(&cell);
  }
  for (int left = n - bubbles; left > 0; --left) {
    cells[rng.below(cells.size())]->size += 1;
  }
  return cb;
}

}  // namespace defdom
