#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "defdom/bubbles.hpp"
#include "defdom/pig.hpp"
#include "defdom/rational.hpp"

namespace defdom {

/// SplitMix64. State advances by 0x9E3779B97F4A7C15; output mixing uses the
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30, 27
/// and 31. Small enough to reimplement bit-for-bit elsewhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

struct FamilyParams {
  /// clique_chain: explicit clique sizes; their unit overlaps must give n.
  std::vector<int> sizes;
  /// clique_chain without explicit sizes: cliques of this size, the last
  /// one truncated to fit n.
  int clique = 3;
};

/// path, complete or clique_chain. Throws BadParameters on an unknown name
/// or inconsistent parameters.
ProperIntervalGraph gen_family(std::string_view name, int n, const FamilyParams& params = {});

/// Unit intervals [x, x+1] with x = u / 2^20, u uniform over the integers
/// in [0, spread * n * 2^20].
IntervalList random_unit_intervals(int n, Rational spread, std::uint64_t seed);

/// from_intervals(random_unit_intervals(...)). With `connected`, redraws
/// with successive seeds until the graph is connected, giving up with
/// BadParameters after max_attempts draws.
ProperIntervalGraph gen_random_unit_intervals(int n, Rational spread, std::uint64_t seed,
                                              bool connected = false, int max_attempts = 1000);

/// n vertices spread over between 1 and max_columns columns, each with
/// between 1 and max_rows bubbles on distinct rows in [1, max_rows].
CompactBubbleStructure gen_random_bubbles(int n, int max_columns, int max_rows, std::uint64_t seed);

}  // namespace defdom
