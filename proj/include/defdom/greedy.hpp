#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "defdom/pig.hpp"

namespace defdom {

struct GreedyStats {
  /// Attackers handled plus defenders inspected by the per-window checks,
  /// plus vertices stepped over while locating max(N[A] \ D).
  std::int64_t defense_steps = 0;
  std::int64_t windows = 0;
  std::int64_t additions = 0;
};

/// Called at the end of every window with the window's last vertex and the
/// current sorted defender set, in component-local numbering.
using GreedyObserver = std::function<void(Vertex last, std::span<const Vertex> defenders)>;

/// Minimum k-defensive set by the left-to-right window greedy. Disconnected
/// graphs are solved per component with k clamped to the component size.
/// Throws EmptyGraph for n = 0 and BadParameters for k < 1.
std::vector<Vertex> solve_greedy(const ProperIntervalGraph& g, int k, GreedyStats* stats = nullptr,
                                 const GreedyObserver& observer = {});

}  // namespace defdom
