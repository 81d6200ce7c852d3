#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "defdom/bubbles.hpp"
#include "defdom/pig.hpp"

namespace defdom {

enum class InstanceFormat { pig, intervals, bubbles };

/// A parsed instance file. `graph` is always filled in; the other members
/// keep the representation the file was written in.
struct Instance {
  InstanceFormat format = InstanceFormat::pig;
  ProperIntervalGraph graph;
  std::optional<IntervalList> intervals;
  std::optional<CompactBubbleStructure> bubbles;
};

/// Parses any of the three formats, chosen by the first keyword. Syntax and
/// validation errors both surface as ParseError at the offending token.
Instance parse_instance(std::string_view text);

std::string write_pig(const ProperIntervalGraph& g);
std::string write_intervals(const IntervalList& intervals);
std::string write_bubbles(const CompactBubbleStructure& cb);

std::string read_file(const std::string& path);

}  // namespace defdom
