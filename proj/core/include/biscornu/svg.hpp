#pragma once

#include <string>

#include "biscornu/chart.hpp"
#include "biscornu/decoration.hpp"

namespace biscornu {

/// SVG 1.1 rendering of a chart: light grid, stitches as round-capped
/// segments, 10 user units per cell. Byte-deterministic for a given input.
std::string chart_svg(const StitchChart& chart);

/// Both faces side by side, top face first.
std::string decoration_svg(const BiscornuDecoration& d);

}  // namespace biscornu
