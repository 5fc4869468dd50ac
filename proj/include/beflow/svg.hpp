#pragma once

#include <string>
#include <vector>

#include "beflow/region.hpp"

namespace beflow {

struct SvgOverlay {
  NamedRegion region;
  std::string label;
};

/// Renders the window, the frontier polyline and any requested named-region
/// overlays. Pure emission; coordinates are produced by exact decimal
/// conversion of the rationals.
std::string region_to_svg(const FlowRegion& reg,
                          const std::vector<SvgOverlay>& overlays = {});

}  // namespace beflow
