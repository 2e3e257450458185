#pragma once

#include "mlc/cohomology.hpp"

namespace mlc {

struct RenderSpec {
  Vec lo, hi;  // inclusive coarse window, rank 2 for pictures
  std::string xlabel = "n1";
  std::string ylabel = "n2";

  RenderSpec(Vec lo_, Vec hi_);
};

// Dot grid over the window: '*' marks members, '.' the rest; origin axes ticked.
std::string render_ascii(const Region& support, const RenderSpec& spec);
// Dot diagram in SVG, filled circles on members.
std::string render_svg(const Region& support, const RenderSpec& spec);
// Machine readable box-union dump (payload optional).
std::string region_json(const std::vector<std::pair<Box, int>>& cells, int dim);
std::string region_json(const Region& region);

}  // namespace mlc
