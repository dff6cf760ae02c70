#pragma once

// Static pictures of the two-line layout: men on the left column, women on
// the right, index 1 at the top. Matching edges are solid; the optional
// overlay draws noncrossing blocking pairs dashed (SVG) or dotted (ASCII).

#include <string>
#include <vector>

#include "ncsm/core.hpp"

namespace ncsm {

struct RenderOptions {
  std::vector<Pair> overlay;  // drawn in the second stroke style
  bool show_acceptable = false;  // faint lines for every acceptable pair
};

std::string render_svg(const Instance& instance, const Matching& matching,
                       const RenderOptions& options = {});
std::string render_ascii(const Instance& instance, const Matching& matching,
                         const RenderOptions& options = {});

}  // namespace ncsm
