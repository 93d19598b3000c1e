#pragma once

#include <string>
#include <vector>

#include "knotred/diagram.hpp"

namespace knotred {

struct Vec2 {
  double x = 0;
  double y = 0;
};

// Straight-line drawing computed from the rotation system alone.
struct EmbeddedLayout {
  std::vector<Vec2> crossing_pos;
  std::vector<std::vector<Vec2>> arc_paths;  // tail crossing ... head crossing
  std::vector<Vec2> circle_center;           // per component, used for crossing-free ones
  double circle_radius = 1;
};

EmbeddedLayout embed_layout(const Diagram& d);

enum class RenderLayout { Auto, Geometry, Embedding };

std::string render_svg(const Diagram& d, RenderLayout layout = RenderLayout::Auto);

}  // namespace knotred
