#pragma once

#include <string>
#include <vector>

#include "knotred/diagram.hpp"

namespace knotred {

// Closed axis-parallel polyline; segment i runs from points[i] to
// points[i+1] (cyclically) at height levels[i].
struct Polyline {
  std::string role;
  std::string label;
  std::vector<Point> points;
  std::vector<int> levels;
};

using Drawing = std::vector<Polyline>;

// Drops zero-length segments and merges collinear neighbours of equal level.
Polyline simplify(const Polyline& p);

// Proper crossings of horizontal and vertical segments become crossings of
// the diagram, the higher level passing over. Touching, collinear overlap
// and equal levels at a crossing are errors.
Diagram realize(const Drawing& drawing);

// Inverse of realize for diagrams that carry geometry.
Drawing drawing_of(const Diagram& d);

struct Box {
  long long xmin = 0, ymin = 0, xmax = 0, ymax = 0;
};

Box bounding_box(const Drawing& drawing);

}  // namespace knotred
