#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotred/diagram.hpp"
#include "knotred/formulas.hpp"
#include "knotred/freegroup.hpp"
#include "knotred/layout.hpp"

namespace knotred {

// Grid unit of the drawings; features are at least one unit apart.
constexpr long long kUnit = 1000;
constexpr long long kDoubleOffset = 40;
constexpr long long kCableOffset = 40;

// A vertical piece of a component that word loops pass under. weight is the
// sign of the crossing made by a loop passing under it left to right.
struct LabeledStrand {
  int component = -1;
  long long x = 0;
  int weight = 1;
};

using StrandMap = std::map<int, LabeledStrand>;  // generator -> strand

// Horizontal band [y_bottom, y_top]; strands lists the x positions of all
// vertical strands running through it, left to right.
struct RoutingRegion {
  long long x_min = 0, x_max = 0;
  long long y_bottom = 0, y_top = 0;
  std::vector<long long> strands;
};

struct Row {
  Diagram diagram;
  StrandMap strands;
  RoutingRegion region;
};

// Height of a band that fits a loop for a word of the given length.
long long band_height(size_t letters);

// Consecutive bands of the given heights, top to bottom.
std::vector<RoutingRegion> split_region(const RoutingRegion& region, const std::vector<long long>& heights);

// Components x_1..x_n then -x_1..-x_n; generator i labels x_i, n+i labels -x_i.
Row hopf_row(int n, long long band_total);

// count crossing-free rectangles labelled by `labels`; generator k+1 labels circle k.
Row circle_row(const std::vector<std::string>& labels, long long band_total);

Diagram route_word_loop(const Diagram& d, const FreeWord& w, const RoutingRegion& region, const StrandMap& sm,
                        const std::string& role, const std::string& label);

// clasp_segment < 0 selects the last segment of the component's route.
Diagram whitehead_double_component(const Diagram& d, int component, int clasp_segment = -1);

struct CableResult {
  Diagram diagram;
  int twist_crossings = 0;
};

CableResult cable_longitude(const Diagram& d, int component, int p);

// Circles 0..n_chain-1 overlapping their neighbours in two crossings, the
// even-indexed circle passing over; then n_free crossing-free circles.
Diagram chain_diagram(int n_chain, int n_free);

// One circle per vertex, one per edge overlapping both endpoint circles and
// passing under them. Planar graphs give exactly 4m crossings; other graphs
// get a banded drawing with extra crossings between edge circles.
Diagram graph_to_vertex_edge_diagram(const Graph& g);

}  // namespace knotred
