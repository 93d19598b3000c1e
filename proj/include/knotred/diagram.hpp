#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotred {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One end of an arc as seen from a crossing slot.
struct ArcEnd {
  int arc = -1;
  bool head = false;  // true: the arc arrives at this slot
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

// A crossing of an oriented diagram. Slots are listed counterclockwise.
// Sign convention is right-handed: with the under strand running upwards,
// the crossing is positive when the over strand runs left to right.
// Builders normalize so that slot 0 is the incoming under end; then the
// under strand occupies slots 0/2 and the crossing is positive exactly when
// the over strand leaves through slot 1.
struct Crossing {
  int sign = 0;
  std::array<ArcEnd, 4> slots{};
  std::array<int, 2> over_slots{1, 3};

  bool is_over_slot(int s) const { return s == over_slots[0] || s == over_slots[1]; }
};

// Directed segment of a component between two crossing passages.
struct Arc {
  int component = -1;
  SlotRef tail;
  SlotRef head;
};

struct Component {
  std::string role;
  std::string label;
  std::vector<int> arcs;  // traversal order; empty for a crossing-free circle
};

struct Point {
  long long x = 0;
  long long y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Closed rectilinear drawing of one component; levels[i] is the height of
// the segment points[i] -> points[i+1].
struct PathGeometry {
  std::vector<Point> points;
  std::vector<int> levels;
};

// Signed Gauss code: per component the cyclic sequence of crossing passages.
// Together with the crossing signs this determines the rotation system.
struct GaussVisit {
  int crossing = -1;
  bool over = false;
};

struct GaussComponent {
  std::string role;
  std::string label;
  std::vector<GaussVisit> visits;
};

struct GaussCode {
  std::vector<GaussComponent> components;
  std::vector<int> signs;  // indexed by crossing id
};

struct Diagram {
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  std::vector<Component> components;
  // Either empty or one entry per component. Dropped by combinatorial edits.
  std::vector<PathGeometry> geometry;

  static Diagram from_gauss(const GaussCode& code);
  GaussCode to_gauss() const;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int component_count() const { return static_cast<int>(components.size()); }
  int component_at(int crossing, int slot) const {
    return arcs[crossings[crossing].slots[slot].arc].component;
  }
  int over_component(int crossing) const {
    return component_at(crossing, crossings[crossing].over_slots[0]);
  }
  int under_component(int crossing) const {
    const auto& c = crossings[crossing];
    for (int s = 0; s < 4; ++s)
      if (!c.is_over_slot(s)) return component_at(crossing, s);
    return -1;
  }
};

// A face is traced with the face on the right of every dart.
struct Dart {
  int arc = -1;
  bool forward = true;
};

struct Face {
  std::vector<Dart> darts;
};

std::vector<Face> faces(const Diagram& d);

struct ValidationReport {
  bool ok = true;
  std::string failure;  // first violated invariant, with location
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int pieces = 0;
};

ValidationReport validate_diagram(const Diagram& d);

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix linking_matrix(const Diagram& d);

struct DiagramCounts {
  int crossing_count = 0;
  int component_count = 0;
  int writhe = 0;
  std::vector<int> self_crossings;
  std::vector<int> undercrossings;
  std::vector<int> overcrossings;
};

DiagramCounts writhe_and_counts(const Diagram& d);

Diagram extract_sublink(const Diagram& d, const std::set<int>& keep);
Diagram change_crossing(const Diagram& d, int crossing);

struct AlternatingReport {
  bool overall = true;
  std::vector<bool> per_component;
};

AlternatingReport is_alternating_diagram(const Diagram& d);

// Components grouped by connectivity of the underlying 4-valent graph.
std::vector<std::vector<int>> split_components(const Diagram& d);

// Restriction of a matrix to the given (sorted) index set.
IntMatrix restrict_matrix(const IntMatrix& m, const std::vector<int>& keep);

}  // namespace knotred
