#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotred/gadgets.hpp"
#include "knotred/render.hpp"
#include "knotred/rmoves.hpp"

using namespace knotred;

namespace {

double cross(Vec2 o, Vec2 a, Vec2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool proper_intersection(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double d1 = cross(a, b, c), d2 = cross(a, b, d), d3 = cross(c, d, a), d4 = cross(c, d, b);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

void check_layout(const Diagram& d) {
  const EmbeddedLayout lay = embed_layout(d);
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Vec2 c = lay.crossing_pos[x];
    std::vector<std::pair<double, int>> ang;
    for (int s = 0; s < 4; ++s) {
      const ArcEnd& e = d.crossings[x].slots[s];
      const auto& path = lay.arc_paths[e.arc];
      const Vec2 q = e.head ? path[path.size() - 2] : path[1];
      ang.push_back({std::atan2(q.y - c.y, q.x - c.x), s});
    }
    std::sort(ang.begin(), ang.end());
    for (int i = 0; i < 4; ++i) CHECK((ang[i].second + 1) % 4 == ang[(i + 1) % 4].second);
  }
  struct Seg {
    int arc;
    Vec2 a, b;
  };
  std::vector<Seg> segs;
  for (size_t a = 0; a < lay.arc_paths.size(); ++a)
    for (size_t i = 0; i + 1 < lay.arc_paths[a].size(); ++i)
      segs.push_back(Seg{static_cast<int>(a), lay.arc_paths[a][i], lay.arc_paths[a][i + 1]});
  int bad = 0;
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (proper_intersection(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) ++bad;
  CHECK(bad == 0);
}

Diagram kink() {
  const Diagram c = fixtures::circles(1);
  for (const auto& mv : enumerate_moves(c, MoveKinds::all()))
    if (mv.kind == MoveKind::R1Plus) return apply_move(c, mv);
  return c;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("embedding layout respects the rotation system") {
    check_layout(fixtures::hopf());
    check_layout(fixtures::hopf(-1));
    check_layout(fixtures::trefoil());
    check_layout(kink());
    const Diagram doubled = whitehead_double_component(hopf_row(1, 0).diagram, 0);
    Diagram plain = doubled;
    plain.geometry.clear();
    check_layout(plain);
    check_layout(graph_to_vertex_edge_diagram(parse_graph("4 3\n1 2\n1 3\n1 4\n")));
    check_layout(chain_diagram(4, 2));
  }

  TEST_CASE("svg output") {
    const std::string a = render_svg(fixtures::trefoil());
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') > 6);
    const std::string b = render_svg(chain_diagram(1, 2));
    CHECK(b.find("<circle") != std::string::npos);
    const Diagram h = hopf_row(2, 0).diagram;
    const std::string g = render_svg(h);
    size_t lines = 0;
    for (size_t p = g.find("<polyline"); p != std::string::npos; p = g.find("<polyline", p + 1)) ++lines;
    size_t segments = 0;
    for (const auto& pg : h.geometry) segments += pg.points.size();
    CHECK(lines == 2 * segments);
    CHECK(render_svg(h, RenderLayout::Embedding) != g);
    CHECK_THROWS_AS(render_svg(fixtures::hopf(), RenderLayout::Geometry), DiagramError);
    CHECK(render_svg(h) == render_svg(h));
  }
}
