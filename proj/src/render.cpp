#include "knotred/render.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "knotred/layout.hpp"

namespace knotred {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

const char* color(int component) { return kPalette[component % 10]; }

struct PieceDrawing {
  std::map<int, Vec2> crossing;
  std::map<int, std::vector<Vec2>> arc_points;  // the three subdivision points
  double width = 0;
  double height = 0;
};

// Subdivide each arc three times, star every face and cut off face corners.
// The result is a simple triangulation, so its planar embedding is unique up
// to reflection.
PieceDrawing draw_piece(const Diagram& d, const std::vector<int>& crossings, const std::vector<int>& arcs,
                        const std::vector<const Face*>& piece_faces) {
  using namespace boost;
  using G = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
  std::map<int, int> cv;
  for (int x : crossings) cv.emplace(x, static_cast<int>(cv.size()));
  int next = static_cast<int>(cv.size());
  std::map<int, int> first_point;
  for (int a : arcs) {
    first_point[a] = next;
    next += 3;
  }
  const int face_base = next;
  next += static_cast<int>(piece_faces.size());

  G g(next);
  int edge_id = 0;
  auto edge = [&](int u, int v) { add_edge(u, v, edge_id++, g); };
  for (int a : arcs) {
    const int p = first_point[a];
    edge(cv.at(d.arcs[a].tail.crossing), p);
    edge(p, p + 1);
    edge(p + 1, p + 2);
    edge(p + 2, cv.at(d.arcs[a].head.crossing));
  }
  for (size_t f = 0; f < piece_faces.size(); ++f) {
    const auto& darts = piece_faces[f]->darts;
    std::vector<int> boundary;
    for (const Dart& dt : darts) {
      const int p = first_point[dt.arc];
      if (dt.forward)
        boundary.insert(boundary.end(), {p, p + 1, p + 2});
      else
        boundary.insert(boundary.end(), {p + 2, p + 1, p});
    }
    for (int v : boundary) edge(face_base + static_cast<int>(f), v);
    for (size_t i = 0; i < darts.size(); ++i) edge(boundary[3 * i + 2], boundary[(3 * i + 3) % boundary.size()]);
  }
  if (static_cast<int>(num_edges(g)) != 3 * next - 6) throw DiagramError("layout triangulation failed");

  using EdgeDesc = graph_traits<G>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(next);
  auto emb_map = make_iterator_property_map(emb.begin(), get(vertex_index, g));
  if (!boyer_myrvold_planarity_test(boyer_myrvold_params::graph = g, boyer_myrvold_params::embedding = emb_map))
    throw DiagramError("rotation system is not planar");
  std::vector<graph_traits<G>::vertex_descriptor> order;
  planar_canonical_ordering(g, emb_map, std::back_inserter(order));
  struct Coord {
    std::size_t x;
    std::size_t y;
  };
  std::vector<Coord> pos(next);
  chrobak_payne_straight_line_drawing(g, emb_map, order.begin(), order.end(),
                                      make_iterator_property_map(pos.begin(), get(vertex_index, g)));

  auto at = [&](int v) { return Vec2{static_cast<double>(pos[v].x), static_cast<double>(pos[v].y)}; };
  auto neighbour = [&](int x, int s) {
    const ArcEnd& e = d.crossings[x].slots[s];
    return at(first_point[e.arc] + (e.head ? 2 : 0));
  };
  // Slots are counterclockwise; reflect when the drawing came out clockwise.
  bool mirror = false;
  if (!crossings.empty()) {
    const int x = crossings.front();
    const Vec2 c = at(cv.at(x));
    std::vector<std::pair<double, int>> ang;
    for (int s = 0; s < 4; ++s) {
      const Vec2 q = neighbour(x, s);
      ang.push_back({std::atan2(q.y - c.y, q.x - c.x), s});
    }
    std::sort(ang.begin(), ang.end());
    int rot = 0;
    while (ang[rot].second != 0) ++rot;
    mirror = ang[(rot + 1) % 4].second != 1;
  }
  PieceDrawing out;
  for (const auto& p : pos) {
    out.width = std::max(out.width, static_cast<double>(p.x));
    out.height = std::max(out.height, static_cast<double>(p.y));
  }
  auto place = [&](int v) {
    Vec2 q = at(v);
    if (mirror) q.x = out.width - q.x;
    return q;
  };
  for (const auto& [x, v] : cv) out.crossing[x] = place(v);
  for (int a : arcs) {
    const int p = first_point[a];
    out.arc_points[a] = {place(p), place(p + 1), place(p + 2)};
  }
  return out;
}

}  // namespace

EmbeddedLayout embed_layout(const Diagram& d) {
  EmbeddedLayout out;
  out.crossing_pos.resize(d.crossing_count());
  out.arc_paths.resize(d.arcs.size());
  out.circle_center.resize(d.component_count());
  const auto all_faces = faces(d);
  const auto pieces = split_components(d);
  std::vector<int> piece_of(d.component_count(), -1);
  for (size_t p = 0; p < pieces.size(); ++p)
    for (int c : pieces[p]) piece_of[c] = static_cast<int>(p);

  double offset = 0;
  for (size_t p = 0; p < pieces.size(); ++p) {
    std::vector<int> arcs;
    for (int c : pieces[p]) arcs.insert(arcs.end(), d.components[c].arcs.begin(), d.components[c].arcs.end());
    if (arcs.empty()) {
      for (int c : pieces[p]) {
        out.circle_center[c] = Vec2{offset + 1, 1};
        offset += 3;
      }
      continue;
    }
    std::set<int> xs;
    for (int a : arcs) xs.insert(d.arcs[a].tail.crossing);
    std::vector<const Face*> piece_faces;
    for (const Face& f : all_faces)
      if (piece_of[d.arcs[f.darts.front().arc].component] == static_cast<int>(p)) piece_faces.push_back(&f);
    const PieceDrawing pd = draw_piece(d, std::vector<int>(xs.begin(), xs.end()), arcs, piece_faces);
    auto shift = [&](Vec2 v) { return Vec2{v.x + offset, v.y}; };
    for (const auto& [x, v] : pd.crossing) out.crossing_pos[x] = shift(v);
    for (const auto& [a, pts] : pd.arc_points) {
      auto& path = out.arc_paths[a];
      path.push_back(shift(pd.crossing.at(d.arcs[a].tail.crossing)));
      for (const Vec2& v : pts) path.push_back(shift(v));
      path.push_back(shift(pd.crossing.at(d.arcs[a].head.crossing)));
    }
    offset += pd.width + 2;
  }
  return out;
}

namespace {

struct Canvas {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  double stroke = 1;
  std::ostringstream body;

  std::string finish() const {
    const double pad = 4 * stroke;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (min_x - pad) << ' ' << (min_y - pad) << ' '
       << (max_x - min_x + 2 * pad) << ' ' << (max_y - min_y + 2 * pad) << "\">\n"
       << "<rect x=\"" << (min_x - pad) << "\" y=\"" << (min_y - pad) << "\" width=\"" << (max_x - min_x + 2 * pad)
       << "\" height=\"" << (max_y - min_y + 2 * pad) << "\" fill=\"white\"/>\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

void polyline(Canvas& cv, const std::vector<Vec2>& pts, const char* stroke, double width) {
  cv.body << "<polyline fill=\"none\" stroke-linecap=\"round\" stroke-linejoin=\"round\" stroke=\"" << stroke
          << "\" stroke-width=\"" << width << "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) cv.body << (i ? " " : "") << pts[i].x << ',' << pts[i].y;
  cv.body << "\"/>\n";
}

std::string render_geometry(const Diagram& d) {
  Canvas cv;
  const Drawing dr = drawing_of(d);
  const Box box = bounding_box(dr);
  // SVG y grows downwards.
  cv.min_x = static_cast<double>(box.xmin);
  cv.max_x = static_cast<double>(box.xmax);
  cv.min_y = -static_cast<double>(box.ymax);
  cv.max_y = -static_cast<double>(box.ymin);
  cv.stroke = std::max(1.0, std::max(cv.max_x - cv.min_x, cv.max_y - cv.min_y) / 600.0);
  struct Seg {
    int level;
    int component;
    Point a, b;
  };
  std::vector<Seg> segs;
  for (size_t c = 0; c < dr.size(); ++c) {
    const auto& pl = dr[c];
    for (size_t i = 0; i < pl.points.size(); ++i)
      segs.push_back(Seg{pl.levels[i], static_cast<int>(c), pl.points[i], pl.points[(i + 1) % pl.points.size()]});
  }
  std::stable_sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.level < b.level; });
  for (const Seg& s : segs) {
    const std::vector<Vec2> pts{{double(s.a.x), -double(s.a.y)}, {double(s.b.x), -double(s.b.y)}};
    polyline(cv, pts, "white", 4 * cv.stroke);
    polyline(cv, pts, color(s.component), cv.stroke);
  }
  return cv.finish();
}

// Point at distance t from a towards b.
Vec2 toward(Vec2 a, Vec2 b, double t) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  if (len <= 2 * t) return Vec2{(a.x + b.x) / 2, (a.y + b.y) / 2};
  return Vec2{a.x + (b.x - a.x) * t / len, a.y + (b.y - a.y) * t / len};
}

std::string render_embedding(const Diagram& d) {
  const EmbeddedLayout lay = embed_layout(d);
  Canvas cv;
  const double scale = 20;
  double extent = 1;
  for (const auto& path : lay.arc_paths)
    for (const Vec2& v : path) extent = std::max({extent, v.x * scale, v.y * scale});
  cv.stroke = std::max(2.0, extent / 600.0);
  cv.min_x = cv.min_y = 0;
  cv.max_x = cv.max_y = scale;
  auto sc = [&](Vec2 v) {
    Vec2 q{v.x * scale, -v.y * scale};
    cv.min_x = std::min(cv.min_x, q.x);
    cv.max_x = std::max(cv.max_x, q.x);
    cv.min_y = std::min(cv.min_y, q.y);
    cv.max_y = std::max(cv.max_y, q.y);
    return q;
  };
  const double gap = std::max(0.3 * scale, 3 * cv.stroke);
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    std::vector<Vec2> pts;
    for (const Vec2& v : lay.arc_paths[a]) pts.push_back(sc(v));
    const Arc& arc = d.arcs[a];
    if (!d.crossings[arc.tail.crossing].is_over_slot(arc.tail.slot)) pts.front() = toward(pts[0], pts[1], gap);
    if (!d.crossings[arc.head.crossing].is_over_slot(arc.head.slot)) {
      const size_t n = pts.size();
      pts.back() = toward(pts[n - 1], pts[n - 2], gap);
    }
    polyline(cv, pts, color(arc.component), cv.stroke);
  }
  for (int c = 0; c < d.component_count(); ++c) {
    if (!d.components[c].arcs.empty()) continue;
    const Vec2 q = sc(lay.circle_center[c]);
    sc(Vec2{lay.circle_center[c].x + 1, lay.circle_center[c].y - 1});
    sc(Vec2{lay.circle_center[c].x - 1, lay.circle_center[c].y + 1});
    cv.body << "<circle fill=\"none\" stroke=\"" << color(c) << "\" stroke-width=\"" << cv.stroke << "\" cx=\"" << q.x
            << "\" cy=\"" << q.y << "\" r=\"" << scale * 0.8 << "\"/>\n";
  }
  return cv.finish();
}

}  // namespace

std::string render_svg(const Diagram& d, RenderLayout layout) {
  const bool geometric = layout == RenderLayout::Geometry || (layout == RenderLayout::Auto && !d.geometry.empty());
  if (geometric) {
    if (d.geometry.empty()) throw DiagramError("diagram has no stored geometry");
    return render_geometry(d);
  }
  return render_embedding(d);
}

}  // namespace knotred
