#include "knotred/gadgets.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <cstdlib>

#include "knotred/layout.hpp"

namespace knotred {

namespace {

constexpr int kLoopUnder = -1000;
constexpr int kLoopOver = 1000;

long long sgn(long long v) { return (v > 0) - (v < 0); }

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator*(long long k, Point a) { return {k * a.x, k * a.y}; }

Point unit(Point a, Point b) { return {sgn(b.x - a.x), sgn(b.y - a.y)}; }
Point left_normal(Point u) { return {-u.y, u.x}; }
long long dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

std::vector<Point> offset_path(const std::vector<Point>& v, long long s) {
  const size_t k = v.size();
  std::vector<Point> out(k);
  for (size_t i = 0; i < k; ++i) {
    const Point n_in = left_normal(unit(v[(i + k - 1) % k], v[i]));
    const Point n_out = left_normal(unit(v[i], v[(i + 1) % k]));
    out[i] = n_in == n_out ? v[i] + s * n_in : v[i] + s * (n_in + n_out);
  }
  return out;
}

// Local frame on the last segment of a path: t along it, s to its left.
struct Frame {
  Point origin, u, n;
  long long length = 0;
  Point at(long long t, long long s) const { return origin + t * u + s * n; }
  long long t_of(Point p) const { return dot({p.x - origin.x, p.y - origin.y}, u); }
  long long s_of(Point p) const { return dot({p.x - origin.x, p.y - origin.y}, n); }
};

Frame last_segment_frame(const std::vector<Point>& v) {
  Frame f;
  f.origin = v.back();
  f.u = unit(v.back(), v.front());
  f.n = left_normal(f.u);
  f.length = dot({v.front().x - v.back().x, v.front().y - v.back().y}, f.u);
  return f;
}

// Smallest t0 such that [t0 - before, t0 + after] on the last segment of
// path `comp` stays `clear` away from all other geometry.
long long find_gap(const Drawing& dr, int comp, const Frame& f, long long before, long long after, long long clear) {
  std::vector<std::pair<long long, long long>> blocked;
  for (size_t pi = 0; pi < dr.size(); ++pi) {
    const auto& pts = dr[pi].points;
    const size_t k = pts.size();
    for (size_t j = 0; j < k; ++j) {
      if (static_cast<int>(pi) == comp && j == k - 1) continue;
      const Point a = pts[j], b = pts[(j + 1) % k];
      const long long s1 = std::min(f.s_of(a), f.s_of(b)), s2 = std::max(f.s_of(a), f.s_of(b));
      if (s2 < -clear || s1 > clear) continue;
      const long long t1 = std::min(f.t_of(a), f.t_of(b)), t2 = std::max(f.t_of(a), f.t_of(b));
      blocked.emplace_back(t1 - clear, t2 + clear);
    }
  }
  std::sort(blocked.begin(), blocked.end());
  long long lo = 0;
  for (auto [b1, b2] : blocked) {
    if (lo + before + after < b1) break;
    lo = std::max(lo, b2 + 1);
  }
  if (lo + before + after > f.length) throw DiagramError("no free room on the segment for a local gadget");
  return lo + before;
}

Polyline rotated_to_last(const Polyline& p, int segment) {
  if (segment < 0) return p;
  const int k = static_cast<int>(p.points.size());
  if (segment >= k) throw DiagramError("segment index out of range");
  Polyline q = p;
  const int start = (segment + 1) % k;
  std::rotate(q.points.begin(), q.points.begin() + start, q.points.end());
  std::rotate(q.levels.begin(), q.levels.begin() + start, q.levels.end());
  return q;
}

int strand_weight(Point a, Point b) { return static_cast<int>(-sgn(b.y - a.y)); }

Polyline rectangle(const std::string& role, const std::string& label, long long x0, long long y0, long long x1,
                   long long y1, std::vector<int> levels) {
  return Polyline{role, label, {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, std::move(levels)};
}

Row make_row(Drawing dr, const std::vector<std::pair<int, long long>>& labeled, long long height) {
  Row row;
  row.diagram = realize(dr);
  for (size_t g = 0; g < labeled.size(); ++g) {
    const auto [comp, x] = labeled[g];
    const auto& pts = dr[comp].points;
    row.strands[static_cast<int>(g) + 1] = LabeledStrand{comp, x, strand_weight(pts.back(), pts.front())};
  }
  for (const auto& p : dr) {
    const size_t k = p.points.size();
    for (size_t j = 0; j < k; ++j) {
      const Point a = p.points[j], b = p.points[(j + 1) % k];
      if (a.x == b.x && std::min(a.y, b.y) < kUnit * 10 && std::max(a.y, b.y) > height - kUnit * 10)
        row.region.strands.push_back(a.x);
    }
  }
  std::sort(row.region.strands.begin(), row.region.strands.end());
  const Box box = bounding_box(dr);
  row.region.x_min = box.xmin - 10 * kUnit;
  row.region.x_max = box.xmax + 10 * kUnit;
  row.region.y_bottom = 10 * kUnit;
  row.region.y_top = height - 10 * kUnit;
  return row;
}

}  // namespace

long long band_height(size_t letters) { return (4 * static_cast<long long>(letters) + 4) * kUnit; }

std::vector<RoutingRegion> split_region(const RoutingRegion& region, const std::vector<long long>& heights) {
  std::vector<RoutingRegion> out;
  long long top = region.y_top;
  for (long long h : heights) {
    RoutingRegion r = region;
    r.y_top = top;
    r.y_bottom = top - h;
    if (r.y_bottom < region.y_bottom) throw DiagramError("bands do not fit in the region");
    out.push_back(r);
    top = r.y_bottom;
  }
  return out;
}

Row hopf_row(int n, long long band_total) {
  if (n < 1) throw DiagramError("hopf_row needs n >= 1");
  const long long U = kUnit;
  const long long H = band_total + 20 * U;
  Drawing dr;
  std::vector<std::pair<int, long long>> labeled;
  for (int i = 0; i < n; ++i) {
    const long long X = i * 40 * U;
    dr.push_back(rectangle("variable", "x_" + std::to_string(i + 1), X, 0, X + 20 * U, H, {40, 20, 0, 20}));
    labeled.emplace_back(i, X);
  }
  for (int i = 0; i < n; ++i) {
    const long long X = i * 40 * U;
    dr.push_back(rectangle("variable", "¬x_" + std::to_string(i + 1), X + 10 * U, -10 * U, X + 30 * U,
                           H + 10 * U, {30, 30, 30, 30}));
    labeled.emplace_back(n + i, X + 10 * U);
  }
  return make_row(std::move(dr), labeled, H);
}

Row circle_row(const std::vector<std::string>& labels, long long band_total) {
  if (labels.empty()) throw DiagramError("circle_row needs at least one circle");
  const long long U = kUnit;
  const long long H = band_total + 20 * U;
  Drawing dr;
  std::vector<std::pair<int, long long>> labeled;
  for (size_t k = 0; k < labels.size(); ++k) {
    const long long X = static_cast<long long>(k) * 30 * U;
    dr.push_back(rectangle("variable", labels[k], X, 0, X + 15 * U, H, {0, 0, 0, 0}));
    labeled.emplace_back(static_cast<int>(k), X);
  }
  return make_row(std::move(dr), labeled, H);
}

Diagram route_word_loop(const Diagram& d, const FreeWord& w, const RoutingRegion& region, const StrandMap& sm,
                        const std::string& role, const std::string& label) {
  if (w.empty()) throw DiagramError("route_word_loop: empty word");
  const long long U = kUnit;
  const long long L = static_cast<long long>(w.size());
  if (region.y_top - region.y_bottom < band_height(w.size())) throw DiagramError("route_word_loop: region too narrow");
  std::vector<long long> st(L), en(L);
  for (long long j = 0; j < L; ++j) {
    auto it = sm.find(std::abs(w[j]));
    if (it == sm.end()) throw DiagramError("route_word_loop: no strand for generator " + std::to_string(std::abs(w[j])));
    const long long x = it->second.x;
    if (!std::binary_search(region.strands.begin(), region.strands.end(), x))
      throw DiagramError("route_word_loop: strand not present in region");
    const long long sigma = w[j] > 0 ? 1 : -1;
    st[j] = x - sigma * 3 * U;
    en[j] = x + sigma * 3 * U;
  }
  const long long lo = std::min(*std::min_element(st.begin(), st.end()), *std::min_element(en.begin(), en.end()));
  const long long hi = std::max(*std::max_element(st.begin(), st.end()), *std::max_element(en.begin(), en.end()));
  auto strands_between = [&](long long a, long long b) {
    if (a > b) std::swap(a, b);
    return std::upper_bound(region.strands.begin(), region.strands.end(), b) -
           std::lower_bound(region.strands.begin(), region.strands.end(), a);
  };
  const long long left = lo - 2 * U, right = hi + 2 * U;
  const auto cost_left = strands_between(left, st[0]) + strands_between(left, en[L - 1]);
  const auto cost_right = strands_between(st[0], right) + strands_between(en[L - 1], right);
  long long x_ret = cost_left < cost_right ? left : right;
  const long long step = cost_left < cost_right ? -U : U;
  while (std::binary_search(region.strands.begin(), region.strands.end(), x_ret)) x_ret += step;

  const long long y_top = region.y_top - U;
  auto y = [&](long long j) { return region.y_top - 3 * U - 4 * U * j; };
  const long long y_bot = y(L - 1) - 2 * U;
  Polyline loop{role, label, {}, {}};
  auto push = [&](long long px, long long py, int level) {
    loop.points.push_back({px, py});
    loop.levels.push_back(level);
  };
  push(st[0], y_top, kLoopOver);
  for (long long j = 0; j < L; ++j) {
    push(st[j], y(j), kLoopUnder);
    push(en[j], y(j), kLoopOver);
    if (j + 1 < L) {
      push(en[j], y(j) - 2 * U, kLoopOver);
      push(st[j + 1], y(j) - 2 * U, kLoopOver);
    }
  }
  push(en[L - 1], y_bot, kLoopOver);
  push(x_ret, y_bot, kLoopOver);
  push(x_ret, y_top, kLoopOver);

  Drawing dr = drawing_of(d);
  dr.push_back(simplify(loop));
  return realize(dr);
}

Diagram whitehead_double_component(const Diagram& d, int component, int clasp_segment) {
  if (component < 0 || component >= d.component_count()) throw DiagramError("unknown component");
  if (writhe_and_counts(d).self_crossings[component] != 0)
    throw DiagramError("whitehead double requires a component without self-crossings");
  Drawing dr = drawing_of(d);
  const Polyline path = rotated_to_last(simplify(dr[component]), clasp_segment);
  dr[component] = path;
  const auto& v = path.points;
  const auto& lv = path.levels;
  const size_t k = v.size();
  const long long dl = kDoubleOffset;
  const std::vector<Point> A = offset_path(v, dl), B = offset_path(v, -dl);
  const Frame f = last_segment_frame(v);
  const long long clear = 6 * dl;
  const long long t0 = find_gap(dr, component, f, 2 * dl + clear, 5 * dl + clear, clear);
  const long long p = t0 - 2 * dl, a = t0 + 2 * dl, r = t0 + 5 * dl;
  const int L = lv[k - 1];

  Polyline out{path.role, path.label, {}, {}};
  auto push = [&](Point q, int level) {
    out.points.push_back(q);
    out.levels.push_back(level);
  };
  push(f.at(r, dl), L);
  for (size_t i = 0; i < k; ++i) push(A[i], lv[i]);
  push(f.at(a, dl), L);
  push(f.at(a, -dl), L);
  for (size_t i = k - 1; i >= 1; --i) push(B[i], lv[i - 1]);
  push(B[0], L);
  push(f.at(r, -dl), L);
  push(f.at(r, -2 * dl), L);
  push(f.at(p, -2 * dl), L + 1);
  push(f.at(p, 0), L - 1);
  push(f.at(p, 2 * dl), L);
  push(f.at(r, 2 * dl), L);
  dr[component] = simplify(out);
  return realize(dr);
}

CableResult cable_longitude(const Diagram& d, int component, int p) {
  if (component < 0 || component >= d.component_count()) throw DiagramError("unknown component");
  if (p < 1) throw DiagramError("cable winding must be positive");
  if (p == 1) return CableResult{d, 0};
  Drawing dr = drawing_of(d);
  const Polyline path = simplify(dr[component]);
  dr[component] = path;
  const auto& v = path.points;
  const auto& lv = path.levels;
  const size_t k = v.size();
  const long long dc = kCableOffset;
  const long long w = 2 * dc;
  std::vector<long long> lane(p);
  for (int j = 0; j < p; ++j) lane[j] = (2 * j - (p - 1)) * dc;
  const long long tmp = lane[0] - 2 * dc;
  std::vector<std::vector<Point>> copies;
  for (int j = 0; j < p; ++j) copies.push_back(offset_path(v, lane[j]));
  const Frame f = last_segment_frame(v);
  const long long clear = (p + 3) * dc;
  const long long t0 = find_gap(dr, component, f, clear, (p + 1) * w + clear, clear);
  const long long t_exit = t0 + p * w + w;
  const int L = lv[k - 1];

  Polyline out{path.role, path.label, {}, {}};
  auto push = [&](Point q, int level) {
    out.points.push_back(q);
    out.levels.push_back(level);
  };
  for (int j = 0; j < p; ++j) {
    push(f.at(t_exit, lane[j]), L);
    for (size_t i = 0; i < k; ++i) push(copies[j][i], lv[i]);
    if (j + 1 < p) {
      const long long tj = t0 + (p - 1 - j) * w;
      push(f.at(tj, lane[j]), L);
      push(f.at(tj, lane[j + 1]), L);
    } else {
      push(f.at(t0, lane[j]), L + 1);
      push(f.at(t0, tmp), L);
      push(f.at(t0 + p * w, tmp), L);
      push(f.at(t0 + p * w, lane[0]), L);
    }
  }
  dr[component] = simplify(out);
  return CableResult{realize(dr), p - 1};
}

Diagram chain_diagram(int n_chain, int n_free) {
  if (n_chain < 1 || n_free < 0) throw DiagramError("chain_diagram needs n_chain >= 1 and n_free >= 0");
  GaussCode g;
  // Pair i joins circles i and i+1 at crossings 2i (top) and 2i+1 (bottom).
  for (int i = 0; i + 1 < n_chain; ++i) {
    const bool left_over = i % 2 == 0;
    g.signs.push_back(left_over ? 1 : -1);
    g.signs.push_back(left_over ? -1 : 1);
  }
  for (int i = 0; i < n_chain; ++i) {
    GaussComponent c{"chain", "c_" + std::to_string(i + 1), {}};
    const bool over = i % 2 == 0;
    if (i + 1 < n_chain) {
      c.visits.push_back({2 * i + 1, over});
      c.visits.push_back({2 * i, over});
    }
    if (i > 0) {
      c.visits.push_back({2 * (i - 1), over});
      c.visits.push_back({2 * (i - 1) + 1, over});
    }
    g.components.push_back(std::move(c));
  }
  for (int k = 0; k < n_free; ++k) g.components.push_back(GaussComponent{"free", "o_" + std::to_string(k + 1), {}});
  return Diagram::from_gauss(g);
}

namespace {

// Vertices are squares along a line; each edge is a thin band arching over
// the row and dipping under both endpoint squares. Bands whose endpoints
// interleave cross each other four times.
Diagram banded_vertex_edge_diagram(const Graph& graph) {
  const long long g = 10;
  const long long side = 10 * g;
  const int m = static_cast<int>(graph.edges.size());
  const auto deg = graph.degrees();
  std::vector<long long> left(graph.n_vertices);
  long long x = 0;
  for (int v = 0; v < graph.n_vertices; ++v) {
    left[v] = x;
    x += (4LL * deg[v] + 1) * g + 2 * g;
  }
  // Slots at v: bands from the left nearest first, then bands to the right
  // farthest first, which keeps bands sharing an endpoint nested.
  std::vector<std::vector<std::pair<long long, int>>> at(graph.n_vertices);
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = graph.edges[e];
    at[u].push_back({v < u ? u - v : 2LL * graph.n_vertices - (v - u), e});
    at[v].push_back({u < v ? v - u : 2LL * graph.n_vertices - (u - v), e});
  }
  std::vector<std::array<int, 2>> slot(m);
  for (int v = 0; v < graph.n_vertices; ++v) {
    std::sort(at[v].begin(), at[v].end());
    for (size_t j = 0; j < at[v].size(); ++j) {
      const int e = at[v][j].second;
      slot[e][graph.edges[e].first == v ? 0 : 1] = static_cast<int>(j);
    }
  }
  // Shorter spans sit lower, so nested bands never meet.
  std::vector<int> order(m);
  for (int e = 0; e < m; ++e) order[e] = e;
  auto span = [&](int e) { return std::abs(graph.edges[e].second - graph.edges[e].first); };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return span(a) < span(b); });
  std::vector<int> rank(m);
  for (int r = 0; r < m; ++r) rank[order[r]] = r;

  Drawing dr;
  for (int v = 0; v < graph.n_vertices; ++v) {
    const long long w = (4LL * deg[v] + 1) * g;
    dr.push_back(Polyline{"vertex", "v_" + std::to_string(v + 1),
                          {{left[v], 0}, {left[v] + w, 0}, {left[v] + w, side}, {left[v], side}},
                          {1 << 20, 1 << 20, 1 << 20, 1 << 20}});
  }
  for (int e = 0; e < m; ++e) {
    int u = graph.edges[e].first, v = graph.edges[e].second;
    int su = slot[e][0], sv = slot[e][1];
    if (u > v) {
      std::swap(u, v);
      std::swap(su, sv);
    }
    const long long au = left[u] + (4LL * su + 1) * g, bu = au + g;
    const long long av = left[v] + (4LL * sv + 1) * g, bv = av + g;
    const long long low = side - 2 * g;
    const long long h = side + (3 + 3LL * rank[e]) * g;
    dr.push_back(Polyline{"edge", "e_" + std::to_string(graph.edges[e].first + 1) + "_" + std::to_string(graph.edges[e].second + 1),
                          {{au, low}, {au, h + g}, {bv, h + g}, {bv, low}, {av, low}, {av, h}, {bu, h}, {bu, low}},
                          std::vector<int>(8, rank[e] + 1)});
  }
  return realize(dr);
}

}  // namespace

Diagram graph_to_vertex_edge_diagram(const Graph& graph) {
  graph.check();
  using namespace boost;
  using G = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
  G bg(graph.n_vertices);
  for (size_t e = 0; e < graph.edges.size(); ++e) add_edge(graph.edges[e].first, graph.edges[e].second, static_cast<int>(e), bg);
  using EdgeDesc = graph_traits<G>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(num_vertices(bg));
  if (!boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                    boyer_myrvold_params::embedding = make_iterator_property_map(
                                        embedding.begin(), get(vertex_index, bg))))
    return banded_vertex_edge_diagram(graph);

  // X(w, e, side): crossing of edge circle e with the circle of endpoint w;
  // side 0 lies to the left looking from w along e.
  auto X = [&](int w, int e, int side) { return 4 * e + (w == graph.edges[e].first ? 0 : 2) + side; };
  GaussCode g;
  g.signs.resize(4 * graph.edges.size());
  for (size_t e = 0; e < graph.edges.size(); ++e)
    for (int k = 0; k < 4; ++k) g.signs[4 * e + k] = k % 2 == 0 ? 1 : -1;
  for (int v = 0; v < graph.n_vertices; ++v) {
    GaussComponent c{"vertex", "v_" + std::to_string(v + 1), {}};
    for (const auto& ed : embedding[v]) {
      const int e = get(edge_index, bg, ed);
      c.visits.push_back({X(v, e, 1), true});
      c.visits.push_back({X(v, e, 0), true});
    }
    g.components.push_back(std::move(c));
  }
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [u, v] = graph.edges[e];
    const int ei = static_cast<int>(e);
    GaussComponent c{"edge", "e_" + std::to_string(u + 1) + "_" + std::to_string(v + 1), {}};
    c.visits = {{X(v, ei, 0), false}, {X(v, ei, 1), false}, {X(u, ei, 0), false}, {X(u, ei, 1), false}};
    g.components.push_back(std::move(c));
  }
  return Diagram::from_gauss(g);
}

}  // namespace knotred
