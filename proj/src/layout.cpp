#include "knotred/layout.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace knotred {

namespace {

struct Seg {
  int path = 0;
  int index = 0;
  Point a, b;
  int level = 0;
  bool horizontal() const { return a.y == b.y; }
  long long lo() const { return horizontal() ? std::min(a.x, b.x) : std::min(a.y, b.y); }
  long long hi() const { return horizontal() ? std::max(a.x, b.x) : std::max(a.y, b.y); }
  long long line() const { return horizontal() ? a.y : a.x; }
};

struct Hit {
  int h = 0, v = 0;  // indices into the segment table
  Point at;
};

long long sgn(long long v) { return (v > 0) - (v < 0); }

std::string where(const Seg& s) {
  return "path " + std::to_string(s.path) + " segment " + std::to_string(s.index);
}

bool consecutive(const Seg& s, const Seg& t, const std::vector<int>& path_len) {
  if (s.path != t.path) return false;
  const int k = path_len[s.path];
  return (s.index + 1) % k == t.index || (t.index + 1) % k == s.index;
}

// Shared vertex of consecutive segments.
bool shared_vertex(const Seg& s, const Seg& t, const Point& p, const std::vector<int>& path_len) {
  if (!consecutive(s, t, path_len)) return false;
  const int k = path_len[s.path];
  if (k == 2) return p == s.a || p == s.b;
  if ((s.index + 1) % k == t.index) return p == s.b;
  return p == s.a;
}

void check_collinear(std::vector<const Seg*> group, const std::vector<int>& path_len) {
  std::sort(group.begin(), group.end(), [](const Seg* x, const Seg* y) {
    return std::pair(x->lo(), x->hi()) < std::pair(y->lo(), y->hi());
  });
  const Seg* reach = nullptr;
  for (const Seg* s : group) {
    if (reach) {
      if (s->lo() < reach->hi())
        throw DiagramError("collinear overlap between " + where(*reach) + " and " + where(*s));
      if (s->lo() == reach->hi()) {
        const Point p = s->horizontal() ? Point{s->lo(), s->line()} : Point{s->line(), s->lo()};
        if (!shared_vertex(*reach, *s, p, path_len))
          throw DiagramError("segments touch end to end: " + where(*reach) + " and " + where(*s));
      }
    }
    if (!reach || s->hi() >= reach->hi()) reach = s;
  }
}

}  // namespace

Polyline simplify(const Polyline& in) {
  Polyline p = in;
  bool changed = true;
  while (changed && p.points.size() > 1) {
    changed = false;
    const size_t k = p.points.size();
    for (size_t i = 0; i < k; ++i) {
      const size_t j = (i + 1) % k;
      if (p.points[i] == p.points[j]) {
        // Remove zero-length segment i by dropping point j; segment j keeps its level.
        p.points.erase(p.points.begin() + j);
        p.levels.erase(p.levels.begin() + i);
        changed = true;
        break;
      }
      const size_t h = (i + k - 1) % k;
      const Point& a = p.points[h];
      const Point& b = p.points[i];
      const Point& c = p.points[j];
      const bool collinear = (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y);
      const bool same_dir = sgn(b.x - a.x) == sgn(c.x - b.x) && sgn(b.y - a.y) == sgn(c.y - b.y);
      if (collinear && same_dir && p.levels[h] == p.levels[i]) {
        p.points.erase(p.points.begin() + i);
        p.levels.erase(p.levels.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return p;
}

Diagram realize(const Drawing& drawing) {
  std::vector<Seg> segs;
  std::vector<int> path_len;
  for (size_t pi = 0; pi < drawing.size(); ++pi) {
    const Polyline& p = drawing[pi];
    const int k = static_cast<int>(p.points.size());
    if (k < 2 || static_cast<int>(p.levels.size()) != k)
      throw DiagramError("path " + std::to_string(pi) + " is degenerate");
    path_len.push_back(k);
    for (int j = 0; j < k; ++j) {
      Seg s{static_cast<int>(pi), j, p.points[j], p.points[(j + 1) % k], p.levels[j]};
      if (s.a == s.b) throw DiagramError(where(s) + " has zero length");
      if (s.a.x != s.b.x && s.a.y != s.b.y) throw DiagramError(where(s) + " is not axis-parallel");
      segs.push_back(s);
    }
  }

  std::map<long long, std::vector<const Seg*>> hlines, vlines;
  std::vector<int> hs, vs;
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    if (segs[i].horizontal()) {
      hlines[segs[i].line()].push_back(&segs[i]);
      hs.push_back(i);
    } else {
      vlines[segs[i].line()].push_back(&segs[i]);
      vs.push_back(i);
    }
  }
  for (auto& [y, g] : hlines) check_collinear(g, path_len);
  for (auto& [x, g] : vlines) check_collinear(g, path_len);

  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return segs[a].line() < segs[b].line(); });
  std::vector<long long> vx;
  for (int v : vs) vx.push_back(segs[v].line());

  std::vector<Hit> hits;
  for (int h : hs) {
    const Seg& H = segs[h];
    auto first = std::lower_bound(vx.begin(), vx.end(), H.lo());
    auto last = std::upper_bound(vx.begin(), vx.end(), H.hi());
    for (auto it = first; it != last; ++it) {
      const int v = vs[it - vx.begin()];
      const Seg& V = segs[v];
      const long long y = H.line();
      if (y < V.lo() || y > V.hi()) continue;
      const Point p{V.line(), y};
      const bool interior = p.x > H.lo() && p.x < H.hi() && y > V.lo() && y < V.hi();
      if (interior) {
        if (H.level == V.level) throw DiagramError("equal levels at crossing of " + where(H) + " and " + where(V));
        hits.push_back(Hit{h, v, p});
      } else if (!shared_vertex(H, V, p, path_len)) {
        throw DiagramError("segments touch: " + where(H) + " and " + where(V));
      }
    }
  }

  // Passages along each segment, ordered from its start.
  std::vector<std::vector<std::pair<long long, int>>> on_seg(segs.size());
  for (int i = 0; i < static_cast<int>(hits.size()); ++i) {
    for (int s : {hits[i].h, hits[i].v}) {
      const Seg& S = segs[s];
      const long long t = S.horizontal() ? (hits[i].at.x - S.a.x) * sgn(S.b.x - S.a.x)
                                         : (hits[i].at.y - S.a.y) * sgn(S.b.y - S.a.y);
      on_seg[s].push_back({t, i});
    }
  }
  for (auto& v : on_seg) std::sort(v.begin(), v.end());

  GaussCode code;
  std::vector<int> id(hits.size(), -1);
  size_t seg_base = 0;
  for (size_t pi = 0; pi < drawing.size(); ++pi) {
    GaussComponent gc{drawing[pi].role, drawing[pi].label, {}};
    for (int j = 0; j < path_len[pi]; ++j) {
      const int s = static_cast<int>(seg_base) + j;
      for (auto [t, hi] : on_seg[s]) {
        const Hit& hit = hits[hi];
        if (id[hi] < 0) {
          id[hi] = static_cast<int>(code.signs.size());
          const Seg& H = segs[hit.h];
          const Seg& V = segs[hit.v];
          const Seg& over = H.level > V.level ? H : V;
          const Seg& under = H.level > V.level ? V : H;
          const long long ox = sgn(over.b.x - over.a.x), oy = sgn(over.b.y - over.a.y);
          const long long ux = sgn(under.b.x - under.a.x), uy = sgn(under.b.y - under.a.y);
          code.signs.push_back(ox * uy - oy * ux > 0 ? 1 : -1);
        }
        const Seg& other = segs[s == hit.h ? hit.v : hit.h];
        gc.visits.push_back(GaussVisit{id[hi], segs[s].level > other.level});
      }
    }
    seg_base += path_len[pi];
    code.components.push_back(std::move(gc));
  }
  Diagram d = Diagram::from_gauss(code);
  for (const auto& p : drawing) d.geometry.push_back(PathGeometry{p.points, p.levels});
  return d;
}

Drawing drawing_of(const Diagram& d) {
  if (d.geometry.size() != d.components.size()) throw DiagramError("diagram carries no geometry");
  Drawing out;
  for (size_t i = 0; i < d.components.size(); ++i)
    out.push_back(Polyline{d.components[i].role, d.components[i].label, d.geometry[i].points, d.geometry[i].levels});
  return out;
}

Box bounding_box(const Drawing& drawing) {
  Box b{std::numeric_limits<long long>::max(), std::numeric_limits<long long>::max(),
        std::numeric_limits<long long>::min(), std::numeric_limits<long long>::min()};
  for (const auto& p : drawing)
    for (const auto& q : p.points) {
      b.xmin = std::min(b.xmin, q.x);
      b.ymin = std::min(b.ymin, q.y);
      b.xmax = std::max(b.xmax, q.x);
      b.ymax = std::max(b.ymax, q.y);
    }
  return b;
}

}  // namespace knotred
