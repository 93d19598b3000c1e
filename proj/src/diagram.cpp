#include "knotred/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace knotred {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string at_crossing(int c, int s = -1) {
  std::ostringstream os;
  os << "crossing " << c;
  if (s >= 0) os << " slot " << s;
  return os.str();
}

}  // namespace

Diagram Diagram::from_gauss(const GaussCode& code) {
  const int n = static_cast<int>(code.signs.size());
  Diagram d;
  d.crossings.resize(n);
  for (int x = 0; x < n; ++x) {
    if (code.signs[x] != 1 && code.signs[x] != -1)
      throw DiagramError("crossing " + std::to_string(x) + " has sign other than +-1");
    d.crossings[x].sign = code.signs[x];
    d.crossings[x].over_slots = {1, 3};
  }
  std::vector<int> over_seen(n, 0), under_seen(n, 0);

  for (const auto& gc : code.components) {
    const int comp = static_cast<int>(d.components.size());
    Component c{gc.role, gc.label, {}};
    const int k = static_cast<int>(gc.visits.size());
    const int base = static_cast<int>(d.arcs.size());
    for (int j = 0; j < k; ++j) {
      d.arcs.push_back(Arc{comp, {}, {}});
      c.arcs.push_back(base + j);
    }
    for (int j = 0; j < k; ++j) {
      const GaussVisit& v = gc.visits[j];
      if (v.crossing < 0 || v.crossing >= n)
        throw DiagramError("visit to unknown crossing " + std::to_string(v.crossing));
      const int in_arc = base + (j + k - 1) % k;
      const int out_arc = base + j;
      Crossing& x = d.crossings[v.crossing];
      int in_slot, out_slot;
      if (!v.over) {
        ++under_seen[v.crossing];
        in_slot = 0;
        out_slot = 2;
      } else {
        ++over_seen[v.crossing];
        out_slot = x.sign > 0 ? 1 : 3;
        in_slot = x.sign > 0 ? 3 : 1;
      }
      x.slots[in_slot] = ArcEnd{in_arc, true};
      x.slots[out_slot] = ArcEnd{out_arc, false};
      d.arcs[in_arc].head = SlotRef{v.crossing, in_slot};
      d.arcs[out_arc].tail = SlotRef{v.crossing, out_slot};
    }
    d.components.push_back(std::move(c));
  }
  for (int x = 0; x < n; ++x)
    if (over_seen[x] != 1 || under_seen[x] != 1)
      throw DiagramError(at_crossing(x) + " is not visited exactly once over and once under");
  return d;
}

GaussCode Diagram::to_gauss() const {
  GaussCode code;
  code.signs.reserve(crossings.size());
  for (const auto& c : crossings) code.signs.push_back(c.sign);
  for (const auto& comp : components) {
    GaussComponent gc{comp.role, comp.label, {}};
    for (int a : comp.arcs) {
      const SlotRef& t = arcs[a].tail;
      gc.visits.push_back(GaussVisit{t.crossing, crossings[t.crossing].is_over_slot(t.slot)});
    }
    code.components.push_back(std::move(gc));
  }
  return code;
}

std::vector<Face> faces(const Diagram& d) {
  const int na = static_cast<int>(d.arcs.size());
  std::vector<char> used(2 * static_cast<size_t>(na), 0);
  std::vector<Face> out;
  auto id = [](int arc, bool fwd) { return 2 * arc + (fwd ? 0 : 1); };
  for (int a = 0; a < na; ++a) {
    for (bool fwd : {true, false}) {
      if (used[id(a, fwd)]) continue;
      Face f;
      Dart cur{a, fwd};
      while (!used[id(cur.arc, cur.forward)]) {
        used[id(cur.arc, cur.forward)] = 1;
        f.darts.push_back(cur);
        const SlotRef at = cur.forward ? d.arcs[cur.arc].head : d.arcs[cur.arc].tail;
        const ArcEnd next = d.crossings[at.crossing].slots[(at.slot + 1) % 4];
        cur = Dart{next.arc, !next.head};
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

ValidationReport validate_diagram(const Diagram& d) {
  ValidationReport r;
  auto fail = [&r](std::string msg) {
    if (r.ok) {
      r.ok = false;
      r.failure = std::move(msg);
    }
    return r;
  };
  const int nc = d.crossing_count();
  const int na = static_cast<int>(d.arcs.size());

  // Slots filled and consistent with arc endpoints.
  std::vector<int> head_refs(na, 0), tail_refs(na, 0);
  for (int x = 0; x < nc; ++x) {
    const Crossing& c = d.crossings[x];
    for (int s = 0; s < 4; ++s) {
      const ArcEnd& e = c.slots[s];
      if (e.arc < 0 || e.arc >= na) return fail("slot not filled at " + at_crossing(x, s));
      const SlotRef& ref = e.head ? d.arcs[e.arc].head : d.arcs[e.arc].tail;
      if (ref.crossing != x || ref.slot != s)
        return fail("arc " + std::to_string(e.arc) + " endpoint disagrees with " + at_crossing(x, s));
      ++(e.head ? head_refs : tail_refs)[e.arc];
    }
  }
  for (int a = 0; a < na; ++a)
    if (head_refs[a] != 1 || tail_refs[a] != 1)
      return fail("arc " + std::to_string(a) + " end is not incident to exactly one crossing slot");

  // Over/under structure and signs.
  for (int x = 0; x < nc; ++x) {
    const Crossing& c = d.crossings[x];
    const int o0 = c.over_slots[0], o1 = c.over_slots[1];
    if (o0 < 0 || o0 > 3 || o1 < 0 || o1 > 3 || (o0 + 2) % 4 != o1)
      return fail("over/under not diagonal at " + at_crossing(x));
    for (int s = 0; s < 2; ++s) {
      if (c.slots[s].head == c.slots[s + 2].head)
        return fail("strand through " + at_crossing(x, s) + " is not one incoming and one outgoing end");
    }
    const int under_in = c.slots[(o0 + 1) % 4].head ? (o0 + 1) % 4 : (o0 + 3) % 4;
    const int over_out = c.slots[o0].head ? o1 : o0;
    const int expect = over_out == (under_in + 1) % 4 ? 1 : -1;
    if (c.sign != expect) return fail("sign inconsistent with rotation at " + at_crossing(x));
  }

  // Components are closed walks that partition the arcs.
  std::vector<int> owner(na, -1);
  for (int ci = 0; ci < d.component_count(); ++ci) {
    const auto& arcs = d.components[ci].arcs;
    for (size_t j = 0; j < arcs.size(); ++j) {
      const int a = arcs[j];
      if (a < 0 || a >= na) return fail("component " + std::to_string(ci) + " references unknown arc");
      if (owner[a] != -1) return fail("arc " + std::to_string(a) + " used by two components");
      owner[a] = ci;
      if (d.arcs[a].component != ci) return fail("arc " + std::to_string(a) + " has wrong component tag");
      const int b = arcs[(j + 1) % arcs.size()];
      const SlotRef h = d.arcs[a].head;
      const SlotRef t = d.arcs[b].tail;
      if (h.crossing != t.crossing || (h.slot + 2) % 4 != t.slot)
        return fail("component " + std::to_string(ci) + " is not a closed walk at arc " + std::to_string(a));
    }
  }
  for (int a = 0; a < na; ++a)
    if (owner[a] == -1) return fail("arc " + std::to_string(a) + " belongs to no component");

  // Euler characteristic per connected piece.
  UnionFind uf(std::max(nc, 1));
  for (const auto& arc : d.arcs) uf.unite(arc.tail.crossing, arc.head.crossing);
  const auto fs = faces(d);
  std::vector<int> pv(nc, 0), pe(nc, 0), pf(nc, 0);
  for (int x = 0; x < nc; ++x) ++pv[uf.find(x)];
  for (const auto& arc : d.arcs) ++pe[uf.find(arc.tail.crossing)];
  for (const auto& f : fs) ++pf[uf.find(d.arcs[f.darts[0].arc].tail.crossing)];
  int pieces = 0, total_faces = 0;
  for (int x = 0; x < nc; ++x) {
    if (uf.find(x) != x) continue;
    ++pieces;
    total_faces += pf[x];
    if (pv[x] - pe[x] + pf[x] != 2)
      return fail("Euler check failed on piece containing " + at_crossing(x) + " (V-E+F=" +
                  std::to_string(pv[x] - pe[x] + pf[x]) + ")");
  }
  for (const auto& comp : d.components)
    if (comp.arcs.empty()) {
      ++pieces;
      total_faces += 2;
    }
  r.vertices = nc;
  r.edges = na;
  r.pieces = pieces;
  r.faces = pieces > 0 ? total_faces - (pieces - 1) : 1;
  if (r.vertices - r.edges + r.faces != 1 + r.pieces) return fail("global Euler check failed");
  return r;
}

IntMatrix linking_matrix(const Diagram& d) {
  const int n = d.component_count();
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int a = d.over_component(x);
    const int b = d.under_component(x);
    const int s = d.crossings[x].sign;
    if (a == b) {
      m[a][a] += s;
    } else {
      m[a][b] += s;
      m[b][a] += s;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        if (m[i][j] % 2 != 0) throw DiagramError("odd signed crossing count between two components");
        m[i][j] /= 2;
      }
  return m;
}

DiagramCounts writhe_and_counts(const Diagram& d) {
  DiagramCounts c;
  c.crossing_count = d.crossing_count();
  c.component_count = d.component_count();
  c.self_crossings.assign(c.component_count, 0);
  c.undercrossings.assign(c.component_count, 0);
  c.overcrossings.assign(c.component_count, 0);
  for (int x = 0; x < d.crossing_count(); ++x) {
    const int o = d.over_component(x);
    const int u = d.under_component(x);
    c.writhe += d.crossings[x].sign;
    ++c.overcrossings[o];
    ++c.undercrossings[u];
    if (o == u) ++c.self_crossings[o];
  }
  return c;
}

Diagram extract_sublink(const Diagram& d, const std::set<int>& keep) {
  if (keep.empty()) throw DiagramError("extract_sublink: empty keep-set");
  for (int k : keep)
    if (k < 0 || k >= d.component_count())
      throw DiagramError("extract_sublink: unknown component " + std::to_string(k));
  const GaussCode code = d.to_gauss();
  std::vector<int> remap(d.crossing_count(), -1);
  GaussCode out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (keep.count(d.over_component(x)) && keep.count(d.under_component(x))) {
      remap[x] = static_cast<int>(out.signs.size());
      out.signs.push_back(code.signs[x]);
    }
  }
  for (int ci : keep) {
    GaussComponent gc = code.components[ci];
    std::vector<GaussVisit> kept;
    for (const auto& v : gc.visits)
      if (remap[v.crossing] >= 0) kept.push_back(GaussVisit{remap[v.crossing], v.over});
    gc.visits = std::move(kept);
    out.components.push_back(std::move(gc));
  }
  Diagram r = Diagram::from_gauss(out);
  if (!d.geometry.empty())
    for (int ci : keep) r.geometry.push_back(d.geometry[ci]);
  return r;
}

Diagram change_crossing(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw DiagramError("change_crossing: unknown crossing " + std::to_string(crossing));
  GaussCode code = d.to_gauss();
  code.signs[crossing] = -code.signs[crossing];
  for (auto& comp : code.components)
    for (auto& v : comp.visits)
      if (v.crossing == crossing) v.over = !v.over;
  return Diagram::from_gauss(code);
}

AlternatingReport is_alternating_diagram(const Diagram& d) {
  AlternatingReport r;
  const GaussCode code = d.to_gauss();
  for (const auto& comp : code.components) {
    bool alt = true;
    const size_t k = comp.visits.size();
    if (k >= 2)
      for (size_t j = 0; j < k; ++j)
        if (comp.visits[j].over == comp.visits[(j + 1) % k].over) alt = false;
    r.per_component.push_back(alt);
    r.overall = r.overall && alt;
  }
  return r;
}

std::vector<std::vector<int>> split_components(const Diagram& d) {
  const int n = d.component_count();
  UnionFind uf(std::max(n, 1));
  for (int x = 0; x < d.crossing_count(); ++x) uf.unite(d.over_component(x), d.under_component(x));
  std::vector<std::vector<int>> groups;
  std::vector<int> index(n, -1);
  for (int c = 0; c < n; ++c) {
    const int root = uf.find(c);
    if (index[root] < 0) {
      index[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[index[root]].push_back(c);
  }
  return groups;
}

IntMatrix restrict_matrix(const IntMatrix& m, const std::vector<int>& keep) {
  IntMatrix r(keep.size(), std::vector<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) r[i][j] = m[keep[i]][keep[j]];
  return r;
}

}  // namespace knotred
