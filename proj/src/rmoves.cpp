#include "knotred/rmoves.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <unordered_set>

#include "knotred/canonical.hpp"

namespace knotred {

namespace {

struct ArcPos {
  int component = -1;
  int index = -1;
};

std::vector<ArcPos> arc_positions(const Diagram& d) {
  std::vector<ArcPos> pos(d.arcs.size());
  for (int c = 0; c < d.component_count(); ++c)
    for (size_t j = 0; j < d.components[c].arcs.size(); ++j)
      pos[d.components[c].arcs[j]] = ArcPos{c, static_cast<int>(j)};
  return pos;
}

bool tail_over(const Diagram& d, int a) {
  const SlotRef& t = d.arcs[a].tail;
  return d.crossings[t.crossing].is_over_slot(t.slot);
}

bool head_over(const Diagram& d, int a) {
  const SlotRef& h = d.arcs[a].head;
  return d.crossings[h.crossing].is_over_slot(h.slot);
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<RMove> r1_minus_at(const Diagram& d, const Face& f) {
  if (f.darts.size() != 1) return std::nullopt;
  const Arc& a = d.arcs[f.darts[0].arc];
  if (a.tail.crossing != a.head.crossing) return std::nullopt;
  return RMove{MoveKind::R1Minus, {a.tail.crossing}, {f.darts[0].arc}};
}

std::optional<RMove> r2_minus_at(const Diagram& d, const Face& f) {
  if (f.darts.size() != 2) return std::nullopt;
  const int a1 = f.darts[0].arc, a2 = f.darts[1].arc;
  if (a1 == a2) return std::nullopt;
  const Arc &A = d.arcs[a1], &B = d.arcs[a2];
  if (A.tail.crossing == A.head.crossing) return std::nullopt;
  if (sorted({A.tail.crossing, A.head.crossing}) != sorted({B.tail.crossing, B.head.crossing})) return std::nullopt;
  const bool oo1 = tail_over(d, a1) && head_over(d, a1), uu1 = !tail_over(d, a1) && !head_over(d, a1);
  const bool oo2 = tail_over(d, a2) && head_over(d, a2), uu2 = !tail_over(d, a2) && !head_over(d, a2);
  if (!((oo1 && uu2) || (uu1 && oo2))) return std::nullopt;
  return RMove{MoveKind::R2Minus, sorted({A.tail.crossing, A.head.crossing}), sorted({a1, a2})};
}

std::optional<RMove> r3_at(const Diagram& d, const Face& f) {
  if (f.darts.size() != 3) return std::nullopt;
  std::vector<int> arcs, xs;
  int oo = 0, uu = 0, mixed = 0;
  for (const Dart& dt : f.darts) {
    const Arc& a = d.arcs[dt.arc];
    if (a.tail.crossing == a.head.crossing) return std::nullopt;
    arcs.push_back(dt.arc);
    xs.push_back(a.tail.crossing);
    xs.push_back(a.head.crossing);
    const bool t = tail_over(d, dt.arc), h = head_over(d, dt.arc);
    (t && h ? oo : (!t && !h ? uu : mixed)) += 1;
  }
  arcs = sorted(arcs);
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) return std::nullopt;
  xs = sorted(xs);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() != 3 || oo != 1 || uu != 1 || mixed != 1) return std::nullopt;
  return RMove{MoveKind::R3, xs, arcs};
}

bool face_touches(const Diagram& d, const Face& f, const std::set<int>& near) {
  if (near.empty()) return true;
  for (const Dart& dt : f.darts)
    if (near.count(d.arcs[dt.arc].tail.crossing) || near.count(d.arcs[dt.arc].head.crossing)) return true;
  return false;
}

bool has_face_with_darts(const std::vector<Face>& fs, Dart d1, Dart d2) {
  for (const Face& f : fs) {
    bool h1 = false, h2 = false;
    for (const Dart& dt : f.darts) {
      h1 = h1 || (dt.arc == d1.arc && dt.forward == d1.forward);
      h2 = h2 || (dt.arc == d2.arc && dt.forward == d2.forward);
    }
    if (h1 && h2) return true;
  }
  return false;
}

// Rebuilds the diagram after deleting the visits of `gone` crossings and
// inserting extra visits after given (component, visit) positions.
Diagram rebuild(const Diagram& d, const std::set<int>& gone,
                const std::map<std::pair<int, int>, std::vector<GaussVisit>>& inserts,
                const std::vector<int>& extra_signs, const std::map<int, std::vector<GaussVisit>>& fill_empty = {}) {
  const GaussCode g = d.to_gauss();
  const int nc = d.crossing_count();
  std::vector<int> remap(nc + extra_signs.size(), -1);
  GaussCode out;
  for (int x = 0; x < nc; ++x)
    if (!gone.count(x)) {
      remap[x] = static_cast<int>(out.signs.size());
      out.signs.push_back(g.signs[x]);
    }
  for (size_t e = 0; e < extra_signs.size(); ++e) {
    remap[nc + e] = static_cast<int>(out.signs.size());
    out.signs.push_back(extra_signs[e]);
  }
  for (int c = 0; c < static_cast<int>(g.components.size()); ++c) {
    GaussComponent gc{g.components[c].role, g.components[c].label, {}};
    const auto& vs = g.components[c].visits;
    for (int j = 0; j < static_cast<int>(vs.size()); ++j) {
      if (!gone.count(vs[j].crossing)) gc.visits.push_back({remap[vs[j].crossing], vs[j].over});
      auto it = inserts.find({c, j});
      if (it != inserts.end())
        for (const auto& v : it->second) gc.visits.push_back({remap[v.crossing], v.over});
    }
    auto fe = fill_empty.find(c);
    if (fe != fill_empty.end())
      for (const auto& v : fe->second) gc.visits.push_back({remap[v.crossing], v.over});
    out.components.push_back(std::move(gc));
  }
  return Diagram::from_gauss(out);
}

[[noreturn]] void inapplicable(const RMove& mv, const std::string& why) {
  throw DiagramError("move " + kind_name(mv.kind) + " not applicable: " + why);
}

}  // namespace

std::string kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind kind_from_name(const std::string& s) {
  for (MoveKind k : {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus, MoveKind::R2Minus, MoveKind::R3})
    if (kind_name(k) == s) return k;
  throw DiagramError("unknown move kind " + s);
}

std::vector<RMove> enumerate_moves(const Diagram& d, const MoveKinds& kinds, const Placement& placement) {
  std::vector<RMove> out;
  const auto fs = faces(d);
  std::set<std::vector<int>> seen_reducing;
  for (const Face& f : fs) {
    std::optional<RMove> mv;
    if (kinds.r1_minus && (mv = r1_minus_at(d, f)) && seen_reducing.insert(mv->crossings).second) out.push_back(*mv);
    if (kinds.r2_minus && (mv = r2_minus_at(d, f)) && seen_reducing.insert(mv->crossings).second) out.push_back(*mv);
    if (kinds.r3 && (mv = r3_at(d, f))) {
      std::vector<int> key = mv->arcs;
      key.push_back(-1);
      if (seen_reducing.insert(key).second) out.push_back(*mv);
    }
  }
  size_t placed = 0;
  if (kinds.r1_plus) {
    std::set<int> arcs;
    for (const Face& f : fs)
      if (face_touches(d, f, placement.near))
        for (const Dart& dt : f.darts) arcs.insert(dt.arc);
    for (int a : arcs)
      for (int s : {1, -1})
        for (bool first_over : {true, false}) {
          if (placed++ >= placement.budget) break;
          out.push_back(RMove{MoveKind::R1Plus, {}, {a}, -1, s, first_over});
        }
    if (placement.near.empty())
      for (int c = 0; c < d.component_count(); ++c)
        if (d.components[c].arcs.empty())
          for (int s : {1, -1})
            for (bool first_over : {true, false}) {
              if (placed++ >= placement.budget) break;
              out.push_back(RMove{MoveKind::R1Plus, {}, {}, c, s, first_over});
            }
  }
  if (kinds.r2_plus) {
    placed = 0;
    for (const Face& f : fs) {
      if (!face_touches(d, f, placement.near)) continue;
      for (size_t i = 0; i < f.darts.size(); ++i)
        for (size_t j = i + 1; j < f.darts.size(); ++j) {
          if (f.darts[i].arc == f.darts[j].arc) continue;
          for (bool over : {true, false}) {
            if (placed++ >= placement.budget) break;
            RMove mv{MoveKind::R2Plus, {}, {f.darts[i].arc, f.darts[j].arc}, -1, 0, over};
            mv.forward = {f.darts[i].forward, f.darts[j].forward};
            out.push_back(mv);
          }
        }
    }
  }
  return out;
}

Diagram apply_move(const Diagram& d, const RMove& mv) {
  const int nc = d.crossing_count();
  for (int x : mv.crossings)
    if (x < 0 || x >= nc) inapplicable(mv, "unknown crossing");
  for (int a : mv.arcs)
    if (a < 0 || a >= static_cast<int>(d.arcs.size())) inapplicable(mv, "unknown arc");
  switch (mv.kind) {
    case MoveKind::R1Minus:
    case MoveKind::R2Minus:
    case MoveKind::R3: {
      const auto fs = faces(d);
      for (const Face& f : fs) {
        std::optional<RMove> found = mv.kind == MoveKind::R1Minus   ? r1_minus_at(d, f)
                                     : mv.kind == MoveKind::R2Minus ? r2_minus_at(d, f)
                                                                    : r3_at(d, f);
        if (!found || found->crossings != sorted(mv.crossings)) continue;
        if (mv.kind == MoveKind::R3 && found->arcs != sorted(mv.arcs)) continue;
        if (mv.kind != MoveKind::R3) {
          const std::set<int> gone(mv.crossings.begin(), mv.crossings.end());
          return rebuild(d, gone, {}, {});
        }
        GaussCode g = d.to_gauss();
        const auto pos = arc_positions(d);
        for (int a : found->arcs) {
          auto& vs = g.components[pos[a].component].visits;
          const size_t j = pos[a].index, k = vs.size();
          std::swap(vs[j], vs[(j + 1) % k]);
        }
        return Diagram::from_gauss(g);
      }
      inapplicable(mv, "no matching face");
    }
    case MoveKind::R1Plus: {
      if (mv.sign != 1 && mv.sign != -1) inapplicable(mv, "sign must be +-1");
      const std::vector<GaussVisit> kink = {{nc, mv.over}, {nc, !mv.over}};
      if (mv.arcs.empty()) {
        if (mv.component < 0 || mv.component >= d.component_count() || !d.components[mv.component].arcs.empty())
          inapplicable(mv, "component is not a crossing-free circle");
        return rebuild(d, {}, {}, {mv.sign}, {{mv.component, kink}});
      }
      const auto pos = arc_positions(d);
      const ArcPos p = pos[mv.arcs[0]];
      return rebuild(d, {}, {{{p.component, p.index}, kink}}, {mv.sign});
    }
    case MoveKind::R2Plus: {
      if (mv.arcs.size() != 2 || mv.arcs[0] == mv.arcs[1]) inapplicable(mv, "needs two distinct arcs");
      if (!has_face_with_darts(faces(d), {mv.arcs[0], mv.forward[0]}, {mv.arcs[1], mv.forward[1]}))
        inapplicable(mv, "arcs do not share a face");
      const int u = mv.forward[0] ? 1 : -1, w = mv.forward[1] ? 1 : -1, o = mv.over ? 1 : -1;
      const int p = nc, q = nc + 1;
      const auto pos = arc_positions(d);
      std::vector<GaussVisit> first = u > 0 ? std::vector<GaussVisit>{{p, mv.over}, {q, mv.over}}
                                            : std::vector<GaussVisit>{{q, mv.over}, {p, mv.over}};
      std::vector<GaussVisit> second = w > 0 ? std::vector<GaussVisit>{{q, !mv.over}, {p, !mv.over}}
                                             : std::vector<GaussVisit>{{p, !mv.over}, {q, !mv.over}};
      const ArcPos p1 = pos[mv.arcs[0]], p2 = pos[mv.arcs[1]];
      return rebuild(d, {}, {{{p1.component, p1.index}, first}, {{p2.component, p2.index}, second}},
                     {-u * w * o, u * w * o});
    }
  }
  inapplicable(mv, "unknown kind");
}

MoveSequence record(const Diagram& start, const std::vector<RMove>& moves) {
  MoveSequence seq;
  seq.start_sha = canonical_hash(start);
  seq.moves = moves;
  Diagram cur = start;
  for (const auto& mv : moves) {
    cur = apply_move(cur, mv);
    seq.hashes.push_back(canonical_hash(cur));
  }
  return seq;
}

Diagram replay(const Diagram& start, const MoveSequence& seq) {
  if (canonical_hash(start) != seq.start_sha) throw DiagramError("start diagram hash mismatch");
  if (seq.hashes.size() != seq.moves.size()) throw DiagramError("hash list length mismatch");
  Diagram cur = start;
  for (size_t i = 0; i < seq.moves.size(); ++i) {
    cur = apply_move(cur, seq.moves[i]);
    if (canonical_hash(cur) != seq.hashes[i]) throw DiagramError("hash mismatch after move " + std::to_string(i));
  }
  return cur;
}

nlohmann::ordered_json move_to_json(const RMove& mv) {
  nlohmann::ordered_json loc;
  loc["crossings"] = mv.crossings;
  loc["arcs"] = mv.arcs;
  if (mv.kind == MoveKind::R1Plus) {
    loc["component"] = mv.component;
    loc["sign"] = mv.sign;
    loc["over"] = mv.over;
  }
  if (mv.kind == MoveKind::R2Plus) {
    loc["over"] = mv.over;
    loc["forward"] = {mv.forward[0], mv.forward[1]};
  }
  return nlohmann::ordered_json{{"kind", kind_name(mv.kind)}, {"location", loc}};
}

RMove move_from_json(const nlohmann::ordered_json& j) {
  try {
    RMove mv;
    mv.kind = kind_from_name(j.at("kind").get<std::string>());
    const auto& loc = j.at("location");
    mv.crossings = loc.value("crossings", std::vector<int>{});
    mv.arcs = loc.value("arcs", std::vector<int>{});
    mv.component = loc.value("component", -1);
    mv.sign = loc.value("sign", 0);
    mv.over = loc.value("over", false);
    if (loc.contains("forward")) mv.forward = {loc["forward"].at(0).get<bool>(), loc["forward"].at(1).get<bool>()};
    return mv;
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed move JSON: ") + e.what());
  }
}

nlohmann::ordered_json sequence_to_json(const MoveSequence& seq) {
  nlohmann::ordered_json moves = nlohmann::ordered_json::array();
  for (const auto& mv : seq.moves) moves.push_back(move_to_json(mv));
  return nlohmann::ordered_json{{"start_sha", seq.start_sha}, {"moves", moves}, {"hashes", seq.hashes}};
}

MoveSequence sequence_from_json(const nlohmann::ordered_json& j) {
  try {
    MoveSequence seq;
    seq.start_sha = j.at("start_sha").get<std::string>();
    for (const auto& m : j.at("moves")) seq.moves.push_back(move_from_json(m));
    seq.hashes = j.at("hashes").get<std::vector<std::string>>();
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed move sequence JSON: ") + e.what());
  }
}

Reduction greedy_reduce(const Diagram& d) {
  Reduction r{d, {}};
  while (true) {
    auto moves = enumerate_moves(r.diagram, MoveKinds::reducing());
    if (moves.empty()) return r;
    const auto best = std::min_element(moves.begin(), moves.end(), [](const RMove& a, const RMove& b) {
      return std::tie(a.crossings, a.kind) < std::tie(b.crossings, b.kind);
    });
    r.diagram = apply_move(r.diagram, *best);
    r.moves.push_back(*best);
  }
}

std::optional<MoveSequence> certify_unlink(const Diagram& d, size_t budget) {
  Reduction start = greedy_reduce(d);
  if (start.diagram.crossing_count() == 0) return record(d, start.moves);
  if (budget == 0) return std::nullopt;

  struct Node {
    Diagram diagram;
    int parent;
    std::vector<RMove> moves;
    std::set<int> near;
  };
  std::vector<Node> nodes;
  nodes.push_back(Node{start.diagram, -1, start.moves, {}});
  std::unordered_set<std::string> seen{canonicalize(start.diagram)};
  std::deque<int> queue{0};
  size_t explored = 0;
  MoveKinds kinds;
  kinds.r3 = kinds.r1_plus = kinds.r2_plus = true;
  auto path_to = [&](int idx, const std::vector<RMove>& tail) {
    std::vector<std::vector<RMove>> chunks{tail};
    for (int i = idx; i >= 0; i = nodes[i].parent) chunks.push_back(nodes[i].moves);
    std::vector<RMove> all;
    for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) all.insert(all.end(), it->begin(), it->end());
    return all;
  };
  while (!queue.empty() && explored < budget) {
    const int idx = queue.front();
    queue.pop_front();
    ++explored;
    Placement placement;
    placement.near = nodes[idx].near;
    placement.budget = 64;
    const auto moves = enumerate_moves(nodes[idx].diagram, kinds, placement);
    for (const auto& mv : moves) {
      const Diagram next = apply_move(nodes[idx].diagram, mv);
      Reduction red = greedy_reduce(next);
      std::vector<RMove> step{mv};
      step.insert(step.end(), red.moves.begin(), red.moves.end());
      if (red.diagram.crossing_count() == 0) return record(d, path_to(idx, step));
      if (!seen.insert(canonicalize(red.diagram)).second) continue;
      std::set<int> near;
      if (red.moves.empty()) {
        if (mv.kind == MoveKind::R3) near.insert(mv.crossings.begin(), mv.crossings.end());
        for (int x = nodes[idx].diagram.crossing_count(); x < next.crossing_count(); ++x) near.insert(x);
      }
      nodes.push_back(Node{std::move(red.diagram), idx, std::move(step), std::move(near)});
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return std::nullopt;
}

std::optional<MoveSequence> bounded_search(const Diagram& d1, const Diagram& d2, int k, const SearchOptions& options) {
  const std::string target = canonicalize(d2);
  if (canonicalize(d1) == target) return record(d1, {});
  if (d1.component_count() != d2.component_count()) return std::nullopt;
  const int tc = d2.crossing_count();
  struct Node {
    Diagram diagram;
    int parent;
    RMove move;
  };
  std::vector<Node> nodes{Node{d1, -1, {}}};
  std::unordered_set<std::string> seen{canonicalize(d1)};
  std::vector<int> layer{0};
  Placement placement;
  placement.budget = options.placement_budget;
  for (int depth = 0; depth < k && !layer.empty(); ++depth) {
    std::vector<int> next_layer;
    const int remaining = k - depth - 1;
    for (int idx : layer) {
      const auto moves = enumerate_moves(nodes[idx].diagram, options.kinds, placement);
      for (const auto& mv : moves) {
        Diagram nd = apply_move(nodes[idx].diagram, mv);
        if (options.prune_by_crossings && std::abs(nd.crossing_count() - tc) > 2 * remaining) continue;
        std::string c = canonicalize(nd);
        if (c == target) {
          std::vector<RMove> path{mv};
          for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) path.push_back(nodes[i].move);
          std::reverse(path.begin(), path.end());
          return record(d1, path);
        }
        if (!seen.insert(std::move(c)).second) continue;
        if (nodes.size() >= options.max_states)
          throw SearchLimitError("bounded_search: state cap of " + std::to_string(options.max_states) +
                                 " reached at depth " + std::to_string(depth + 1));
        nodes.push_back(Node{std::move(nd), idx, mv});
        next_layer.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
    layer = std::move(next_layer);
  }
  return std::nullopt;
}

std::optional<std::vector<int>> verify_diagrammatic_unlinking(const Diagram& d, int n, size_t budget) {
  if (n < 0) throw DiagramError("subset size must be non-negative");
  std::vector<int> order;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (d.over_component(x) == d.under_component(x)) order.push_back(x);
  for (int x = 0; x < d.crossing_count(); ++x)
    if (d.over_component(x) != d.under_component(x)) order.push_back(x);
  const int total = static_cast<int>(order.size());
  if (n > total) return std::nullopt;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    GaussCode g = d.to_gauss();
    std::set<int> flip;
    for (int i : idx) flip.insert(order[i]);
    for (int x : flip) g.signs[x] = -g.signs[x];
    for (auto& comp : g.components)
      for (auto& v : comp.visits)
        if (flip.count(v.crossing)) v.over = !v.over;
    if (certify_unlink(Diagram::from_gauss(g), budget)) return std::vector<int>(flip.begin(), flip.end());
    int i = n - 1;
    while (i >= 0 && idx[i] == total - n + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace knotred
