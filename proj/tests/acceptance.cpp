// Acceptance criteria. One line per criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "knotred/canonical.hpp"
#include "knotred/gadgets.hpp"
#include "knotred/layout.hpp"
#include "knotred/reductions.hpp"
#include "knotred/rmoves.hpp"

using namespace knotred;

namespace {

constexpr unsigned kSeed = 20240607;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      failure = what;
    }
  }
};

CnfFormula make_formula(int n, std::vector<std::array<int, 3>> clauses) {
  CnfFormula f;
  f.n_vars = n;
  f.clauses = std::move(clauses);
  return f;
}

// Oracle: direct clause evaluation.
bool satisfies(const CnfFormula& f, unsigned bits) {
  for (const auto& c : f.clauses) {
    bool any = false;
    for (int lit : c) {
      const bool v = (bits >> (std::abs(lit) - 1)) & 1U;
      any = any || (lit > 0 ? v : !v);
    }
    if (!any) return false;
  }
  return true;
}

IntMatrix off_diagonal(IntMatrix m) {
  for (size_t i = 0; i < m.size(); ++i) m[i][i] = 0;
  return m;
}

bool all_zero(const IntMatrix& m) {
  for (const auto& row : m)
    for (int v : row)
      if (v != 0) return false;
  return true;
}

// Every sign pattern on a fixed list of triples.
std::vector<CnfFormula> sign_patterns(int n, const std::vector<std::array<int, 3>>& triples) {
  std::vector<CnfFormula> out;
  const int bits = 3 * static_cast<int>(triples.size());
  for (int mask = 0; mask < (1 << bits); ++mask) {
    CnfFormula f = make_formula(n, triples);
    for (size_t c = 0; c < triples.size(); ++c)
      for (int k = 0; k < 3; ++k)
        if ((mask >> (3 * c + k)) & 1) f.clauses[c][k] = -f.clauses[c][k];
    out.push_back(f);
  }
  return out;
}

CnfFormula random_formula(std::mt19937& rng, int n, int m) {
  CnfFormula f = make_formula(n, {});
  for (int c = 0; c < m; ++c) {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    std::array<int, 3> cl{};
    for (int k = 0; k < 3; ++k) cl[k] = (rng() & 1) ? vars[k] : -vars[k];
    f.clauses.push_back(cl);
  }
  return f;
}

std::vector<CnfFormula> battery() {
  std::vector<CnfFormula> out;
  for (const auto& triples : std::vector<std::vector<std::array<int, 3>>>{
           {{1, 2, 3}}, {{1, 2, 3}, {2, 3, 4}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}}) {
    const int n = triples.size() == 1 ? 3 : 4;
    for (auto& f : sign_patterns(n, triples)) out.push_back(f);
  }
  std::mt19937 rng(kSeed);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 6);
    out.push_back(random_formula(rng, n, m));
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto formulas = battery();
  long checked = 0, satisfying = 0;
  for (const CnfFormula& f : formulas) {
    const Instance inst = build_unlink_sublink(f);
    const Diagram& d = inst.diagrams[0];
    const int n = f.n_vars;
    for (unsigned bits = 0; bits < (1U << n); ++bits) {
      const Assignment a = assignment_from_index(bits, n);
      const VerificationReport r = verify_assignment(inst, a);
      const bool truth = satisfies(f, bits);
      o.require(r.verdict == truth, "verdict differs from evaluation for " + to_dimacs(f));
      ++checked;
      if (!truth) continue;
      ++satisfying;
      // Sublink: surviving literal components plus every clause component.
      std::set<int> keep;
      for (int i = 1; i <= n; ++i) keep.insert(inst.generator_component[(a[i - 1] ? n + i : i) - 1]);
      for (int c = 2 * n; c < d.component_count(); ++c) keep.insert(c);
      o.require(all_zero(linking_matrix(extract_sublink(d, keep))), "nonzero sublink linking matrix");
      o.require(all_zero(off_diagonal(r.sublink_linking)), "reported sublink linking nonzero");
    }
  }
  o.detail = std::to_string(formulas.size()) + " formulas, " + std::to_string(checked) + " assignments, " +
             std::to_string(satisfying) + " satisfying sublinks with zero linking";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto formulas = battery();
  int doubled = 0;
  for (size_t t = 0; t < formulas.size(); ++t) {
    const CnfFormula& f = formulas[t];
    const int n = f.n_vars, m = static_cast<int>(f.clauses.size());
    const Diagram lf = build_unlink_sublink(f).diagrams[0];
    o.require(lf.crossing_count() <= 2 * n + m * (64 * n + 10), "crossing bound exceeded for " + to_dimacs(f));
    const auto counts = writhe_and_counts(lf);
    for (int c = 2 * n; c < lf.component_count(); ++c)
      o.require(counts.undercrossings[c] == 10, "clause component without exactly ten undercrossings");
    if (t % 8 == 0) {
      const Diagram star = build_unlinking_number(f).diagrams[0];
      o.require(star.crossing_count() <= 4 * lf.crossing_count() + 2 * (2 * n + m), "doubled crossing bound exceeded");
      ++doubled;
    }
  }
  o.detail = std::to_string(formulas.size()) + " builds, " + std::to_string(doubled) + " doubled builds";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937 rng(kSeed + 3);
  auto random_triples = [&](int count, int gens) {
    std::vector<std::array<int, 3>> ts;
    for (int i = 0; i < count; ++i) {
      std::vector<int> g(gens);
      for (int k = 0; k < gens; ++k) g[k] = k + 1;
      std::shuffle(g.begin(), g.end(), rng);
      std::array<int, 3> t{g[0], g[1], g[2]};
      std::sort(t.begin(), t.end());
      ts.push_back(t);
    }
    return ts;
  };
  for (int t = 0; t < 1000; ++t) {
    const int count = 1 + static_cast<int>(rng() % 8);
    const int gens = 3 + static_cast<int>(rng() % 10);
    o.require(!free_reduce(clause_product_word(random_triples(count, gens))).empty(), "commutator product reduced to 1");
  }
  long subsets = 0;
  for (int t = 0; t < 300; ++t) {
    const int count = 1 + t % 4;
    const int gens = 3 + static_cast<int>(rng() % 7);
    const auto triples = random_triples(count, gens);
    const FreeWord w = clause_product_word(triples);
    for (int mask = 0; mask < (1 << gens); ++mask) {
      std::set<int> s;
      for (int g = 1; g <= gens; ++g)
        if ((mask >> (g - 1)) & 1) s.insert(g);
      bool every = true;
      for (const auto& tr : triples) every = every && (s.count(tr[0]) || s.count(tr[1]) || s.count(tr[2]));
      o.require(quotient_delete(w, s).empty() == every, "deletion criterion failed for " + word_to_string(w));
      ++subsets;
    }
  }
  o.detail = "1000 products nontrivial, " + std::to_string(subsets) + " deletion subsets checked";
  return o;
}

// Formulas for the doubled builds: n <= 3 and m <= 3.
std::vector<CnfFormula> small_formulas() {
  std::vector<CnfFormula> out{make_formula(1, {}), make_formula(2, {}), make_formula(3, {})};
  std::mt19937 rng(kSeed + 4);
  for (int m = 1; m <= 3; ++m)
    for (int t = 0; t < 4; ++t) out.push_back(random_formula(rng, 3, m));
  return out;
}

Outcome criterion4() {
  Outcome o;
  int builds = 0, doubles = 0;
  for (const CnfFormula& f : small_formulas()) {
    const Instance inst = build_unlinking_number(f);
    const Diagram& d = inst.diagrams[0];
    ++builds;
    o.require(validate_diagram(d).ok, "invalid doubled diagram");
    o.require(all_zero(off_diagonal(linking_matrix(d))), "doubled diagram has nonzero linking");
    // Pairs of unused variables are split off from the rest by construction.
    const int pieces = static_cast<int>(split_components(d).size());
    std::set<int> used;
    for (const auto& c : f.clauses)
      for (int lit : c) used.insert(std::abs(lit));
    const int expect_pieces = f.clauses.empty() ? f.n_vars : 1 + (f.n_vars - static_cast<int>(used.size()));
    o.require(pieces == expect_pieces, "doubled diagram has " + std::to_string(pieces) + " pieces, expected " +
                                           std::to_string(expect_pieces) + " for " + to_dimacs(f));
    for (int comp = 0; comp < 2 * f.n_vars; ++comp) {
      bool found = false;
      for (int x = 0; x < d.crossing_count() && !found; ++x) {
        if (d.over_component(x) != comp || d.under_component(x) != comp) continue;
        const Reduction r = greedy_reduce(change_crossing(d, x));
        for (const auto& c : r.diagram.components) found = found || c.arcs.empty();
      }
      o.require(found, "no unclasping change splits off a circle for component " + std::to_string(comp));
      ++doubles;
    }
  }
  o.detail = std::to_string(builds) + " builds, " + std::to_string(doubles) + " variable doubles unclasped";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<CnfFormula> fs{make_formula(1, {}), make_formula(2, {}), make_formula(3, {}),
                             make_formula(3, {{1, -2, 3}}), make_formula(3, {{1, 2, 3}, {-1, -2, -3}})};
  for (const CnfFormula& f : fs) {
    const int n = f.n_vars, m = static_cast<int>(f.clauses.size());
    const Instance inst = build_splitting_number(f);
    const Diagram& d = inst.diagrams[0];
    o.require(validate_diagram(d).ok, "invalid splitting diagram");
    o.require(d.component_count() == 4 * n + 2, "component count differs from 4n+2");
    const CnfFormula aug = augment_formula(f);
    o.require(aug.n_vars == 2 * n, "n' differs from 2n");
    o.require(static_cast<int>(aug.clauses.size()) == m + 2 * n, "m' differs from m+2n");
    o.require(static_cast<int>(inst.clause_words.size()) == m + 2 * n, "clause word count differs from m+2n");
    const auto lk = linking_matrix(d);
    int e = -1, p = -1;
    for (int c = 0; c < d.component_count(); ++c) {
      if (d.components[c].label == "E'") e = c;
      if (d.components[c].label == "P") p = c;
    }
    o.require(e >= 0 && p >= 0, "E' or P missing");
    if (e < 0 || p < 0) continue;
    for (int c = 0; c < d.component_count(); ++c)
      if (c != e && c != p) o.require(lk[e][c] == n + 1, "lk(E', v) differs from n+1");
    o.require(lk[e][p] == 0, "lk(E', P) nonzero");
  }
  o.detail = std::to_string(fs.size()) + " instances with n <= 3";
  return o;
}

// Connected graphs up to isomorphism, via the lexicographically least edge mask.
std::vector<Graph> graph_census(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::pair<int, int>, int> slot_of;
    for (size_t s = 0; s < slots.size(); ++s) slot_of[slots[s]] = static_cast<int>(s);
    std::set<unsigned> seen;
    for (unsigned mask = 0; mask < (1U << slots.size()); ++mask) {
      Graph g;
      g.n_vertices = n;
      for (size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1U) g.edges.push_back(slots[s]);
      if (!g.connected()) continue;
      const auto deg = g.degrees();
      if (std::count(deg.begin(), deg.end(), 1) < 2) continue;
      unsigned best = mask;
      for (const auto& q : perms) {
        unsigned img = 0;
        for (const auto& [u, v] : g.edges) img |= 1U << slot_of[{std::min(q[u], q[v]), std::max(q[u], q[v])}];
        best = std::min(best, img);
      }
      if (seen.insert(best).second) out.push_back(g);
    }
  }
  return out;
}

// Oracle: Hamiltonian path by permutation enumeration.
bool has_ham_path(const Graph& g) {
  std::set<std::pair<int, int>> e;
  for (const auto& [u, v] : g.edges) {
    e.insert({u, v});
    e.insert({v, u});
  }
  std::vector<int> p(g.n_vertices);
  for (int i = 0; i < g.n_vertices; ++i) p[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < g.n_vertices && ok; ++i) ok = e.count({p[i], p[i + 1]}) > 0;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Outcome criterion6() {
  Outcome o;
  const auto census = graph_census(6);
  int yes = 0;
  for (const Graph& g : census) {
    const int n = g.n_vertices, m = static_cast<int>(g.edges.size());
    const Instance inst = build_reidemeister_pair(g);
    o.require(inst.diagrams[0].crossing_count() == 4 * m, "cr(D_1) differs from 4m");
    o.require(inst.diagrams[1].crossing_count() == 4 * n - 4, "cr(D_2) differs from 4n-4");
    o.require(inst.parameter == 2 * (m - n + 1), "parameter differs from 2(m-n+1)");
    const bool found = bounded_search(inst.diagrams[0], inst.diagrams[1], inst.parameter).has_value();
    const bool ham = has_ham_path(g);
    o.require(found == ham, "search and Hamiltonian path disagree on " + to_graph_text(g));
    o.require(brute_force_ham_path(g).has_value() == ham, "brute_force_ham_path disagrees with oracle");
    yes += ham;
  }
  o.detail = std::to_string(census.size()) + " graphs, " + std::to_string(yes) + " with a Hamiltonian path";
  return o;
}

Diagram trigon_diagram() {
  Drawing dr;
  dr.push_back(Polyline{"a", "A", {{-10, 0}, {10, 0}, {10, 20}, {-10, 20}}, {3, 3, 3, 3}});
  dr.push_back(Polyline{"b", "B", {{0, -10}, {30, -10}, {30, 5}, {0, 5}}, {1, 1, 1, 1}});
  dr.push_back(Polyline{"c", "C", {{-2, -15}, {40, -15}, {40, 2}, {-2, 2}}, {2, 2, 2, 2}});
  return realize(dr);
}

Outcome criterion7() {
  Outcome o;
  std::vector<Diagram> pool;
  {
    GaussCode g;
    g.signs = {1, 1, 1};
    g.components.push_back(GaussComponent{"k", "k", {{0, true}, {1, false}, {2, true}, {0, false}, {1, true}, {2, false}}});
    pool.push_back(Diagram::from_gauss(g));
  }
  pool.push_back(hopf_row(2, 0).diagram);
  pool.push_back(trigon_diagram());
  pool.push_back(whitehead_double_component(whitehead_double_component(hopf_row(1, 0).diagram, 0), 1));
  pool.push_back(graph_to_vertex_edge_diagram(parse_graph("4 4\n1 2\n2 3\n3 4\n2 4\n")));
  pool.push_back(chain_diagram(3, 1));
  std::mt19937 rng(kSeed + 7);
  int applied = 0, replays = 0;
  std::map<std::string, int> by_kind;
  while (applied < 10000) {
    const Diagram start = pool[rng() % pool.size()];
    Diagram d = start;
    const auto lk = off_diagonal(linking_matrix(d));
    std::vector<RMove> path;
    for (int step = 0; step < 50 && applied < 10000; ++step) {
      Placement pl;
      pl.budget = 40;
      auto moves = enumerate_moves(d, MoveKinds::all(), pl);
      if (d.crossing_count() > start.crossing_count() + 12)
        moves.erase(std::remove_if(moves.begin(), moves.end(),
                                   [](const RMove& mv) { return mv.kind == MoveKind::R1Plus || mv.kind == MoveKind::R2Plus; }),
                    moves.end());
      if (moves.empty()) break;
      // Pick the kind first so that rare kinds are exercised.
      std::map<MoveKind, std::vector<const RMove*>> kinds;
      for (const auto& mv0 : moves) kinds[mv0.kind].push_back(&mv0);
      auto it = kinds.begin();
      std::advance(it, rng() % kinds.size());
      const RMove mv = *it->second[rng() % it->second.size()];
      d = apply_move(d, mv);
      path.push_back(mv);
      ++applied;
      ++by_kind[kind_name(mv.kind)];
      o.require(d.component_count() == start.component_count(), "component count changed");
      o.require(off_diagonal(linking_matrix(d)) == lk, "linking matrix changed");
    }
    const MoveSequence seq = record(start, path);
    const MoveSequence back = sequence_from_json(nlohmann::ordered_json::parse(sequence_to_json(seq).dump()));
    o.require(canonical_hash(replay(start, back)) == (seq.hashes.empty() ? canonical_hash(start) : seq.hashes.back()),
              "replay ended on a different diagram");
    ++replays;
  }
  std::ostringstream os;
  os << applied << " moves (";
  bool first = true;
  for (const auto& [k, v] : by_kind) {
    os << (first ? "" : " ") << k << ":" << v;
    first = false;
  }
  os << "), " << replays << " sequences replayed";
  o.detail = os.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Case {
    CnfFormula f;
    size_t budget;
  };
  const std::vector<Case> cases{{make_formula(1, {}), 64}, {make_formula(3, {{1, -2, 3}}), 0}};
  std::ostringstream os;
  for (const auto& [f, budget] : cases) {
    const int n = f.n_vars;
    const Diagram d = build_unlinking_number(f).diagrams[0];
    const auto w = verify_diagrammatic_unlinking(d, n, budget);
    o.require(w.has_value() && static_cast<int>(w->size()) == n, "no witness of size n");
    if (w) {
      Diagram e = d;
      for (int x : *w) e = change_crossing(e, x);
      const auto cert = certify_unlink(e, budget);
      o.require(cert.has_value(), "witness does not certify");
      if (cert) {
        const Diagram end = replay(e, *cert);
        o.require(end.crossing_count() == 0 && end.component_count() == d.component_count(), "certificate does not end in an unlink");
      }
    }
    o.require(!verify_diagrammatic_unlinking(d, n - 1, budget).has_value(), "witness of size n-1 found");
    os << "n=" << n << " m=" << f.clauses.size() << " cr=" << d.crossing_count() << " budget=" << budget << "; ";
  }
  o.detail = os.str() + "size n found, size n-1 exhausted";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "reduction correctness", 60, criterion1},
      {2, "crossing arithmetic", 10, criterion2},
      {3, "word oracles", 30, criterion3},
      {4, "whitehead doubling", 60, criterion4},
      {5, "splitting instance", 30, criterion5},
      {6, "reidemeister census", 300, criterion6},
      {7, "move engine soundness", 60, criterion7},
      {8, "diagrammatic unlinking", 120, criterion8},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs >= c.limit_seconds) {
      o.pass = false;
      o.failure = "over time limit";
    }
    std::printf("%s %d %s: %s%s [%.2f s / %.0f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                o.pass ? "" : (" -- " + o.failure).c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
