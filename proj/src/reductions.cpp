#include "knotred/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "knotred/canonical.hpp"
#include "knotred/diagram_io.hpp"
#include "knotred/gadgets.hpp"

namespace knotred {

const char* const kToolVersion = "knotred 1.0.0";

namespace {

const std::vector<std::pair<Problem, std::string>> kProblemNames = {
    {Problem::UnlinkSublink, "unlink-sublink"},
    {Problem::UnlinkingNumber, "unlinking-number"},
    {Problem::SplittingNumber, "splitting-number"},
    {Problem::AlternatingSublink, "alternating-sublink"},
    {Problem::ReidemeisterPair, "reidemeister-pair"},
};

std::string clause_label(size_t j) { return "clause_" + std::to_string(j + 1); }

void require_bound(bool ok, const std::string& what) {
  if (!ok) throw DiagramError("crossing bound violated: " + what);
}

Polyline reversed(const Polyline& p) {
  Polyline q{p.role, p.label, {}, {}};
  const size_t k = p.points.size();
  for (size_t j = 0; j < k; ++j) {
    q.points.push_back(p.points[k - 1 - j]);
    q.levels.push_back(p.levels[(2 * k - 2 - j) % k]);
  }
  return q;
}

}  // namespace

std::string problem_name(Problem p) {
  for (const auto& [k, v] : kProblemNames)
    if (k == p) return v;
  return "?";
}

Problem problem_from_name(const std::string& s) {
  for (const auto& [k, v] : kProblemNames)
    if (v == s) return k;
  throw DiagramError("unknown problem " + s);
}

int literal_generator(int literal, int n_vars) { return literal > 0 ? literal : n_vars - literal; }

std::vector<std::array<int, 3>> clause_generator_triples(const CnfFormula& f) {
  std::vector<std::array<int, 3>> out;
  for (const auto& c : f.clauses) {
    std::array<int, 3> t{};
    for (int j = 0; j < 3; ++j) t[j] = literal_generator(c[j], f.n_vars);
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

Instance build_unlink_sublink(const CnfFormula& f) {
  f.check();
  if (f.n_vars < 1) throw DiagramError("formula needs at least one variable");
  const int n = f.n_vars;
  const auto triples = clause_generator_triples(f);
  Instance inst;
  inst.problem = Problem::UnlinkSublink;
  inst.formula = f;
  inst.provenance.input_sha256 = sha256_hex(to_dimacs(f));
  std::vector<long long> heights;
  for (const auto& t : triples) {
    inst.clause_words.push_back(clause_product_word({t}));
    heights.push_back(band_height(10));
  }
  long long total = 0;
  for (long long h : heights) total += h;
  Row row = hopf_row(n, total);
  const auto bands = split_region(row.region, heights);
  Diagram d = row.diagram;
  for (size_t j = 0; j < triples.size(); ++j)
    d = route_word_loop(d, inst.clause_words[j], bands[j], row.strands, "clause", clause_label(j));
  const long long m = static_cast<long long>(f.clauses.size());
  require_bound(d.crossing_count() <= 2 * n + m * (64 * n + 10), "2n+m(64n+10)");
  for (int g = 1; g <= 2 * n; ++g) inst.generator_component.push_back(g - 1);
  inst.diagrams.push_back(std::move(d));
  inst.parameter = n + static_cast<int>(m);
  return inst;
}

Instance build_unlinking_number(const CnfFormula& f) {
  Instance inst = build_unlink_sublink(f);
  const Diagram& base = inst.diagrams[0];
  Diagram d = base;
  for (int c = 0; c < d.component_count(); ++c) d = whitehead_double_component(d, c);
  require_bound(d.crossing_count() <= 4 * base.crossing_count() + 2 * base.component_count(), "4cr+2k");
  inst.diagrams[0] = std::move(d);
  inst.problem = Problem::UnlinkingNumber;
  inst.parameter = f.n_vars;
  return inst;
}

Instance build_alternating_sublink(const CnfFormula& f) {
  Instance inst = build_unlinking_number(f);
  inst.problem = Problem::AlternatingSublink;
  inst.parameter = f.n_vars + static_cast<int>(f.clauses.size());
  if (is_alternating_diagram(inst.diagrams[0]).overall) throw DiagramError("doubled diagram unexpectedly alternating");
  return inst;
}

Instance build_splitting_number(const CnfFormula& f) {
  f.check();
  if (f.n_vars < 1) throw DiagramError("formula needs at least one variable");
  const int n = f.n_vars;
  const CnfFormula fa = augment_formula(f);
  const int np = fa.n_vars;
  Instance inst;
  inst.problem = Problem::SplittingNumber;
  inst.formula = f;
  inst.provenance.input_sha256 = sha256_hex(to_dimacs(f));
  const auto triples = clause_generator_triples(fa);
  for (const auto& t : triples) inst.clause_words.push_back(clause_product_word({t}));
  const FreeWord word = clause_product_word(triples);

  std::vector<std::string> labels;
  for (int k = 1; k <= np; ++k) labels.push_back("x_" + std::to_string(k));
  for (int k = 1; k <= np; ++k) labels.push_back("¬x_" + std::to_string(k));
  Row row = circle_row(labels, band_height(word.size()));
  Diagram d = route_word_loop(row.diagram, word, row.region, row.strands, "P", "P");
  const int circles = 2 * np;
  for (int c = 0; c < circles; ++c) d = whitehead_double_component(d, c);

  // E runs below the band, between the two strands of every left side and
  // over both strands of every right side.
  const long long U = kUnit;
  Polyline e{"E", "E", {}, {}};
  auto push = [&](long long x, long long y, int level) {
    e.points.push_back({x, y});
    e.levels.push_back(level);
  };
  push(-10 * U, 5 * U, -5);
  long long last = 0;
  for (int k = 0; k < circles; ++k) {
    const long long X = k * 30 * U;
    push(X, 5 * U, 5);
    push(X + 22 * U, 5 * U, -5);
    last = X;
  }
  const long long xe = last + 30 * U;
  push(xe, 5 * U, -5);
  push(xe, -10 * U, -5);
  push(-10 * U, -10 * U, -5);
  Drawing dr = drawing_of(d);
  dr.push_back(e);
  Diagram with_e = realize(dr);
  const int e_index = circles + 1;
  if (linking_matrix(with_e)[e_index][0] < 0) {
    dr.back() = reversed(e);
    with_e = realize(dr);
  }
  CableResult cable = cable_longitude(with_e, e_index, n + 1);
  cable.diagram.components[e_index].label = "E'";
  for (int g = 1; g <= 2 * np; ++g) inst.generator_component.push_back(g - 1);
  inst.diagrams.push_back(std::move(cable.diagram));
  inst.parameter = n;
  return inst;
}

Instance build_reidemeister_pair(const Graph& g) {
  g.check();
  if (g.n_vertices < 1) throw DiagramError("graph needs at least one vertex");
  const int n = g.n_vertices;
  const int m = static_cast<int>(g.edges.size());
  Instance inst;
  inst.problem = Problem::ReidemeisterPair;
  inst.graph = g;
  inst.provenance.input_sha256 = sha256_hex(to_graph_text(g));
  const auto deg = g.degrees();
  const auto leaves = std::count(deg.begin(), deg.end(), 1);
  inst.trivially_negative = leaves < 2 || m < n - 1;
  inst.diagrams.push_back(graph_to_vertex_edge_diagram(g));
  inst.diagrams.push_back(chain_diagram(2 * n - 1, std::max(0, m - n + 1)));
  inst.parameter = std::max(0, 2 * (m - n + 1));
  return inst;
}

VerificationReport verify_deletion(const Instance& inst, const std::vector<int>& deleted) {
  if (!inst.formula) throw DiagramError("instance has no formula");
  if (inst.problem == Problem::ReidemeisterPair) throw DiagramError("not a formula instance");
  const int pairs = inst.problem == Problem::SplittingNumber ? 2 * inst.formula->n_vars : inst.formula->n_vars;
  std::vector<int> hits(pairs + 1, 0);
  for (int gen : deleted) {
    if (gen < 1 || gen > 2 * pairs) throw DiagramError("deleted generator out of range");
    ++hits[gen > pairs ? gen - pairs : gen];
  }
  for (int i = 1; i <= pairs; ++i)
    if (hits[i] != 1) throw DiagramError("exactly one of x_" + std::to_string(i) + " and ¬x_" + std::to_string(i) + " must be deleted");

  VerificationReport r;
  r.deleted_generators = deleted;
  std::sort(r.deleted_generators.begin(), r.deleted_generators.end());
  const std::set<int> S(deleted.begin(), deleted.end());
  r.verdict = true;
  for (const auto& w : inst.clause_words) {
    FreeWord img = quotient_delete(w, S);
    r.clause_trivial.push_back(img.empty());
    r.verdict = r.verdict && img.empty();
    r.clause_images.push_back(std::move(img));
  }
  if (inst.problem != Problem::SplittingNumber) {
    std::set<int> keep;
    for (int c = 0; c < inst.diagrams[0].component_count(); ++c) keep.insert(c);
    for (int gen : deleted) keep.erase(inst.generator_component[gen - 1]);
    r.sublink_linking = linking_matrix(extract_sublink(inst.diagrams[0], keep));
  }
  Assignment a(inst.formula->n_vars);
  for (int i = 1; i <= inst.formula->n_vars; ++i) a[i - 1] = S.count(i) > 0;
  r.formula_value = eval_formula(*inst.formula, a);
  return r;
}

VerificationReport verify_assignment(const Instance& inst, const Assignment& a) {
  if (!inst.formula) throw DiagramError("instance has no formula");
  const int n = inst.formula->n_vars;
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("assignment length must equal the number of variables");
  const int pairs = inst.problem == Problem::SplittingNumber ? 2 * n : n;
  std::vector<int> deleted;
  for (int i = 1; i <= pairs; ++i) {
    const bool value = i <= n ? a[i - 1] : false;
    deleted.push_back(value ? i : pairs + i);
  }
  return verify_deletion(inst, deleted);
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  j["problem"] = problem_name(inst.problem);
  j["parameter"] = inst.parameter;
  nlohmann::ordered_json diagrams = nlohmann::ordered_json::array();
  nlohmann::ordered_json roles = nlohmann::ordered_json::object();
  for (size_t i = 0; i < inst.diagrams.size(); ++i) {
    diagrams.push_back(diagram_to_json(inst.diagrams[i]));
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (size_t c = 0; c < inst.diagrams[i].components.size(); ++c)
      r[std::to_string(c)] = inst.diagrams[i].components[c].label;
    roles[std::to_string(i)] = std::move(r);
  }
  j["diagrams"] = std::move(diagrams);
  j["roles"] = std::move(roles);
  j["provenance"] = {{"input_sha256", inst.provenance.input_sha256},
                     {"tool_version", inst.provenance.tool_version},
                     {"seed", inst.provenance.seed}};
  if (inst.formula) {
    j["formula"] = {{"n_vars", inst.formula->n_vars}, {"clauses", inst.formula->clauses}};
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const auto& w : inst.clause_words) words.push_back(w);
    j["clause_words"] = std::move(words);
    j["generator_component"] = inst.generator_component;
  }
  if (inst.graph) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : inst.graph->edges) edges.push_back({u + 1, v + 1});
    j["graph"] = {{"n_vertices", inst.graph->n_vertices}, {"edges", edges}};
    j["trivially_negative"] = inst.trivially_negative;
  }
  return j;
}

Instance instance_from_json(const nlohmann::ordered_json& j) {
  try {
    Instance inst;
    inst.problem = problem_from_name(j.at("problem").get<std::string>());
    inst.parameter = j.at("parameter").get<int>();
    for (const auto& d : j.at("diagrams")) inst.diagrams.push_back(diagram_from_json(d));
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      inst.provenance.input_sha256 = p.value("input_sha256", "");
      inst.provenance.tool_version = p.value("tool_version", "");
      inst.provenance.seed = p.value("seed", 0ULL);
    }
    if (j.contains("formula")) {
      CnfFormula f;
      f.n_vars = j["formula"].at("n_vars").get<int>();
      f.clauses = j["formula"].at("clauses").get<std::vector<std::array<int, 3>>>();
      f.check();
      inst.formula = f;
      for (const auto& w : j.at("clause_words")) inst.clause_words.push_back(w.get<FreeWord>());
      inst.generator_component = j.at("generator_component").get<std::vector<int>>();
    }
    if (j.contains("graph")) {
      Graph g;
      g.n_vertices = j["graph"].at("n_vertices").get<int>();
      for (const auto& e : j["graph"].at("edges")) g.edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
      g.check();
      inst.graph = g;
      inst.trivially_negative = j.value("trivially_negative", false);
    }
    if (inst.diagrams.empty()) throw DiagramError("instance has no diagrams");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed instance JSON: ") + e.what());
  } catch (const FormatError& e) {
    throw DiagramError(std::string("malformed instance JSON: ") + e.what());
  }
}

}  // namespace knotred
