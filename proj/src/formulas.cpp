#include "knotred/formulas.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace knotred {

void CnfFormula::check() const {
  if (n_vars < 0) throw FormatError("negative variable count");
  for (size_t k = 0; k < clauses.size(); ++k) {
    const auto& c = clauses[k];
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > n_vars)
        throw FormatError("clause " + std::to_string(k + 1) + ": literal out of range");
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (c[i] == c[j]) throw FormatError("clause " + std::to_string(k + 1) + ": repeated variable");
        if (c[i] == -c[j] && !allow_complementary)
          throw FormatError("clause " + std::to_string(k + 1) + ": repeated variable");
      }
  }
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula f;
  long declared_clauses = -1;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      if (declared_clauses >= 0) throw FormatError("duplicate header");
      std::string kind;
      long n = -1, m = -1;
      if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0) throw FormatError("malformed header");
      std::string extra;
      if (ls >> extra) throw FormatError("malformed header");
      f.n_vars = static_cast<int>(n);
      declared_clauses = m;
      continue;
    }
    if (declared_clauses < 0) throw FormatError("clause before header");
    std::istringstream toks(line);
    std::string tok;
    while (toks >> tok) {
      size_t pos = 0;
      int lit = 0;
      try {
        lit = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw FormatError("bad literal: " + tok);
      }
      if (pos != tok.size()) throw FormatError("bad literal: " + tok);
      if (lit == 0) {
        if (cur.size() != 3) throw FormatError("clause width " + std::to_string(cur.size()) + " != 3");
        f.clauses.push_back({cur[0], cur[1], cur[2]});
        cur.clear();
      } else {
        cur.push_back(lit);
      }
    }
  }
  if (declared_clauses < 0) throw FormatError("missing header");
  if (!cur.empty()) throw FormatError("unterminated clause");
  if (static_cast<long>(f.clauses.size()) != declared_clauses) throw FormatError("clause count does not match header");
  for (const auto& c : f.clauses)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (std::abs(c[i]) == std::abs(c[j])) throw FormatError("repeated variable");
  f.check();
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) os << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return os.str();
}

bool eval_clause(const std::array<int, 3>& clause, const Assignment& a) {
  for (int lit : clause) {
    const bool v = a.at(std::abs(lit) - 1);
    if (lit > 0 ? v : !v) return true;
  }
  return false;
}

bool eval_formula(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.n_vars) throw std::invalid_argument("assignment length mismatch");
  for (const auto& c : f.clauses)
    if (!eval_clause(c, a)) return false;
  return true;
}

Assignment assignment_from_index(unsigned long long bits, int n) {
  Assignment a(n);
  for (int i = 0; i < n; ++i) a[i] = (bits >> i) & 1ULL;
  return a;
}

std::vector<Assignment> brute_force_sat(const CnfFormula& f, int max_vars) {
  if (f.n_vars > max_vars)
    throw std::invalid_argument("brute force limited to " + std::to_string(max_vars) + " variables");
  std::vector<Assignment> out;
  const unsigned long long total = 1ULL << f.n_vars;
  for (unsigned long long b = 0; b < total; ++b) {
    Assignment a = assignment_from_index(b, f.n_vars);
    if (eval_formula(f, a)) out.push_back(std::move(a));
  }
  return out;
}

Assignment parse_assignment(const std::string& bits) {
  Assignment a;
  for (char ch : bits) {
    if (ch == '1' || ch == 'T' || ch == 't')
      a.push_back(true);
    else if (ch == '0' || ch == 'F' || ch == 'f')
      a.push_back(false);
    else
      throw FormatError(std::string("bad assignment character '") + ch + "'");
  }
  return a;
}

std::string assignment_to_string(const Assignment& a) {
  std::string s;
  for (bool b : a) s += b ? '1' : '0';
  return s;
}

CnfFormula augment_formula(const CnfFormula& f) {
  f.check();
  CnfFormula g;
  g.n_vars = 2 * f.n_vars;
  g.allow_complementary = true;
  g.clauses = f.clauses;
  const int n = f.n_vars;
  for (int i = 1; i <= n; ++i) {
    g.clauses.push_back({i, -i, n + i});
    g.clauses.push_back({i, -i, -(n + i)});
  }
  return g;
}

void Graph::check() const {
  if (n_vertices < 0) throw FormatError("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices) throw FormatError("edge endpoint out of range");
    if (u == v) throw FormatError("self-loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw FormatError("duplicate edge");
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_vertices, 0);
  for (auto [u, v] : edges) ++deg[u], ++deg[v];
  return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_vertices);
  for (auto [u, v] : edges) adj[u].push_back(v), adj[v].push_back(u);
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

bool Graph::connected() const {
  if (n_vertices == 0) return true;
  const auto adj = adjacency();
  std::vector<bool> seen(n_vertices, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) seen[w] = true, ++count, stack.push_back(w);
  }
  return count == n_vertices;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw FormatError("malformed graph header");
  g.n_vertices = static_cast<int>(n);
  for (long k = 0; k < m; ++k) {
    long u = 0, v = 0;
    if (!(in >> u >> v)) throw FormatError("expected " + std::to_string(m) + " edges");
    g.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  std::string extra;
  if (in >> extra) throw FormatError("trailing data in graph file");
  g.check();
  return g;
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream os;
  os << g.n_vertices << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::optional<std::vector<int>> brute_force_ham_path(const Graph& g, int max_vertices) {
  if (g.n_vertices > max_vertices)
    throw std::invalid_argument("brute force limited to " + std::to_string(max_vertices) + " vertices");
  g.check();
  if (g.n_vertices == 0) return std::vector<int>{};
  const auto adj = g.adjacency();
  std::vector<int> path;
  std::vector<bool> used(g.n_vertices, false);
  std::function<bool(int)> extend = [&](int v) {
    if (static_cast<int>(path.size()) == g.n_vertices) return true;
    for (int w : adj[v]) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      if (extend(w)) return true;
      path.pop_back();
      used[w] = false;
    }
    return false;
  };
  for (int s = 0; s < g.n_vertices; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), false);
    used[s] = true;
    if (extend(s)) return path;
  }
  return std::nullopt;
}

Graph replace_forced_edge(const Graph& g, std::pair<int, int> e) {
  g.check();
  auto same = [&](const std::pair<int, int>& x) {
    return (x.first == e.first && x.second == e.second) || (x.first == e.second && x.second == e.first);
  };
  auto it = std::find_if(g.edges.begin(), g.edges.end(), same);
  if (it == g.edges.end()) throw std::invalid_argument("edge not in graph");
  Graph out;
  out.n_vertices = g.n_vertices + 2;
  for (const auto& x : g.edges)
    if (!same(x)) out.edges.push_back(x);
  out.edges.emplace_back(e.first, g.n_vertices);
  out.edges.emplace_back(e.second, g.n_vertices + 1);
  return out;
}

}  // namespace knotred
