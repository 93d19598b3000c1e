#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotred {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Literals are signed 1-based variable indices.
struct CnfFormula {
  int n_vars = 0;
  std::vector<std::array<int, 3>> clauses;
  // Augmented formulas contain clauses of the form x v -x v y.
  bool allow_complementary = false;

  void check() const;
};

using Assignment = std::vector<bool>;

CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& f);

bool eval_clause(const std::array<int, 3>& clause, const Assignment& a);
bool eval_formula(const CnfFormula& f, const Assignment& a);

constexpr int kDefaultSatLimit = 24;
constexpr int kDefaultHamLimit = 10;

// Assignments in increasing binary order (variable 1 is the lowest bit).
std::vector<Assignment> brute_force_sat(const CnfFormula& f, int max_vars = kDefaultSatLimit);

Assignment assignment_from_index(unsigned long long bits, int n);
Assignment parse_assignment(const std::string& bits);
std::string assignment_to_string(const Assignment& a);

CnfFormula augment_formula(const CnfFormula& f);

// Vertices are 0-based internally; the text format is 1-based.
struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  void check() const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;
  bool connected() const;
};

Graph parse_graph(const std::string& text);
std::string to_graph_text(const Graph& g);

std::optional<std::vector<int>> brute_force_ham_path(const Graph& g, int max_vertices = kDefaultHamLimit);

Graph replace_forced_edge(const Graph& g, std::pair<int, int> e);

}  // namespace knotred
