#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotred/diagram.hpp"
#include "knotred/formulas.hpp"
#include "knotred/freegroup.hpp"

namespace knotred {

extern const char* const kToolVersion;

enum class Problem { UnlinkSublink, UnlinkingNumber, SplittingNumber, AlternatingSublink, ReidemeisterPair };

std::string problem_name(Problem p);
Problem problem_from_name(const std::string& s);

struct Provenance {
  std::string input_sha256;
  std::string tool_version = kToolVersion;
  unsigned long long seed = 0;
};

struct Instance {
  Problem problem = Problem::UnlinkSublink;
  int parameter = 0;
  std::vector<Diagram> diagrams;
  Provenance provenance;

  std::optional<CnfFormula> formula;  // the input formula F
  std::optional<Graph> graph;
  // One word per clause of F (or of the augmented formula for splitting).
  std::vector<FreeWord> clause_words;
  // Generator -> component index in diagrams[0].
  std::vector<int> generator_component;
  bool trivially_negative = false;
};

Instance build_unlink_sublink(const CnfFormula& f);
Instance build_unlinking_number(const CnfFormula& f);
Instance build_splitting_number(const CnfFormula& f);
Instance build_alternating_sublink(const CnfFormula& f);
Instance build_reidemeister_pair(const Graph& g);

// Generator of a literal: x_i -> i, -x_i -> n_vars + i.
int literal_generator(int literal, int n_vars);
std::vector<std::array<int, 3>> clause_generator_triples(const CnfFormula& f);

struct VerificationReport {
  std::vector<int> deleted_generators;
  std::vector<bool> clause_trivial;
  std::vector<FreeWord> clause_images;
  IntMatrix sublink_linking;  // empty for the splitting instance
  bool verdict = false;       // all clause images trivial
  bool formula_value = false;
};

// Deletes x_i when a_i is true and -x_i otherwise.
VerificationReport verify_assignment(const Instance& inst, const Assignment& a);

// Deleting exactly one generator of each pair is required.
VerificationReport verify_deletion(const Instance& inst, const std::vector<int>& deleted_generators);

nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::ordered_json& j);

}  // namespace knotred
