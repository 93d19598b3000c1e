#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotred/canonical.hpp"
#include "knotred/gadgets.hpp"
#include "knotred/reductions.hpp"
#include "knotred/rmoves.hpp"

using namespace knotred;

namespace {

CnfFormula formula(int n, std::vector<std::array<int, 3>> clauses) {
  CnfFormula f;
  f.n_vars = n;
  f.clauses = std::move(clauses);
  return f;
}

// A clause word collapses iff one of its generators is deleted.
bool clause_killed(const std::array<int, 3>& triple, const std::set<int>& deleted) {
  for (int g : triple)
    if (deleted.count(g)) return true;
  return false;
}

}  // namespace

TEST_SUITE("reductions") {
  TEST_CASE("literal generators") {
    CHECK(literal_generator(2, 4) == 2);
    CHECK(literal_generator(-2, 4) == 6);
    const auto t = clause_generator_triples(formula(4, {{-1, -3, 4}}));
    CHECK(t[0] == std::array<int, 3>{4, 5, 7});
  }

  TEST_CASE("unlink sublink instance") {
    const CnfFormula f = formula(3, {{1, -2, 3}});
    const Instance inst = build_unlink_sublink(f);
    REQUIRE(inst.diagrams.size() == 1);
    const Diagram& d = inst.diagrams[0];
    CHECK(validate_diagram(d).ok);
    CHECK(d.component_count() == 7);
    CHECK(inst.parameter == 4);
    CHECK(d.crossing_count() <= 2 * 3 + 1 * (64 * 3 + 10));
    CHECK(inst.provenance.input_sha256 == sha256_hex(to_dimacs(f)));
    CHECK(inst.provenance.tool_version == std::string(kToolVersion));
    CHECK(inst.clause_words.size() == 1);
    CHECK(inst.clause_words[0].size() == 10);
    CHECK(writhe_and_counts(d).undercrossings[6] == 10);
    CHECK(d.components[6].role == "clause");
  }

  TEST_CASE("assignment verdicts agree with evaluation") {
    std::mt19937 rng(3);
    for (int t = 0; t < 6; ++t) {
      const int n = 3 + t % 2;
      CnfFormula f;
      f.n_vars = n;
      for (int c = 0; c < 2; ++c) {
        std::vector<int> vars{1, 2, 3, 4};
        vars.resize(n);
        std::shuffle(vars.begin(), vars.end(), rng);
        std::array<int, 3> cl{};
        for (int k = 0; k < 3; ++k) cl[k] = rng() % 2 ? vars[k] : -vars[k];
        f.clauses.push_back(cl);
      }
      const Instance inst = build_unlink_sublink(f);
      const auto triples = clause_generator_triples(f);
      for (int idx = 0; idx < (1 << n); ++idx) {
        const Assignment a = assignment_from_index(idx, n);
        const VerificationReport r = verify_assignment(inst, a);
        CHECK(r.formula_value == eval_formula(f, a));
        CHECK(r.verdict == eval_formula(f, a));
        const std::set<int> del(r.deleted_generators.begin(), r.deleted_generators.end());
        CHECK(del.size() == static_cast<size_t>(n));
        for (size_t c = 0; c < triples.size(); ++c) CHECK(r.clause_trivial[c] == clause_killed(triples[c], del));
        if (r.verdict)
          for (const auto& row : r.sublink_linking)
            for (size_t j = 0; j < row.size(); ++j) CHECK((row[j] == 0 || &row == &r.sublink_linking[j]));
      }
    }
  }

  TEST_CASE("deletion must pick one generator per pair") {
    const Instance inst = build_unlink_sublink(formula(3, {{1, 2, 3}}));
    CHECK_THROWS(verify_deletion(inst, {1, 4, 2}));
    CHECK_THROWS(verify_deletion(inst, {1, 2}));
    CHECK_THROWS(verify_assignment(inst, Assignment{true}));
    CHECK(verify_deletion(inst, {4, 5, 6}).verdict == false);
    CHECK(verify_deletion(inst, {1, 5, 6}).verdict == true);
  }

  TEST_CASE("unlinking number instance") {
    const Instance inst = build_unlinking_number(formula(3, {{1, -2, 3}}));
    const Diagram& d = inst.diagrams[0];
    CHECK(validate_diagram(d).ok);
    CHECK(inst.parameter == 3);
    CHECK(d.component_count() == 7);
    for (const auto& row : fixtures::linking(d))
      for (int v : row) CHECK(v == 0);
    const auto counts = writhe_and_counts(d);
    for (int c = 0; c < d.component_count(); ++c) CHECK(counts.self_crossings[c] >= 2);
    CHECK(split_components(d).size() == 1);
  }

  TEST_CASE("unclasping the deleted literal doubles gives an unlink") {
    const CnfFormula f = formula(3, {{1, -2, 3}});
    const Instance inst = build_unlinking_number(f);
    const Diagram& d = inst.diagrams[0];
    int certified = 0;
    for (int idx = 0; idx < 8; ++idx) {
      const Assignment a = assignment_from_index(idx, 3);
      if (!eval_formula(f, a)) continue;
      Diagram e = d;
      for (int gen : verify_assignment(inst, a).deleted_generators) {
        const int comp = inst.generator_component[gen - 1];
        int clasp = -1;
        for (int x = 0; x < e.crossing_count() && clasp < 0; ++x)
          if (e.over_component(x) == comp && e.under_component(x) == comp) clasp = x;
        REQUIRE(clasp >= 0);
        e = change_crossing(e, clasp);
      }
      const auto cert = certify_unlink(e, 0);
      REQUIRE(cert.has_value());
      const Diagram end = replay(e, *cert);
      CHECK(end.crossing_count() == 0);
      CHECK(end.component_count() == 7);
      ++certified;
    }
    CHECK(certified == 7);
  }

  TEST_CASE("alternating sublink instance") {
    const Instance inst = build_alternating_sublink(formula(3, {{1, -2, 3}}));
    CHECK(inst.parameter == 4);
    CHECK_FALSE(is_alternating_diagram(inst.diagrams[0]).overall);
    CHECK(canonicalize(inst.diagrams[0]) == canonicalize(build_unlinking_number(formula(3, {{1, -2, 3}})).diagrams[0]));
  }

  TEST_CASE("splitting number instance") {
    const CnfFormula f = formula(3, {{1, -2, 3}});
    const Instance inst = build_splitting_number(f);
    const Diagram& d = inst.diagrams[0];
    CHECK(validate_diagram(d).ok);
    CHECK(inst.parameter == 3);
    CHECK(d.component_count() == 4 * 3 + 2);
    const auto m = fixtures::linking(d);
    const int e = 4 * 3 + 1;
    const int p = 4 * 3;
    for (int c = 0; c < 4 * 3; ++c) CHECK(std::abs(m[e][c]) == 3 + 1);
    CHECK(m[e][p] == 0);
    for (int v : m[p]) CHECK(v == 0);
    CHECK(writhe_and_counts(d).undercrossings[p] >= 10 * (1 + 2 * 3));
    CHECK(d.components[e].label == "E'");
    CHECK(d.components[p].label == "P");
    CHECK(inst.clause_words.size() == 1 + 2 * 3);
    for (int idx = 0; idx < 8; ++idx) {
      const Assignment a = assignment_from_index(idx, 3);
      CHECK(verify_assignment(inst, a).verdict == eval_formula(f, a));
    }
  }

  TEST_CASE("reidemeister pair instance") {
    const Graph p4 = parse_graph("4 3\n1 2\n2 3\n3 4\n");
    const Instance inst = build_reidemeister_pair(p4);
    REQUIRE(inst.diagrams.size() == 2);
    CHECK(inst.parameter == 0);
    CHECK(inst.diagrams[0].crossing_count() == 4 * 3);
    CHECK(inst.diagrams[1].crossing_count() == 4 * 4 - 4);
    CHECK_FALSE(inst.trivially_negative);
    CHECK(build_reidemeister_pair(parse_graph("3 3\n1 2\n2 3\n1 3\n")).trivially_negative);
    CHECK(inst.provenance.input_sha256 == sha256_hex(to_graph_text(p4)));
  }

  TEST_CASE("instance json round trip") {
    const Instance inst = build_unlink_sublink(formula(3, {{1, -2, 3}}));
    const auto j = instance_to_json(inst);
    const Instance back = instance_from_json(nlohmann::ordered_json::parse(j.dump()));
    CHECK(back.problem == inst.problem);
    CHECK(back.parameter == inst.parameter);
    CHECK(back.clause_words == inst.clause_words);
    CHECK(back.generator_component == inst.generator_component);
    CHECK(back.provenance.input_sha256 == inst.provenance.input_sha256);
    CHECK(canonicalize(back.diagrams[0]) == canonicalize(inst.diagrams[0]));
    REQUIRE(back.formula.has_value());
    CHECK(back.formula->clauses == inst.formula->clauses);
    CHECK(instance_to_json(back).dump() == j.dump());
  }
}
