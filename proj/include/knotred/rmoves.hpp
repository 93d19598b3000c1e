#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotred/diagram.hpp"

namespace knotred {

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

std::string kind_name(MoveKind k);
MoveKind kind_from_name(const std::string& s);

// Location data:
//   R1-: crossings {x}            (x bounds a monogon)
//   R2-: crossings {x, y}         (x, y bound a bigon, one strand over at both)
//   R3 : crossings {x, y, z}      (trigon with one strand over both others)
//   R1+: arcs {a} or component c  (kink on arc a, or on a crossing-free circle),
//        with sign and whether the first passage is over
//   R2+: arcs {a1, a2} with dart directions forward[] bounding a common face;
//        over says whether a1 passes over a2
struct RMove {
  MoveKind kind = MoveKind::R2Minus;
  std::vector<int> crossings;
  std::vector<int> arcs;
  int component = -1;
  int sign = 0;
  bool over = false;
  std::array<bool, 2> forward{true, true};

  friend bool operator==(const RMove&, const RMove&) = default;
};

struct MoveKinds {
  bool r1_plus = false;
  bool r1_minus = false;
  bool r2_plus = false;
  bool r2_minus = false;
  bool r3 = false;

  static MoveKinds reducing() { return {false, true, false, true, false}; }
  static MoveKinds r2_minus_only() { return {false, false, false, true, false}; }
  static MoveKinds all() { return {true, true, true, true, true}; }
};

struct Placement {
  // Increasing moves are restricted to faces touching these crossings when
  // the set is non-empty.
  std::set<int> near;
  // Cap on R1+ and on R2+ placements, each.
  size_t budget = std::numeric_limits<size_t>::max();
};

std::vector<RMove> enumerate_moves(const Diagram& d, const MoveKinds& kinds, const Placement& placement = {});

// Throws DiagramError when the move does not apply.
Diagram apply_move(const Diagram& d, const RMove& mv);

struct MoveSequence {
  std::string start_sha;
  std::vector<RMove> moves;
  std::vector<std::string> hashes;  // canonical hash after each move
};

// Fills start_sha and hashes from the start diagram and the moves.
MoveSequence record(const Diagram& start, const std::vector<RMove>& moves);

// Replays the sequence; returns the final diagram or throws DiagramError when
// a move fails or a hash disagrees.
Diagram replay(const Diagram& start, const MoveSequence& seq);

nlohmann::ordered_json move_to_json(const RMove& mv);
RMove move_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json sequence_to_json(const MoveSequence& seq);
MoveSequence sequence_from_json(const nlohmann::ordered_json& j);

struct Reduction {
  Diagram diagram;
  std::vector<RMove> moves;
};

// Applies R1-/R2- moves, lowest crossing ids first, until none remain.
Reduction greedy_reduce(const Diagram& d);

// Greedy reduction, then a breadth-first search over R3 and local increasing
// moves (each successor greedily reduced) visiting at most `budget` states.
// nullopt means inconclusive.
std::optional<MoveSequence> certify_unlink(const Diagram& d, size_t budget);

// The search ran out of states before settling the question.
class SearchLimitError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

struct SearchOptions {
  MoveKinds kinds = MoveKinds::r2_minus_only();
  size_t placement_budget = 64;
  size_t max_states = 2000000;
  // Each move changes the crossing count by at most two.
  bool prune_by_crossings = true;
};

// Breadth-first search from d1 for a diagram isomorphic to d2 within k moves.
std::optional<MoveSequence> bounded_search(const Diagram& d1, const Diagram& d2, int k,
                                           const SearchOptions& options = {});

// First n-subset of crossings (self-crossings enumerated first) whose change
// lets certify_unlink succeed; nullopt if none is found.
std::optional<std::vector<int>> verify_diagrammatic_unlinking(const Diagram& d, int n, size_t budget);

}  // namespace knotred
