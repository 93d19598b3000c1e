#pragma once

#include <string>

#include "knotred/diagram.hpp"

namespace knotred {

// Canonical byte string of a diagram up to orientation-preserving sphere
// isomorphism of the combinatorial map, respecting over/under data and
// component orientations and ignoring component labels. Pieces that are not
// connected to each other are compared as a multiset; their relative
// nesting is not recorded.
std::string canonicalize(const Diagram& d);

bool isomorphic(const Diagram& a, const Diagram& b);

std::string sha256_hex(const std::string& bytes);

// sha256_hex(canonicalize(d))
std::string canonical_hash(const Diagram& d);

}  // namespace knotred
