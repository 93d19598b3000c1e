#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

namespace knotred {

// Letters are signed generator indices (1-based); empty = identity.
using FreeWord = std::vector<int>;

// [a,[b,c]] = a b c b^-1 c^-1 a^-1 c b c^-1 b^-1
FreeWord iterated_commutator(int a, int b, int c);

// Each triple is sorted before its commutator is formed.
FreeWord clause_product_word(const std::vector<std::array<int, 3>>& triples);

FreeWord free_reduce(const FreeWord& w);

FreeWord quotient_delete(const FreeWord& w, const std::set<int>& deleted);

std::vector<int> exponent_sums(const FreeWord& w, int n_gens);

std::string word_to_string(const FreeWord& w);
FreeWord word_from_string(const std::string& text);

}  // namespace knotred
