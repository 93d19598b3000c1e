#include "knotred/freegroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace knotred {

FreeWord iterated_commutator(int a, int b, int c) {
  if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("generator indices must be positive");
  if (a == b || b == c || a == c) throw std::invalid_argument("commutator needs three distinct generators");
  return {a, b, c, -b, -c, -a, c, b, -c, -b};
}

FreeWord clause_product_word(const std::vector<std::array<int, 3>>& triples) {
  FreeWord w;
  for (auto t : triples) {
    std::sort(t.begin(), t.end());
    const FreeWord c = iterated_commutator(t[0], t[1], t[2]);
    w.insert(w.end(), c.begin(), c.end());
  }
  return w;
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("zero letter in word");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

FreeWord quotient_delete(const FreeWord& w, const std::set<int>& deleted) {
  FreeWord kept;
  for (int x : w)
    if (!deleted.count(std::abs(x))) kept.push_back(x);
  return free_reduce(kept);
}

std::vector<int> exponent_sums(const FreeWord& w, int n_gens) {
  std::vector<int> sums(n_gens + 1, 0);
  for (int x : w) {
    if (std::abs(x) > n_gens) throw std::out_of_range("letter exceeds generator count");
    sums[std::abs(x)] += x > 0 ? 1 : -1;
  }
  return sums;
}

std::string word_to_string(const FreeWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  return os.str();
}

FreeWord word_from_string(const std::string& text) {
  std::istringstream is(text);
  FreeWord w;
  std::string tok;
  while (is >> tok) {
    size_t pos = 0;
    int x = std::stoi(tok, &pos);
    if (pos != tok.size() || x == 0) throw std::invalid_argument("bad letter: " + tok);
    w.push_back(x);
  }
  return w;
}

}  // namespace knotred
