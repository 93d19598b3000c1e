#pragma once

#include <random>

#include "knotred/diagram.hpp"

namespace fixtures {

// Linking matrix with the self-writhe diagonal cleared.
inline knotred::IntMatrix linking(const knotred::Diagram& d) {
  auto m = knotred::linking_matrix(d);
  for (size_t i = 0; i < m.size(); ++i) m[i][i] = 0;
  return m;
}

using knotred::Diagram;
using knotred::GaussCode;
using knotred::GaussComponent;

inline Diagram hopf(int sign = 1) {
  GaussCode g;
  g.signs = {sign, sign};
  g.components.push_back(GaussComponent{"a", "a", {{0, true}, {1, false}}});
  g.components.push_back(GaussComponent{"b", "b", {{0, false}, {1, true}}});
  return Diagram::from_gauss(g);
}

inline Diagram circles(int k) {
  GaussCode g;
  for (int i = 0; i < k; ++i) g.components.push_back(GaussComponent{"free", "o" + std::to_string(i), {}});
  return Diagram::from_gauss(g);
}

inline Diagram trefoil(int sign = 1) {
  GaussCode g;
  g.signs = {sign, sign, sign};
  g.components.push_back(
      GaussComponent{"k", "k", {{0, true}, {1, false}, {2, true}, {0, false}, {1, true}, {2, false}}});
  return Diagram::from_gauss(g);
}

// Renumber crossings by a permutation; the map is unchanged.
inline Diagram permute_crossings(const Diagram& d, std::mt19937& rng) {
  GaussCode g = d.to_gauss();
  std::vector<int> perm(g.signs.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  GaussCode out = g;
  for (size_t i = 0; i < perm.size(); ++i) out.signs[perm[i]] = g.signs[i];
  for (auto& c : out.components)
    for (auto& v : c.visits) v.crossing = perm[v.crossing];
  // Also rotate each component's starting point.
  for (auto& c : out.components)
    if (!c.visits.empty()) {
      std::uniform_int_distribution<size_t> pick(0, c.visits.size() - 1);
      std::rotate(c.visits.begin(), c.visits.begin() + pick(rng), c.visits.end());
    }
  std::shuffle(out.components.begin(), out.components.end(), rng);
  return Diagram::from_gauss(out);
}

}  // namespace fixtures
