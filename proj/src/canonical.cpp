#include "knotred/canonical.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace knotred {

namespace {

SlotRef other_end(const Diagram& d, const ArcEnd& e) {
  return e.head ? d.arcs[e.arc].tail : d.arcs[e.arc].head;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

std::vector<int> bfs_code(const Diagram& d, int start, std::vector<int>& label) {
  std::vector<int> order{start};
  label[start] = 0;
  std::vector<int> code;
  code.reserve(9 * 16);
  for (size_t i = 0; i < order.size(); ++i) {
    const Crossing& c = d.crossings[order[i]];
    code.push_back(c.sign);
    for (int s = 0; s < 4; ++s) {
      const SlotRef o = other_end(d, c.slots[s]);
      if (label[o.crossing] < 0) {
        label[o.crossing] = static_cast<int>(order.size());
        order.push_back(o.crossing);
      }
      code.push_back(label[o.crossing]);
      code.push_back(o.slot);
    }
  }
  for (int x : order) label[x] = -1;
  return code;
}

}  // namespace

std::string canonicalize(const Diagram& input) {
  const Diagram d = Diagram::from_gauss(input.to_gauss());
  const int n = d.crossing_count();

  std::vector<int> piece(n);
  std::iota(piece.begin(), piece.end(), 0);
  auto find = [&piece](int x) {
    while (piece[x] != x) x = piece[x] = piece[piece[x]];
    return x;
  };
  for (const auto& a : d.arcs) piece[find(a.tail.crossing)] = find(a.head.crossing);

  // Isomorphism-invariant refinement restricts the set of start crossings.
  std::vector<std::uint64_t> h(n), next(n);
  for (int x = 0; x < n; ++x) h[x] = static_cast<std::uint64_t>(d.crossings[x].sign + 2);
  for (int round = 0; round < 3; ++round) {
    for (int x = 0; x < n; ++x) {
      std::uint64_t v = mix(17, h[x]);
      for (int s = 0; s < 4; ++s) {
        const SlotRef o = other_end(d, d.crossings[x].slots[s]);
        v = mix(v, h[o.crossing]);
        v = mix(v, static_cast<std::uint64_t>(o.slot));
      }
      next[x] = v;
    }
    h.swap(next);
  }

  std::vector<std::vector<int>> members(n);
  for (int x = 0; x < n; ++x) members[find(x)].push_back(x);

  std::vector<std::string> piece_codes;
  std::vector<int> label(n, -1);
  for (int root = 0; root < n; ++root) {
    if (members[root].empty()) continue;
    std::uint64_t best_h = UINT64_MAX;
    for (int x : members[root]) best_h = std::min(best_h, h[x]);
    std::vector<int> best;
    for (int x : members[root]) {
      if (h[x] != best_h) continue;
      auto code = bfs_code(d, x, label);
      if (best.empty() || code < best) best = std::move(code);
    }
    std::string s = "[";
    for (size_t i = 0; i < best.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(best[i]);
    }
    s += ']';
    piece_codes.push_back(std::move(s));
  }
  std::sort(piece_codes.begin(), piece_codes.end());
  int circles = 0;
  for (const auto& c : d.components)
    if (c.arcs.empty()) ++circles;

  std::string out = "K1;O" + std::to_string(circles) + ";";
  for (const auto& p : piece_codes) out += p;
  return out;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.component_count() != b.component_count())
    return false;
  return canonicalize(a) == canonicalize(b);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string canonical_hash(const Diagram& d) { return sha256_hex(canonicalize(d)); }

}  // namespace knotred
