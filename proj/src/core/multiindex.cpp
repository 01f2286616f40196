#include "core/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace su3t {

namespace {

std::array<std::vector<Mask>, 7> build_masks() {
  std::array<std::vector<Mask>, 7> out;
  // Lexicographic order of index tuples, which for fixed degree corresponds
  // to combinations emitted in the standard nested-loop order.
  for (Mask m = 0; m <= kFullMask; ++m) out[mask_degree(m)].push_back(m);
  for (auto& v : out) {
    std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
      // compare index tuples lexicographically
      for (int i = 0; i < 6; ++i) {
        bool ia = a >> i & 1, ib = b >> i & 1;
        if (ia != ib) return ia;  // smaller leading index first
        if (ia && ib) continue;
      }
      return false;
    });
  }
  return out;
}

std::array<int, 64> build_positions() {
  std::array<int, 64> pos{};
  auto masks = build_masks();
  for (int k = 0; k <= 6; ++k)
    for (int i = 0; i < static_cast<int>(masks[k].size()); ++i) pos[masks[k][i]] = i;
  return pos;
}

}  // namespace

const std::vector<Mask>& degree_masks(int k) {
  static const auto tables = build_masks();
  return tables.at(k);
}

int mask_position(Mask m) {
  static const auto pos = build_positions();
  return pos[m];
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int j = 0; j < 6; ++j)
    if (b >> j & 1) inversions += __builtin_popcount(a >> (j + 1));
  return (inversions & 1) ? -1 : 1;
}

int complement_sign(Mask m) { return wedge_sign(m, kFullMask & ~m); }

int interior_sign(Mask m, int i) {
  int below = __builtin_popcount(m & ((1u << (i - 1)) - 1));
  return (below & 1) ? -1 : 1;
}

std::string mask_to_digits(Mask m) {
  std::string s;
  for (int i = 1; i <= 6; ++i)
    if (m >> (i - 1) & 1) s += static_cast<char>('0' + i);
  return s;
}

Mask mask_from_digits(const std::string& s) {
  Mask m = 0;
  int prev = 0;
  for (char c : s) {
    if (c < '1' || c > '6') throw std::invalid_argument("multi-index digit out of range: " + s);
    int i = c - '0';
    if (i <= prev) throw std::invalid_argument("multi-index not strictly increasing: " + s);
    prev = i;
    m |= static_cast<Mask>(1u << (i - 1));
  }
  return m;
}

}  // namespace su3t
