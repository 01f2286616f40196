#include "core/symbols.hpp"

#include <algorithm>

namespace su3t {

namespace {

void fill_antisym3(std::array<std::array<std::array<int, 6>, 6>, 6>& t, int a, int b, int c, int val) {
  // antisymmetrize a single triple over all six permutations (0-based indices)
  int idx[3] = {a, b, c};
  int perm[3] = {0, 1, 2};
  std::sort(perm, perm + 3);
  do {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perm[i] > perm[j]) ++inv;
    int s = (inv & 1) ? -1 : 1;
    t[idx[perm[0]]][idx[perm[1]]][idx[perm[2]]] = s * val;
  } while (std::next_permutation(perm, perm + 3));
}

SymbolTables build() {
  SymbolTables s;
  for (int p = 0; p < 3; ++p) {
    s.omega[p][p + 3] = 1;
    s.omega[p + 3][p] = -1;
    s.j0[p + 3][p] = 1;   // J0 e_{p+1} = e_{p+4}
    s.j0[p][p + 3] = -1;  // J0 e_{p+4} = -e_{p+1}
  }
  // Re(Ups_0) = e^{123} - e^{156} + e^{246} - e^{345}
  fill_antisym3(s.eps, 0, 1, 2, 1);
  fill_antisym3(s.eps, 0, 4, 5, -1);
  fill_antisym3(s.eps, 1, 3, 5, 1);
  fill_antisym3(s.eps, 2, 3, 4, -1);
  // Im(Ups_0) = e^{126} - e^{135} + e^{234} - e^{456}
  fill_antisym3(s.eps_hat, 0, 1, 5, 1);
  fill_antisym3(s.eps_hat, 0, 2, 4, -1);
  fill_antisym3(s.eps_hat, 1, 2, 3, 1);
  fill_antisym3(s.eps_hat, 3, 4, 5, -1);
  return s;
}

}  // namespace

const SymbolTables& symbols() {
  static const SymbolTables s = build();
  return s;
}

}  // namespace su3t
