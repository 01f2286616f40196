#pragma once

#include <array>

namespace su3t {

// The Omega/epsilon symbol tables of the standard structure:
//   Omega_0 = (1/2) Omega_ij e^{ij},  Re(Ups_0) = (1/6) eps_ijk e^{ijk},
//   Im(Ups_0) = (1/6) epshat_ijk e^{ijk}, entries in {-1,0,1}.
struct SymbolTables {
  std::array<std::array<int, 6>, 6> omega{};
  std::array<std::array<std::array<int, 6>, 6>, 6> eps{};
  std::array<std::array<std::array<int, 6>, 6>, 6> eps_hat{};
  std::array<std::array<int, 6>, 6> j0{};  // column j = J0(e_j); J0 e_p = e_{p+3}
};

const SymbolTables& symbols();

}  // namespace su3t
