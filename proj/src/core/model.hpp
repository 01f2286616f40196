#pragma once

#include "core/kform.hpp"
#include "core/symbols.hpp"

namespace su3t {

// Standard structures on V = R^6:
//   Omega_0 = e^{14} + e^{25} + e^{36}
//   Re(Ups_0) = e^{123} - e^{156} + e^{246} - e^{345}
//   Im(Ups_0) = e^{126} - e^{135} + e^{234} - e^{456}
//   vol_0 = (1/6) Omega_0^3 = e^{142536} = -e^{123456}

KForm<Rat> omega0_exact();
KForm<Rat> re_upsilon0_exact();
KForm<Rat> im_upsilon0_exact();
KForm<Rat> vol0_exact();

template <class S>
KForm<S> convert(const KForm<Rat>& a);

template <>
inline KForm<Rat> convert<Rat>(const KForm<Rat>& a) {
  return a;
}
template <>
inline KForm<double> convert<double>(const KForm<Rat>& a) {
  return to_double(a);
}

template <class S>
const KForm<S>& omega0() {
  static const KForm<S> f = convert<S>(omega0_exact());
  return f;
}
template <class S>
const KForm<S>& re_upsilon0() {
  static const KForm<S> f = convert<S>(re_upsilon0_exact());
  return f;
}
template <class S>
const KForm<S>& im_upsilon0() {
  static const KForm<S> f = convert<S>(im_upsilon0_exact());
  return f;
}
template <class S>
const KForm<S>& vol0() {
  static const KForm<S> f = convert<S>(vol0_exact());
  return f;
}

template <class S>
Mat6<S> j0_matrix() {
  Mat6<S> J{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) J[i][j] = ScalarOps<S>::from_int(symbols().j0[i][j]);
  return J;
}

template <class S>
Mat6<S> identity6() {
  Mat6<S> I{};
  for (int i = 0; i < 6; ++i) I[i][i] = S(1);
  return I;
}

/// Symplectic pairing Omega_0(.,.) on Lambda^k: Gram-determinant extension of
/// Omega_0(e^i, e^j) = Omega_ij on 1-forms.
template <class S>
S omega_pairing_basis(Mask a, Mask b) {
  int A[6], B[6], n = 0, nb = 0;
  for (int t = 0; t < 6; ++t) {
    if (a >> t & 1) A[n++] = t;
    if (b >> t & 1) B[nb++] = t;
  }
  if (n != nb) return S(0);
  if (n == 0) return S(1);
  // Laplace expansion; n <= 6 and typically 2..4
  Mat6<S> M{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = ScalarOps<S>::from_int(symbols().omega[A[i]][B[j]]);
  std::vector<int> rows(n), cols(n);
  for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
  return minor_det(M, rows, cols);
}

template <class S>
S omega_pairing(const KForm<S>& a, const KForm<S>& b) {
  a.require_degree(b.degree());
  const auto& masks = degree_masks(a.degree());
  S acc(0);
  for (int i = 0; i < a.size(); ++i) {
    if (ScalarOps<S>::is_zero(a.at(i))) continue;
    for (int j = 0; j < b.size(); ++j) {
      if (ScalarOps<S>::is_zero(b.at(j))) continue;
      S p = omega_pairing_basis<S>(masks[i], masks[j]);
      if (!ScalarOps<S>::is_zero(p)) acc += a.at(i) * p * b.at(j);
    }
  }
  return acc;
}

/// Symplectic Hodge star: alpha ^ (star beta) = Omega_0(alpha, beta) vol_0.
template <class S>
KForm<S> symplectic_star(const KForm<S>& a) {
  KForm<S> r(6 - a.degree());
  const auto& masks = degree_masks(a.degree());
  for (int i = 0; i < a.size(); ++i) {
    Mask mI = masks[i];
    S val(0);
    for (int j = 0; j < a.size(); ++j) {
      if (ScalarOps<S>::is_zero(a.at(j))) continue;
      S p = omega_pairing_basis<S>(mI, masks[j]);
      if (!ScalarOps<S>::is_zero(p)) val += p * a.at(j);
    }
    if (!ScalarOps<S>::is_zero(val)) {
      if (complement_sign(mI) > 0) val = -val;
      r.add_term(kFullMask & static_cast<Mask>(~mI), val);
    }
  }
  return r;
}

/// Basis covector e^i (1-based).
template <class S>
KForm<S> covector(int i) {
  return KForm<S>::basis(static_cast<Mask>(1u << (i - 1)));
}

/// Basis vector e_i (1-based).
template <class S>
Vec6<S> basis_vector(int i) {
  Vec6<S> v{};
  v[i - 1] = S(1);
  return v;
}

}  // namespace su3t
