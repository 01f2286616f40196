#pragma once

#include <array>
#include <vector>

#include "core/multiindex.hpp"
#include "core/rational.hpp"

namespace su3t {

template <class S>
using Vec6 = std::array<S, 6>;

template <class S>
using Mat6 = std::array<std::array<S, 6>, 6>;

/// Exterior form of fixed degree on R^6, dense over increasing multi-indices.
/// Immutable in spirit: every operation returns a fresh value.
template <class S>
class KForm {
 public:
  KForm() : degree_(0), c_(1, S(0)) {}
  explicit KForm(int degree) : degree_(degree), c_(kBinom6.at(degree), S(0)) {}

  static KForm basis(Mask m, S coeff = S(1)) {
    KForm f(mask_degree(m));
    f.c_[mask_position(m)] = std::move(coeff);
    return f;
  }

  static KForm scalar(S value) {
    KForm f(0);
    f.c_[0] = std::move(value);
    return f;
  }

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(c_.size()); }

  const S& coeff(Mask m) const { return c_[mask_position(m)]; }
  const S& at(int pos) const { return c_[pos]; }
  S& at(int pos) { return c_[pos]; }

  void add_term(Mask m, const S& v) { c_[mask_position(m)] += v; }

  bool is_zero(double tol = 0.0) const {
    for (const S& v : c_)
      if (!ScalarOps<S>::is_zero(v, tol)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const S& v : c_) m = std::max(m, ScalarOps<S>::abs_double(v));
    return m;
  }

  KForm& operator+=(const KForm& o) {
    require_degree(o.degree_);
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    require_degree(o.degree_);
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  KForm& operator*=(const S& s) {
    for (S& v : c_) v *= s;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const S& s, KForm a) { return a *= s; }
  KForm operator-() const {
    KForm r = *this;
    for (S& v : r.c_) v = -v;
    return r;
  }
  bool operator==(const KForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }

  void require_degree(int k) const {
    if (degree_ != k) throw Error("degree mismatch: " + std::to_string(degree_) + " vs " + std::to_string(k));
  }

 private:
  int degree_;
  std::vector<S> c_;
};

/// Exterior product; canonicalizes by permutation parity.
template <class S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
  int k = a.degree() + b.degree();
  if (k > 6) throw Error("wedge: degree overflow beyond 6");
  KForm<S> r(k);
  const auto& ma = degree_masks(a.degree());
  const auto& mb = degree_masks(b.degree());
  for (int i = 0; i < a.size(); ++i) {
    if (ScalarOps<S>::is_zero(a.at(i))) continue;
    for (int j = 0; j < b.size(); ++j) {
      if (ScalarOps<S>::is_zero(b.at(j))) continue;
      int s = wedge_sign(ma[i], mb[j]);
      if (s == 0) continue;
      Mask m = ma[i] | mb[j];
      S term = a.at(i) * b.at(j);
      if (s < 0) term = -term;
      r.add_term(m, term);
    }
  }
  return r;
}

/// Interior product with a vector (antiderivation of degree -1).
template <class S>
KForm<S> interior(const Vec6<S>& v, const KForm<S>& a) {
  if (a.degree() == 0) return KForm<S>(0);
  KForm<S> r(a.degree() - 1);
  const auto& ma = degree_masks(a.degree());
  for (int p = 0; p < a.size(); ++p) {
    if (ScalarOps<S>::is_zero(a.at(p))) continue;
    Mask m = ma[p];
    for (int i = 1; i <= 6; ++i) {
      if (!(m >> (i - 1) & 1)) continue;
      if (ScalarOps<S>::is_zero(v[i - 1])) continue;
      Mask mm = m & static_cast<Mask>(~(1u << (i - 1)));
      S term = v[i - 1] * a.at(p);
      if (interior_sign(m, i) < 0) term = -term;
      r.add_term(mm, term);
    }
  }
  return r;
}

/// Inner product making the increasing multi-index basis orthonormal.
template <class S>
S inner(const KForm<S>& a, const KForm<S>& b) {
  a.require_degree(b.degree());
  S acc(0);
  for (int i = 0; i < a.size(); ++i) acc += a.at(i) * b.at(i);
  return acc;
}

// Orientation convention: vol0 = e^{142536} = -e^{123456}.
// alpha ^ *beta = <alpha,beta> vol0 gives *e^I = -complement_sign(I) e^{I^c}.
template <class S>
KForm<S> hodge_star(const KForm<S>& a) {
  KForm<S> r(6 - a.degree());
  const auto& ma = degree_masks(a.degree());
  for (int i = 0; i < a.size(); ++i) {
    if (ScalarOps<S>::is_zero(a.at(i))) continue;
    Mask m = ma[i];
    S term = a.at(i);
    if (complement_sign(m) > 0) term = -term;
    r.add_term(kFullMask & static_cast<Mask>(~m), term);
  }
  return r;
}

/// Pullback along the linear map with matrix M (model convention: the
/// coframe u sends e^i to the row-i combination).  (M*psi)_J = sum_I psi_I det M[I,J].
template <class S>
KForm<S> pullback(const KForm<S>& a, const Mat6<S>& M);

/// det of the k x k minor M[rows, cols] (index lists ascending, 0-based).
template <class S>
S minor_det(const Mat6<S>& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  int n = static_cast<int>(rows.size());
  if (n == 0) return S(1);
  if (n == 1) return M[rows[0]][cols[0]];
  S det(0);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  std::vector<int> sub_cols;
  sub_cols.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (ScalarOps<S>::is_zero(M[rows[0]][cols[j]])) continue;
    sub_cols.clear();
    for (int t = 0; t < n; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    S term = M[rows[0]][cols[j]] * minor_det(M, sub_rows, sub_cols);
    if (j & 1) term = -term;
    det += term;
  }
  return det;
}

template <class S>
KForm<S> pullback(const KForm<S>& a, const Mat6<S>& M) {
  int k = a.degree();
  KForm<S> r(k);
  if (k == 0) {
    r.at(0) = a.at(0);
    return r;
  }
  const auto& masks = degree_masks(k);
  std::vector<int> rows, cols;
  for (int i = 0; i < a.size(); ++i) {
    if (ScalarOps<S>::is_zero(a.at(i))) continue;
    rows.clear();
    for (int t = 0; t < 6; ++t)
      if (masks[i] >> t & 1) rows.push_back(t);
    for (int j = 0; j < a.size(); ++j) {
      cols.clear();
      for (int t = 0; t < 6; ++t)
        if (masks[j] >> t & 1) cols.push_back(t);
      S d = minor_det(M, rows, cols);
      if (!ScalarOps<S>::is_zero(d)) r.at(j) += a.at(i) * d;
    }
  }
  return r;
}

template <class S>
KForm<Rat> to_exact(const KForm<S>& a);

template <>
inline KForm<Rat> to_exact<Rat>(const KForm<Rat>& a) {
  return a;
}

template <class S>
KForm<double> to_double(const KForm<S>& a) {
  KForm<double> r(a.degree());
  for (int i = 0; i < a.size(); ++i) r.at(i) = ScalarOps<S>::to_double(a.at(i));
  return r;
}

}  // namespace su3t
