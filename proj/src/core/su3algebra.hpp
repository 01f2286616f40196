#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/model.hpp"

namespace su3t {

/// Pointwise SU(3)-structure: the pair (Omega, Upsilon) together with the
/// recovered metric, almost-complex structure and an adapted coframe u
/// satisfying u*(Omega_0) = Omega, u*(Ups_0) = Ups.
template <class S>
struct SU3Point {
  KForm<S> omega{2};
  KForm<S> ups_re{3}, ups_im{3};
  Mat6<S> g{}, J{};
  Mat6<S> coframe{}, coframe_inv{};
};

struct CheckEntry {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<CheckEntry> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Evaluate a k-form on k vectors.
template <class S>
S eval_form(KForm<S> a, const std::vector<Vec6<S>>& vecs) {
  for (const auto& v : vecs) a = interior(v, a);
  a.require_degree(0);
  return a.at(0);
}

template <class S>
Mat6<S> mat_mul(const Mat6<S>& A, const Mat6<S>& B) {
  Mat6<S> C{};
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      if (ScalarOps<S>::is_zero(A[i][k])) continue;
      for (int j = 0; j < 6; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

template <class S>
Vec6<S> mat_apply(const Mat6<S>& A, const Vec6<S>& x) {
  Vec6<S> y{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) y[i] += A[i][j] * x[j];
  return y;
}

template <class S>
std::optional<Mat6<S>> mat_inverse(const Mat6<S>& A) {
  Matrix<S> m(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = A[i][j];
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  Mat6<S> out{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out[i][j] = (*inv)(i, j);
  return out;
}

/// Recover (g, J) from a nondegenerate pair via iota_{JX}(i/8 Ups^bar-Ups) =
/// -1/2 iota_X(Re Ups) ^ Re Ups and g = Omega(., J.).
template <class S>
void recover_metric_J(const KForm<S>& omega, const KForm<S>& ups_re, const KForm<S>& ups_im, Mat6<S>& g_out,
                      Mat6<S>& J_out, double tol = 1e-10);

/// Full validation; never throws, failures are report entries.
template <class S>
ValidationReport validate_structure(const KForm<S>& omega, const KForm<S>& ups_re, const KForm<S>& ups_im,
                                    double tol = 1e-10);

/// Build an SU3Point (validates, recovers g/J, adapts a coframe).
template <class S>
SU3Point<S> make_point(const KForm<S>& omega, const KForm<S>& ups_re, const KForm<S>& ups_im, double tol = 1e-10);

/// Standard model point (identity coframe).
template <class S>
const SU3Point<S>& model_point();

/// Exact trig pair for the S^1 rotation angle t (cos^2 + sin^2 = 1 enforced).
template <class S>
struct TrigPair {
  S c{1}, s{0};
};

/// Oriented 3-plane.
template <class S>
struct OrientedPlane3 {
  std::array<Vec6<S>, 3> basis;
  int orientation = 1;
};

/// Coframe adapted to an SU(3) pair; if a plane is given it must be special
/// Lagrangian of the given phase and is mapped onto span(v_1(th),v_2(th),v_3(th)).
/// The residual freedom is the SO(3) stabilizer; any representative is returned.
template <class S>
Mat6<S> adapt_coframe(const SU3Point<S>& p, const std::optional<OrientedPlane3<S>>& plane,
                      const TrigPair<S>& theta_over_3, double tol = 1e-10);

/// Model-frame representative of a pointwise form: (u^{-1})* psi.
template <class S>
KForm<S> to_model_frame(const KForm<S>& a, const SU3Point<S>& p) {
  return pullback(a, p.coframe_inv);
}
template <class S>
KForm<S> from_model_frame(const KForm<S>& a, const SU3Point<S>& p) {
  return pullback(a, p.coframe);
}

// --- SU(3)-irreducible projections (model-frame bases, coframe conjugation) ---

template <class S>
struct Lambda2Parts {
  S omega_coeff{0};  // component omega_coeff * Omega
  KForm<S> part6{2}, part8{2};
};

template <class S>
struct Lambda3Parts {
  S re_coeff{0}, im_coeff{0};
  KForm<S> part6{3}, part12{3};
};

template <class S>
Lambda2Parts<S> project_lambda2(const KForm<S>& a, const SU3Point<S>& p);

template <class S>
Lambda3Parts<S> project_lambda3(const KForm<S>& a, const SU3Point<S>& p);

// --- rho / chi isomorphisms (model frame) ---

/// rho(h)_ {ij} = h_ik Omega_kj e^{ij}: Sym^2_+ -> Lambda^2_8.
template <class S>
KForm<S> rho(const Mat6<S>& h);

/// chi(h) = h_il eps_ljk e^{ijk}: Sym^2_- -> Lambda^3_12.
template <class S>
KForm<S> chi(const Mat6<S>& h);

template <class S>
bool is_symmetric(const Mat6<S>& h, double tol = 0.0);
/// J0^T h J0 == h and trace == 0
template <class S>
bool in_sym2_plus(const Mat6<S>& h, double tol = 0.0);
/// J0^T h J0 == -h
template <class S>
bool in_sym2_minus(const Mat6<S>& h, double tol = 0.0);

template <class S>
Mat6<S> rho_inverse(const KForm<S>& beta, double tol = 1e-10);
template <class S>
Mat6<S> chi_inverse(const KForm<S>& gamma, double tol = 1e-10);

/// Model-frame basis of Lambda^2_6: iota_{e_i} Re(Ups_0), i = 1..6.
template <class S>
const std::array<KForm<S>, 6>& lambda26_basis();
/// Model-frame basis of Lambda^3_6: e^i ^ Omega_0.
template <class S>
const std::array<KForm<S>, 6>& lambda36_basis();

}  // namespace su3t
