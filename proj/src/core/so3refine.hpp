#pragma once

#include "core/su3algebra.hpp"

namespace su3t {

/// T/N splitting induced by an adapted coframe; theta is the phase of the
/// defining SL plane and t = theta/3 is carried as an exact trig pair.
template <class S>
struct Splitting {
  Mat6<S> coframe = identity6<S>();
  Mat6<S> coframe_inv = identity6<S>();
  TrigPair<S> t;  // cos(theta/3), sin(theta/3)

  S cos3t() const { return S(4) * t.c * t.c * t.c - S(3) * t.c; }
  S sin3t() const { return S(3) * t.s - S(4) * t.s * t.s * t.s; }
  S cos2t() const { return t.c * t.c - t.s * t.s; }
  S sin2t() const { return S(2) * t.c * t.s; }

  static Splitting model(TrigPair<S> t = {}) {
    Splitting s;
    s.t = t;
    return s;
  }
};

inline Splitting<double> splitting_from_theta(double theta) {
  Splitting<double> s;
  s.t.c = std::cos(theta / 3.0);
  s.t.s = std::sin(theta / 3.0);
  return s;
}

/// The printed basis families (with the chi/rho regeneration used for all
/// computation) and the solvers for refined decomposition.
template <class S>
struct BasisTables {
  std::array<KForm<S>, 3> gamma;    // (Lambda^2_8)_1
  std::array<KForm<S>, 5> upsilon;  // (Lambda^2_8)_2
  KForm<S> theta0{3}, delta0{3};    // (Lambda^3_12)_0' and _0''
  std::array<KForm<S>, 5> theta;    // (Lambda^3_12)_2'
  std::array<KForm<S>, 5> delta;    // (Lambda^3_12)_2''

  std::array<KForm<S>, 3> tn1;  // basis of (T (x) N)_1

  Matrix<S> gram28_inv;   // 8x8 over [gamma | upsilon]
  Matrix<S> gram312_inv;  // 12x12 over [theta0, delta0, theta, delta]
  Matrix<S> chainB_inv;   // 15x15 over [Lam2T | Omega0, TN1, Ups | Lam2N]
};

template <class S>
const BasisTables<S>& basis_tables();

/// The 42 refined torsion scalars.
template <class S>
struct RefinedTorsion {
  S tau0{0}, tau0_hat{0};
  std::array<S, 3> A{}, C{}, G{}, J{}, M{}, N{};
  std::array<S, 5> B{}, D{}, E{}, F{};
  S E0{0}, F0{0};
};

template <class S>
struct TorsionTensor {
  S tau0{0}, tau0_hat{0};
  KForm<S> tau2{2}, tau2_hat{2};
  KForm<S> tau3{3};
  KForm<S> tau4{1}, tau5{1};
};

/// SO(3)-refined pieces of a 2-form (chain refining the SU(3) splitting).
template <class S>
struct Refined2 {
  S omega_coeff{0};
  KForm<S> l26T{2}, l26N{2};
  KForm<S> l28_1{2}, l28_2{2};
};

/// Alternative chain Lambda^2(T) + [R Omega + (T(x)N)_1 + (Lambda^2_8)_2] + Lambda^2(N).
template <class S>
struct Refined2Blocks {
  KForm<S> lam2T{2}, lam2N{2};
  S omega_coeff{0};
  KForm<S> tn1{2}, l28_2{2};
};

template <class S>
struct Refined3 {
  S re_coeff{0}, im_coeff{0};
  KForm<S> l36T{3}, l36N{3};
  KForm<S> l312_0p{3}, l312_2p{3}, l312_0pp{3}, l312_2pp{3};
};

template <class S>
Refined2<S> refine_lambda2(const KForm<S>& a, const Splitting<S>& s);
template <class S>
Refined2Blocks<S> refine_lambda2_blocks(const KForm<S>& a, const Splitting<S>& s);
template <class S>
Refined3<S> refine_lambda3(const KForm<S>& a, const Splitting<S>& s);

/// Refined coefficients of a (model-frame) torsion tensor; exact Gram solves.
/// Errors if tau2/tau2_hat are not in Lambda^2_8 or tau3 not in Lambda^3_12.
template <class S>
RefinedTorsion<S> extract_refined(const TorsionTensor<S>& t, const Splitting<S>& s, double tol = 1e-10);

/// Reassembly via (SU3-TorsionSplit-2); inverse of extract_refined.
template <class S>
TorsionTensor<S> reassemble_refined(const RefinedTorsion<S>& r);

/// A normal vector expressed in the rotated frame: value = sqrt2_scale ?
/// sqrt(2) * sum c_p w_p(theta) : sum c_p w_p(theta).
template <class S>
struct WVector {
  std::array<S, 3> c{};
  bool sqrt2_scale = false;

  /// Squared g-norm (exact even when a sqrt(2) factor is present).
  S norm_sq() const {
    S n(0);
    for (const auto& v : c) n += v * v;
    return sqrt2_scale ? S(2) * n : n;
  }
  Vec6<double> ambient(double theta) const {
    double t = theta / 3.0, k = sqrt2_scale ? std::sqrt(2.0) : 1.0;
    Vec6<double> out{};
    for (int p = 0; p < 3; ++p) {
      double a = k * ScalarOps<S>::to_double(c[p]);
      out[p] += a * -std::sin(t);
      out[p + 3] += a * std::cos(t);
    }
    return out;
  }
};

/// natural-isomorphism (Lambda^2_8)_1 -> e^{i theta} N^sharp, Gamma_p -> sqrt(2) w_p(theta).
template <class S>
WVector<S> natural_iso(const KForm<S>& beta, double tol = 1e-10);

/// Section map on T: (e^p)^section = w_p(theta).
template <class S>
WVector<S> s_iso(const KForm<S>& alpha, double tol = 1e-10);

/// The (SU3-Isom) composite [J alpha_N]^section for alpha_N supported on N:
/// sends 3N_p w^{p+3} to 3N_p w_p(theta).
template <class S>
WVector<S> s_iso_j_normal(const KForm<S>& alpha, double tol = 1e-10);

/// Isometric functionals on the 1-dimensional modules: value = sqrt3_mult * sqrt(3).
template <class S>
struct DagValue {
  S sqrt3_mult{0};
  double value() const { return ScalarOps<S>::to_double(sqrt3_mult) * std::sqrt(3.0); }
};

template <class S>
DagValue<S> dagger(const KForm<S>& gamma, double tol = 1e-10);  // on (Lambda^3_12)_0'
template <class S>
DagValue<S> ddagger(const KForm<S>& gamma, double tol = 1e-10);  // on (Lambda^3_12)_0''

/// Printed-basis audit (exact layer).
struct BasisAuditFamily {
  std::string name;
  bool printed_equals_regenerated = true;
  std::vector<int> printed_membership_failures;        // indices failing the module membership
  std::vector<std::array<int, 2>> orthogonality_fail;  // pairs with nonzero inner product
  std::vector<std::string> inner_products;             // values for the failing pairs
  std::vector<std::string> norms_sq;
  int rank = 0;
};

struct BasisAudit {
  std::vector<BasisAuditFamily> families;
  bool all_claims_hold() const;
};

BasisAudit audit_bases();

}  // namespace su3t
