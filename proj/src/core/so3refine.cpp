#include "core/so3refine.hpp"

#include <sstream>

namespace su3t {

namespace {

template <class S>
KForm<S> mono2(int i, int j, int sign) {
  // sign * e^{ij} with (i,j) as written
  Mask m = static_cast<Mask>((1u << (i - 1)) | (1u << (j - 1)));
  return KForm<S>::basis(m, ScalarOps<S>::from_int(i < j ? sign : -sign));
}

template <class S>
KForm<S> mono3(int i, int j, int k, int sign) {
  // sign * e^{ijk} with (i,j,k) as written (not necessarily increasing)
  int idx[3] = {i, j, k};
  int inv = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (idx[a] > idx[b]) ++inv;
  Mask m = static_cast<Mask>((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)));
  return KForm<S>::basis(m, ScalarOps<S>::from_int((inv & 1) ? -sign : sign));
}

template <class S>
std::array<std::array<S, 3>, 3> sym0_basis_elem(int d) {
  // ordering matching the B_delta slots of the torsion solution:
  // (23), (13), (12), diag(1,-1,0), diag(0,1,-1)
  std::array<std::array<S, 3>, 3> m{};
  const int od[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  if (d < 3) {
    m[od[d][0]][od[d][1]] = m[od[d][1]][od[d][0]] = S(1);
  } else if (d == 3) {
    m[0][0] = S(1);
    m[1][1] = S(-1);
  } else {
    m[1][1] = S(1);
    m[2][2] = S(-1);
  }
  return m;
}

template <class S>
BasisTables<S> build_tables() {
  BasisTables<S> t;

  // (Lambda^2_8)_1: rho of the skew blocks, normalized to the printed scale
  for (int p = 0; p < 3; ++p) {
    Mat6<S> h{};
    int a[3] = {0, 0, 0};
    a[p] = 1;
    int m[3][3] = {{0, a[2], -a[1]}, {-a[2], 0, a[0]}, {a[1], -a[0], 0}};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        h[r][c + 3] = ScalarOps<S>::from_int(m[r][c]);
        h[c + 3][r] = ScalarOps<S>::from_int(m[r][c]);
      }
    t.gamma[p] = ScalarOps<S>::from_ratio(1, 2) * rho(h);
  }
  // (Lambda^2_8)_2: rho of the diag blocks
  for (int d = 0; d < 5; ++d) {
    auto b = sym0_basis_elem<S>(d);
    Mat6<S> h{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        h[r][c] = b[r][c];
        h[r + 3][c + 3] = b[r][c];
      }
    t.upsilon[d] = ScalarOps<S>::from_ratio(1, 2) * rho(h);
  }
  // (Lambda^3_12) families via chi
  {
    Mat6<S> h{};
    for (int i = 0; i < 3; ++i) {
      h[i][i] = S(1);
      h[i + 3][i + 3] = S(-1);
    }
    t.theta0 = ScalarOps<S>::from_ratio(1, 2) * chi(h);
    Mat6<S> h2{};
    for (int i = 0; i < 3; ++i) h2[i][i + 3] = h2[i + 3][i] = S(1);
    t.delta0 = ScalarOps<S>::from_ratio(1, 2) * chi(h2);
  }
  for (int d = 0; d < 5; ++d) {
    auto b = sym0_basis_elem<S>(d);
    Mat6<S> hp{}, hpp{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        hp[r][c] = b[r][c];
        hp[r + 3][c + 3] = -b[r][c];
        hpp[r][c + 3] = b[r][c];
        hpp[c + 3][r] = b[r][c];
      }
    t.theta[d] = ScalarOps<S>::from_ratio(1, 4) * chi(hp);
    t.delta[d] = ScalarOps<S>::from_ratio(1, 4) * chi(hpp);
  }

  // (T (x) N)_1 = { a1 ^ a2 + J0 a2 ^ J0 a1 }: e^{15}-e^{24}, e^{16}-e^{34}, e^{26}-e^{35}
  t.tn1[0] = mono2<S>(1, 5, 1) + mono2<S>(2, 4, -1);
  t.tn1[1] = mono2<S>(1, 6, 1) + mono2<S>(3, 4, -1);
  t.tn1[2] = mono2<S>(2, 6, 1) + mono2<S>(3, 5, -1);

  // Gram solvers
  {
    Matrix<S> G(8, 8);
    std::vector<const KForm<S>*> fam;
    for (auto& f : t.gamma) fam.push_back(&f);
    for (auto& f : t.upsilon) fam.push_back(&f);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) G(i, j) = inner(*fam[i], *fam[j]);
    auto gi = inverse(G);
    if (!gi) throw Error("Lambda^2_8 family Gram is singular (bug)");
    t.gram28_inv = *gi;
  }
  {
    Matrix<S> G(12, 12);
    std::vector<const KForm<S>*> fam{&t.theta0, &t.delta0};
    for (auto& f : t.theta) fam.push_back(&f);
    for (auto& f : t.delta) fam.push_back(&f);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) G(i, j) = inner(*fam[i], *fam[j]);
    auto gi = inverse(G);
    if (!gi) throw Error("Lambda^3_12 family Gram is singular (bug)");
    t.gram312_inv = *gi;
  }
  {
    // chain B full coordinate solver: [Lam2T(3) | Omega0 | TN1(3) | Ups(5) | Lam2N(3)]
    Matrix<S> Bm(15, 15);
    std::vector<KForm<S>> cols;
    cols.push_back(mono2<S>(2, 3, 1));
    cols.push_back(mono2<S>(3, 1, 1));
    cols.push_back(mono2<S>(1, 2, 1));
    cols.push_back(omega0<S>());
    for (auto& f : t.tn1) cols.push_back(f);
    for (auto& f : t.upsilon) cols.push_back(f);
    cols.push_back(mono2<S>(5, 6, 1));
    cols.push_back(mono2<S>(6, 4, 1));
    cols.push_back(mono2<S>(4, 5, 1));
    for (int c = 0; c < 15; ++c)
      for (int r = 0; r < 15; ++r) Bm(r, c) = cols[c].at(r);
    auto bi = inverse(Bm);
    if (!bi) throw Error("chain-B basis is singular (bug)");
    t.chainB_inv = *bi;
  }
  return t;
}

template <class S>
bool on_T_only(const KForm<S>& a, double tol) {
  a.require_degree(1);
  for (int i = 3; i < 6; ++i)
    if (!ScalarOps<S>::is_zero(a.at(i), tol)) return false;
  return true;
}

}  // namespace

template <class S>
const BasisTables<S>& basis_tables() {
  static const BasisTables<S> t = build_tables<S>();
  return t;
}

template <class S>
Refined2<S> refine_lambda2(const KForm<S>& a, const Splitting<S>& s) {
  a.require_degree(2);
  KForm<S> a0 = pullback(a, s.coframe_inv);
  // project through the SU(3) split first, then cut Lambda^2_6 by T/N support
  // and Lambda^2_8 against [gamma|upsilon]
  Lambda2Parts<S> su3 = project_lambda2(a0, model_point<S>());
  Refined2<S> out;
  out.omega_coeff = su3.omega_coeff;
  // part6 = iota_X Re(Ups): split X into T# and N# pieces
  const auto& l26 = lambda26_basis<S>();
  Matrix<S> G(6, 6);
  static const Matrix<S> l26_gram_inv = [] {
    Matrix<S> g(6, 6);
    const auto& b = lambda26_basis<S>();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(i, j) = inner(b[i], b[j]);
    auto gi = inverse(g);
    if (!gi) throw Error("Lambda^2_6 Gram singular (bug)");
    return *gi;
  }();
  std::vector<S> rhs(6);
  for (int i = 0; i < 6; ++i) rhs[i] = inner(l26[i], su3.part6);
  std::vector<S> x = matvec(l26_gram_inv, rhs);
  KForm<S> pT(2), pN(2);
  for (int i = 0; i < 3; ++i) {
    pT += x[i] * l26[i];
    pN += x[i + 3] * l26[i + 3];
  }
  out.l26T = pullback(pT, s.coframe);
  out.l26N = pullback(pN, s.coframe);

  const auto& bt = basis_tables<S>();
  std::vector<S> rhs8(8);
  for (int i = 0; i < 3; ++i) rhs8[i] = inner(bt.gamma[i], su3.part8);
  for (int i = 0; i < 5; ++i) rhs8[3 + i] = inner(bt.upsilon[i], su3.part8);
  std::vector<S> y = matvec(bt.gram28_inv, rhs8);
  KForm<S> p1(2), p2(2);
  for (int i = 0; i < 3; ++i) p1 += y[i] * bt.gamma[i];
  for (int i = 0; i < 5; ++i) p2 += y[3 + i] * bt.upsilon[i];
  out.l28_1 = pullback(p1, s.coframe);
  out.l28_2 = pullback(p2, s.coframe);
  return out;
}

template <class S>
Refined2Blocks<S> refine_lambda2_blocks(const KForm<S>& a, const Splitting<S>& s) {
  a.require_degree(2);
  KForm<S> a0 = pullback(a, s.coframe_inv);
  const auto& bt = basis_tables<S>();
  std::vector<S> rhs(15);
  for (int i = 0; i < 15; ++i) rhs[i] = a0.at(i);
  std::vector<S> x = matvec(bt.chainB_inv, rhs);
  Refined2Blocks<S> out;
  KForm<S> lam2T(2), tn1(2), l282(2), lam2N(2);
  lam2T = x[0] * mono2<S>(2, 3, 1) + x[1] * mono2<S>(3, 1, 1) + x[2] * mono2<S>(1, 2, 1);
  out.omega_coeff = x[3];
  for (int i = 0; i < 3; ++i) tn1 += x[4 + i] * bt.tn1[i];
  for (int i = 0; i < 5; ++i) l282 += x[7 + i] * bt.upsilon[i];
  lam2N = x[12] * mono2<S>(5, 6, 1) + x[13] * mono2<S>(6, 4, 1) + x[14] * mono2<S>(4, 5, 1);
  out.lam2T = pullback(lam2T, s.coframe);
  out.tn1 = pullback(tn1, s.coframe);
  out.l28_2 = pullback(l282, s.coframe);
  out.lam2N = pullback(lam2N, s.coframe);
  return out;
}

template <class S>
Refined3<S> refine_lambda3(const KForm<S>& a, const Splitting<S>& s) {
  a.require_degree(3);
  KForm<S> a0 = pullback(a, s.coframe_inv);
  Lambda3Parts<S> su3 = project_lambda3(a0, model_point<S>());
  Refined3<S> out;
  out.re_coeff = su3.re_coeff;
  out.im_coeff = su3.im_coeff;
  const auto& l36 = lambda36_basis<S>();
  static const Matrix<S> l36_gram_inv = [] {
    Matrix<S> g(6, 6);
    const auto& b = lambda36_basis<S>();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(i, j) = inner(b[i], b[j]);
    auto gi = inverse(g);
    if (!gi) throw Error("Lambda^3_6 Gram singular (bug)");
    return *gi;
  }();
  std::vector<S> rhs(6);
  for (int i = 0; i < 6; ++i) rhs[i] = inner(l36[i], su3.part6);
  std::vector<S> x = matvec(l36_gram_inv, rhs);
  KForm<S> pT(3), pN(3);
  for (int i = 0; i < 3; ++i) {
    pT += x[i] * l36[i];
    pN += x[i + 3] * l36[i + 3];
  }
  out.l36T = pullback(pT, s.coframe);
  out.l36N = pullback(pN, s.coframe);

  const auto& bt = basis_tables<S>();
  std::vector<S> rhs12(12);
  std::vector<const KForm<S>*> fam{&bt.theta0, &bt.delta0};
  for (auto& f : bt.theta) fam.push_back(&f);
  for (auto& f : bt.delta) fam.push_back(&f);
  for (int i = 0; i < 12; ++i) rhs12[i] = inner(*fam[i], su3.part12);
  std::vector<S> y = matvec(bt.gram312_inv, rhs12);
  out.l312_0p = pullback(y[0] * bt.theta0, s.coframe);
  out.l312_0pp = pullback(y[1] * bt.delta0, s.coframe);
  KForm<S> p2p(3), p2pp(3);
  for (int i = 0; i < 5; ++i) {
    p2p += y[2 + i] * bt.theta[i];
    p2pp += y[7 + i] * bt.delta[i];
  }
  out.l312_2p = pullback(p2p, s.coframe);
  out.l312_2pp = pullback(p2pp, s.coframe);
  return out;
}

template <class S>
RefinedTorsion<S> extract_refined(const TorsionTensor<S>& t, const Splitting<S>& s, double tol) {
  const auto& bt = basis_tables<S>();
  RefinedTorsion<S> r;
  r.tau0 = t.tau0;
  r.tau0_hat = t.tau0_hat;

  auto coords28 = [&](const KForm<S>& f, const char* what) {
    std::vector<S> rhs(8);
    for (int i = 0; i < 3; ++i) rhs[i] = inner(bt.gamma[i], f);
    for (int i = 0; i < 5; ++i) rhs[3 + i] = inner(bt.upsilon[i], f);
    std::vector<S> x = matvec(bt.gram28_inv, rhs);
    KForm<S> recon(2);
    for (int i = 0; i < 3; ++i) recon += x[i] * bt.gamma[i];
    for (int i = 0; i < 5; ++i) recon += x[3 + i] * bt.upsilon[i];
    if (!(recon - f).is_zero(tol * std::max(1.0, f.max_abs())))
      throw Error(std::string("extract_refined: ") + what + " is not in Lambda^2_8");
    return x;
  };
  std::vector<S> x2 = coords28(t.tau2, "tau2");
  std::vector<S> x2h = coords28(t.tau2_hat, "tau2_hat");
  for (int p = 0; p < 3; ++p) {
    r.A[p] = x2[p] / S(4);
    r.C[p] = x2h[p] / S(4);
  }
  for (int d = 0; d < 5; ++d) {
    r.B[d] = x2[3 + d] / S(4);
    r.D[d] = x2h[3 + d] / S(4);
  }

  {
    std::vector<S> rhs(12);
    std::vector<const KForm<S>*> fam{&bt.theta0, &bt.delta0};
    for (auto& f : bt.theta) fam.push_back(&f);
    for (auto& f : bt.delta) fam.push_back(&f);
    for (int i = 0; i < 12; ++i) rhs[i] = inner(*fam[i], t.tau3);
    std::vector<S> y = matvec(bt.gram312_inv, rhs);
    KForm<S> recon(3);
    for (int i = 0; i < 12; ++i) recon += y[i] * (*fam[i]);
    if (!(recon - t.tau3).is_zero(tol * std::max(1.0, t.tau3.max_abs())))
      throw Error("extract_refined: tau3 is not in Lambda^3_12");
    r.E0 = y[0] / S(4);
    r.F0 = y[1] / S(4);
    for (int d = 0; d < 5; ++d) {
      r.E[d] = y[2 + d] / S(4);
      r.F[d] = y[7 + d] / S(4);
    }
  }

  for (int p = 0; p < 3; ++p) {
    r.G[p] = t.tau4.at(p) / S(12);
    r.J[p] = t.tau4.at(p + 3) / S(12);
    r.M[p] = t.tau5.at(p) / S(3);
    r.N[p] = t.tau5.at(p + 3) / S(3);
  }
  (void)s;  // splitting fixes the frame; inputs are already model-frame forms
  return r;
}

template <class S>
TorsionTensor<S> reassemble_refined(const RefinedTorsion<S>& r) {
  const auto& bt = basis_tables<S>();
  TorsionTensor<S> t;
  t.tau0 = r.tau0;
  t.tau0_hat = r.tau0_hat;
  for (int p = 0; p < 3; ++p) {
    t.tau2 += (S(4) * r.A[p]) * bt.gamma[p];
    t.tau2_hat += (S(4) * r.C[p]) * bt.gamma[p];
  }
  for (int d = 0; d < 5; ++d) {
    t.tau2 += (S(4) * r.B[d]) * bt.upsilon[d];
    t.tau2_hat += (S(4) * r.D[d]) * bt.upsilon[d];
  }
  t.tau3 = (S(4) * r.E0) * bt.theta0 + (S(4) * r.F0) * bt.delta0;
  for (int d = 0; d < 5; ++d) t.tau3 += (S(4) * r.E[d]) * bt.theta[d] + (S(4) * r.F[d]) * bt.delta[d];
  for (int p = 0; p < 3; ++p) {
    t.tau4.at(p) = S(12) * r.G[p];
    t.tau4.at(p + 3) = S(12) * r.J[p];
    t.tau5.at(p) = S(3) * r.M[p];
    t.tau5.at(p + 3) = S(3) * r.N[p];
  }
  return t;
}

template <class S>
WVector<S> natural_iso(const KForm<S>& beta, double tol) {
  beta.require_degree(2);
  const auto& bt = basis_tables<S>();
  // beta must lie in span(Gamma); Gammas are orthogonal with norm^2 = 2
  WVector<S> out;
  out.sqrt2_scale = true;
  KForm<S> recon(2);
  for (int p = 0; p < 3; ++p) {
    S c = inner(bt.gamma[p], beta) / S(2);
    out.c[p] = c;
    recon += c * bt.gamma[p];
  }
  if (!(recon - beta).is_zero(tol * std::max(1.0, beta.max_abs())))
    throw Error("natural_iso: form is not in (Lambda^2_8)_1");
  return out;
}

template <class S>
WVector<S> s_iso(const KForm<S>& alpha, double tol) {
  alpha.require_degree(1);
  if (!on_T_only(alpha, tol * std::max(1.0, alpha.max_abs()))) throw Error("s_iso: 1-form is not in T");
  WVector<S> out;
  for (int p = 0; p < 3; ++p) out.c[p] = alpha.at(p);
  return out;
}

template <class S>
WVector<S> s_iso_j_normal(const KForm<S>& alpha, double tol) {
  alpha.require_degree(1);
  for (int i = 0; i < 3; ++i)
    if (!ScalarOps<S>::is_zero(alpha.at(i), tol * std::max(1.0, alpha.max_abs())))
      throw Error("s_iso_j_normal: 1-form is not in N");
  WVector<S> out;
  for (int p = 0; p < 3; ++p) out.c[p] = alpha.at(p + 3);
  return out;
}

template <class S>
DagValue<S> dagger(const KForm<S>& gamma, double tol) {
  gamma.require_degree(3);
  const auto& bt = basis_tables<S>();
  S c = inner(bt.theta0, gamma) / S(12);  // |Theta_0|^2 = 12
  if (!(gamma - c * bt.theta0).is_zero(tol * std::max(1.0, gamma.max_abs())))
    throw Error("dagger: form is not in (Lambda^3_12)_0'");
  return DagValue<S>{S(2) * c};  // Theta_0 -> 2 sqrt(3)
}

template <class S>
DagValue<S> ddagger(const KForm<S>& gamma, double tol) {
  gamma.require_degree(3);
  const auto& bt = basis_tables<S>();
  S c = inner(bt.delta0, gamma) / S(12);
  if (!(gamma - c * bt.delta0).is_zero(tol * std::max(1.0, gamma.max_abs())))
    throw Error("ddagger: form is not in (Lambda^3_12)_0''");
  return DagValue<S>{S(2) * c};
}

// ---------------- audit ----------------

namespace {

// printed lists, transcribed from the source displays
std::vector<KForm<Rat>> printed_family(const std::string& name) {
  using R = Rat;
  std::vector<KForm<R>> fam;
  if (name == "Gamma") {
    fam = {mono2<R>(2, 3, -1) + mono2<R>(5, 6, -1), mono2<R>(3, 1, -1) + mono2<R>(6, 4, -1),
           mono2<R>(1, 2, -1) + mono2<R>(4, 5, -1)};
  } else if (name == "Upsilon") {
    fam = {mono2<R>(2, 6, 1) + mono2<R>(3, 5, 1), mono2<R>(1, 6, 1) + mono2<R>(3, 4, 1),
           mono2<R>(1, 5, 1) + mono2<R>(2, 4, 1), mono2<R>(1, 4, 1) + mono2<R>(2, 5, -1),
           mono2<R>(2, 5, 1) + mono2<R>(3, 6, -1)};
  } else if (name == "Theta") {
    fam = {mono3<R>(2, 4, 5, -1) + mono3<R>(3, 6, 4, -1), mono3<R>(1, 4, 5, -1) + mono3<R>(3, 5, 6, -1),
           mono3<R>(1, 6, 4, -1) + mono3<R>(2, 5, 6, -1), mono3<R>(1, 5, 6, -1) + mono3<R>(2, 6, 4, 1),
           mono3<R>(2, 6, 4, 1) + mono3<R>(3, 4, 5, 1)};
  } else if (name == "Delta") {
    fam = {mono3<R>(1, 2, 5, 1) + mono3<R>(3, 1, 6, 1), mono3<R>(1, 2, 4, 1) + mono3<R>(2, 3, 6, 1),
           mono3<R>(3, 1, 4, 1) + mono3<R>(2, 3, 5, 1), mono3<R>(3, 1, 5, -1) + mono3<R>(2, 3, 4, 1),
           mono3<R>(1, 2, 6, -1) + mono3<R>(3, 1, 5, 1)};
  }
  return fam;
}

bool member28(const KForm<Rat>& b) {
  return wedge(b, re_upsilon0<Rat>()).is_zero() && symplectic_star(b) == -wedge(b, omega0<Rat>());
}
bool member312(const KForm<Rat>& g) {
  return wedge(g, omega0<Rat>()).is_zero() && wedge(g, re_upsilon0<Rat>()).is_zero() &&
         wedge(g, im_upsilon0<Rat>()).is_zero();
}

}  // namespace

bool BasisAudit::all_claims_hold() const {
  for (const auto& f : families)
    if (!f.printed_equals_regenerated || !f.orthogonality_fail.empty() || !f.printed_membership_failures.empty())
      return false;
  return true;
}

BasisAudit audit_bases() {
  BasisAudit audit;
  const auto& bt = basis_tables<Rat>();
  struct Item {
    std::string name;
    std::vector<KForm<Rat>> printed, regen;
    bool deg2;
  };
  std::vector<Item> items;
  items.push_back({"Gamma", printed_family("Gamma"), {bt.gamma.begin(), bt.gamma.end()}, true});
  items.push_back({"Upsilon", printed_family("Upsilon"), {bt.upsilon.begin(), bt.upsilon.end()}, true});
  items.push_back({"Theta", printed_family("Theta"), {bt.theta.begin(), bt.theta.end()}, false});
  items.push_back({"Delta", printed_family("Delta"), {bt.delta.begin(), bt.delta.end()}, false});

  for (auto& it : items) {
    BasisAuditFamily fam;
    fam.name = it.name;
    fam.printed_equals_regenerated = true;
    for (size_t i = 0; i < it.printed.size(); ++i)
      if (!(it.printed[i] == it.regen[i])) fam.printed_equals_regenerated = false;
    for (size_t i = 0; i < it.printed.size(); ++i) {
      bool m = it.deg2 ? member28(it.printed[i]) : member312(it.printed[i]);
      if (!m) fam.printed_membership_failures.push_back(static_cast<int>(i) + 1);
    }
    // rank of the printed family
    int n = static_cast<int>(it.printed.size());
    int dim = it.printed[0].size();
    Matrix<Rat> M(n, dim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < dim; ++j) M(i, j) = it.printed[i].at(j);
    fam.rank = rank(M);
    for (int i = 0; i < n; ++i) {
      std::ostringstream os;
      os << rat_to_string(inner(it.printed[i], it.printed[i]));
      fam.norms_sq.push_back(os.str());
      for (int j = i + 1; j < n; ++j) {
        Rat ip = inner(it.printed[i], it.printed[j]);
        if (ip != 0) {
          fam.orthogonality_fail.push_back({i + 1, j + 1});
          fam.inner_products.push_back(rat_to_string(ip));
        }
      }
    }
    audit.families.push_back(std::move(fam));
  }
  // Theta_0 / Delta_0 norms recorded under a pseudo-family
  BasisAuditFamily zf;
  zf.name = "Theta0Delta0";
  zf.printed_equals_regenerated = true;
  zf.rank = 2;
  zf.norms_sq.push_back(rat_to_string(inner(bt.theta0, bt.theta0)));
  zf.norms_sq.push_back(rat_to_string(inner(bt.delta0, bt.delta0)));
  audit.families.push_back(std::move(zf));
  return audit;
}

// explicit instantiation
#define SU3T_INSTANTIATE(S)                                                                       \
  template const BasisTables<S>& basis_tables<S>();                                              \
  template Refined2<S> refine_lambda2<S>(const KForm<S>&, const Splitting<S>&);                  \
  template Refined2Blocks<S> refine_lambda2_blocks<S>(const KForm<S>&, const Splitting<S>&);     \
  template Refined3<S> refine_lambda3<S>(const KForm<S>&, const Splitting<S>&);                  \
  template RefinedTorsion<S> extract_refined<S>(const TorsionTensor<S>&, const Splitting<S>&,    \
                                                double);                                         \
  template TorsionTensor<S> reassemble_refined<S>(const RefinedTorsion<S>&);                     \
  template WVector<S> natural_iso<S>(const KForm<S>&, double);                                   \
  template WVector<S> s_iso<S>(const KForm<S>&, double);                                         \
  template WVector<S> s_iso_j_normal<S>(const KForm<S>&, double);                                \
  template DagValue<S> dagger<S>(const KForm<S>&, double);                                       \
  template DagValue<S> ddagger<S>(const KForm<S>&, double);

SU3T_INSTANTIATE(Rat)
SU3T_INSTANTIATE(double)
#undef SU3T_INSTANTIATE

}  // namespace su3t
