#include "core/slag.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace su3t {

namespace {

template <class S>
S g_pair(const Mat6<S>& g, const Vec6<S>& a, const Vec6<S>& b) {
  S acc(0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!ScalarOps<S>::is_zero(g[i][j])) acc += g[i][j] * a[i] * b[j];
  return acc;
}

}  // namespace

template <class S>
SLDetection detect_sl(const OrientedPlane3<S>& plane, const SU3Point<S>& p, double tol) {
  SLDetection out;
  // g-orthonormalize (double arithmetic is fine for detection)
  std::array<Vec6<double>, 3> y;
  Mat6<double> g{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) g[i][j] = ScalarOps<S>::to_double(p.g[i][j]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) y[i][j] = ScalarOps<S>::to_double(plane.basis[i][j]);
  if (plane.orientation < 0) std::swap(y[0], y[1]);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < i; ++j) {
      double c = g_pair(g, y[i], y[j]);
      for (int k = 0; k < 6; ++k) y[i][k] -= c * y[j][k];
    }
    double n = std::sqrt(g_pair(g, y[i], y[i]));
    if (n < tol) throw Error("detect_sl: plane basis is degenerate");
    for (int k = 0; k < 6; ++k) y[i][k] /= n;
  }
  KForm<double> om = to_double(p.omega), re = to_double(p.ups_re), im = to_double(p.ups_im);
  double scale = std::max(1.0, om.max_abs());
  double on = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double v = eval_form(om, {y[i], y[j]});
      on += v * v;
    }
  out.omega_restriction_norm = std::sqrt(on);
  out.is_lagrangian = out.omega_restriction_norm <= tol * scale;

  double wr = eval_form(re, {y[0], y[1], y[2]});
  double wi = eval_form(im, {y[0], y[1], y[2]});
  out.calibration_modulus = std::hypot(wr, wi);
  if (!out.is_lagrangian) return out;
  // |Ups(u,v,w)| = 1 is automatic on Lagrangian planes; checked anyway
  if (std::fabs(out.calibration_modulus - 1.0) > 1e-6 * std::max(1.0, re.max_abs())) return out;
  double th = std::atan2(wi, wr);
  if (th < 0) th += 2.0 * M_PI;
  out.phase.theta = th;
  out.is_special = true;
  return out;
}

double calibration_value(double theta, const std::array<std::array<double, 6>, 3>& triple) {
  KForm<double> cal = std::cos(theta) * re_upsilon0<double>() + std::sin(theta) * im_upsilon0<double>();
  std::vector<Vec6<double>> vs(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) vs[i][j] = triple[i][j];
  return eval_form(cal, vs);
}

namespace {

using Triple = std::array<std::array<double, 6>, 3>;

void orthonormalize(Triple& y) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < i; ++j) {
      double c = 0;
      for (int k = 0; k < 6; ++k) c += y[i][k] * y[j][k];
      for (int k = 0; k < 6; ++k) y[i][k] -= c * y[j][k];
    }
    double n = 0;
    for (int k = 0; k < 6; ++k) n += y[i][k] * y[i][k];
    n = std::sqrt(n);
    for (int k = 0; k < 6; ++k) y[i][k] /= n;
  }
}

// gradient of f(y) = Re(Ups_theta)(y1,y2,y3) in the ambient; f is trilinear
void calibration_gradient(const KForm<double>& cal, const Triple& y, Triple& grad) {
  // d/dy1 = cal(., y2, y3) etc: contract the other two arguments
  for (int a = 0; a < 3; ++a) {
    Vec6<double> u{}, v{};
    int b = (a + 1) % 3, c = (a + 2) % 3;
    for (int k = 0; k < 6; ++k) {
      u[k] = y[b][k];
      v[k] = y[c][k];
    }
    KForm<double> w1 = interior(v, interior(u, cal));  // cal(u, v, .)
    // cal(y_a', y_b, y_c) = cal(., u, v) evaluated; sign: cal(x,u,v) = (iota_v iota_u cal)(x)? check:
    // (iota_u cal)(v, x) = cal(u, v, x); (iota_v iota_u cal)(x) = cal(u, v, x).
    // We need d/dy_a with arguments in order (y1,y2,y3): reorder sign
    // cal(y1,y2,y3): for a: arguments (y_a, y_b, y_c) is an even permutation of (y1,y2,y3)
    for (int k = 0; k < 6; ++k) grad[a][k] = w1.at(k);
  }
}

double eval_triple(const KForm<double>& cal, const Triple& y) {
  std::vector<Vec6<double>> vs(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) vs[i][j] = y[i][j];
  return eval_form(cal, vs);
}

double refine_ascent(const KForm<double>& cal, Triple& y, int iters) {
  double best = std::fabs(eval_triple(cal, y));
  double step = 0.1;
  for (int it = 0; it < iters && step > 1e-14; ++it) {
    double f = eval_triple(cal, y);
    double sign = f >= 0 ? 1.0 : -1.0;
    Triple grad{};
    calibration_gradient(cal, y, grad);
    Triple cand = y;
    for (int a = 0; a < 3; ++a)
      for (int k = 0; k < 6; ++k) cand[a][k] += sign * step * grad[a][k];
    orthonormalize(cand);
    double fc = std::fabs(eval_triple(cal, cand));
    if (fc > best) {
      y = cand;
      best = fc;
    } else {
      step *= 0.5;  // halving on failure
    }
  }
  return best;
}

}  // namespace

ComassResult comass_oracle(double theta, std::uint64_t samples, std::uint64_t seed, int refine_top,
                           int refine_iters) {
  ComassResult out;
  out.samples = samples;
  KForm<double> cal = std::cos(theta) * re_upsilon0<double>() + std::sin(theta) * im_upsilon0<double>();

  constexpr int kBlocks = 64;  // fixed stream decomposition -> deterministic merge
  struct BlockBest {
    double val = -1.0;
    Triple y{};
  };
  std::vector<std::vector<BlockBest>> block_tops(kBlocks);
  std::uint64_t per = samples / kBlocks, extra = samples % kBlocks;
  int keep_per_block = std::max(1, refine_top / kBlocks + 1);

  auto run_block = [&](int b) {
    Rng rng(seed + 0x1000 * (b + 1));
    std::uint64_t n = per + (static_cast<std::uint64_t>(b) < extra ? 1 : 0);
    auto& tops = block_tops[b];
    for (std::uint64_t s = 0; s < n; ++s) {
      Triple y;
      for (int a = 0; a < 3; ++a)
        for (int k = 0; k < 6; ++k) y[a][k] = rng.normal();
      orthonormalize(y);
      double v = std::fabs(eval_triple(cal, y));
      if (tops.size() < static_cast<size_t>(keep_per_block)) {
        tops.push_back({v, y});
        std::sort(tops.begin(), tops.end(), [](const BlockBest& x, const BlockBest& z) { return x.val > z.val; });
      } else if (v > tops.back().val) {
        tops.back() = {v, y};
        std::sort(tops.begin(), tops.end(), [](const BlockBest& x, const BlockBest& z) { return x.val > z.val; });
      }
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  std::atomic_int next{0};
  for (unsigned t = 0; t < std::min(hw, static_cast<unsigned>(kBlocks)); ++t)
    pool.emplace_back([&] {
      for (int b = next.fetch_add(1); b < kBlocks; b = next.fetch_add(1)) run_block(b);
    });
  for (auto& th : pool) th.join();

  std::vector<BlockBest> all;
  for (auto& v : block_tops)
    for (auto& bb : v) all.push_back(bb);
  std::sort(all.begin(), all.end(), [](const BlockBest& x, const BlockBest& z) { return x.val > z.val; });
  if (all.empty()) throw Error("comass_oracle: needs samples >= 1");
  out.sampled_max = all[0].val;
  out.argmax = all[0].y;

  double best = out.sampled_max;
  Triple besty = all[0].y;
  int limit = std::min<int>(refine_top, static_cast<int>(all.size()));
  for (int i = 0; i < limit; ++i) {
    Triple y = all[i].y;
    double v = refine_ascent(cal, y, refine_iters);
    if (v > best) {
      best = v;
      besty = y;
    }
  }
  out.refined_max = best;
  out.argmax = besty;
  return out;
}

// ---------------- mean curvature / obstruction ----------------

namespace {

template <class S>
WVector<S> h_component_form(const RefinedTorsion<S>& r, const S& ct, const S& st) {
  S c3 = S(4) * ct * ct * ct - S(3) * ct;
  S s3 = S(3) * st - S(4) * st * st * st;
  WVector<S> H;
  for (int p = 0; p < 3; ++p)
    H.c[p] = S(-4) * r.A[p] * c3 - S(4) * r.C[p] * s3 + S(3) * r.M[p] * st - S(3) * r.N[p] * ct;
  return H;
}

template <class S>
WVector<S> h_invariant_form(const RefinedTorsion<S>& r, const S& ct, const S& st, double tol) {
  // -(1/sqrt2) cos(th) [(tau2)_1]^nat - (1/sqrt2) sin(th) [(tau2^)_1]^nat
  //  + sin(t) [(tau5)_T]^sec - cos(t) [J (tau5)_N]^sec
  const auto& bt = basis_tables<S>();
  KForm<S> t2_1(2), t2h_1(2), t5T(1), t5N(1);
  for (int p = 0; p < 3; ++p) {
    t2_1 += (S(4) * r.A[p]) * bt.gamma[p];
    t2h_1 += (S(4) * r.C[p]) * bt.gamma[p];
    t5T.at(p) = S(3) * r.M[p];
    t5N.at(p + 3) = S(3) * r.N[p];
  }
  WVector<S> nat2 = natural_iso(t2_1, tol);
  WVector<S> nat2h = natural_iso(t2h_1, tol);
  WVector<S> sT = s_iso(t5T, tol);
  WVector<S> sN = s_iso_j_normal(t5N, tol);
  S c3 = S(4) * ct * ct * ct - S(3) * ct;
  S s3 = S(3) * st - S(4) * st * st * st;
  WVector<S> H;
  for (int p = 0; p < 3; ++p) {
    // the sqrt2 of the natural isometry cancels the 1/sqrt2 prefactor
    H.c[p] = -c3 * nat2.c[p] - s3 * nat2h.c[p] + st * sT.c[p] - ct * sN.c[p];
  }
  return H;
}

}  // namespace

MeanCurvature<double> mean_curvature(const RefinedTorsion<double>& r, const Phase& th) {
  MeanCurvature<double> out;
  double ct = std::cos(th.t()), st = std::sin(th.t());
  out.component_form = h_component_form(r, ct, st);
  out.invariant_form = h_invariant_form(r, ct, st, 1e-10);
  out.agree = true;
  for (int p = 0; p < 3; ++p) {
    double scale = std::max(1.0, std::fabs(out.component_form.c[p]));
    if (std::fabs(out.component_form.c[p] - out.invariant_form.c[p]) > 1e-10 * scale) out.agree = false;
  }
  return out;
}

MeanCurvature<Rat> mean_curvature_exact(const RefinedTorsion<Rat>& r, const TrigPair<Rat>& t) {
  MeanCurvature<Rat> out;
  out.component_form = h_component_form(r, t.c, t.s);
  out.invariant_form = h_invariant_form(r, t.c, t.s, 0.0);
  out.agree = true;
  for (int p = 0; p < 3; ++p)
    if (!(out.component_form.c[p] == out.invariant_form.c[p])) out.agree = false;
  return out;
}

ObstructionValue obstruction_residual(const RefinedTorsion<double>& r, const Phase& th) {
  ObstructionValue out;
  double t = th.t(), th3 = th.theta;
  const auto& bt = basis_tables<double>();
  KForm<double> t3_0p = (4.0 * r.E0) * bt.theta0;
  KForm<double> t3_0pp = (4.0 * r.F0) * bt.delta0;
  double dag = dagger(t3_0p).value();     // 8 sqrt3 E0
  double ddag = ddagger(t3_0pp).value();  // 8 sqrt3 F0
  out.via_isometries = r.tau0_hat * std::sin(th3) + r.tau0 * std::cos(th3) -
                       (std::sqrt(3.0) / 6.0) * (std::sin(t) * ddag - std::cos(t) * dag);
  out.via_internal = r.tau0_hat * std::sin(3 * t) + r.tau0 * std::cos(3 * t) - 4.0 * r.F0 * std::sin(t) +
                     4.0 * r.E0 * std::cos(t);
  out.agree = std::fabs(out.via_isometries - out.via_internal) <=
              1e-12 * std::max(1.0, std::fabs(out.via_internal));
  return out;
}

Rat obstruction_residual_exact(const RefinedTorsion<Rat>& r, const TrigPair<Rat>& t) {
  Rat c3 = Rat(4) * t.c * t.c * t.c - Rat(3) * t.c;
  Rat s3 = Rat(3) * t.s - Rat(4) * t.s * t.s * t.s;
  return r.tau0_hat * s3 + r.tau0 * c3 - Rat(4) * r.F0 * t.s + Rat(4) * r.E0 * t.c;
}

// ---------------- S-relations ----------------

template <class S>
SRelationData<S> s_relations(const TorsionFrameData<S>& tu, const TrigPair<S>& t) {
  SRelationData<S> out;
  const auto& T = tu.T;
  const auto& U = tu.U;
  S c = t.c, s = t.s;
  S c3 = S(4) * c * c * c - S(3) * c;
  S s3 = S(3) * s - S(4) * s * s * s;
  const S trig[4] = {-s3, c3, -s, c};
  const S half = ScalarOps<S>::from_ratio(1, 2);

  // the three displayed 4x3 matrices (rows pair with -sin3t, cos3t, -sint, cost)
  auto apply = [&](const S M[4][3], std::array<S, 3>& dst) {
    for (int col = 0; col < 3; ++col) {
      S acc(0);
      for (int rw = 0; rw < 4; ++rw) acc += trig[rw] * M[rw][col];
      dst[col] = half * acc;
    }
  };
  const S M1[4][3] = {
      {T[1][1] + T[2][2] + T[4][4] + T[5][5], T[1][0] + T[4][3], T[2][0] + T[5][3]},
      {T[1][4] - T[4][1] + T[2][5] - T[5][2], T[1][3] - T[4][0], T[2][3] - T[5][0]},
      {T[1][1] + T[2][2] - T[4][4] - T[5][5], T[1][0] - T[4][3] + S(2) * U[5], T[2][0] - T[5][3] - S(2) * U[4]},
      {-T[1][4] - T[4][1] - T[2][5] - T[5][2], -T[1][3] - T[4][0] - S(2) * U[2], -T[2][3] - T[5][0] + S(2) * U[1]}};
  const S M2[4][3] = {
      {T[0][1] + T[3][4], T[0][0] + T[2][2] + T[3][3] + T[5][5], -T[2][1] - T[5][4]},
      {T[0][4] - T[3][1], T[0][3] - T[3][0] + T[2][5] - T[5][2], -T[2][4] + T[5][1]},
      {T[0][1] - T[3][4] - S(2) * U[5], T[0][0] + T[2][2] - T[3][3] - T[5][5], -T[2][1] + T[5][4] - S(2) * U[3]},
      {-T[0][4] - T[3][1] + S(2) * U[2], -T[0][3] - T[3][0] - T[2][5] - T[5][2], T[2][4] + T[5][1] + S(2) * U[0]}};
  const S M3[4][3] = {
      {-T[0][2] - T[3][5], T[1][2] + T[4][5], T[0][0] + T[1][1] + T[3][3] + T[4][4]},
      {-T[0][5] + T[3][2], T[1][5] - T[4][2], T[0][3] - T[3][0] + T[1][4] - T[4][1]},
      {-T[0][2] + T[3][5] - S(2) * U[4], T[1][2] - T[4][5] - S(2) * U[3], T[0][0] + T[1][1] - T[3][3] - T[4][4]},
      {T[0][5] + T[3][2] + S(2) * U[1], -T[1][5] - T[4][2] + S(2) * U[0], -T[0][3] - T[3][0] - T[1][4] - T[4][1]}};
  apply(M1, out.row1);
  apply(M2, out.row2);
  apply(M3, out.row3);

  // (STRel): 2(S_111+S_122+S_133), 2(S_121+S_222+S_233), 2(S_131+S_232+S_333)
  auto strel = [&](int which) {
    S r1(0), r2(0), r3(0), r4(0);
    if (which == 0) {
      r1 = (T[1][5] + T[5][1] - T[2][4] - T[4][2]);
      r2 = (T[1][2] - T[2][1] + T[4][5] - T[5][4]);
      r3 = (T[1][2] - T[2][1] - T[4][5] + T[5][4] - S(4) * U[3]);
      r4 = (-T[1][5] + T[5][1] + T[2][4] - T[4][2] + S(4) * U[0]);
    } else if (which == 1) {
      r1 = (-T[0][5] - T[5][0] + T[2][3] + T[3][2]);
      r2 = (-T[0][2] + T[2][0] - T[3][5] + T[5][3]);
      r3 = (-T[0][2] + T[2][0] + T[3][5] - T[5][3] - S(4) * U[4]);
      r4 = (T[0][5] - T[5][0] - T[2][3] + T[3][2] + S(4) * U[1]);
    } else {
      r1 = (T[0][4] + T[4][0] - T[1][3] - T[3][1]);
      r2 = (T[0][1] - T[1][0] + T[3][4] - T[4][3]);
      r3 = (T[0][1] - T[1][0] - T[3][4] + T[4][3] - S(4) * U[5]);
      r4 = (-T[0][4] + T[4][0] + T[1][3] - T[3][1] + S(4) * U[2]);
    }
    return r1 * c3 - r2 * s3 - r3 * s + r4 * c;
  };
  for (int p = 0; p < 3; ++p) out.trace_combos[p] = strel(p);

  // cyclic telescoping combination and its two closed forms
  out.cyclic_sum = out.row1[0] + out.row2[1] + out.row3[2];
  S trT(0), skew(0), dtr(0), symm(0);
  for (int p = 0; p < 3; ++p) {
    trT += T[p][p] + T[p + 3][p + 3];
    skew += T[p][p + 3] - T[p + 3][p];
    dtr += T[p][p] - T[p + 3][p + 3];
    symm += T[p][p + 3] + T[p + 3][p];
  }
  out.cyclic_tu_display = -trT * s3 + skew * c3 - dtr * s - symm * c;
  out.obstruction_combination = ScalarOps<S>::from_ratio(-1, 3) * out.cyclic_sum;
  return out;
}

template <class S>
WVector<S> mean_curvature_from_frame(const TorsionFrameData<S>& tu, const TrigPair<S>& t) {
  SRelationData<S> sr = s_relations(tu, t);
  const S half = ScalarOps<S>::from_ratio(1, 2);
  // first term: -(S_{p11}+S_{p22}+S_{p33}) column sums = -(1/2) trace_combos
  WVector<S> H;
  for (int p = 0; p < 3; ++p) H.c[p] = -half * sr.trace_combos[p];
  // second term: rotated lambda/mu block against eta^{23}, eta^{31}, eta^{12}
  // on B: w^p = cos(t) eta^p, w^{p+3} = sin(t) eta^p
  S lam[6][3];
  S mu[3];
  for (int i = 0; i < 6; ++i)
    for (int p = 0; p < 3; ++p) lam[i][p] = tu.T[i][p] * t.c + tu.T[i][p + 3] * t.s;
  for (int p = 0; p < 3; ++p) mu[p] = tu.U[p] * t.c + tu.U[p + 3] * t.s;
  S c2 = t.c * t.c - t.s * t.s, s2 = S(2) * t.c * t.s;
  S lt4[3], lt5[3], lt6[3];
  for (int p = 0; p < 3; ++p) {
    lt4[p] = s2 * lam[0][p] + c2 * lam[3][p];
    lt5[p] = s2 * lam[1][p] + c2 * lam[4][p];
    lt6[p] = s2 * lam[2][p] + c2 * lam[5][p];
  }
  H.c[0] += -mu[0] - lt6[1] + lt5[2];
  H.c[1] += lt6[0] - mu[1] - lt4[2];
  H.c[2] += -lt5[0] + lt4[1] - mu[2];
  return H;
}

// ---------------- classification ----------------

const std::vector<ClassRow>& class_table() {
  // component order: tau0, tau0^, tau2, tau2^, tau3, tau4, tau5
  static const std::vector<ClassRow> rows = {
      {"CY", {false, false, false, false, false, false, false}},
      {"NK 1", {true, false, false, false, false, false, false}},
      {"NK 2", {false, true, false, false, false, false, false}},
      {"Symp Half-Flat", {false, false, false, true, false, false, false}},
      {"Balanced", {false, false, false, false, true, false, false}},
      {"Class X4", {false, false, false, false, false, true, false}},
      {"GCY", {false, false, true, true, false, false, false}},
      {"Half-Flat", {true, false, false, true, true, false, false}},
  };
  return rows;
}

Classification classify(const TorsionTensor<double>& t, double tol, const Phase& th) {
  Classification out;
  auto norm_of = [](const KForm<double>& f) {
    double n = 0;
    for (int i = 0; i < f.size(); ++i) n += f.at(i) * f.at(i);
    return std::sqrt(n);
  };
  std::array<double, 7> norms = {std::fabs(t.tau0),  std::fabs(t.tau0_hat), norm_of(t.tau2),
                                 norm_of(t.tau2_hat), norm_of(t.tau3),      norm_of(t.tau4),
                                 norm_of(t.tau5)};
  double scale = *std::max_element(norms.begin(), norms.end());
  for (int i = 0; i < 7; ++i) out.vanishing[i] = (scale == 0.0) || norms[i] <= tol * scale;

  static const char* kLabels[7] = {"X0+", "X0-", "X2+", "X2-", "X3", "X4", "X5"};
  std::string label;
  for (int i = 0; i < 7; ++i)
    if (!out.vanishing[i]) {
      if (!label.empty()) label += " + ";
      label += kLabels[i];
    }
  out.class_label = label.empty() ? "0" : label;

  out.named_class = "general";
  size_t best_size = 8;
  for (const auto& row : class_table()) {
    bool contains = true;
    size_t size = 0;
    for (int i = 0; i < 7; ++i) {
      if (row.allowed[i]) ++size;
      if (!out.vanishing[i] && !row.allowed[i]) contains = false;
    }
    if (contains && size < best_size) {
      best_size = size;
      out.named_class = row.name;
    }
  }

  // table columns at the queried phase
  RefinedTorsion<double> r = extract_refined(t, Splitting<double>::model(), 1e-8);
  auto H = mean_curvature(r, th);
  Vec6<double> amb = H.component_form.ambient(th.theta);
  for (int p = 0; p < 3; ++p) out.H[p] = H.component_form.c[p];
  (void)amb;
  out.obstruction = obstruction_residual(r, th).via_internal;

  bool has2 = !out.vanishing[2], has2h = !out.vanishing[3], has5 = !out.vanishing[6];
  if (!has2 && !has2h && !has5)
    out.mean_curvature_expr = "0";
  else {
    std::string e;
    if (has2) e += "-(1/sqrt2) cos(theta) [(tau2)_1]^nat";
    if (has2h) e += std::string(e.empty() ? "" : " ") + "-(1/sqrt2) sin(theta) [(tau2_hat)_1]^nat";
    if (has5) e += std::string(e.empty() ? "" : " ") + "+ sin(theta/3) [(tau5)_T]^sec - cos(theta/3) [J(tau5)_N]^sec";
    out.mean_curvature_expr = e;
  }
  bool has0 = !out.vanishing[0], has0h = !out.vanishing[1], has3 = !out.vanishing[4];
  if (!has0 && !has0h && !has3)
    out.existence_condition = "-";
  else if (has3)
    out.existence_condition =
        "tau0_hat sin(theta) + tau0 cos(theta) = (sqrt3/6)(sin(theta/3) [(tau3)_0'']^ddag - cos(theta/3) "
        "[(tau3)_0']^dag)";
  else if (has0 && !has0h)
    out.existence_condition = "tau0 cos(theta) = 0";
  else if (has0h && !has0)
    out.existence_condition = "tau0_hat sin(theta) = 0";
  else
    out.existence_condition = "tau0_hat sin(theta) + tau0 cos(theta) = 0";
  return out;
}

#define SU3T_INSTANTIATE(S)                                                                  \
  template SLDetection detect_sl<S>(const OrientedPlane3<S>&, const SU3Point<S>&, double);   \
  template SRelationData<S> s_relations<S>(const TorsionFrameData<S>&, const TrigPair<S>&);  \
  template WVector<S> mean_curvature_from_frame<S>(const TorsionFrameData<S>&, const TrigPair<S>&);

SU3T_INSTANTIATE(Rat)
SU3T_INSTANTIATE(double)
#undef SU3T_INSTANTIATE

}  // namespace su3t
