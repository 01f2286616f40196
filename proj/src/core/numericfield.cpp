#include "core/numericfield.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

namespace su3t {

namespace {

// 4th-order central first derivative
template <class F>
double d1(F&& f, double h) {
  return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12 * h);
}

KForm<double> pick(const StructureField& sf, const Vec6<double>& x, int which) {
  KForm<double> o(2), r(3), i(3);
  sf.eval(x, o, r, i);
  return which == 0 ? o : which == 1 ? r : i;
}

}  // namespace

KForm<double> StructureField::exterior_derivative(const Vec6<double>& x, int which) const {
  KForm<double> base = pick(*this, x, which);
  int k = base.degree();
  KForm<double> d(k + 1);
  const auto& masks = degree_masks(k);
  for (int axis = 0; axis < 6; ++axis) {
    // d/dx_axis of every coefficient, wedged with dx^axis
    for (int pos = 0; pos < base.size(); ++pos) {
      double dc = d1(
          [&](double dt) {
            Vec6<double> xx = x;
            xx[axis] += dt;
            return pick(*this, xx, which).at(pos);
          },
          fd_step);
      if (dc == 0.0) continue;
      int s = wedge_sign(static_cast<Mask>(1u << axis), masks[pos]);
      if (s == 0) continue;
      d.add_term(static_cast<Mask>((1u << axis) | masks[pos]), s > 0 ? dc : -dc);
    }
  }
  return d;
}

bool PatchStructure::in_domain(const Vec6<double>& x) const {
  for (int i = 0; i < 6; ++i) {
    if (box[i][0] == box[i][1]) continue;
    if (x[i] < box[i][0] || x[i] > box[i][1]) return false;
  }
  return true;
}

KForm<double> LieStructure::d_constant_form(const KForm<double>& a) const {
  // d(w^i) = -1/2 c^i_jk w^{jk}; extend by the Leibniz rule
  int k = a.degree();
  KForm<double> out(k + 1);
  if (k == 0) return out;
  const auto& masks = degree_masks(k);
  for (int pos = 0; pos < a.size(); ++pos) {
    double coeff = a.at(pos);
    if (coeff == 0.0) continue;
    Mask m = masks[pos];
    int place = 0;
    for (int i = 0; i < 6; ++i) {
      if (!(m >> i & 1)) continue;
      // replace slot w^{i+1} by dw^{i+1}
      Mask rest = m & static_cast<Mask>(~(1u << i));
      double sgn = (place & 1) ? -1.0 : 1.0;
      for (int j = 0; j < 6; ++j)
        for (int l = j + 1; l < 6; ++l) {
          double cjl = -c[i][j][l];  // dw^i = -1/2 c^i_jk w^{jk} = -sum_{j<l} c^i_jl w^{jl}
          if (cjl == 0.0) continue;
          Mask two = static_cast<Mask>((1u << j) | (1u << l));
          int s = wedge_sign(two, rest);
          if (s == 0) continue;
          out.add_term(static_cast<Mask>(two | rest), sgn * s * cjl * coeff);
        }
      ++place;
    }
  }
  return out;
}

KForm<double> LieStructure::exterior_derivative(const Vec6<double>&, int which) const {
  return d_constant_form(which == 0 ? omega : which == 1 ? re : im);
}

double LieStructure::jacobi_residual() const {
  // d^2 w^i = 0 for all i
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) {
    KForm<double> wi = covector<double>(i + 1);
    KForm<double> dd = d_constant_form(d_constant_form(wi));
    worst = std::max(worst, dd.max_abs());
  }
  return worst;
}

std::unique_ptr<StructureField> catalog(const std::string& name, const std::vector<double>& params) {
  if (name == "flat-cy") {
    auto p = std::make_unique<PatchStructure>();
    p->fields = [](const Vec6<double>&, KForm<double>& o, KForm<double>& r, KForm<double>& i) {
      o = omega0<double>();
      r = re_upsilon0<double>();
      i = im_upsilon0<double>();
    };
    return p;
  }
  if (name == "conformal") {
    // Omega = e^{2f} Omega_0, Ups = e^{3f} Ups_0, f = a * x_dir (dir 1-based, default 1)
    double a = params.empty() ? 0.1 : params[0];
    int dir = params.size() > 1 ? static_cast<int>(params[1]) : 1;
    if (dir < 1 || dir > 6) throw Error("conformal: dir must be 1..6");
    auto p = std::make_unique<PatchStructure>();
    p->fields = [a, dir](const Vec6<double>& x, KForm<double>& o, KForm<double>& r, KForm<double>& i) {
      double f = a * x[dir - 1];
      o = std::exp(2 * f) * omega0<double>();
      r = std::exp(3 * f) * re_upsilon0<double>();
      i = std::exp(3 * f) * im_upsilon0<double>();
    };
    return p;
  }
  if (name == "phase-twist") {
    // Ups = e^{i phi} Ups_0, phi = b * x_2
    double b = params.empty() ? 0.1 : params[0];
    auto p = std::make_unique<PatchStructure>();
    p->fields = [b](const Vec6<double>& x, KForm<double>& o, KForm<double>& r, KForm<double>& i) {
      double phi = b * x[1];
      o = omega0<double>();
      r = std::cos(phi) * re_upsilon0<double>() - std::sin(phi) * im_upsilon0<double>();
      i = std::sin(phi) * re_upsilon0<double>() + std::cos(phi) * im_upsilon0<double>();
    };
    return p;
  }
  if (name == "su3-rotate") {
    // pullback of the flat structure by Phi(x) = exp(rate * x_1 * X) x with
    // X in su(3); diffeomorphism pullback of a torsion-free structure, so the
    // coefficients vary with x but the torsion is exactly zero.
    double rate = params.empty() ? 0.2 : params[0];
    auto p = std::make_unique<PatchStructure>();
    p->fields = [rate](const Vec6<double>& x, KForm<double>& o, KForm<double>& r, KForm<double>& i) {
      // X: infinitesimal rotation in the (z1, z2) complex plane
      // A(s) = exp(sX): z1 -> cos s z1 - sin s z2, z2 -> sin s z1 + cos s z2
      double s = rate * x[0];
      double cs = std::cos(s), sn = std::sin(s);
      Mat6<double> A{};
      // complex 2x2 rotation embedded: real block diag(R, R) with R on (1,2) and (4,5)
      A[0][0] = cs; A[0][1] = -sn; A[1][0] = sn; A[1][1] = cs; A[2][2] = 1;
      A[3][3] = cs; A[3][4] = -sn; A[4][3] = sn; A[4][4] = cs; A[5][5] = 1;
      // DPhi = A + rate * e_1-row correction: Phi(x) = A(s(x)) x
      Mat6<double> dA{};
      dA[0][0] = -sn; dA[0][1] = -cs; dA[1][0] = cs; dA[1][1] = -sn;
      dA[3][3] = -sn; dA[3][4] = -cs; dA[4][3] = cs; dA[4][4] = -sn;
      Vec6<double> dAx = mat_apply(dA, x);
      Mat6<double> D = A;
      for (int rr = 0; rr < 6; ++rr) D[rr][0] += rate * dAx[rr];
      o = pullback(omega0<double>(), D);
      r = pullback(re_upsilon0<double>(), D);
      i = pullback(im_upsilon0<double>(), D);
    };
    return p;
  }
  if (name == "nilpotent") {
    // params: flattened nonzero structure constants as (i, j, k, value) quadruples, 1-based
    auto p = std::make_unique<LieStructure>();
    if (params.size() % 4 != 0) throw Error("nilpotent: params must be (i,j,k,value) quadruples");
    for (size_t q = 0; q + 3 < params.size(); q += 4) {
      int i = static_cast<int>(params[q]) - 1, j = static_cast<int>(params[q + 1]) - 1,
          k = static_cast<int>(params[q + 2]) - 1;
      double v = params[q + 3];
      if (i < 0 || i > 5 || j < 0 || j > 5 || k < 0 || k > 5) throw Error("nilpotent: index out of range");
      p->c[i][j][k] = v;
      p->c[i][k][j] = -v;
    }
    p->omega = omega0<double>();
    p->re = re_upsilon0<double>();
    p->im = im_upsilon0<double>();
    if (p->jacobi_residual() > 1e-12) throw Error("nilpotent: structure constants violate the Jacobi identity");
    return p;
  }
  throw Error("unknown catalog family: " + name);
}

FieldTorsion torsion_at(const StructureField& f, const Vec6<double>& x, double residual_tol) {
  if (!f.in_domain(x)) throw Error("torsion_at: point outside the field domain");
  FieldTorsion out;
  KForm<double> o(2), r(3), i(3);
  f.eval(x, o, r, i);
  out.point = make_point(o, r, i, 1e-8);
  DerivativeTriple<double> d;
  d.d_omega = f.exterior_derivative(x, 0);
  d.d_re = f.exterior_derivative(x, 1);
  d.d_im = f.exterior_derivative(x, 2);
  auto ex = extract_torsion(d, out.point, JConvention::A, residual_tol);
  out.torsion = ex.torsion;
  out.residual = ex.residual;
  return out;
}

FieldRefinedTorsion refined_torsion_at(const StructureField& f, const Vec6<double>& x,
                                       const OrientedPlane3<double>& plane, double residual_tol) {
  FieldRefinedTorsion out;
  KForm<double> o(2), r(3), i(3);
  f.eval(x, o, r, i);
  SU3Point<double> p0;
  p0.omega = o;
  p0.ups_re = r;
  p0.ups_im = i;
  recover_metric_J(o, r, i, p0.g, p0.J, 1e-8);
  auto det = detect_sl(plane, p0, 1e-7);
  if (!det.is_special) throw Error("refined_torsion_at: plane is not special Lagrangian here");
  out.phase = det.phase;
  TrigPair<double> t{std::cos(det.phase.t()), std::sin(det.phase.t())};
  p0.coframe = adapt_coframe(p0, std::optional<OrientedPlane3<double>>(plane), t, 1e-7);
  auto inv = mat_inverse(p0.coframe);
  if (!inv) throw Error("refined_torsion_at: coframe not invertible");
  p0.coframe_inv = *inv;
  out.point = p0;
  out.splitting.coframe = p0.coframe;
  out.splitting.coframe_inv = p0.coframe_inv;
  out.splitting.t = t;

  DerivativeTriple<double> d;
  d.d_omega = f.exterior_derivative(x, 0);
  d.d_re = f.exterior_derivative(x, 1);
  d.d_im = f.exterior_derivative(x, 2);
  auto ex = extract_torsion(d, p0, JConvention::A, residual_tol);
  out.torsion = ex.torsion;
  out.residual = ex.residual;
  out.refined = extract_refined(ex.torsion, out.splitting, 1e-7);
  return out;
}

namespace {

Mat6<double> metric_at(const StructureField& f, const Vec6<double>& x) {
  KForm<double> o(2), r(3), i(3);
  f.eval(x, o, r, i);
  Mat6<double> g{}, J{};
  recover_metric_J(o, r, i, g, J, 1e-8);
  return g;
}

}  // namespace

Vec6<double> mean_curvature_oracle(const Immersion3& imm, const StructureField& f, const std::array<double, 3>& u) {
  const double h = imm.fd_step;
  // first derivatives (tangents), 4th order
  std::array<Vec6<double>, 3> df{};
  for (int a = 0; a < 3; ++a) {
    for (int k = 0; k < 6; ++k) {
      df[a][k] = d1(
          [&](double dt) {
            std::array<double, 3> uu = u;
            uu[a] += dt;
            return imm.map(uu)[k];
          },
          h);
    }
  }
  // second derivatives: 4th-order pure and mixed stencils
  auto d2_pure = [&](int a) {
    Vec6<double> out{};
    for (int k = 0; k < 6; ++k) {
      std::array<double, 3> uu = u;
      auto at = [&](double dt) {
        std::array<double, 3> w = uu;
        w[a] += dt;
        return imm.map(w)[k];
      };
      out[k] = (-at(2 * h) + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
    }
    return out;
  };
  auto d2_mixed = [&](int a, int b) {
    Vec6<double> out{};
    for (int k = 0; k < 6; ++k) {
      auto at = [&](double da, double db) {
        std::array<double, 3> w = u;
        w[a] += da;
        w[b] += db;
        return imm.map(w)[k];
      };
      // composition of two 4th-order first-derivative stencils
      auto dd = [&](double db) {
        return (-at(2 * h, db) + 8 * at(h, db) - 8 * at(-h, db) + at(-2 * h, db)) / (12 * h);
      };
      out[k] = (-dd(2 * h) + 8 * dd(h) - 8 * dd(-h) + dd(-2 * h)) / (12 * h);
    }
    return out;
  };
  std::array<std::array<Vec6<double>, 3>, 3> d2{};
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      d2[a][b] = (a == b) ? d2_pure(a) : d2_mixed(a, b);
      d2[b][a] = d2[a][b];
    }

  Vec6<double> x0 = imm.map(u);
  Mat6<double> g = metric_at(f, x0);
  // rank check on the differential
  {
    Matrix<double> D(6, 3);
    for (int k = 0; k < 6; ++k)
      for (int a = 0; a < 3; ++a) D(k, a) = df[a][k];
    if (rank(D) < 3) throw Error("mean_curvature_oracle: immersion differential is rank-deficient");
  }

  // ambient Christoffels by central differences of g
  double hx = imm.fd_step;
  std::array<Mat6<double>, 6> dg{};
  for (int axis = 0; axis < 6; ++axis)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        dg[axis][i][j] = d1(
            [&](double dt) {
              Vec6<double> xx = x0;
              xx[axis] += dt;
              return metric_at(f, xx)[i][j];
            },
            hx);
  auto ginv_opt = mat_inverse(g);
  if (!ginv_opt) throw Error("mean_curvature_oracle: metric is singular");
  Mat6<double> ginv = *ginv_opt;
  // Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
  std::array<Mat6<double>, 6> Gam{};
  for (int k = 0; k < 6; ++k)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        double acc = 0;
        for (int l = 0; l < 6; ++l) acc += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        Gam[k][i][j] = 0.5 * acc;
      }

  // induced metric and inverse
  std::array<std::array<double, 3>, 3> hmet{}, hinv{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double acc = 0;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) acc += g[i][j] * df[a][i] * df[b][j];
      hmet[a][b] = acc;
    }
  {
    Matrix<double> H3(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) H3(a, b) = hmet[a][b];
    auto Hi = inverse(H3);
    if (!Hi) throw Error("mean_curvature_oracle: induced metric is singular");
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) hinv[a][b] = (*Hi)(a, b);
  }

  // second fundamental form: normal projection of D^2 f + Gamma(df, df)
  auto normal_project = [&](const Vec6<double>& z) {
    Vec6<double> out = z;
    // subtract g-projection onto the tangent space
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double zb = 0;
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) zb += g[i][j] * z[i] * df[b][j];
        double coeff = hinv[a][b] * zb;
        for (int k = 0; k < 6; ++k) out[k] -= coeff * df[a][k];
      }
    return out;
  };
  Vec6<double> H{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Vec6<double> cov = d2[a][b];
      for (int k = 0; k < 6; ++k) {
        double acc = 0;
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) acc += Gam[k][i][j] * df[a][i] * df[b][j];
        cov[k] += acc;
      }
      Vec6<double> II = normal_project(cov);
      for (int k = 0; k < 6; ++k) H[k] += hinv[a][b] * II[k];
    }
  return H;
}

MCComparison mc_compare(const StructureField& f, const Vec6<double>& x0, const OrientedPlane3<double>& plane,
                        const Immersion3& imm, const std::array<double, 3>& u0) {
  MCComparison out;
  out.oracle = mean_curvature_oracle(imm, f, u0);
  auto rt = refined_torsion_at(f, x0, plane);
  out.phase = rt.phase;
  auto H = mean_curvature(rt.refined, rt.phase);
  if (!H.agree) throw Error("mc_compare: the two theorem evaluations disagree (bug)");
  // transport the w-frame components to the ambient: H = sum H_p u^{-1}(w_p(theta))
  Vec6<double> model = H.component_form.ambient(rt.phase.theta);
  // model vector has components in the adapted model frame; u^{-1} maps back.
  // mat: coframe u maps point vectors to model vectors, so apply coframe_inv.
  out.formula = mat_apply(rt.splitting.coframe_inv, model);
  double num = 0, den = 0;
  for (int k = 0; k < 6; ++k) {
    num += (out.oracle[k] - out.formula[k]) * (out.oracle[k] - out.formula[k]);
    den += out.formula[k] * out.formula[k];
  }
  out.abs_error = std::sqrt(num);
  out.rel_error = out.abs_error / std::max(1e-12, std::sqrt(den));
  return out;
}

ConvergenceStudy convergence_study(double a, const std::vector<double>& steps) {
  ConvergenceStudy st;
  st.steps = steps;
  Vec6<double> x{0.3, -0.2, 0.1, 0.05, -0.15, 0.2};
  // closed form: dOmega = 2a e^{2f} dx^dir ^ Omega_0 with f = a x_1, dir = 1
  double f = a * x[0];
  KForm<double> exact = (2 * a * std::exp(2 * f)) * wedge(covector<double>(1), omega0<double>());
  for (double h : steps) {
    auto field = catalog("conformal", {a, 1});
    field->fd_step = h;
    KForm<double> got = field->exterior_derivative(x, 0);
    KForm<double> diff = got - exact;
    st.errors.push_back(diff.max_abs());
  }
  for (size_t i = 0; i + 1 < st.errors.size(); ++i)
    st.ratios.push_back(st.errors[i] / std::max(1e-300, st.errors[i + 1]));
  return st;
}

// ---------------- gridded IO ----------------

std::size_t GriddedStructure::node_count() const {
  std::size_t n = 1;
  for (int k = 0; k < 6; ++k) n *= static_cast<std::size_t>(shape[k]);
  return n;
}

std::size_t GriddedStructure::node_index(const std::array<int, 6>& idx) const {
  std::size_t lin = 0;
  for (int k = 0; k < 6; ++k) {
    if (idx[k] < 0 || idx[k] >= shape[k]) throw Error("gridded: node index out of range");
    lin = lin * static_cast<std::size_t>(shape[k]) + static_cast<std::size_t>(idx[k]);
  }
  return lin;
}

Vec6<double> GriddedStructure::node_position(const std::array<int, 6>& idx) const {
  Vec6<double> x{};
  for (int k = 0; k < 6; ++k) x[k] = bounds[k][0] + idx[k] * spacing[k];
  return x;
}

void GriddedStructure::forms_at(const std::array<int, 6>& idx, KForm<double>& o, KForm<double>& r,
                                KForm<double>& i) const {
  std::size_t n = node_index(idx);
  o = KForm<double>(2);
  r = KForm<double>(3);
  i = KForm<double>(3);
  for (int c2 = 0; c2 < 15; ++c2) o.at(c2) = omega_data[n * 15 + c2];
  for (int c3 = 0; c3 < 20; ++c3) {
    r.at(c3) = re_data[n * 20 + c3];
    i.at(c3) = im_data[n * 20 + c3];
  }
}

void GriddedStructure::eval(const Vec6<double>& x, KForm<double>& o, KForm<double>& r, KForm<double>& i) const {
  // evaluation only at grid nodes; no interpolation by design
  std::array<int, 6> idx{};
  for (int k = 0; k < 6; ++k) {
    double t = spacing[k] > 0 ? (x[k] - bounds[k][0]) / spacing[k] : 0.0;
    int n = static_cast<int>(std::lround(t));
    if (std::fabs(t - n) > 1e-9) throw Error("gridded: evaluation is only defined at grid nodes");
    idx[k] = n;
  }
  forms_at(idx, o, r, i);
}

bool GriddedStructure::stencil_fits(const std::array<int, 6>& idx) const {
  for (int k = 0; k < 6; ++k) {
    if (shape[k] == 1) continue;  // degenerate axis: constant direction
    if (idx[k] < 2 || idx[k] > shape[k] - 3) return false;
  }
  return true;
}

KForm<double> GriddedStructure::derivative_at_node(const std::array<int, 6>& idx, int which) const {
  if (!stencil_fits(idx)) throw Error("gridded: 4th-order stencil does not fit at this node");
  KForm<double> o(2), r(3), i(3);
  forms_at(idx, o, r, i);
  KForm<double> base = which == 0 ? o : which == 1 ? r : i;
  int kdeg = base.degree();
  KForm<double> d(kdeg + 1);
  const auto& masks = degree_masks(kdeg);
  for (int axis = 0; axis < 6; ++axis) {
    if (shape[axis] == 1) continue;
    auto coeff_at = [&](int off, int pos) {
      std::array<int, 6> j = idx;
      j[axis] += off;
      KForm<double> oo(2), rr(3), ii(3);
      forms_at(j, oo, rr, ii);
      const KForm<double>& b = which == 0 ? oo : which == 1 ? rr : ii;
      return b.at(pos);
    };
    for (int pos = 0; pos < base.size(); ++pos) {
      double dc = (-coeff_at(2, pos) + 8 * coeff_at(1, pos) - 8 * coeff_at(-1, pos) + coeff_at(-2, pos)) /
                  (12 * spacing[axis]);
      if (dc == 0.0) continue;
      int s = wedge_sign(static_cast<Mask>(1u << axis), masks[pos]);
      if (s == 0) continue;
      d.add_term(static_cast<Mask>((1u << axis) | masks[pos]), s > 0 ? dc : -dc);
    }
  }
  return d;
}

GriddedStructure load_gridded(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open gridded structure file: " + path);
  std::string magic;
  std::getline(in, magic);
  if (magic != "SU3TGRID1") throw Error("bad magic in gridded structure file");
  std::string header;
  std::getline(in, header);
  nlohmann::json j = nlohmann::json::parse(header);
  GriddedStructure g;
  for (int k = 0; k < 6; ++k) {
    g.bounds[k][0] = j.at("bounds").at(k).at(0).get<double>();
    g.bounds[k][1] = j.at("bounds").at(k).at(1).get<double>();
    g.shape[k] = j.at("shape").at(k).get<int>();
    g.spacing[k] = j.at("spacing").at(k).get<double>();
    if (g.shape[k] < 1) throw Error("gridded: bad shape");
  }
  std::size_t n = g.node_count();
  auto read_block = [&](std::vector<double>& dst, std::size_t count) {
    dst.resize(count);
    in.read(reinterpret_cast<char*>(dst.data()), static_cast<std::streamsize>(count * sizeof(double)));
    if (static_cast<std::size_t>(in.gcount()) != count * sizeof(double))
      throw Error("gridded: truncated data block");
  };
  read_block(g.omega_data, n * 15);
  read_block(g.re_data, n * 20);
  read_block(g.im_data, n * 20);
  return g;
}

void save_gridded(const GriddedStructure& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write gridded structure file: " + path);
  nlohmann::json j;
  for (int k = 0; k < 6; ++k) {
    j["bounds"][k] = {g.bounds[k][0], g.bounds[k][1]};
    j["shape"][k] = g.shape[k];
    j["spacing"][k] = g.spacing[k];
  }
  out << "SU3TGRID1\n" << j.dump() << "\n";
  auto write_block = [&](const std::vector<double>& src) {
    out.write(reinterpret_cast<const char*>(src.data()), static_cast<std::streamsize>(src.size() * sizeof(double)));
  };
  write_block(g.omega_data);
  write_block(g.re_data);
  write_block(g.im_data);
}

}  // namespace su3t
