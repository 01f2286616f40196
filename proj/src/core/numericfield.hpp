#pragma once

#include <functional>
#include <memory>

#include "core/slag.hpp"

namespace su3t {

/// A point-dependent SU(3)-structure field (Omega(x), Ups(x)) on a box.
struct StructureField {
  virtual ~StructureField() = default;
  virtual void eval(const Vec6<double>& x, KForm<double>& omega, KForm<double>& re, KForm<double>& im) const = 0;
  /// d of the selected field (0 = Omega, 1 = Re Ups, 2 = Im Ups).
  virtual KForm<double> exterior_derivative(const Vec6<double>& x, int which) const;
  virtual bool in_domain(const Vec6<double>& /*x*/) const { return true; }
  double fd_step = 1e-3;
};

/// Coordinate-patch field: numerical d by 4th-order central differences.
struct PatchStructure : StructureField {
  std::function<void(const Vec6<double>&, KForm<double>&, KForm<double>&, KForm<double>&)> fields;
  std::array<std::array<double, 2>, 6> box{};  // [lo, hi] per axis; lo == hi means unconstrained
  void eval(const Vec6<double>& x, KForm<double>& omega, KForm<double>& re, KForm<double>& im) const override {
    fields(x, omega, re, im);
  }
  bool in_domain(const Vec6<double>& x) const override;
};

/// Left-invariant structure on a Lie group: constant coframe coefficients,
/// exact d via dw^i = -1/2 c^i_jk w^{jk} and the Leibniz rule.
struct LieStructure : StructureField {
  // structure constants c[i][j][k], antisymmetric in (j,k)
  std::array<std::array<std::array<double, 6>, 6>, 6> c{};
  KForm<double> omega{2}, re{3}, im{3};

  void eval(const Vec6<double>&, KForm<double>& o, KForm<double>& r, KForm<double>& i) const override {
    o = omega;
    r = re;
    i = im;
  }
  KForm<double> exterior_derivative(const Vec6<double>& x, int which) const override;

  /// d of an arbitrary constant-coefficient form (Chevalley-Eilenberg).
  KForm<double> d_constant_form(const KForm<double>& a) const;
  /// Jacobi identity residual (zero iff d^2 = 0).
  double jacobi_residual() const;
};

/// Built-in catalog.  Families: flat-cy, conformal (params: a, dir), phase-twist
/// (params: b), su3-rotate (params: rate), nilpotent (params: structure constants).
std::unique_ptr<StructureField> catalog(const std::string& name, const std::vector<double>& params);

/// Torsion of the field at a point: numerical d -> coframe adaptation ->
/// extraction (model frame).  The returned tensor is in the adapted model frame;
/// point.coframe carries the frame.
struct FieldTorsion {
  SU3Point<double> point;
  TorsionTensor<double> torsion;
  double residual = 0.0;
};

FieldTorsion torsion_at(const StructureField& f, const Vec6<double>& x, double residual_tol = 1e-6);

/// Same, with the splitting adapted to an SL plane of the given phase.
struct FieldRefinedTorsion {
  SU3Point<double> point;
  Splitting<double> splitting;
  TorsionTensor<double> torsion;  // in the adapted model frame
  RefinedTorsion<double> refined;
  Phase phase;
  double residual = 0.0;
};

FieldRefinedTorsion refined_torsion_at(const StructureField& f, const Vec6<double>& x,
                                       const OrientedPlane3<double>& plane, double residual_tol = 1e-6);

/// Immersed 3-fold, finite-difference machinery.
struct Immersion3 {
  std::function<Vec6<double>(const std::array<double, 3>&)> map;
  double fd_step = 1e-3;
};

/// Mean curvature vector by the second-fundamental-form trace: induced metric,
/// ambient Christoffels from g(x) by central differences, normal projection.
Vec6<double> mean_curvature_oracle(const Immersion3& imm, const StructureField& f, const std::array<double, 3>& u);

struct MCComparison {
  Vec6<double> oracle{};
  Vec6<double> formula{};
  double abs_error = 0.0;
  double rel_error = 0.0;
  Phase phase;
};

/// End-to-end comparison at a built-in SL plane fixture of a catalog family.
MCComparison mc_compare(const StructureField& f, const Vec6<double>& x0, const OrientedPlane3<double>& plane,
                        const Immersion3& imm, const std::array<double, 3>& u0);

struct ConvergenceStudy {
  std::vector<double> steps;
  std::vector<double> errors;
  std::vector<double> ratios;  // errors[i]/errors[i+1], ~16 for 4th order
};

/// FD convergence of d(Omega) against the closed form on the conformal family.
ConvergenceStudy convergence_study(double a, const std::vector<double>& steps);

// ---- gridded structure format ----
// File layout: magic line "SU3TGRID1\n", one JSON header line
// {"bounds": [[lo,hi] x6], "shape": [n1..n6], "spacing": [h1..h6]},
// then raw little-endian float64 blocks: omega (15 per node), ups_re (20),
// ups_im (20), each row-major over the grid.
struct GriddedStructure : StructureField {
  std::array<std::array<double, 2>, 6> bounds{};
  std::array<int, 6> shape{};
  std::array<double, 6> spacing{};
  std::vector<double> omega_data, re_data, im_data;

  std::size_t node_count() const;
  std::size_t node_index(const std::array<int, 6>& idx) const;
  Vec6<double> node_position(const std::array<int, 6>& idx) const;
  void forms_at(const std::array<int, 6>& idx, KForm<double>& o, KForm<double>& r, KForm<double>& i) const;

  void eval(const Vec6<double>& x, KForm<double>& o, KForm<double>& r, KForm<double>& i) const override;
  /// Grid-stencil derivative at a node (4th order; needs 2 nodes margin on
  /// every non-degenerate axis).
  KForm<double> derivative_at_node(const std::array<int, 6>& idx, int which) const;
  bool stencil_fits(const std::array<int, 6>& idx) const;
};

GriddedStructure load_gridded(const std::string& path);
void save_gridded(const GriddedStructure& g, const std::string& path);

}  // namespace su3t
