#pragma once

#include <optional>

#include "core/torsion.hpp"

namespace su3t {

/// Phase in [0, 2pi); t = theta/3 cached.
struct Phase {
  double theta = 0.0;
  double t() const { return theta / 3.0; }
};

struct SLDetection {
  bool is_lagrangian = false;
  bool is_special = false;
  double omega_restriction_norm = 0.0;  // ||Omega|_E||
  double calibration_modulus = 0.0;     // |Ups(u,v,w)|
  Phase phase;                          // valid when is_special
};

/// SL test: Omega|_E = 0 and Ups(u,v,w) = e^{i theta} on an oriented
/// g-orthonormal basis.  Orientation is canonicalized so that the
/// calibration value is +1 (the phase is then single-valued).
template <class S>
SLDetection detect_sl(const OrientedPlane3<S>& plane, const SU3Point<S>& p, double tol = 1e-10);

struct ComassResult {
  double sampled_max = 0.0;
  double refined_max = 0.0;
  std::array<std::array<double, 6>, 3> argmax{};
  std::uint64_t samples = 0;
};

/// Brute-force comass of Re(Ups_theta): max over random orthonormal triples,
/// with projected-ascent refinement of the best candidates.  Deterministic
/// given (samples, seed); parallel over fixed per-block RNG streams.
ComassResult comass_oracle(double theta, std::uint64_t samples, std::uint64_t seed, int refine_top = 100,
                           int refine_iters = 200);

/// Evaluate Re(Ups_theta) on a specific triple.
double calibration_value(double theta, const std::array<std::array<double, 6>, 3>& triple);

template <class S>
struct MeanCurvature {
  WVector<S> component_form;  // H_p = -4A_p cos3t - 4C_p sin3t + 3M_p sin t - 3N_p cos t
  WVector<S> invariant_form;  // via the natural/section isometries
  bool agree = false;
};

/// Theorem (mean curvature) evaluated both ways; the two must agree.
MeanCurvature<double> mean_curvature(const RefinedTorsion<double>& r, const Phase& th);
/// Exact variant at an exact trig pair for t = theta/3.
MeanCurvature<Rat> mean_curvature_exact(const RefinedTorsion<Rat>& r, const TrigPair<Rat>& t);

struct ObstructionValue {
  double via_isometries = 0.0;  // tau0^ sin th + tau0 cos th - (sqrt3/6)(sin(t) [..]^dd - cos(t) [..]^d)
  double via_internal = 0.0;    // tau0^ sin 3t + tau0 cos 3t - 4 F0 sin t + 4 E0 cos t
  bool agree = false;
};

ObstructionValue obstruction_residual(const RefinedTorsion<double>& r, const Phase& th);
/// Exact variant; returns the internal form (both forms agree identically).
Rat obstruction_residual_exact(const RefinedTorsion<Rat>& r, const TrigPair<Rat>& t);

/// Row relations and trace combinations of the condensed structure equation.
template <class S>
struct SRelationData {
  std::array<S, 3> row1{}, row2{}, row3{};   // S-coefficient differences per displayed row
  std::array<S, 3> trace_combos{};           // 2(S_{1p1}+S_{2p2}+S_{3p3}) patterns of (STRel)
  S cyclic_sum{0};                           // telescoping combination (vanishes on B)
  S cyclic_tu_display{0};                    // same, via the displayed T/U combination
  S obstruction_combination{0};              // -1/3 cyclic_sum = tau0^ sin3t + tau0 cos3t - 4F0 sint + 4E0 cost
};

template <class S>
SRelationData<S> s_relations(const TorsionFrameData<S>& tu, const TrigPair<S>& t);

/// Mean curvature from the frame data through the condensed structure
/// equation (the S-trace term plus the rotated lambda/mu term).
template <class S>
WVector<S> mean_curvature_from_frame(const TorsionFrameData<S>& tu, const TrigPair<S>& t);

/// Torsion-class table row.
struct ClassRow {
  std::string name;
  std::array<bool, 7> allowed;  // tau0, tau0^, tau2, tau2^, tau3, tau4, tau5
};
const std::vector<ClassRow>& class_table();

struct Classification {
  std::array<bool, 7> vanishing{};  // per torsion component
  std::string class_label;          // direct sum of X labels
  std::string named_class;          // table row name or "general"
  std::string mean_curvature_expr;
  std::string existence_condition;
  // evaluated at the queried phase (model splitting)
  std::array<double, 3> H{};
  double obstruction = 0.0;
};

Classification classify(const TorsionTensor<double>& t, double tol, const Phase& th);

}  // namespace su3t
