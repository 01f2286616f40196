#include "core/jsonio.hpp"

namespace su3t {

template <>
Json scalar_to_json<Rat>(const Rat& v) {
  if (v.get_den() == 1) {
    if (v.get_num().fits_slong_p()) return Json(v.get_num().get_si());
    return Json(rat_to_string(v));
  }
  return Json(rat_to_string(v));
}

template <>
Json scalar_to_json<double>(const double& v) {
  return Json(v);
}

template <>
Rat scalar_from_json<Rat>(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_number_float()) return Rat(j.get<double>());  // exact binary expansion
  throw Error("expected rational scalar, got: " + j.dump());
}

template <>
double scalar_from_json<double>(const Json& j) {
  if (j.is_string()) return ScalarOps<Rat>::to_double(rat_from_string(j.get<std::string>()));
  if (j.is_number()) return j.get<double>();
  throw Error("expected numeric scalar, got: " + j.dump());
}

template <class S>
Json form_to_json(const KForm<S>& a) {
  Json coeffs = Json::object();
  const auto& masks = degree_masks(a.degree());
  for (int i = 0; i < a.size(); ++i)
    if (!ScalarOps<S>::is_zero(a.at(i))) coeffs[mask_to_digits(masks[i])] = scalar_to_json<S>(a.at(i));
  return Json{{"degree", a.degree()}, {"coeffs", coeffs}};
}

template <class S>
KForm<S> form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree")) throw Error("form JSON needs {degree, coeffs}");
  int deg = j.at("degree").get<int>();
  if (deg < 0 || deg > 6) throw Error("form degree out of range");
  KForm<S> f(deg);
  if (j.contains("coeffs")) {
    for (auto& [key, val] : j.at("coeffs").items()) {
      Mask m = mask_from_digits(key);
      if (mask_degree(m) != deg) throw Error("multi-index '" + key + "' does not match degree");
      f.add_term(m, scalar_from_json<S>(val));
    }
  }
  return f;
}

template <class S>
Json torsion_to_json(const TorsionTensor<S>& t) {
  return Json{{"tau0", scalar_to_json<S>(t.tau0)},     {"tau0_hat", scalar_to_json<S>(t.tau0_hat)},
              {"tau2", form_to_json(t.tau2)},          {"tau2_hat", form_to_json(t.tau2_hat)},
              {"tau3", form_to_json(t.tau3)},          {"tau4", form_to_json(t.tau4)},
              {"tau5", form_to_json(t.tau5)}};
}

template <class S>
TorsionTensor<S> torsion_from_json(const Json& j) {
  TorsionTensor<S> t;
  t.tau0 = scalar_from_json<S>(j.at("tau0"));
  t.tau0_hat = scalar_from_json<S>(j.at("tau0_hat"));
  t.tau2 = form_from_json<S>(j.at("tau2"));
  t.tau2_hat = form_from_json<S>(j.at("tau2_hat"));
  t.tau3 = form_from_json<S>(j.at("tau3"));
  t.tau4 = form_from_json<S>(j.at("tau4"));
  t.tau5 = form_from_json<S>(j.at("tau5"));
  t.tau2.require_degree(2);
  t.tau2_hat.require_degree(2);
  t.tau3.require_degree(3);
  t.tau4.require_degree(1);
  t.tau5.require_degree(1);
  return t;
}

template <class S>
Json refined_to_json(const RefinedTorsion<S>& r) {
  Json j;
  j["tau0"] = scalar_to_json<S>(r.tau0);
  j["tau0_hat"] = scalar_to_json<S>(r.tau0_hat);
  j["E0"] = scalar_to_json<S>(r.E0);
  j["F0"] = scalar_to_json<S>(r.F0);
  auto put3 = [&j](const char* base, const std::array<S, 3>& v) {
    for (int p = 0; p < 3; ++p) j[base + std::to_string(p + 1)] = scalar_to_json<S>(v[p]);
  };
  auto put5 = [&j](const char* base, const std::array<S, 5>& v) {
    for (int d = 0; d < 5; ++d) j[base + std::to_string(d + 1)] = scalar_to_json<S>(v[d]);
  };
  put3("A", r.A);
  put5("B", r.B);
  put3("C", r.C);
  put5("D", r.D);
  put5("E", r.E);
  put5("F", r.F);
  put3("G", r.G);
  put3("J", r.J);
  put3("M", r.M);
  put3("N", r.N);
  return j;
}

template <class S>
RefinedTorsion<S> refined_from_json(const Json& j) {
  RefinedTorsion<S> r;
  auto get = [&j](const std::string& key) -> S {
    if (!j.contains(key)) return S(0);
    return scalar_from_json<S>(j.at(key));
  };
  r.tau0 = get("tau0");
  r.tau0_hat = get("tau0_hat");
  r.E0 = get("E0");
  r.F0 = get("F0");
  for (int p = 0; p < 3; ++p) {
    r.A[p] = get("A" + std::to_string(p + 1));
    r.C[p] = get("C" + std::to_string(p + 1));
    r.G[p] = get("G" + std::to_string(p + 1));
    r.J[p] = get("J" + std::to_string(p + 1));
    r.M[p] = get("M" + std::to_string(p + 1));
    r.N[p] = get("N" + std::to_string(p + 1));
  }
  for (int d = 0; d < 5; ++d) {
    r.B[d] = get("B" + std::to_string(d + 1));
    r.D[d] = get("D" + std::to_string(d + 1));
    r.E[d] = get("E" + std::to_string(d + 1));
    r.F[d] = get("F" + std::to_string(d + 1));
  }
  return r;
}

template <class S>
Json frame_data_to_json(const TorsionFrameData<S>& tu) {
  Json T = Json::array(), U = Json::array();
  for (int i = 0; i < 6; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 6; ++j) row.push_back(scalar_to_json<S>(tu.T[i][j]));
    T.push_back(row);
    U.push_back(scalar_to_json<S>(tu.U[i]));
  }
  return Json{{"T", T}, {"U", U}};
}

template <class S>
TorsionFrameData<S> frame_data_from_json(const Json& j) {
  TorsionFrameData<S> tu;
  for (int i = 0; i < 6; ++i) {
    for (int k = 0; k < 6; ++k) tu.T[i][k] = scalar_from_json<S>(j.at("T").at(i).at(k));
    tu.U[i] = scalar_from_json<S>(j.at("U").at(i));
  }
  return tu;
}

template <class S>
Json derivatives_to_json(const DerivativeTriple<S>& d) {
  return Json{{"d_omega", form_to_json(d.d_omega)},
              {"d_re_upsilon", form_to_json(d.d_re)},
              {"d_im_upsilon", form_to_json(d.d_im)}};
}

template <class S>
DerivativeTriple<S> derivatives_from_json(const Json& j) {
  DerivativeTriple<S> d;
  d.d_omega = form_from_json<S>(j.at("d_omega"));
  d.d_re = form_from_json<S>(j.at("d_re_upsilon"));
  d.d_im = form_from_json<S>(j.at("d_im_upsilon"));
  d.d_omega.require_degree(3);
  d.d_re.require_degree(4);
  d.d_im.require_degree(4);
  return d;
}

template <class S>
OrientedPlane3<S> plane_from_json(const Json& j) {
  OrientedPlane3<S> p;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 6; ++k) p.basis[i][k] = scalar_from_json<S>(j.at("basis").at(i).at(k));
  if (j.contains("orientation")) p.orientation = j.at("orientation").get<int>() >= 0 ? 1 : -1;
  return p;
}

template <class S>
SU3Point<S> structure_from_json(const Json& j, double tol) {
  KForm<S> om = form_from_json<S>(j.at("omega"));
  KForm<S> re = form_from_json<S>(j.at("upsilon_re"));
  KForm<S> im = form_from_json<S>(j.at("upsilon_im"));
  return make_point(om, re, im, tol);
}

template <class S>
Json structure_to_json(const SU3Point<S>& p) {
  return Json{{"omega", form_to_json(p.omega)},
              {"upsilon_re", form_to_json(p.ups_re)},
              {"upsilon_im", form_to_json(p.ups_im)}};
}

Json validation_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  return Json{{"checks", checks}, {"all_pass", r.all_pass()}};
}

Json torsol_report_to_json(const TorsolReport& r) {
  return Json{{"match", r.match},
              {"mismatch_count", r.mismatch_count},
              {"mismatches", r.mismatches},
              {"residual", r.residual}};
}

Json pullback_report_to_json(const PullbackReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"identity", e.name}, {"pass", e.pass}, {"residual", e.residual}});
  return Json{{"identities", entries}, {"all_pass", r.all_pass}, {"probable_typo_flag", r.probable_typo_flag}};
}

Json trials_report_to_json(const TrialsReport& r) {
  return Json{{"trials", r.trials}, {"passed", r.passed}, {"all_exact", r.all_exact},
              {"failing_trials", r.failing_trials}};
}

Json comass_to_json(const ComassResult& r) {
  Json tri = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 6; ++k) row.push_back(r.argmax[i][k]);
    tri.push_back(row);
  }
  return Json{{"sampled_max", r.sampled_max},
              {"refined_max", r.refined_max},
              {"samples", r.samples},
              {"argmax", tri}};
}

Json classification_to_json(const Classification& c) {
  static const char* kNames[7] = {"tau0", "tau0_hat", "tau2", "tau2_hat", "tau3", "tau4", "tau5"};
  Json vanish = Json::object();
  for (int i = 0; i < 7; ++i) vanish[kNames[i]] = c.vanishing[i];
  return Json{{"vanishing", vanish},
              {"class", c.class_label},
              {"named_class", c.named_class},
              {"mean_curvature_expr", c.mean_curvature_expr},
              {"existence_condition", c.existence_condition},
              {"H_components", {c.H[0], c.H[1], c.H[2]}},
              {"obstruction_residual", c.obstruction}};
}

Json audit_to_json(const BasisAudit& a) {
  Json fams = Json::array();
  for (const auto& f : a.families) {
    Json pairs = Json::array();
    for (size_t i = 0; i < f.orthogonality_fail.size(); ++i)
      pairs.push_back(Json{{"pair", {f.orthogonality_fail[i][0], f.orthogonality_fail[i][1]}},
                           {"inner_product", f.inner_products[i]}});
    fams.push_back(Json{{"family", f.name},
                        {"printed_equals_regenerated", f.printed_equals_regenerated},
                        {"printed_membership_failures", f.printed_membership_failures},
                        {"rank", f.rank},
                        {"orthogonality_failures", pairs},
                        {"norms_squared", f.norms_sq}});
  }
  return Json{{"families", fams}, {"all_printed_claims_hold", a.all_claims_hold()}};
}

Json mc_comparison_to_json(const MCComparison& m) {
  Json oracle = Json::array(), formula = Json::array();
  for (int k = 0; k < 6; ++k) {
    oracle.push_back(m.oracle[k]);
    formula.push_back(m.formula[k]);
  }
  return Json{{"oracle", oracle},
              {"formula", formula},
              {"abs_error", m.abs_error},
              {"rel_error", m.rel_error},
              {"theta", m.phase.theta}};
}

Json convergence_to_json(const ConvergenceStudy& s) {
  return Json{{"steps", s.steps}, {"errors", s.errors}, {"ratios", s.ratios}};
}

Json detection_to_json(const SLDetection& d) {
  Json j{{"is_lagrangian", d.is_lagrangian},
         {"is_special", d.is_special},
         {"omega_restriction_norm", d.omega_restriction_norm},
         {"calibration_modulus", d.calibration_modulus}};
  if (d.is_special) j["theta"] = d.phase.theta;
  return j;
}

template <class S>
Json srelations_to_json(const SRelationData<S>& s) {
  auto arr = [](const std::array<S, 3>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(scalar_to_json<S>(x));
    return a;
  };
  return Json{{"row1", arr(s.row1)},
              {"row2", arr(s.row2)},
              {"row3", arr(s.row3)},
              {"trace_combos", arr(s.trace_combos)},
              {"cyclic_sum", scalar_to_json<S>(s.cyclic_sum)},
              {"cyclic_tu_display", scalar_to_json<S>(s.cyclic_tu_display)},
              {"obstruction_combination", scalar_to_json<S>(s.obstruction_combination)}};
}

template <class S>
Json wvector_to_json(const WVector<S>& w, double theta) {
  Json c = Json::array();
  for (int p = 0; p < 3; ++p) c.push_back(scalar_to_json<S>(w.c[p]));
  Vec6<double> amb = w.ambient(theta);
  Json a = Json::array();
  for (int k = 0; k < 6; ++k) a.push_back(amb[k]);
  return Json{{"w_components", c}, {"sqrt2_scale", w.sqrt2_scale}, {"ambient", a}};
}

#define SU3T_INSTANTIATE(S)                                                  \
  template Json form_to_json<S>(const KForm<S>&);                            \
  template KForm<S> form_from_json<S>(const Json&);                         \
  template Json torsion_to_json<S>(const TorsionTensor<S>&);                 \
  template TorsionTensor<S> torsion_from_json<S>(const Json&);              \
  template Json refined_to_json<S>(const RefinedTorsion<S>&);                \
  template RefinedTorsion<S> refined_from_json<S>(const Json&);             \
  template Json frame_data_to_json<S>(const TorsionFrameData<S>&);           \
  template TorsionFrameData<S> frame_data_from_json<S>(const Json&);        \
  template Json derivatives_to_json<S>(const DerivativeTriple<S>&);          \
  template DerivativeTriple<S> derivatives_from_json<S>(const Json&);       \
  template OrientedPlane3<S> plane_from_json<S>(const Json&);               \
  template SU3Point<S> structure_from_json<S>(const Json&, double);         \
  template Json structure_to_json<S>(const SU3Point<S>&);                    \
  template Json srelations_to_json<S>(const SRelationData<S>&);              \
  template Json wvector_to_json<S>(const WVector<S>&, double);

SU3T_INSTANTIATE(Rat)
SU3T_INSTANTIATE(double)
#undef SU3T_INSTANTIATE

}  // namespace su3t
