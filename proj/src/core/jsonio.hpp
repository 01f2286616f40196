#pragma once

#include <nlohmann/json.hpp>

#include "core/numericfield.hpp"

namespace su3t {

using Json = nlohmann::json;

// KForm encoding: {"degree": k, "coeffs": {"145": "-3/2", "23": 0.5}}.
// Rational strings keep the exact layer lossless; numbers are accepted too.
template <class S>
Json form_to_json(const KForm<S>& a);
template <class S>
KForm<S> form_from_json(const Json& j);

template <class S>
Json scalar_to_json(const S& v);
template <class S>
S scalar_from_json(const Json& j);

template <class S>
Json torsion_to_json(const TorsionTensor<S>& t);
template <class S>
TorsionTensor<S> torsion_from_json(const Json& j);

template <class S>
Json refined_to_json(const RefinedTorsion<S>& r);
template <class S>
RefinedTorsion<S> refined_from_json(const Json& j);

template <class S>
Json frame_data_to_json(const TorsionFrameData<S>& tu);
template <class S>
TorsionFrameData<S> frame_data_from_json(const Json& j);

template <class S>
Json derivatives_to_json(const DerivativeTriple<S>& d);
template <class S>
DerivativeTriple<S> derivatives_from_json(const Json& j);

template <class S>
OrientedPlane3<S> plane_from_json(const Json& j);

/// {"omega": ..., "upsilon_re": ..., "upsilon_im": ...}; derived fields recomputed.
template <class S>
SU3Point<S> structure_from_json(const Json& j, double tol = 1e-10);
template <class S>
Json structure_to_json(const SU3Point<S>& p);

Json validation_to_json(const ValidationReport& r);
Json torsol_report_to_json(const TorsolReport& r);
Json pullback_report_to_json(const PullbackReport& r);
Json trials_report_to_json(const TrialsReport& r);
Json comass_to_json(const ComassResult& r);
Json classification_to_json(const Classification& c);
Json audit_to_json(const BasisAudit& a);
Json mc_comparison_to_json(const MCComparison& m);
Json convergence_to_json(const ConvergenceStudy& s);
Json detection_to_json(const SLDetection& d);

template <class S>
Json srelations_to_json(const SRelationData<S>& s);

template <class S>
Json wvector_to_json(const WVector<S>& w, double theta);

}  // namespace su3t
