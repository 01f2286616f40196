#pragma once

#include "core/rng.hpp"
#include "core/so3refine.hpp"

namespace su3t {

/// Convention for J acting on 1-forms (the source leaves it undefined).
/// A: (J a)(X) = -a(JX), i.e. J a = (J(a#))^flat  -- the round-trip default.
/// B: (J a)(X) = +a(JX).
enum class JConvention { A, B };

template <class S>
KForm<S> j_on_1form(const KForm<S>& a, JConvention conv);

/// Frame-bundle torsion functions: lambda_i = T_ij w^j, mu = U_i w^i.
template <class S>
struct TorsionFrameData {
  Mat6<S> T{};
  Vec6<S> U{};
};

/// The three defining exterior derivatives of a torsion tensor:
///   dOmega  = 3 tau0 Re(Ups) + 3 tau0^ Im(Ups) + tau3 + tau4 ^ Omega
///   dRe(Ups) = 2 tau0^ Omega^2 + tau5 ^ Re(Ups) + tau2 ^ Omega
///   dIm(Ups) = -2 tau0 Omega^2 - J tau5 ^ Re(Ups) + tau2^ ^ Omega
template <class S>
struct DerivativeTriple {
  KForm<S> d_omega{3};
  KForm<S> d_re{4}, d_im{4};
};

template <class S>
DerivativeTriple<S> assemble_derivatives(const TorsionTensor<S>& t, const SU3Point<S>& p,
                                         JConvention conv = JConvention::A);

/// Inverse of assemble_derivatives at the model point: one exact linear solve
/// of the assembled coefficient system (50 equations, rank 42).  The residual
/// of the overdetermined rows is returned; a nonzero residual means the input
/// triple is not the torsion of any SU(3)-structure.
template <class S>
struct ExtractionResult {
  TorsionTensor<S> torsion;
  double residual = 0.0;
};

template <class S>
ExtractionResult<S> extract_torsion(const DerivativeTriple<S>& d, const SU3Point<S>& p,
                                    JConvention conv = JConvention::A, double tol = 1e-8);

/// Dimensions of the assembled coefficient system (rows, cols) and its exact rank.
struct SystemInfo {
  int rows = 0, cols = 0, rank = 0;
};
SystemInfo torsion_system_info(JConvention conv = JConvention::A);

/// Structure-equation left-hand sides, evaluated verbatim from (T, U):
///   dOmega = ephat_{ljk} T_{li} w^{ijk}
///   dRe    = -1/2 ((Om_km Om_lj - Om_kj Om_lm) T_mi + ephat_{jkl} U_i) w^{ijkl}
///   dIm    = -1/2 (2 Om_kl T_ji - eps_{jkl} U_i) w^{ijkl}
template <class S>
DerivativeTriple<S> derivatives_from_TU(const TorsionFrameData<S>& tu);

/// The solved linear system (SU3-TorSol1)-(SU3-TorSol4): build (T, U) from the
/// refined torsion coefficients.
template <class S>
TorsionFrameData<S> tu_from_refined(const RefinedTorsion<S>& r);

struct TorsolReport {
  bool match = false;
  int mismatch_count = 0;
  std::vector<std::string> mismatches;  // "T[i][j]: got vs expected"
  double residual = 0.0;
};

/// Round trip derivatives_from_TU -> extract_torsion -> extract_refined ->
/// tu_from_refined == identity; the reproduction of the solved system.
template <class S>
TorsolReport verify_torsol(const TorsionFrameData<S>& tu, JConvention conv = JConvention::A);

struct PullbackReport {
  struct Entry {
    std::string name;
    bool pass;
    double residual;
  };
  std::vector<Entry> entries;
  bool all_pass = false;
  bool probable_typo_flag = false;  // tau4/tau5 fail while the TorSol chain passes
};

/// Check tau0 = -1/3 Om_ij T_ij, tau0^ = 1/3 T_ii, tau4 = eps_ijk T_ij w^k,
/// tau5 = eps_ijk T_ij w^k + 3 Om_ik U_i w^k against an extraction of
/// derivatives_from_TU(tu).
template <class S>
PullbackReport verify_pullback_identities(const TorsionFrameData<S>& tu, const TorsionTensor<S>& t);

// --- randomized drivers (seeded, deterministic) ---

TorsionFrameData<Rat> random_frame_data(Rng& rng, long num_range = 9, long den_range = 4);
RefinedTorsion<Rat> random_refined(Rng& rng, long num_range = 9, long den_range = 4);
TorsionTensor<Rat> random_torsion_tensor(Rng& rng, long num_range = 9, long den_range = 4);

struct TrialsReport {
  int trials = 0;
  int passed = 0;
  bool all_exact = false;
  std::vector<int> failing_trials;
};

TrialsReport verify_torsol_trials(int trials, std::uint64_t seed, JConvention conv = JConvention::A);
TrialsReport verify_roundtrip_trials(int trials, std::uint64_t seed, JConvention conv = JConvention::A);
TrialsReport verify_pullback_trials(int trials, std::uint64_t seed, JConvention conv = JConvention::A);

}  // namespace su3t
