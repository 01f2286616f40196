#include <doctest.h>

#include "core/jsonio.hpp"
#include "core/model.hpp"
#include "testutil.hpp"

using namespace su3t;
using namespace su3t::testutil;

TEST_SUITE("exterior") {
  TEST_CASE("wedge basics and standard identities") {
    // e^{14} ^ e^{25} = -e^{1245}
    CHECK(wedge(e({1, 4}), e({2, 5})) == -e({1, 2, 4, 5}));

    // Omega^3 = 6 vol0, vol0 = e^{142536} = -e^{123456}
    auto om = omega0<Rat>();
    auto om3 = wedge(wedge(om, om), om);
    CHECK(om3 == Rat(6) * vol0_exact());
    CHECK(vol0_exact() == -e({1, 2, 3, 4, 5, 6}));

    // (i/8) Ups ^ bar-Ups = (1/4) Re ^ Im = vol0
    CHECK(Rat(1, 4) * wedge(re_upsilon0<Rat>(), im_upsilon0<Rat>()) == vol0_exact());
  }

  TEST_CASE("wedge degree overflow") {
    CHECK_THROWS_AS(wedge(e({1, 2, 3, 4}), e({1, 2, 3})), Error);
  }

  TEST_CASE("interior product") {
    CHECK(interior(basis_vector<Rat>(1), re_upsilon0<Rat>()) == e({2, 3}) - e({5, 6}));
    CHECK(interior(basis_vector<Rat>(1), e({2, 3})).is_zero());
    CHECK(interior(basis_vector<Rat>(1), omega0<Rat>()) == e({4}));
  }

  TEST_CASE("inner product") {
    CHECK(inner(re_upsilon0<Rat>(), re_upsilon0<Rat>()) == Rat(4));
    CHECK(inner(omega0<Rat>(), omega0<Rat>()) == Rat(3));
    CHECK_THROWS_AS(inner(omega0<Rat>(), re_upsilon0<Rat>()), Error);
    // basis orthonormality
    for (Mask m : degree_masks(2))
      for (Mask n : degree_masks(2))
        CHECK(inner(KForm<Rat>::basis(m), KForm<Rat>::basis(n)) == Rat(m == n ? 1 : 0));
  }

  TEST_CASE("hodge star") {
    CHECK(hodge_star(vol0_exact()) == KForm<Rat>::scalar(Rat(1)));
    // *e^{14} = e^{25} ^ e^{36}, derived by enumerating the defining identity
    CHECK(hodge_star(e({1, 4})) == wedge(e({2, 5}), e({3, 6})));
    // defining identity over all basis pairs in every degree
    for (int k = 0; k <= 6; ++k) {
      for (Mask a : degree_masks(k))
        for (Mask b : degree_masks(k)) {
          auto lhs = wedge(KForm<Rat>::basis(a), hodge_star(KForm<Rat>::basis(b)));
          auto rhs = Rat(a == b ? 1 : 0) * vol0_exact();
          CHECK(lhs == rhs);
        }
    }
    // ** = id on even degrees of R^6 up to the standard sign (-1)^{k(6-k)}
    Rng rng(31);
    for (int k = 0; k <= 6; ++k) {
      auto f = random_form(rng, k);
      auto ss = hodge_star(hodge_star(f));
      if ((k * (6 - k)) % 2 == 0)
        CHECK(ss == f);
      else
        CHECK(ss == -f);
    }
  }

  TEST_CASE("symplectic star") {
    // star gamma = gamma on Lambda^3_6 = {alpha ^ Omega}
    for (int i = 1; i <= 6; ++i) {
      auto g = wedge(covector<Rat>(i), omega0<Rat>());
      CHECK(symplectic_star(g) == g);
    }
    // defining identity on all basis pairs (degree 2 and 3)
    for (int k = 2; k <= 3; ++k)
      for (Mask a : degree_masks(k))
        for (Mask b : degree_masks(k)) {
          auto sb = symplectic_star(KForm<Rat>::basis(b));
          auto lhs = wedge(KForm<Rat>::basis(a), sb);
          auto rhs = omega_pairing(KForm<Rat>::basis(a), KForm<Rat>::basis(b)) * vol0_exact();
          CHECK(lhs == rhs);
        }
    // Lambda^2_6 membership consistency: iota_X Re(Ups) vs star(alpha ^ Re(Ups))
    // (the two descriptions span the same module)
    Matrix<Rat> span_a(6, 15), span_b(6, 15);
    for (int i = 1; i <= 6; ++i) {
      auto f1 = interior(basis_vector<Rat>(i), re_upsilon0<Rat>());
      auto f2 = symplectic_star(wedge(covector<Rat>(i), re_upsilon0<Rat>()));
      for (int c = 0; c < 15; ++c) {
        span_a(i - 1, c) = f1.at(c);
        span_b(i - 1, c) = f2.at(c);
      }
    }
    Matrix<Rat> both(12, 15);
    for (int i = 0; i < 6; ++i)
      for (int c = 0; c < 15; ++c) {
        both(i, c) = span_a(i, c);
        both(6 + i, c) = span_b(i, c);
      }
    CHECK(rank(span_a) == 6);
    CHECK(rank(span_b) == 6);
    CHECK(rank(both) == 6);  // same 6-dimensional module
    // star of the zero form
    CHECK(symplectic_star(KForm<Rat>(2)).is_zero());
  }

  TEST_CASE("graded commutativity (property)") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      int ka = static_cast<int>(rng.uniform_int(0, 3));
      int kb = static_cast<int>(rng.uniform_int(0, std::min(3L, 6L - ka)));
      auto a = random_form(rng, ka);
      auto b = random_form(rng, kb);
      auto ab = wedge(a, b);
      auto ba = wedge(b, a);
      if ((ka * kb) % 2 == 0)
        CHECK(ab == ba);
      else
        CHECK(ab == -ba);
    }
  }

  TEST_CASE("associativity (property)") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_form(rng, 1);
      auto b = random_form(rng, 2);
      auto c = random_form(rng, 2);
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
  }

  TEST_CASE("interior is an antiderivation (property)") {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      int ka = static_cast<int>(rng.uniform_int(1, 3));
      int kb = static_cast<int>(rng.uniform_int(1, 6 - ka > 3 ? 3 : 6 - ka));
      auto a = random_form(rng, ka);
      auto b = random_form(rng, kb);
      Vec6<Rat> v;
      for (int i = 0; i < 6; ++i) v[i] = rng.rational(5, 3);
      auto lhs = interior(v, wedge(a, b));
      auto rhs = wedge(interior(v, a), b);
      auto second = wedge(a, interior(v, b));
      if (ka % 2 == 0)
        rhs += second;
      else
        rhs -= second;
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("symbol tables round-trip") {
    const auto& sy = symbols();
    KForm<Rat> om(2), re(3), im(3);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        if (sy.omega[i][j] != 0 && i < j)
          om.add_term(static_cast<Mask>((1u << i) | (1u << j)), Rat(sy.omega[i][j]));
        for (int k = 0; k < 6; ++k) {
          if (i < j && j < k) {
            Mask m = static_cast<Mask>((1u << i) | (1u << j) | (1u << k));
            if (sy.eps[i][j][k] != 0) re.add_term(m, Rat(sy.eps[i][j][k]));
            if (sy.eps_hat[i][j][k] != 0) im.add_term(m, Rat(sy.eps_hat[i][j][k]));
          }
        }
      }
    CHECK(om == omega0<Rat>());
    CHECK(re == re_upsilon0<Rat>());
    CHECK(im == im_upsilon0<Rat>());
    // full antisymmetry
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        CHECK(sy.omega[i][j] == -sy.omega[j][i]);
        for (int k = 0; k < 6; ++k) {
          CHECK(sy.eps[i][j][k] == -sy.eps[j][i][k]);
          CHECK(sy.eps[i][j][k] == -sy.eps[i][k][j]);
          CHECK(sy.eps_hat[i][j][k] == -sy.eps_hat[j][i][k]);
        }
      }
  }

  TEST_CASE("form JSON round trip") {
    Rng rng(10);
    for (int k = 0; k <= 4; ++k) {
      auto f = random_form(rng, k);
      auto j = form_to_json(f);
      CHECK(form_from_json<Rat>(j) == f);
    }
    // float layer and rational strings
    auto j = Json::parse(R"({"degree": 2, "coeffs": {"14": "-3/2", "25": 1, "36": 0.5}})");
    auto f = form_from_json<Rat>(j);
    CHECK(f.coeff(mask_from_digits("14")) == Rat(-3, 2));
    CHECK(f.coeff(mask_from_digits("25")) == Rat(1));
    CHECK(f.coeff(mask_from_digits("36")) == Rat(1, 2));
    CHECK_THROWS(form_from_json<Rat>(Json::parse(R"({"degree": 2, "coeffs": {"145": 1}})")));
  }
}
