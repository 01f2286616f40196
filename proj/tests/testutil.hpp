#pragma once

#include "core/model.hpp"
#include "core/rng.hpp"
#include "core/su3algebra.hpp"

namespace su3t::testutil {

inline KForm<Rat> random_form(Rng& rng, int degree, long num = 9, long den = 5) {
  KForm<Rat> f(degree);
  for (int i = 0; i < f.size(); ++i) f.at(i) = rng.rational(num, den);
  return f;
}

inline KForm<Rat> e(std::initializer_list<int> idx) {
  int sign = 1, cur = 0;
  for (int i : idx) {
    Mask b = static_cast<Mask>(1u << (i - 1));
    int s = wedge_sign(static_cast<Mask>(cur), b);
    sign *= s;
    cur |= b;
  }
  return KForm<Rat>::basis(static_cast<Mask>(cur), Rat(sign));
}

/// Rational point on the unit circle: (c, s) = ((1-u^2)/(1+u^2), 2u/(1+u^2)).
inline TrigPair<Rat> circle_point(const Rat& u) {
  Rat d = 1 + u * u;
  return TrigPair<Rat>{(1 - u * u) / d, 2 * u / d};
}

/// Exact special unitary matrices acting on R^6 = C^3 (block form
/// [[Re, -Im], [Im, Re]]): rational rotations and coordinate permutations.
inline Mat6<Rat> su3_rational_rotation(int plane_a, int plane_b, const Rat& c, const Rat& s) {
  // complex rotation by (c + i s)? no: real rotation within the (z_a, z_b)
  // complex plane, det = 1, entries rational when c^2 + s^2 = 1
  Mat6<Rat> A = identity6<Rat>();
  int a = plane_a - 1, b = plane_b - 1;
  A[a][a] = c; A[a][b] = -s; A[b][a] = s; A[b][b] = c;
  A[a + 3][a + 3] = c; A[a + 3][b + 3] = -s; A[b + 3][a + 3] = s; A[b + 3][b + 3] = c;
  return A;
}

/// diag(i, -i, 1) in U(3) -- det 1, exact integer entries in the real picture.
inline Mat6<Rat> su3_phase_element() {
  Mat6<Rat> A{};
  // z1 -> i z1: e1 -> e4, e4 -> -e1 ; z2 -> -i z2: e2 -> -e5, e5 -> e2 ; z3 -> z3
  A[3][0] = Rat(1); A[0][3] = Rat(-1);
  A[4][1] = Rat(-1); A[1][4] = Rat(1);
  A[2][2] = Rat(1); A[5][5] = Rat(1);
  return A;
}

/// cyclic permutation z1 -> z2 -> z3 -> z1 (det = 1)
inline Mat6<Rat> su3_cycle() {
  Mat6<Rat> A{};
  for (int p = 0; p < 3; ++p) {
    int q = (p + 1) % 3;
    A[q][p] = Rat(1);
    A[q + 3][p + 3] = Rat(1);
  }
  return A;
}

/// random product of exact SU(3) generators (3-4-5 style rotations, phases, cycles)
inline Mat6<Rat> random_exact_su3(Rng& rng, int factors = 4) {
  Mat6<Rat> A = identity6<Rat>();
  const Rat triples[3][2] = {{Rat(3, 5), Rat(4, 5)}, {Rat(5, 13), Rat(12, 13)}, {Rat(8, 17), Rat(15, 17)}};
  for (int f = 0; f < factors; ++f) {
    int kind = static_cast<int>(rng.uniform_int(0, 2));
    Mat6<Rat> B;
    if (kind == 0) {
      int which = static_cast<int>(rng.uniform_int(0, 2));
      int a = static_cast<int>(rng.uniform_int(1, 3));
      int b = a;
      while (b == a) b = static_cast<int>(rng.uniform_int(1, 3));
      B = su3_rational_rotation(a, b, triples[which][0], triples[which][1]);
    } else if (kind == 1) {
      B = su3_phase_element();
    } else {
      B = su3_cycle();
    }
    A = mat_mul(A, B);
  }
  return A;
}

/// pullback of the standard pair by A: a valid SU(3)-structure for any A in SU(3)
inline void pulled_structure(const Mat6<Rat>& A, KForm<Rat>& om, KForm<Rat>& re, KForm<Rat>& im) {
  om = pullback(omega0<Rat>(), A);
  re = pullback(re_upsilon0<Rat>(), A);
  im = pullback(im_upsilon0<Rat>(), A);
}

inline Mat6<double> to_double_mat(const Mat6<Rat>& A) {
  Mat6<double> B{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) B[i][j] = A[i][j].get_d();
  return B;
}

/// random invertible rational matrix (unit-triangular product, det = 1)
inline Mat6<Rat> random_exact_gl(Rng& rng, long num = 3, long den = 2) {
  Mat6<Rat> L = identity6<Rat>(), U = identity6<Rat>();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i > j) L[i][j] = rng.rational(num, den);
      if (i < j) U[i][j] = rng.rational(num, den);
    }
  return mat_mul(L, U);
}

/// random SU(3) element in the real 6x6 picture, by complex QR with phase fix
inline Mat6<double> random_su3_double(Rng& rng) {
  // complex Gram-Schmidt on a Gaussian 3x3 complex matrix
  double re[3][3], im[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      re[i][j] = rng.normal();
      im[i][j] = rng.normal();
    }
  auto cdot = [&](int a, int b, double& dr, double& di) {  // <col_a, col_b> conj-linear in a
    dr = di = 0;
    for (int i = 0; i < 3; ++i) {
      dr += re[i][a] * re[i][b] + im[i][a] * im[i][b];
      di += re[i][a] * im[i][b] - im[i][a] * re[i][b];
    }
  };
  for (int c = 0; c < 3; ++c) {
    for (int p = 0; p < c; ++p) {
      double dr, di;
      cdot(p, c, dr, di);
      for (int i = 0; i < 3; ++i) {
        double nr = re[i][c] - (dr * re[i][p] - di * im[i][p]);
        double ni = im[i][c] - (dr * im[i][p] + di * re[i][p]);
        re[i][c] = nr;
        im[i][c] = ni;
      }
    }
    double n = 0;
    for (int i = 0; i < 3; ++i) n += re[i][c] * re[i][c] + im[i][c] * im[i][c];
    n = std::sqrt(n);
    for (int i = 0; i < 3; ++i) {
      re[i][c] /= n;
      im[i][c] /= n;
    }
  }
  // det phase correction on the last column: 3x3 complex determinant
  auto cmul = [](double ar, double ai, double br, double bi, double& cr, double& ci) {
    cr = ar * br - ai * bi;
    ci = ar * bi + ai * br;
  };
  auto minor2 = [&](int r1, int c1, int r2, int c2, double& mr, double& mi) {
    double t1r, t1i, t2r, t2i;
    cmul(re[r1][c1], im[r1][c1], re[r2][c2], im[r2][c2], t1r, t1i);
    cmul(re[r1][c2], im[r1][c2], re[r2][c1], im[r2][c1], t2r, t2i);
    mr = t1r - t2r;
    mi = t1i - t2i;
  };
  double m0r, m0i, m1r, m1i, m2r, m2i;
  minor2(1, 1, 2, 2, m0r, m0i);
  minor2(1, 0, 2, 2, m1r, m1i);
  minor2(1, 0, 2, 1, m2r, m2i);
  double d0r, d0i, d1r, d1i, d2r, d2i;
  cmul(re[0][0], im[0][0], m0r, m0i, d0r, d0i);
  cmul(re[0][1], im[0][1], m1r, m1i, d1r, d1i);
  cmul(re[0][2], im[0][2], m2r, m2i, d2r, d2i);
  double dr = d0r - d1r + d2r;
  double di = d0i - d1i + d2i;
  // multiply last column by conj(det) (|det| = 1 already)
  for (int i = 0; i < 3; ++i) {
    double nr = re[i][2] * dr + im[i][2] * di;
    double ni = -re[i][2] * di + im[i][2] * dr;
    re[i][2] = nr;
    im[i][2] = ni;
  }
  Mat6<double> A{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      A[i][j] = re[i][j];
      A[i][j + 3] = -im[i][j];
      A[i + 3][j] = im[i][j];
      A[i + 3][j + 3] = re[i][j];
    }
  return A;
}

}  // namespace su3t::testutil
