#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace su3t {

/// Exact scalar used by the algebraic layer.  The numeric layer uses double.
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat rat_from_string(const std::string& s) {
  // accepts "p", "p/q" and a leading unicode minus sign
  std::string t = s;
  if (t.rfind("−", 0) == 0) t = "-" + t.substr(3);
  try {
    Rat r(t);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error("bad rational literal: '" + s + "'");
  }
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

/// Exact square root test; on success root >= 0 and root*root == x.
inline bool rat_sqrt_exact(const Rat& x, Rat& root) {
  if (x < 0) return false;
  mpz_class num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  return true;
}

// Scalar layer glue: the same templates serve exact rationals and doubles.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static constexpr bool exact = true;
  static bool is_zero(const Rat& x, double /*tol*/ = 0.0) { return x == 0; }
  static double to_double(const Rat& x) { return x.get_d(); }
  static Rat from_int(long n) { return Rat(n); }
  static Rat from_ratio(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
  }
  static double abs_double(const Rat& x) { return std::fabs(x.get_d()); }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x, double tol = 0.0) { return std::fabs(x) <= tol; }
  static double to_double(double x) { return x; }
  static double from_int(long n) { return static_cast<double>(n); }
  static double from_ratio(long n, long d) { return static_cast<double>(n) / static_cast<double>(d); }
  static double abs_double(double x) { return std::fabs(x); }
};

}  // namespace su3t
