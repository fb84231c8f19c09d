#ifndef NQUEENS_NUMERIC_HPP_
#define NQUEENS_NUMERIC_HPP_

#include <cmath>
#include <string>

#include "nqueens/rational.hpp"

namespace nqueens {

// Every numeric threshold used by the floating-point paths. Rational paths
// compare exactly and ignore these.
struct Tolerances {
  double feasibility = 1e-6;
  double integrality = 1e-6;
  double reduced_cost = 1e-7;
  double separation = 1e-6;
  double pivot = 1e-9;
  // Floating tableaus are rebuilt from the original rows this often.
  int refactor_interval = 100;
};

enum class Arithmetic { kRational, kFloat };

std::string to_string(Arithmetic a);
Arithmetic parse_arithmetic(const std::string& s);

// Sign tests and conversions shared by the templated LP code.
template <class Num>
struct NumTraits;

template <>
struct NumTraits<double> {
  static constexpr bool kExact = false;
  static double from_rational(const Rational& q) { return q.get_d(); }
  static Rational to_rational(double x) { return Rational(x); }
  static double to_double(double x) { return x; }
  static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
  static bool is_pos(double x, double tol) { return x > tol; }
  static bool is_neg(double x, double tol) { return x < -tol; }
  static double abs(double x) { return std::abs(x); }
  // Distance to the nearest integer.
  static double frac_distance(double x) { return std::abs(x - std::round(x)); }
  static double floor(double x) { return std::floor(x); }
  static double ceil(double x) { return std::ceil(x); }
};

template <>
struct NumTraits<Rational> {
  static constexpr bool kExact = true;
  static const Rational& from_rational(const Rational& q) { return q; }
  static const Rational& to_rational(const Rational& x) { return x; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool is_zero(const Rational& x, double) { return sgn(x) == 0; }
  static bool is_pos(const Rational& x, double) { return sgn(x) > 0; }
  static bool is_neg(const Rational& x, double) { return sgn(x) < 0; }
  static Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
  static Rational frac_distance(const Rational& x);
  static Rational floor(const Rational& x);
  static Rational ceil(const Rational& x);
};

// t -= f * p, the inner update of every tableau pivot.
inline void sub_product(double& t, double f, double p) { t -= f * p; }
inline void sub_product(Rational& t, const Rational& f, const Rational& p) { t -= f * p; }

// Ceiling of a lower bound that is known to be integral at optimum. Floating
// bounds are shifted down by `tol` first so noise does not over-round.
Rational ceil_bound(double bound, double tol);
Rational ceil_bound(const Rational& bound, double tol);

}  // namespace nqueens

#endif  // NQUEENS_NUMERIC_HPP_
