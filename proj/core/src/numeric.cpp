#include "nqueens/numeric.hpp"

#include <stdexcept>

namespace nqueens {

std::string to_string(Arithmetic a) {
  return a == Arithmetic::kRational ? "rational" : "float";
}

Arithmetic parse_arithmetic(const std::string& s) {
  if (s == "rational") return Arithmetic::kRational;
  if (s == "float") return Arithmetic::kFloat;
  throw std::invalid_argument("unknown arithmetic '" + s + "'");
}

Rational NumTraits<Rational>::floor(const Rational& x) {
  if (x.is_integer()) return x;
  if (x.is_small()) {
    const int64_t n = x.get_num().get_si(), d = x.get_den().get_si();
    return Rational(n / d - (n < 0 ? 1 : 0));
  }
  const mpq_class q = x.to_mpq();
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational NumTraits<Rational>::ceil(const Rational& x) {
  if (x.is_integer()) return x;
  if (x.is_small()) {
    const int64_t n = x.get_num().get_si(), d = x.get_den().get_si();
    return Rational(n / d + (n > 0 ? 1 : 0));
  }
  const mpq_class q = x.to_mpq();
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational NumTraits<Rational>::frac_distance(const Rational& x) {
  Rational down = x - floor(x);
  Rational up = ceil(x) - x;
  return down < up ? down : up;
}

Rational ceil_bound(double bound, double tol) {
  return Rational(std::ceil(bound - tol));
}

Rational ceil_bound(const Rational& bound, double) {
  return NumTraits<Rational>::ceil(bound);
}

}  // namespace nqueens
