#include "nqueens/rational.hpp"

#include <cmath>
#include <ostream>

namespace nqueens {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  const u128 m = neg ? -static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class z(static_cast<unsigned long>(m >> 64));
  z <<= 64;
  z += static_cast<unsigned long>(m & ~static_cast<unsigned long>(0));
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(double v) {
  if (!std::isfinite(v)) throw std::domain_error("Rational: non-finite double");
  set_big(mpq_class(v));
}

Rational::Rational(const mpz_class& z) { set_big(mpq_class(z)); }

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  set_big(std::move(c));
}

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den < 0 ? -static_cast<i128>(den) : den);
  if (den < 0) *this = -*this;
}

void Rational::set_big(mpq_class q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    const long n = q.get_num().get_si();
    if (n != std::numeric_limits<long>::min()) {
      num_ = n;
      den_ = q.get_den().get_si();
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (num == 0) return Rational();
  const u128 m = num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num);
  const u128 d = static_cast<u128>(den);
  const u128 g = (m >> 64) == 0 && (d >> 64) == 0
                     ? gcd(static_cast<uint64_t>(m), static_cast<uint64_t>(d))
                     : gcd128(m, d);
  if (g > 1) {
    if ((m >> 64) == 0 && (d >> 64) == 0) {
      const uint64_t g64 = static_cast<uint64_t>(g);
      const uint64_t q = static_cast<uint64_t>(m) / g64;
      num = num < 0 ? -static_cast<i128>(q) : static_cast<i128>(q);
      den = static_cast<i128>(static_cast<uint64_t>(d) / g64);
    } else {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
  }
  if (fits(num) && den <= kMax) return make_small(static_cast<int64_t>(num), static_cast<int64_t>(den));
  Rational r;
  mpq_class q;
  q.get_num() = to_mpz(num);
  q.get_den() = to_mpz(den);
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  q.get_num() = static_cast<long>(num_);
  q.get_den() = static_cast<long>(den_);
  return q;
}

double Rational::get_d() const {
  if (big_) return big_->get_d();
  if (den_ == 1) return static_cast<double>(num_);
  return to_mpq().get_d();
}

mpz_class Rational::get_num() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::get_den() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::get_str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.get_str(); }

Rational Rational::big_add(const Rational& a, const Rational& b) {
  Rational r;
  r.set_big(mpq_class(a.to_mpq() + b.to_mpq()));
  return r;
}

Rational Rational::big_mul(const Rational& a, const Rational& b) {
  Rational r;
  r.set_big(mpq_class(a.to_mpq() * b.to_mpq()));
  return r;
}

Rational Rational::big_div(const Rational& a, const Rational& b) {
  Rational r;
  r.set_big(mpq_class(a.to_mpq() / b.to_mpq()));
  return r;
}

int Rational::big_cmp(const Rational& a, const Rational& b) {
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return (c > 0) - (c < 0);
}

}  // namespace nqueens
