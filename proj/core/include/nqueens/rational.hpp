#ifndef NQUEENS_RATIONAL_HPP_
#define NQUEENS_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace nqueens {

// Exact rational number. Values whose numerator and denominator fit in 63
// bits are kept inline and handled with 128-bit intermediates; anything
// larger moves to an immutable, shared GMP rational. Always canonical:
// den > 0 and gcd(num, den) = 1.
class Rational {
 public:
  Rational() = default;
  template <class I>
    requires std::is_integral_v<I>
  Rational(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      if (static_cast<int64_t>(v) != std::numeric_limits<int64_t>::min()) {
        num_ = static_cast<int64_t>(v);
        return;
      }
      set_big(mpq_class(static_cast<long>(v)));
    } else {
      if (static_cast<uint64_t>(v) <= static_cast<uint64_t>(kMax)) {
        num_ = static_cast<int64_t>(v);
        return;
      }
      set_big(mpq_class(static_cast<unsigned long>(v)));
    }
  }
  // Exact value of the double; throws on NaN or infinity.
  explicit Rational(double v);
  Rational(const mpz_class& z);  // NOLINT(google-explicit-constructor)
  Rational(const mpq_class& q);  // NOLINT(google-explicit-constructor)
  // num / den; throws std::domain_error when den == 0.
  Rational(int64_t num, int64_t den);

  bool is_small() const { return !big_; }
  bool is_integer() const;
  int sign() const;
  double get_d() const;
  mpz_class get_num() const;
  mpz_class get_den() const;
  mpq_class to_mpq() const;
  std::string get_str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend int sgn(const Rational& x) { return x.sign(); }
  friend Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  using i128 = __int128;
  static constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

  static bool fits(i128 v) { return v <= kMax && v >= -kMax; }
  static uint64_t gcd(uint64_t a, uint64_t b);
  static uint64_t mag(int64_t v) { return v < 0 ? -static_cast<uint64_t>(v) : v; }
  // From an unreduced 128-bit fraction with den > 0.
  static Rational from_wide(i128 num, i128 den);
  static Rational make_small(int64_t num, int64_t den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }
  void set_big(mpq_class q);
  static Rational big_add(const Rational& a, const Rational& b);
  static Rational big_mul(const Rational& a, const Rational& b);
  static Rational big_div(const Rational& a, const Rational& b);
  static int big_cmp(const Rational& a, const Rational& b);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline uint64_t Rational::gcd(uint64_t a, uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

inline int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

inline bool Rational::is_integer() const {
  if (big_) return mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0;
  return den_ == 1;
}

inline Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  return make_small(-num_, den_);
}

inline Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<int64_t>::min()) {
        return Rational::make_small(r, 1);
      }
      return Rational::from_wide(static_cast<Rational::i128>(a.num_) + b.num_, 1);
    }
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    const uint64_t g = Rational::gcd(a.den_, b.den_);
    if (g == 1) {
      // Already reduced: gcd(a d + c b, b d) = 1 when gcd(b, d) = 1.
      const Rational::i128 num = static_cast<Rational::i128>(a.num_) * b.den_ +
                                 static_cast<Rational::i128>(b.num_) * a.den_;
      const Rational::i128 den = static_cast<Rational::i128>(a.den_) * b.den_;
      if (Rational::fits(num) && den <= Rational::kMax) {
        return Rational::make_small(static_cast<int64_t>(num), static_cast<int64_t>(den));
      }
      return Rational::from_wide(num, den);
    }
    const int64_t bd = a.den_ / static_cast<int64_t>(g);
    const int64_t dd = b.den_ / static_cast<int64_t>(g);
    const Rational::i128 t = static_cast<Rational::i128>(a.num_) * dd +
                             static_cast<Rational::i128>(b.num_) * bd;
    return Rational::from_wide(t, static_cast<Rational::i128>(a.den_) * dd);
  }
  return Rational::big_add(a, b);
}

inline Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

inline Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      int64_t r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<int64_t>::min()) {
        return Rational::make_small(r, 1);
      }
      return Rational::from_wide(static_cast<Rational::i128>(a.num_) * b.num_, 1);
    }
    const int64_t g1 = static_cast<int64_t>(Rational::gcd(Rational::mag(a.num_), b.den_));
    const int64_t g2 = static_cast<int64_t>(Rational::gcd(Rational::mag(b.num_), a.den_));
    const Rational::i128 num = static_cast<Rational::i128>(a.num_ / g1) * (b.num_ / g2);
    const Rational::i128 den = static_cast<Rational::i128>(a.den_ / g2) * (b.den_ / g1);
    if (Rational::fits(num) && den <= Rational::kMax) {
      return Rational::make_small(static_cast<int64_t>(num), static_cast<int64_t>(den));
    }
    return Rational::from_wide(num, den);
  }
  return Rational::big_mul(a, b);
}

inline Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
  if (!b.big_) {
    const Rational inv = b.num_ < 0 ? Rational::make_small(-b.den_, -b.num_)
                                    : Rational::make_small(b.den_, b.num_);
    return a * inv;
  }
  return Rational::big_div(a, b);
}

inline bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return Rational::big_cmp(a, b) == 0;
}

inline std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const Rational::i128 l = static_cast<Rational::i128>(a.num_) * b.den_;
    const Rational::i128 r = static_cast<Rational::i128>(b.num_) * a.den_;
    return l <=> r;
  }
  return Rational::big_cmp(a, b) <=> 0;
}

}  // namespace nqueens

#endif  // NQUEENS_RATIONAL_HPP_
