#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmf {

static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT: implicit on purpose, literals read naturally
  Rational(long v) : v_(v) {}  // NOLINT
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(const BigInt& v) : v_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "num/den" with den >= 1 always printed, e.g. "12/1", "-1/12".
  std::string str() const;
  // Accepts "n", "n/d", optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, int exponent);
Rational binomial(long n, long k);
Rational factorial(long n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qmf
