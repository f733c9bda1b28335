#include "qmforms/rational.hpp"

#include <cctype>
#include <ostream>

#include "qmforms/error.hpp"

namespace qmf {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view s, BigInt& out) {
  std::size_t i = 0;
  std::string digits;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') digits.push_back('-');
    ++i;
  }
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    digits.push_back(s[i]);
  }
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = parse_integer(trim(text.substr(0, slash)), num);
  if (ok && slash != std::string_view::npos) {
    ok = parse_integer(trim(text.substr(slash + 1)), den) && den != 0;
  }
  if (!ok) throw ParseError("not a rational literal: '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.numerator().get_str();
  if (!r.is_integer()) os << '/' << r.denominator().get_str();
  return os;
}

}  // namespace qmf
