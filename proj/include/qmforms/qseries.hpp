#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qmforms/rational.hpp"

namespace qmf {

// Truncated q-expansion sum_{k=0}^{N} a_k q^k with exact coefficients.
// Binary operations truncate to the smaller order; nothing is padded.
class QSeries {
 public:
  // Zero series of order N.
  explicit QSeries(std::size_t order = 0) : coeffs_(order + 1) {}
  explicit QSeries(std::vector<Rational> coeffs);
  QSeries(std::initializer_list<Rational> coeffs) : QSeries(std::vector<Rational>(coeffs)) {}

  static QSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  QSeries truncate(std::size_t order) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& s, const QSeries& a);
  QSeries operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, unsigned exponent);
// Throws NonUnitSeries when the constant term vanishes.
QSeries invert(const QSeries& a);
// q d/dq: coefficient k becomes k * a_k.
QSeries theta(const QSeries& a);

// sigma_i(n) = sum of d^i over the divisors d of n.
BigInt sigma(unsigned i, unsigned long n);

// Bernoulli numbers in the |B_{2k}| convention: 1/6, 1/30, 1/42, 1/30, ...
Rational bernoulli(unsigned k);
// Classical B_n with B_1 = -1/2.
Rational bernoulli_classical(unsigned n);

// Normalized Eisenstein series 1 + (-1)^k (4k/B_k) sum sigma_{2k-1}(n) q^n,
// k in {1, 2, 3}. The transcendental factor a_k is left out.
QSeries eisenstein(unsigned k, std::size_t order);

// q * prod_{n >= 1} (1 - q^n)^24 to order N (N >= 1).
QSeries eta24(std::size_t order);

// A series with a simple pole: pole * q^-1 + regular(q).
struct LaurentQSeries {
  Rational pole;
  QSeries regular;
};

// The classical j-invariant E4^3 / (q prod (1-q^n)^24) = q^-1 + 744 + 196884 q + ...
LaurentQSeries j_classical(std::size_t order);

}  // namespace qmf
