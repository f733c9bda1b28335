#include "qmforms/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmforms/error.hpp"

namespace qmf {

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("q-series needs at least one coefficient");
}

QSeries QSeries::one(std::size_t order) {
  QSeries s(order);
  s[0] = 1;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

QSeries QSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw InsufficientOrder("cannot truncate a series to a larger order");
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<mpq_class> acc(n + 1);
  mpq_class tmp;
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    const mpq_class& ai = a[i].raw();
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      mpq_mul(tmp.get_mpq_t(), ai.get_mpq_t(), b[j].raw().get_mpq_t());
      acc[i + j] += tmp;
    }
  }
  QSeries r(n);
  for (std::size_t k = 0; k <= n; ++k) r[k] = Rational(acc[k].get_num(), acc[k].get_den());
  return r;
}

QSeries operator*(const Rational& s, const QSeries& a) {
  QSeries r(a.order());
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = s * a[k];
  return r;
}

QSeries add(const QSeries& a, const QSeries& b) { return a + b; }
QSeries mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries pow(const QSeries& a, unsigned exponent) {
  QSeries result = QSeries::one(a.order()), base = a;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

QSeries invert(const QSeries& a) {
  if (a[0].is_zero()) throw NonUnitSeries();
  const std::size_t n = a.order();
  QSeries r(n);
  const Rational inv0 = Rational(1) / a[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational s;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!a[j].is_zero()) s += a[j] * r[k - j];
    }
    r[k] = -s * inv0;
  }
  return r;
}

QSeries theta(const QSeries& a) {
  QSeries r(a.order());
  for (std::size_t k = 1; k <= r.order(); ++k) r[k] = Rational(static_cast<long>(k)) * a[k];
  return r;
}

BigInt sigma(unsigned i, unsigned long n) {
  if (n == 0) throw std::invalid_argument("sigma is defined for n >= 1");
  BigInt total = 0, power;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), d, i);
    total += power;
    unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(power.get_mpz_t(), e, i);
      total += power;
    }
  }
  return total;
}

Rational bernoulli_classical(unsigned n) {
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational s;
    for (unsigned j = 0; j < m; ++j) s += binomial(m + 1, j) * b[j];
    b[m] = -s / Rational(static_cast<long>(m) + 1);
  }
  return b[n];
}

Rational bernoulli(unsigned k) {
  if (k == 0) throw std::invalid_argument("bernoulli index starts at 1");
  return abs(bernoulli_classical(2 * k));
}

QSeries eisenstein(unsigned k, std::size_t order) {
  if (k < 1 || k > 3) throw std::invalid_argument("eisenstein index must be 1, 2 or 3");
  // (-1)^k 4k / B_k: -24, 240, -504.
  Rational factor = Rational(4L * k) / bernoulli(k);
  if (k % 2 == 1) factor = -factor;
  const BigInt c = factor.numerator();  // always an integer for k <= 3

  // Divisor-sum sieve; sigma_{2k-1}(n) for all n <= order at once.
  const unsigned p = 2 * k - 1;
  std::vector<BigInt> sig(order + 1, 0);
  BigInt power;
  for (std::size_t d = 1; d <= order; ++d) {
    mpz_ui_pow_ui(power.get_mpz_t(), d, p);
    for (std::size_t n = d; n <= order; n += d) sig[n] += power;
  }
  QSeries s(order);
  s[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) s[n] = Rational(BigInt(c * sig[n]));
  return s;
}

QSeries eta24(std::size_t order) {
  if (order < 1) throw std::invalid_argument("eta24 needs order >= 1");
  // prod_{n=1}^{order-1} (1 - q^n) to order-1, then ^24, then shift by q.
  const std::size_t m = order - 1;
  std::vector<BigInt> prod(m + 1, 0);
  prod[0] = 1;
  for (std::size_t n = 1; n <= m; ++n) {
    for (std::size_t k = m; k >= n; --k) {
      prod[k] -= prod[k - n];
      if (k == n) break;
    }
  }
  QSeries base(m);
  for (std::size_t k = 0; k <= m; ++k) base[k] = Rational(prod[k]);
  QSeries p24 = pow(base, 24);
  QSeries r(order);
  for (std::size_t k = 0; k <= m; ++k) r[k + 1] = p24[k];
  return r;
}

LaurentQSeries j_classical(std::size_t order) {
  // E4^3 * (prod (1-q^n)^24)^{-1} = sum c_k q^k; then j = q^{-1} sum c_k q^k.
  const std::size_t n = order + 1;
  QSeries eta = eta24(n + 1);
  QSeries unit(n);
  for (std::size_t k = 0; k <= n; ++k) unit[k] = eta[k + 1];
  QSeries c = pow(eisenstein(2, n), 3) * invert(unit);
  LaurentQSeries j{c[0], QSeries(order)};
  for (std::size_t k = 0; k <= order; ++k) j.regular[k] = c[k + 1];
  return j;
}

}  // namespace qmf
