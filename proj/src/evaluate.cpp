#include "qmforms/evaluate.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "qmforms/error.hpp"

namespace qmf {

std::size_t default_series_order() {
  if (const char* env = std::getenv("QMFORMS_SERIES_ORDER")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 400;
}

std::array<Complex, 3> eisenstein_values(Complex z, std::size_t order, double tol) {
  if (!(z.imag() > 0)) throw NotConvergent("evaluation point must lie in the upper half plane");
  const double log_q = -2.0 * kPi * z.imag();
  if (log_q * double(order) >= std::log(tol)) {
    throw NotConvergent("|q|^N = " + std::to_string(std::exp(log_q * double(order))) + " not below tolerance at order " +
                        std::to_string(order) + "; Im z = " + std::to_string(z.imag()));
  }
  std::vector<double> s1(order + 1, 0.0), s3(order + 1, 0.0), s5(order + 1, 0.0);
  for (std::size_t d = 1; d <= order; ++d) {
    const double dd = double(d), d3 = dd * dd * dd, d5 = d3 * dd * dd;
    for (std::size_t n = d; n <= order; n += d) {
      s1[n] += dd;
      s3[n] += d3;
      s5[n] += d5;
    }
  }
  const Complex q = std::exp(kTwoPiI * z);
  Complex qn = 1.0, a1 = 0.0, a3 = 0.0, a5 = 0.0;
  for (std::size_t n = 1; n <= order; ++n) {
    qn *= q;
    if (std::abs(qn) == 0.0) break;
    a1 += s1[n] * qn;
    a3 += s3[n] * qn;
    a5 += s5[n] * qn;
  }
  return {1.0 - 24.0 * a1, 1.0 + 240.0 * a3, 1.0 - 504.0 * a5};
}

std::array<Complex, 3> generator_values(Complex z, std::size_t order, double tol) {
  auto e = eisenstein_values(z, order, tol);
  return {kU * e[0], 12.0 * kU * kU * e[1], 8.0 * kU * kU * kU * e[2]};
}

Complex value_at(const QMForm& f, Complex z, std::size_t order, double tol) {
  if (f.is_zero()) return 0.0;
  const auto g = generator_values(z, order, tol);
  return f.poly().evaluate<Complex>(g, [](const Rational& r) { return Complex(r.to_double()); });
}

double slash_transform_check(const QMForm& f, int n, const IntMatrix& a, Complex z, std::size_t order) {
  if (a.det() != 1) throw InvariantViolation("slash check needs a matrix of determinant 1");
  const int m = f.weight();
  const Complex j = a.automorphy(z);
  const Complex lhs = std::pow(j, -m) * value_at(f, a.mobius(z), order);
  Complex rhs = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double binom = binomial(n, i).to_double();
    rhs += binom * std::pow(double(a.c) / j, i) * value_at(associated(f, n, i), z, order);
  }
  return std::abs(lhs - rhs);
}

}  // namespace qmf
