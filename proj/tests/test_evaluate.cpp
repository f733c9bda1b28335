#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "qmforms/error.hpp"
#include "qmforms/evaluate.hpp"

using namespace qmf;

namespace {

const QMForm G1 = QMForm::g1();
const QMForm G2 = QMForm::g2();
const QMForm G3 = QMForm::g3();

// q prod (1 - q^n)^24 evaluated directly.
Complex eta24_value(Complex z) {
  const Complex q = std::exp(kTwoPiI * z);
  Complex prod = 1.0, qn = 1.0;
  for (int n = 1; n < 500; ++n) {
    qn *= q;
    prod *= 1.0 - qn;
  }
  return q * std::pow(prod, 24);
}

// sum over (m, n) != 0 of (m z + n)^-4 in growing squares.
Complex lattice_g4(Complex z, int radius) {
  Complex s = 0;
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n) {
      if (m == 0 && n == 0) continue;
      const Complex w = double(m) * z + double(n);
      const Complex w2 = w * w;
      s += 1.0 / (w2 * w2);
    }
  return s;
}

// Expansion with exact coefficients, summed in long double.
Complex series_value(const QMForm& f, Complex z, std::size_t order) {
  const QSeries s = expand(f, order);
  const std::complex<long double> q = std::exp(std::complex<long double>(kTwoPiI * z));
  std::complex<long double> acc = 0;
  for (std::size_t k = order + 1; k-- > 0;) acc = acc * q + static_cast<long double>(s[k].to_double());
  return Complex(acc) * std::pow(kU, f.weight() / 2);
}

}  // namespace

TEST_CASE("fundamental domain reduction") {
  auto r = sl2z_reduce(Complex(5, 1));
  CHECK(r.transform == IntMatrix{1, -5, 0, 1});
  CHECK(std::abs(r.z - Complex(0, 1)) < 1e-14);
  r = sl2z_reduce(Complex(0, 0.1));
  CHECK(r.transform == IntMatrix{0, -1, 1, 0});
  CHECK(std::abs(r.z - Complex(0, 10)) < 1e-12);
  for (Complex z : {Complex(0.37, 0.02), Complex(-3.4, 0.5), Complex(0.5, 0.5), Complex(12.1, 3.0)}) {
    const auto red = sl2z_reduce(z);
    CHECK(red.transform.det() == 1);
    CHECK(std::abs(red.transform.mobius(z) - red.z) < 1e-9);
    CHECK(std::abs(red.z.real()) <= 0.5 + 1e-12);
    CHECK(std::abs(red.z) >= 1 - 1e-12);
    const auto again = sl2z_reduce(red.z);
    CHECK(again.transform == IntMatrix{});
  }
  // Boundary points go to the side with non-negative real part.
  CHECK(sl2z_reduce(Complex(-0.5, 2)).z.real() == doctest::Approx(0.5));
}

TEST_CASE("constant and Eisenstein values") {
  CHECK(value_at(QMForm::constant(1), Complex(0.3, 0.8), 50) == Complex(1, 0));
  const Complex z(0, 1);
  const Complex v = value_at(G2, z, 300);
  CHECK(std::abs(v / series_value(G2, z, 40) - 1.0) < 1e-12);
  // G2 = 12 u^2 E2 and E2 = 45 G4 / pi^4.
  const Complex from_lattice = 12.0 * kU * kU * 45.0 * lattice_g4(z, 600) / std::pow(kPi, 4);
  CHECK(std::abs(v / from_lattice - 1.0) < 1e-5);
}

TEST_CASE("discriminant constant") {
  for (Complex z : {Complex(0, 1.1), Complex(0.3, 0.9)}) {
    const Complex lhs = 27.0 * std::pow(value_at(G3, z, 400), 2) - std::pow(value_at(G2, z, 400), 3);
    const Complex rhs = -std::pow(kTwoPiI, 6) * eta24_value(z);
    CHECK(std::abs(lhs / rhs - 1.0) < 1e-9);
  }
}

TEST_CASE("convergence guard") {
  CHECK_THROWS_AS(value_at(G1, Complex(0, 0.01), 400), NotConvergent);
  CHECK_NOTHROW(value_at(G1, Complex(0, 0.1), 400));
  CHECK_THROWS_AS(value_at(G1, Complex(0, -1), 400), NotConvergent);
}

TEST_CASE("slash transformation") {
  CHECK(slash_transform_check(G2, 0, {0, -1, 1, 0}, Complex(0, 2), 400) < 1e-9);
  CHECK(slash_transform_check(G1, 1, {1, 1, 0, 1}, Complex(0, 1), 400) < 1e-13);
  CHECK(slash_transform_check(G1 * G1, 2, {2, 1, 1, 1}, Complex(0.3, 1.2), 400) < 1e-8);
  CHECK(slash_transform_check(G1, 1, {0, -1, 1, 0}, Complex(0.1, 1.5), 400) < 1e-9);
  const QMForm mixed = G1 * G1 * G2 - Rational(3, 7) * G1 * G3 + G2 * G2;
  CHECK(slash_transform_check(mixed, 2, {3, 1, 5, 2}, Complex(0.1, 0.8), 400) < 1e-7);
  // Without the quasi-modular correction the check fails.
  const Complex z(0.1, 1.5);
  const Complex naive = std::pow(z, -2) * value_at(G1, -1.0 / z, 400) - value_at(G1, z, 400);
  CHECK(std::abs(naive) > 1e-2);
}

TEST_CASE("derivative of values follows the Ramanujan field") {
  const Complex z(0, 1.2);
  const double h = 1e-4;
  for (const QMForm& g : {G1, G2, G3}) {
    const Complex fd = (value_at(g, z + h, 400) - value_at(g, z - h, 400)) / (2 * h);
    CHECK(std::abs(fd - value_at(derive(g), z, 400)) < 1e-6);
  }
}

TEST_CASE("Im z |Delta|^(1/6) is modular invariant") {
  auto weight = [](Complex z) {
    const Complex d = 27.0 * std::pow(value_at(G3, z, 400), 2) - std::pow(value_at(G2, z, 400), 3);
    return z.imag() * std::pow(std::abs(d), 1.0 / 6.0);
  };
  const Complex z(0.2, 1.1);
  for (const IntMatrix& a : {IntMatrix{0, -1, 1, 0}, IntMatrix{1, 1, 0, 1}, IntMatrix{2, 1, 1, 1}, IntMatrix{1, 0, 2, 1}}) {
    CHECK(std::abs(weight(a.mobius(z)) - weight(z)) < 1e-9);
  }
}

TEST_CASE("default order honours the environment") {
  unsetenv("QMFORMS_SERIES_ORDER");
  CHECK(default_series_order() == 400);
  setenv("QMFORMS_SERIES_ORDER", "123", 1);
  CHECK(default_series_order() == 123);
  setenv("QMFORMS_SERIES_ORDER", "junk", 1);
  CHECK(default_series_order() == 400);
  unsetenv("QMFORMS_SERIES_ORDER");
}
