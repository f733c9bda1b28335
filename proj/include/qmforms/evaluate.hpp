#pragma once

#include <array>
#include <cstddef>

#include "qmforms/modular.hpp"
#include "qmforms/qmform.hpp"

namespace qmf {

inline constexpr double kPi = 3.14159265358979323846;
inline const Complex kTwoPiI{0.0, 2.0 * kPi};
// u = 2 pi i / 12; a weight-m form picks up u^{m/2} when evaluated.
inline const Complex kU = kTwoPiI / 12.0;

// 400 unless the QMFORMS_SERIES_ORDER environment variable overrides it.
std::size_t default_series_order();

// Normalized E1, E2, E3 (constant term 1) at q = exp(2 pi i z).
// Throws NotConvergent when |q|^order >= tol.
std::array<Complex, 3> eisenstein_values(Complex z, std::size_t order, double tol = 1e-16);

// (g1, g2, g3)(z) = (u E1, 12 u^2 E2, 8 u^3 E3).
std::array<Complex, 3> generator_values(Complex z, std::size_t order, double tol = 1e-16);

// u^{m/2} * expand(f)(q) at q = exp(2 pi i z).
Complex value_at(const QMForm& f, Complex z, std::size_t order, double tol = 1e-16);

// |f|_m A (z) - sum_i binom(n, i) c^i j(A, z)^{-i} f_i(z)|.
double slash_transform_check(const QMForm& f, int n, const IntMatrix& a, Complex z, std::size_t order);

}  // namespace qmf
