#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "qmforms/evaluate.hpp"
#include "qmforms/gauss_manin.hpp"
#include "qmforms/modular.hpp"

namespace qmf {

// Parameters of y^2 = 4 t0 (x - t1)^3 - t2 (x - t1) - t3 with nonzero discriminant.
struct ParamPoint {
  Complex t0, t1, t2, t3;

  TPoint<Complex> array() const { return {t0, t1, t2, t3}; }
  static ParamPoint from(const TPoint<Complex>& t) { return {t[0], t[1], t[2], t[3]}; }
};

// The matrix [[x1, x2], [x3, x4]]. Points of the period domain have Im(x1 conj(x3)) > 0.
struct PeriodPoint {
  Complex x1, x2, x3, x4;

  Complex det() const { return x1 * x4 - x2 * x3; }
  bool in_domain() const { return (x1 * std::conj(x3)).imag() > 0; }
};

using ComplexGroupElement = GroupElement<Complex>;

// x -> x g with g = [[k1, k3], [0, k2]].
PeriodPoint right_act(const PeriodPoint& x, const ComplexGroupElement& g);
// x -> A x for an integer matrix A.
PeriodPoint left_act(const IntMatrix& a, const PeriodPoint& x);
// z -> [[z, -1], [1, 0]]
PeriodPoint embed(Complex z);

ParamPoint act(const ParamPoint& t, const ComplexGroupElement& g);
Complex discriminant_value(const ParamPoint& t);
// Throws DegenerateCurve when the discriminant vanishes (relative to the size of t).
void require_regular(const ParamPoint& t);

// Max-norm distance of two parameter points divided by max(1, |b|).
double relative_distance(const ParamPoint& a, const ParamPoint& b);

struct LatticeBasis {
  Complex w1, w2;
};

// Roots of 4 w^3 - g2 w - g3.
std::array<Complex, 3> cubic_roots(Complex g2, Complex g3);

// Basis of the period lattice of y^2 = 4 w^3 - g2 w - g3 for dw/y with
// Im(w1/w2) > 0 and w1/w2 in the standard fundamental domain. Computed by
// the complex AGM and certified by reconstructing g2, g3 from the basis.
LatticeBasis weierstrass_periods(Complex g2, Complex g3);

// (g2, g3) of the lattice Z w1 + Z w2 from Eisenstein series.
std::pair<Complex, Complex> lattice_invariants(const LatticeBasis& basis, std::size_t order = default_series_order());

// Quasi-periods (eta1, eta2) with zeta(u + w_i) = zeta(u) + eta_i, normalized
// so that eta1 w2 - eta2 w1 = -2 pi i when Im(w1/w2) > 0.
std::pair<Complex, Complex> quasi_periods(Complex w1, Complex w2, std::size_t order = default_series_order());

struct PeriodResult {
  PeriodPoint x;
  int branch_used;     // cube-root branch of t0 (0 = principal), -1 for quadrature
  std::string method;  // "agm" or "quadrature"
  double residual;     // relative round-trip residual through inverse_map
  std::size_t series_order;
};

// Periods of (dx/y, x dx/y) over a cycle basis, divided by sqrt(2 pi i)
// with the square root fixed as sqrt(2 pi) exp(-i pi/4). BranchAmbiguity if
// no attempt reproduces t through inverse_map within tol.
PeriodResult period_matrix_report(const ParamPoint& t, double tol = 1e-8, std::size_t order = default_series_order());
PeriodPoint period_matrix(const ParamPoint& t);

// Period matrix from direct quadrature of both differentials around the
// segments between the roots of the cubic in x - t1.
PeriodPoint period_matrix_quadrature(const ParamPoint& t);

// F0 = 1/det, F1 = det x3^-2 g1(z) + x4/x3, F2 = det x3^-4 g2(z),
// F3 = det^2 x3^-6 g3(z), z = x1/x3, after moving z to the fundamental domain.
ParamPoint inverse_map(const PeriodPoint& x, std::size_t order = default_series_order());

struct BValues {
  double b1;
  double b2;
  Complex b3;
};

// B1 = Im(x1 conj(x3)), B2 = Im(x2 conj(x4)), B3 = x1 conj(x4) - x3 conj(x2).
BValues b_functions(const PeriodPoint& x);
BValues b_functions(const ParamPoint& t);

// Residuals of the transformation laws of B1, B2, B3 under x -> x g.
std::array<double, 3> b_transformation_residuals(const PeriodPoint& x, const ComplexGroupElement& g);

// Residuals at t = (1, g1(z), g2(z), g3(z)) of
//   B1 = Im z, B2 = 0, B3 = 1,
// and of the three laws for t -> t.[[k, k'], [0, 1/k]].
struct BFunctionResiduals {
  ParamPoint t;
  double b1_value, b2_value, b3_value;
  double b1_law, b2_law, b3_law;
  double max() const;
};
BFunctionResiduals b_function_check(Complex z, Complex k, Complex kprime, std::size_t order = default_series_order());

// The three laws for t -> t.[[k, k'], [0, 1/k]] at an arbitrary point with t0 = 1.
std::array<double, 3> b_function_laws(const ParamPoint& t, Complex k, Complex kprime);

// ratio of the x dx/y and dx/y periods over the first cycle
Complex i_ratio(const ParamPoint& t);

}  // namespace qmf
