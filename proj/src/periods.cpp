#include "qmforms/periods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "qmforms/error.hpp"
#include "qmforms/quadrature.hpp"

namespace qmf {

namespace {

const Complex kI{0.0, 1.0};

// sqrt(2 pi i), chosen so that its square is -2 pi i.
const Complex kSqrt2PiI = std::sqrt(2.0 * kPi) * std::exp(Complex(0.0, -kPi / 4.0));

Complex agm(Complex a, Complex b) {
  for (int it = 0; it < 200; ++it) {
    if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
    const Complex a1 = 0.5 * (a + b);
    Complex b1 = std::sqrt(a * b);
    if (std::abs(a1 - b1) > std::abs(a1 + b1)) b1 = -b1;
    a = a1;
    b = b1;
  }
  return a;
}


// Orders w1, w2 so that Im(w1/w2) > 0 and moves w1/w2 to the fundamental domain.
LatticeBasis normalize_basis(Complex w1, Complex w2) {
  if ((w1 / w2).imag() < 0) w1 = -w1;
  const ReducedPoint r = sl2z_reduce(w1 / w2);
  const IntMatrix& a = r.transform;
  return {double(a.a) * w1 + double(a.b) * w2, double(a.c) * w1 + double(a.d) * w2};
}

double invariant_mismatch(const LatticeBasis& b, Complex g2, Complex g3) {
  const auto [h2, h3] = lattice_invariants(b, 60);
  const double scale2 = std::max(std::abs(g2), 1e-3 * std::pow(std::abs(g3), 2.0 / 3.0));
  const double scale3 = std::max(std::abs(g3), 1e-3 * std::pow(std::abs(g2), 1.5));
  return std::max(std::abs(h2 - g2) / scale2, std::abs(h3 - g3) / scale3);
}

// The three cube roots of t0, principal first.
Complex cube_root(Complex t0, int branch) {
  return std::pow(t0, 1.0 / 3.0) * std::exp(Complex(0.0, 2.0 * kPi * branch / 3.0));
}

PeriodPoint assemble(Complex p1, Complex q1, Complex p2, Complex q2) {
  PeriodPoint x{p1 / kSqrt2PiI, q1 / kSqrt2PiI, p2 / kSqrt2PiI, q2 / kSqrt2PiI};
  if (!x.in_domain()) x = {x.x3, x.x4, x.x1, x.x2};
  return x;
}

PeriodPoint period_matrix_agm(const ParamPoint& t, int branch, std::size_t order) {
  const Complex c = cube_root(t.t0, branch);
  const LatticeBasis b = weierstrass_periods(t.t2 / c, t.t3);
  const auto [e1, e2] = quasi_periods(b.w1, b.w2, order);
  const Complex p1 = b.w1 / c, p2 = b.w2 / c;
  return assemble(p1, -e1 / (c * c) + t.t1 * p1, p2, -e2 / (c * c) + t.t1 * p2);
}

// Closed-cycle integrals of dX/y and X dX/y around the segment [ra, rb] on
// y^2 = 4 t0 (X - ra)(X - rb)(X - rc). With X = mid + h sin(theta) the
// integrand becomes f(X) / (2 sqrt(t0 (rc - X))), smooth in theta.
std::pair<Complex, Complex> segment_cycle(Complex t0, Complex ra, Complex rb, Complex rc) {
  const Complex mid = 0.5 * (ra + rb), h = 0.5 * (rb - ra);
  std::pair<Complex, Complex> prev{};
  for (std::size_t n = 32; n <= 4096; n *= 2) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    Complex i0 = 0, i1 = 0, root_prev = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double theta = 0.5 * kPi * rule.nodes[k];
      const Complex x = mid + h * std::sin(theta);
      Complex root = std::sqrt(t0 * (rc - x));
      if (k > 0 && std::abs(root - root_prev) > std::abs(root + root_prev)) root = -root;
      root_prev = root;
      const Complex f = rule.weights[k] / (2.0 * root);
      i0 += f;
      i1 += f * x;
    }
    // d(theta) = (pi/2) d(node); the closed cycle doubles the segment integral.
    i0 *= kPi;
    i1 *= kPi;
    if (n > 32 && std::abs(i0 - prev.first) <= 1e-14 * std::abs(i0) && std::abs(i1 - prev.second) <= 1e-14 * std::abs(i1) + 1e-14 * std::abs(i0)) {
      return {i0, i1};
    }
    prev = {i0, i1};
  }
  return prev;
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  double s = ((p - a) * std::conj(d)).real() / std::norm(d);
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(p - (a + s * d));
}

std::string describe(const ParamPoint& t) {
  std::ostringstream os;
  os << "t = (" << t.t0 << ", " << t.t1 << ", " << t.t2 << ", " << t.t3 << ")";
  return os.str();
}

}  // namespace

PeriodPoint right_act(const PeriodPoint& x, const ComplexGroupElement& g) {
  return {x.x1 * g.k1, x.x1 * g.k3 + x.x2 * g.k2, x.x3 * g.k1, x.x3 * g.k3 + x.x4 * g.k2};
}

PeriodPoint left_act(const IntMatrix& a, const PeriodPoint& x) {
  const double A = double(a.a), B = double(a.b), C = double(a.c), D = double(a.d);
  return {A * x.x1 + B * x.x3, A * x.x2 + B * x.x4, C * x.x1 + D * x.x3, C * x.x2 + D * x.x4};
}

PeriodPoint embed(Complex z) { return {z, -1.0, 1.0, 0.0}; }

ParamPoint act(const ParamPoint& t, const ComplexGroupElement& g) { return ParamPoint::from(act(t.array(), g)); }

Complex discriminant_value(const ParamPoint& t) { return discriminant_value(t.array()); }

void require_regular(const ParamPoint& t) {
  const double scale = 27.0 * std::abs(t.t0) * std::norm(t.t3) + std::pow(std::abs(t.t2), 3);
  const Complex inner = 27.0 * t.t0 * t.t3 * t.t3 - t.t2 * t.t2 * t.t2;
  if (t.t0 == 0.0 || std::abs(inner) <= 1e-12 * scale) throw DegenerateCurve("singular curve at " + describe(t));
}

double relative_distance(const ParamPoint& a, const ParamPoint& b) {
  const auto x = a.array(), y = b.array();
  double diff = 0, size = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    diff = std::max(diff, std::abs(x[i] - y[i]));
    size = std::max(size, std::abs(y[i]));
  }
  return diff / size;
}

std::array<Complex, 3> cubic_roots(Complex g2, Complex g3) {
  // w^3 + p w + q with p = -g2/4, q = -g3/4.
  const Complex p = -g2 / 4.0, q = -g3 / 4.0;
  std::array<Complex, 3> r;
  if (std::abs(p) == 0 && std::abs(q) == 0) {
    r = {0, 0, 0};
  } else {
    const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex u3 = -q / 2.0 + disc;
    if (std::abs(-q / 2.0 - disc) > std::abs(u3)) u3 = -q / 2.0 - disc;
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex omega = std::exp(Complex(0.0, 2.0 * kPi / 3.0));
    Complex uk = u;
    for (int k = 0; k < 3; ++k, uk *= omega) r[static_cast<std::size_t>(k)] = uk - p / (3.0 * uk);
  }
  // Newton polish against 4 w^3 - g2 w - g3.
  for (auto& w : r) {
    for (int it = 0; it < 4; ++it) {
      const Complex f = 4.0 * w * w * w - g2 * w - g3, df = 12.0 * w * w - g2;
      if (std::abs(df) == 0) break;
      w -= f / df;
    }
  }
  return r;
}

LatticeBasis weierstrass_periods(Complex g2, Complex g3) {
  const Complex disc = g2 * g2 * g2 - 27.0 * g3 * g3;
  if (std::abs(disc) <= 1e-12 * (std::pow(std::abs(g2), 3) + 27.0 * std::norm(g3))) {
    throw DegenerateCurve("g2^3 - 27 g3^2 vanishes");
  }
  const auto roots = cubic_roots(g2, g3);
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  LatticeBasis best{};
  double best_err = std::numeric_limits<double>::infinity();
  for (const auto& pm : perms) {
    const Complex e1 = roots[pm[0]], e2 = roots[pm[1]], e3 = roots[pm[2]];
    const Complex a = std::sqrt(e1 - e3);
    Complex b = std::sqrt(e1 - e2), c = std::sqrt(e2 - e3);
    if (std::abs(a - b) > std::abs(a + b)) b = -b;
    if (std::abs(a - c) > std::abs(a + c)) c = -c;
    const Complex w1 = kPi / agm(a, b), w2 = kPi * kI / agm(a, c);
    if (!std::isfinite(std::abs(w1)) || !std::isfinite(std::abs(w2))) continue;
    if (std::abs((w1 / w2).imag()) < 1e-12 * std::abs(w1 / w2)) continue;
    const LatticeBasis cand = normalize_basis(w1, w2);
    double err;
    try {
      err = invariant_mismatch(cand, g2, g3);
    } catch (const NotConvergent&) {
      continue;
    }
    if (err < best_err) {
      best_err = err;
      best = cand;
    }
    if (err < 1e-12) break;
  }
  if (!(best_err < 1e-8)) throw BranchAmbiguity("AGM did not produce a lattice with the requested invariants");
  return best;
}

std::pair<Complex, Complex> lattice_invariants(const LatticeBasis& basis, std::size_t order) {
  const LatticeBasis b = normalize_basis(basis.w1, basis.w2);
  const auto e = eisenstein_values(b.w1 / b.w2, order);
  const Complex s = 2.0 * kPi / b.w2;
  const Complex s2 = s * s;
  return {s2 * s2 * e[1] / 12.0, s2 * s2 * s2 * e[2] / 216.0};
}

std::pair<Complex, Complex> quasi_periods(Complex w1, Complex w2, std::size_t order) {
  if (!((w1 / w2).imag() > 0)) throw InvariantViolation("quasi_periods needs Im(w1/w2) > 0");
  const ReducedPoint r = sl2z_reduce(w1 / w2);
  const IntMatrix& a = r.transform;
  const Complex v1 = double(a.a) * w1 + double(a.b) * w2, v2 = double(a.c) * w1 + double(a.d) * w2;
  const Complex e1hat = eisenstein_values(r.z, order)[0];
  const Complex n2 = kPi * kPi / 3.0 * e1hat / v2;
  const Complex n1 = (n2 * v1 - 2.0 * kPi * kI) / v2;
  // eta is linear in the period; undo the basis change (determinant 1).
  return {double(a.d) * n1 - double(a.b) * n2, -double(a.c) * n1 + double(a.a) * n2};
}

PeriodPoint period_matrix_quadrature(const ParamPoint& t) {
  require_regular(t);
  // Roots of 4 t0 X^3 - t2 X - t3 in X = x - t1.
  auto roots = cubic_roots(t.t2 / t.t0, t.t3 / t.t0);
  // Share the root that keeps the third root farthest from both segments.
  int best_shared = 0;
  double best_dist = -1;
  for (int s = 0; s < 3; ++s) {
    const Complex m = roots[s], a = roots[(s + 1) % 3], b = roots[(s + 2) % 3];
    const double d = std::min(segment_distance(b, a, m), segment_distance(a, m, b));
    if (d > best_dist) {
      best_dist = d;
      best_shared = s;
    }
  }
  const Complex m = roots[best_shared], a = roots[(best_shared + 1) % 3], b = roots[(best_shared + 2) % 3];
  const auto [p1, q1x] = segment_cycle(t.t0, a, m, b);
  const auto [p2, q2x] = segment_cycle(t.t0, m, b, a);
  return assemble(p1, q1x + t.t1 * p1, p2, q2x + t.t1 * p2);
}

PeriodResult period_matrix_report(const ParamPoint& t, double tol, std::size_t order) {
  require_regular(t);
  double best = std::numeric_limits<double>::infinity();
  for (int branch = 0; branch < 3; ++branch) {
    try {
      const PeriodPoint x = period_matrix_agm(t, branch, order);
      const double res = relative_distance(inverse_map(x, order), t);
      if (res < tol) return {x, branch, "agm", res, order};
      best = std::min(best, res);
    } catch (const DegenerateCurve&) {
      throw;
    } catch (const Error&) {
    }
  }
  try {
    const PeriodPoint x = period_matrix_quadrature(t);
    const double res = relative_distance(inverse_map(x, order), t);
    if (res < tol) return {x, -1, "quadrature", res, order};
    best = std::min(best, res);
  } catch (const DegenerateCurve&) {
    throw;
  } catch (const Error&) {
  }
  std::ostringstream os;
  os << "no cube-root branch or quadrature reproduces " << describe(t) << " (best residual " << best << ")";
  throw BranchAmbiguity(os.str());
}

PeriodPoint period_matrix(const ParamPoint& t) { return period_matrix_report(t).x; }

ParamPoint inverse_map(const PeriodPoint& x, std::size_t order) {
  if (x.x3 == 0.0) throw InvariantViolation("inverse_map needs x3 != 0");
  const Complex z = x.x1 / x.x3;
  if (!(z.imag() > 0)) throw InvariantViolation("inverse_map needs Im(x1/x3) > 0");
  const ReducedPoint r = sl2z_reduce(z);
  const PeriodPoint y = left_act(r.transform, x);
  const Complex det = y.det();
  const auto g = generator_values(r.z, order);
  const Complex x3i = 1.0 / y.x3, x3i2 = x3i * x3i;
  return {1.0 / det, det * x3i2 * g[0] + y.x4 * x3i, det * x3i2 * x3i2 * g[1], det * det * x3i2 * x3i2 * x3i2 * g[2]};
}

BValues b_functions(const PeriodPoint& x) {
  return {(x.x1 * std::conj(x.x3)).imag(), (x.x2 * std::conj(x.x4)).imag(), x.x1 * std::conj(x.x4) - x.x3 * std::conj(x.x2)};
}

BValues b_functions(const ParamPoint& t) { return b_functions(period_matrix(t)); }

std::array<double, 3> b_transformation_residuals(const PeriodPoint& x, const ComplexGroupElement& g) {
  const BValues b = b_functions(x), bg = b_functions(right_act(x, g));
  const double l1 = b.b1 * std::norm(g.k1);
  const double l2 = b.b1 * std::norm(g.k3) + b.b2 * std::norm(g.k2) + (b.b3 * g.k3 * std::conj(g.k2)).imag();
  const Complex l3 = b.b3 * g.k1 * std::conj(g.k2) + 2.0 * kI * g.k1 * std::conj(g.k3) * b.b1;
  return {std::abs(bg.b1 - l1), std::abs(bg.b2 - l2), std::abs(bg.b3 - l3)};
}

std::array<double, 3> b_function_laws(const ParamPoint& t, Complex k, Complex kprime) {
  const ComplexGroupElement g{k, 1.0 / k, kprime};
  const BValues b = b_functions(t), bg = b_functions(act(t, g));
  const Complex kinv = 1.0 / k;
  const double l1 = b.b1 * std::norm(k);
  const double l2 = b.b1 * std::norm(kprime) + b.b2 * std::norm(kinv) + (b.b3 * kprime * std::conj(kinv)).imag();
  const Complex l3 = b.b3 * k * std::conj(kinv) + 2.0 * kI * k * std::conj(kprime) * b.b1;
  return {std::abs(bg.b1 - l1), std::abs(bg.b2 - l2), std::abs(bg.b3 - l3)};
}

double BFunctionResiduals::max() const { return std::max({b1_value, b2_value, b3_value, b1_law, b2_law, b3_law}); }

BFunctionResiduals b_function_check(Complex z, Complex k, Complex kprime, std::size_t order) {
  const auto g = generator_values(z, order);
  const ParamPoint t{1.0, g[0], g[1], g[2]};
  const BValues b = b_functions(t);
  const auto laws = b_function_laws(t, k, kprime);
  return {t, std::abs(b.b1 - z.imag()), std::abs(b.b2), std::abs(b.b3 - 1.0), laws[0], laws[1], laws[2]};
}

Complex i_ratio(const ParamPoint& t) {
  const PeriodPoint x = period_matrix(t);
  return x.x2 / x.x1;
}

}  // namespace qmf
