#pragma once

#include <array>
#include <complex>

#include "qmforms/error.hpp"
#include "qmforms/qmform.hpp"
#include "qmforms/rational.hpp"
#include "qmforms/sparse_poly.hpp"

namespace qmf {

// Polynomials in t0, t1, t2, t3.
using TPoly = SparsePoly<4>;
using TMatrix = std::array<std::array<TPoly, 2>, 2>;

TPoly tvar(int i);

// The elliptic family y^2 = 4 t0 (x - t1)^3 - t2 (x - t1) - t3 with the
// connection (1/delta) sum A_i dt_i on the basis (dx/y, x dx/y).
struct ConnectionData {
  std::array<TMatrix, 4> a;
  TPoly delta;
};

const ConnectionData& gm_matrices();
// t0 (27 t0 t3^2 - t2^3)
TPoly discriminant();

// Integrability of the connection for the pair i < j:
//   delta (dA_j/dt_i - dA_i/dt_j) - (d delta/dt_i A_j - d delta/dt_j A_i) = [A_i, A_j].
bool flatness_pair(const ConnectionData& data, int i, int j);
bool flatness_check(const ConnectionData& data);
bool flatness_check();

// Row i of B is (A_i[0][0], A_i[0][1], A_i[1][0], A_i[1][1]).
std::array<std::array<TPoly, 4>, 4> b_matrix(const ConnectionData& data);
TPoly det4(const std::array<std::array<TPoly, 4>, 4>& m);
TPoly det_b();
// det B == 3/4 t0 delta^3
bool detB_check();

// Element [[k1, k3], [0, k2]] of the group acting on parameters.
template <class T>
struct GroupElement {
  T k1, k2, k3;
};

template <class T>
using TPoint = std::array<T, 4>;

namespace detail {
template <class T>
T reciprocal(const T& x) {
  return T(1) / x;
}
template <std::size_t N>
SparsePoly<N> reciprocal(const SparsePoly<N>& x) {
  return x.inverse();
}
template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}
template <std::size_t N>
bool is_zero(const SparsePoly<N>& x) {
  return x.is_zero();
}
}  // namespace detail

// Matrix product g h.
template <class T>
GroupElement<T> compose(const GroupElement<T>& g, const GroupElement<T>& h) {
  return {g.k1 * h.k1, g.k2 * h.k2, g.k1 * h.k3 + g.k3 * h.k2};
}

// Right action t.g = (t0/(k1 k2), t1 k2/k1 + k3/k1, t2 k2/k1^3, t3 k2^2/k1^4).
template <class T>
TPoint<T> act(const TPoint<T>& t, const GroupElement<T>& g) {
  const T i1 = detail::reciprocal(g.k1), i2 = detail::reciprocal(g.k2);
  const T i1_3 = i1 * i1 * i1;
  return {t[0] * i1 * i2, t[1] * g.k2 * i1 + g.k3 * i1, t[2] * g.k2 * i1_3, t[3] * g.k2 * g.k2 * i1_3 * i1};
}

template <class T>
T discriminant_value(const TPoint<T>& t) {
  return t[0] * (T(27) * t[0] * t[3] * t[3] - t[2] * t[2] * t[2]);
}

// t2^3 / (27 t0 t3^2 - t2^3); DegenerateCurve when the denominator vanishes.
template <class T>
T j_param(const TPoint<T>& t) {
  const T den = T(27) * t[0] * t[3] * t[3] - t[2] * t[2] * t[2];
  if (detail::is_zero(den)) throw DegenerateCurve("27 t0 t3^2 - t2^3 vanishes");
  return t[2] * t[2] * t[2] / den;
}

// (t0, 12 t0 t1, -12 t0 t1^2 + t2, 4 t0 t1^3 - t2 t1 + t3)
template <class T>
TPoint<T> alpha_map(const TPoint<T>& t) {
  return {t[0], T(12) * t[0] * t[1], T(-12) * t[0] * t[1] * t[1] + t[2],
          T(4) * t[0] * t[1] * t[1] * t[1] - t[2] * t[1] + t[3]};
}

// Inverse of alpha_map; needs s0 != 0.
template <class T>
TPoint<T> alpha_inverse(const TPoint<T>& s) {
  if (detail::is_zero(s[0])) throw DegenerateCurve("alpha is not invertible at t0 = 0");
  const T t1 = s[1] / (T(12) * s[0]);
  const T t2 = s[2] + T(12) * s[0] * t1 * t1;
  const T t3 = s[3] - T(4) * s[0] * t1 * t1 * t1 + t2 * t1;
  return {s[0], t1, t2, t3};
}

// Discriminant of the family in the coordinates produced by alpha_map:
// t0 (432 t0^2 t3^2 + 72 t0 t1 t2 t3 - 16 t0 t2^3 + 4 t1^3 t3 - t1^2 t2^2).
template <class T>
T second_family_discriminant(const TPoint<T>& t) {
  const T &t0 = t[0], &t1 = t[1], &t2 = t[2], &t3 = t[3];
  return t0 * (T(432) * t0 * t0 * t3 * t3 + T(72) * t0 * t1 * t2 * t3 - T(16) * t0 * t2 * t2 * t2 +
               T(4) * t1 * t1 * t1 * t3 - t1 * t1 * t2 * t2);
}

// Identities in the indeterminates t0..t3, k1, k2, k3, h1, h2, h3.
bool action_associativity_check();
bool j_invariance_check();
bool discriminant_weight_check();

// Pushes the Ramanujan field on (g1, g2, g3) through
// (t1, t2, t3) = (12 g1, -12 g1^2 + g2, 4 g1^3 - g2 g1 + g3) and compares
// with t1' = -t2, t2' = -6 t3, t3' = t1 t3 - t2^2/4, one flag per component.
std::array<bool, 3> vectorfield_pushforward_components();
bool vectorfield_pushforward_check();

}  // namespace qmf
