#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qmforms/qseries.hpp"
#include "qmforms/rational.hpp"
#include "qmforms/sparse_poly.hpp"

namespace qmf {

// Polynomial ring Q[G1, G2, G3] with deg G_i = 2i.
using FormPoly = SparsePoly<3>;
// Exponent triple (a, b, c) of G1^a G2^b G3^c.
using Monomial = FormPoly::Exponents;

inline constexpr std::array<int, 3> kGeneratorWeights{2, 4, 6};

// The space of forms of weight m and depth at most n. Only even m with
// 0 <= 2n <= m is accepted; other keys throw InvariantViolation.
class FormSpaceKey {
 public:
  FormSpaceKey(int weight, int depth);

  int weight() const { return weight_; }
  int depth() const { return depth_; }
  static bool valid(int weight, int depth) { return weight >= 0 && weight % 2 == 0 && depth >= 0 && 2 * depth <= weight; }

  friend bool operator==(const FormSpaceKey&, const FormSpaceKey&) = default;

 private:
  int weight_;
  int depth_;
};

// Homogeneous element of weight m of Q[G1, G2, G3]. The depth is the
// G1-degree, so 2 * depth <= weight always holds.
class QMForm {
 public:
  // Zero form of the given weight.
  explicit QMForm(int weight = 0);
  // Throws InvariantViolation unless every term has weight `weight`.
  QMForm(int weight, FormPoly poly);

  static QMForm constant(const Rational& c);
  static QMForm g1();
  static QMForm g2();
  static QMForm g3();
  static QMForm monomial(const Monomial& e, const Rational& c = Rational(1));

  int weight() const { return weight_; }
  int depth() const;
  bool is_zero() const { return poly_.is_zero(); }
  const FormPoly& poly() const { return poly_; }
  Rational coefficient(const Monomial& e) const { return poly_.coefficient(e); }

  QMForm& operator+=(const QMForm& o);
  QMForm& operator-=(const QMForm& o);
  friend QMForm operator+(QMForm a, const QMForm& b) { return a += b; }
  friend QMForm operator-(QMForm a, const QMForm& b) { return a -= b; }
  friend QMForm operator*(const QMForm& a, const QMForm& b) { return QMForm(a.weight_ + b.weight_, a.poly_ * b.poly_); }
  friend QMForm operator*(const Rational& s, const QMForm& a) { return QMForm(a.weight_, s * a.poly_); }
  QMForm operator-() const { return Rational(-1) * *this; }
  QMForm pow(unsigned e) const { return QMForm(weight_ * static_cast<int>(e), poly_.pow(e)); }

  friend bool operator==(const QMForm& a, const QMForm& b) { return a.weight_ == b.weight_ && a.poly_ == b.poly_; }

  // e.g. "g1^2 - 1/12*g2"
  std::string str() const;

 private:
  int weight_;
  FormPoly poly_;
};

// All (a, b, c) with 2a + 4b + 6c = m and a <= n, lexicographic.
std::vector<Monomial> monomial_basis(const FormSpaceKey& key);

// q-expansion with G1 -> E1, G2 -> 12 E2, G3 -> 8 E3 (normalized Eisenstein
// series), truncated at `order`. The true function is u^{m/2} times this,
// u = 2 pi i / 12.
QSeries expand(const QMForm& f, std::size_t order);

// The unique form of the key's weight and depth bound whose expansion is `s`.
// Requires s.order() >= dim + 5 (InsufficientOrder); every supplied
// coefficient must match (NoSolution otherwise).
QMForm decompose(const FormSpaceKey& key, const QSeries& s);
// Same, but an invalid (m, n) pair means the space is {0}: NoSolution.
QMForm decompose(int weight, int depth, const QSeries& s);

// Derivation d/dz on the ring, fixed by
//   G1' = G1^2 - G2/12,  G2' = 4 G1 G2 - 6 G3,  G3' = 6 G1 G3 - G2^2/3.
QMForm derive(const QMForm& f);

// i-th associated function of f regarded in depth n:
// (d/dG1)^i f / (i! * binom(n, i)).
QMForm associated(const QMForm& f, int n, int i);

// Checks that the associated functions of derive(f), regarded in depth n+1,
// are i(m-i+1)/(n+1) f_{i-1} + (n+1-i)/(n+1) f_i' for every i.
bool assoc_derivative_check(const QMForm& f, int n);

}  // namespace qmf
