#include "qmforms/gauss_manin.hpp"

namespace qmf {

namespace {

Rational frac(long n, long d) { return Rational(n, d); }

// c * t0^a t1^b t2^c t3^d
TPoly mono(const Rational& c, int e0, int e1, int e2, int e3) { return TPoly::monomial({e0, e1, e2, e3}, c); }

ConnectionData build() {
  ConnectionData d;
  auto& a = d.a;
  a[0][0][0] = mono(frac(3, 2), 1, 1, 1, 1) + mono(-9, 1, 0, 0, 2) + mono(frac(1, 4), 0, 0, 3, 0);
  a[0][0][1] = mono(frac(-3, 2), 1, 0, 1, 1);
  a[0][1][0] = mono(frac(3, 2), 1, 2, 1, 1) + mono(9, 1, 1, 0, 2) + mono(frac(-1, 2), 0, 1, 3, 0) +
               mono(frac(1, 8), 0, 0, 2, 1);
  a[0][1][1] = mono(frac(-3, 2), 1, 1, 1, 1) + mono(-18, 1, 0, 0, 2) + mono(frac(3, 4), 0, 0, 3, 0);

  a[1][1][0] = mono(27, 2, 0, 0, 2) + mono(-1, 1, 0, 3, 0);

  a[2][0][0] = mono(frac(-9, 2), 2, 1, 0, 1) + mono(frac(1, 4), 1, 0, 2, 0);
  a[2][0][1] = mono(frac(9, 2), 2, 0, 0, 1);
  a[2][1][0] = mono(frac(-9, 2), 2, 2, 0, 1) + mono(frac(1, 2), 1, 1, 2, 0) + mono(frac(-3, 8), 1, 0, 1, 1);
  a[2][1][1] = mono(frac(9, 2), 2, 1, 0, 1) + mono(frac(-1, 4), 1, 0, 2, 0);

  a[3][0][0] = mono(3, 2, 1, 1, 0) + mono(frac(-9, 2), 2, 0, 0, 1);
  a[3][0][1] = mono(-3, 2, 0, 1, 0);
  a[3][1][0] = mono(3, 2, 2, 1, 0) + mono(-9, 2, 1, 0, 1) + mono(frac(1, 4), 1, 0, 2, 0);
  a[3][1][1] = mono(-3, 2, 1, 1, 0) + mono(frac(9, 2), 2, 0, 0, 1);

  d.delta = discriminant();
  return d;
}

TMatrix mat_mul(const TMatrix& x, const TMatrix& y) {
  TMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

// Laurent polynomials in t0..t3, k1, k2, k3, h1, h2, h3.
using SymPoly = SparsePoly<10>;

SymPoly sym(int i) { return SymPoly::variable(static_cast<std::size_t>(i)); }
TPoint<SymPoly> sym_t() { return {sym(0), sym(1), sym(2), sym(3)}; }
GroupElement<SymPoly> sym_g() { return {sym(4), sym(5), sym(6)}; }
GroupElement<SymPoly> sym_h() { return {sym(7), sym(8), sym(9)}; }

}  // namespace

TPoly tvar(int i) { return TPoly::variable(static_cast<std::size_t>(i)); }

TPoly discriminant() { return mono(27, 2, 0, 0, 2) + mono(-1, 1, 0, 3, 0); }

const ConnectionData& gm_matrices() {
  static const ConnectionData data = build();
  return data;
}

bool flatness_pair(const ConnectionData& data, int i, int j) {
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  const TMatrix& ai = data.a[ui];
  const TMatrix& aj = data.a[uj];
  const TPoly di = data.delta.derivative(ui), dj = data.delta.derivative(uj);
  const TMatrix ij = mat_mul(ai, aj), ji = mat_mul(aj, ai);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const TPoly lhs = data.delta * (aj[r][c].derivative(ui) - ai[r][c].derivative(uj)) - (di * aj[r][c] - dj * ai[r][c]);
      if (!(lhs == ij[r][c] - ji[r][c])) return false;
    }
  }
  return true;
}

bool flatness_check(const ConnectionData& data) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!flatness_pair(data, i, j)) return false;
  return true;
}

bool flatness_check() { return flatness_check(gm_matrices()); }

std::array<std::array<TPoly, 4>, 4> b_matrix(const ConnectionData& data) {
  std::array<std::array<TPoly, 4>, 4> b;
  for (std::size_t i = 0; i < 4; ++i) b[i] = {data.a[i][0][0], data.a[i][0][1], data.a[i][1][0], data.a[i][1][1]};
  return b;
}

TPoly det4(const std::array<std::array<TPoly, 4>, 4>& m) {
  // Laplace expansion along the first two rows.
  TPoly total;
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int p = 0; p < 6; ++p) {
    const int a = pairs[p][0], b = pairs[p][1];
    const int c = pairs[5 - p][0], d = pairs[5 - p][1];
    const TPoly top = m[0][a] * m[1][b] - m[0][b] * m[1][a];
    const TPoly bottom = m[2][c] * m[3][d] - m[2][d] * m[3][c];
    // Sign of the permutation (a, b, c, d).
    int inversions = 0;
    const int perm[4] = {a, b, c, d};
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (perm[x] > perm[y]) ++inversions;
    const TPoly term = top * bottom;
    total = inversions % 2 == 0 ? total + term : total - term;
  }
  return total;
}

TPoly det_b() { return det4(b_matrix(gm_matrices())); }

bool detB_check() {
  const TPoly d = discriminant();
  return det_b() == frac(3, 4) * tvar(0) * d * d * d;
}

bool action_associativity_check() {
  const auto t = sym_t();
  const auto g = sym_g(), h = sym_h();
  return act(act(t, g), h) == act(t, compose(g, h));
}

bool j_invariance_check() {
  const auto t = sym_t();
  const auto tg = act(t, sym_g());
  auto num = [](const TPoint<SymPoly>& x) { return x[2] * x[2] * x[2]; };
  auto den = [](const TPoint<SymPoly>& x) { return SymPoly(27) * x[0] * x[3] * x[3] - x[2] * x[2] * x[2]; };
  return num(tg) * den(t) == num(t) * den(tg);
}

bool discriminant_weight_check() {
  const auto t = sym_t();
  const auto g = sym_g();
  const SymPoly factor = SymPoly::variable(4, -10) * SymPoly::variable(5, 2);
  return discriminant_value(act(t, g)) == factor * discriminant_value(t);
}

std::array<bool, 3> vectorfield_pushforward_components() {
  const FormPoly g1 = FormPoly::variable(0), g2 = FormPoly::variable(1), g3 = FormPoly::variable(2);
  const std::array<FormPoly, 3> flow = {derive(QMForm::g1()).poly(), derive(QMForm::g2()).poly(),
                                        derive(QMForm::g3()).poly()};
  const std::array<FormPoly, 3> t = {FormPoly(12) * g1, FormPoly(-12) * g1 * g1 + g2,
                                     FormPoly(4) * g1 * g1 * g1 - g2 * g1 + g3};
  const std::array<FormPoly, 3> target = {-t[1], FormPoly(-6) * t[2], t[0] * t[2] - frac(1, 4) * t[1] * t[1]};
  std::array<bool, 3> ok{};
  for (std::size_t k = 0; k < 3; ++k) {
    FormPoly pushed;
    for (std::size_t i = 0; i < 3; ++i) pushed = pushed + t[k].derivative(i) * flow[i];
    ok[k] = pushed == target[k];
  }
  return ok;
}

bool vectorfield_pushforward_check() {
  const auto c = vectorfield_pushforward_components();
  return c[0] && c[1] && c[2];
}

}  // namespace qmf
