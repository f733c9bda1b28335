#include <random>

#include "doctest.h"
#include "qmforms/error.hpp"
#include "qmforms/linalg.hpp"
#include "qmforms/qmform.hpp"

using namespace qmf;

namespace {

const QMForm G1 = QMForm::g1();
const QMForm G2 = QMForm::g2();
const QMForm G3 = QMForm::g3();

Rational frac(long n, long d) { return Rational(n, d); }

QMForm random_form(std::mt19937_64& rng, const FormSpaceKey& key) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  QMForm f(key.weight());
  for (const auto& e : monomial_basis(key)) f += QMForm::monomial(e, frac(num(rng), den(rng)));
  return f;
}

}  // namespace

TEST_CASE("form space keys") {
  CHECK_THROWS_AS(FormSpaceKey(3, 0), InvariantViolation);
  CHECK_THROWS_AS(FormSpaceKey(4, 3), InvariantViolation);
  CHECK_THROWS_AS(QMForm(5), InvariantViolation);
  CHECK_THROWS_AS(QMForm(4, G1.poly()), InvariantViolation);
  CHECK_NOTHROW(FormSpaceKey(0, 0));
}

TEST_CASE("monomial bases") {
  CHECK(monomial_basis({4, 0}) == std::vector<Monomial>{{0, 1, 0}});
  CHECK(monomial_basis({4, 1}) == std::vector<Monomial>{{0, 1, 0}});
  CHECK(monomial_basis({4, 2}) == std::vector<Monomial>{{0, 1, 0}, {2, 0, 0}});
  CHECK(monomial_basis({12, 0}) == std::vector<Monomial>{{0, 0, 2}, {0, 3, 0}});
  // Weight 2, depth 1 is spanned by G1 alone.
  CHECK(monomial_basis({2, 1}) == std::vector<Monomial>{{1, 0, 0}});
  CHECK(monomial_basis({2, 0}).empty());
}

TEST_CASE("expansion") {
  CHECK(expand(G2, 2) == QSeries{12, 2880, 25920});
  CHECK(expand(G1 * G1, 1) == QSeries{1, -48});
  CHECK(expand(QMForm(6), 5) == QSeries(5));
  CHECK(expand(QMForm::constant(1), 3) == QSeries{1, 0, 0, 0});
  CHECK(expand(G3, 1) == QSeries{8, -4032});
}

TEST_CASE("decomposition examples") {
  CHECK(decompose(FormSpaceKey(4, 2), expand(G1 * G1, 10)) == G1 * G1);
  const QSeries dg1 = Rational(12) * theta(eisenstein(1, 12));
  CHECK(decompose(FormSpaceKey(4, 2), dg1) == G1 * G1 - frac(1, 12) * G2);
  // G1' has depth 2, so it does not lie in depth 1.
  CHECK_THROWS_AS(decompose(FormSpaceKey(4, 1), dg1), NoSolution);
  CHECK_THROWS_AS(decompose(2, 0, eisenstein(1, 12)), NoSolution);
  CHECK_THROWS_AS(decompose(3, 0, eisenstein(1, 12)), NoSolution);
  CHECK_THROWS_AS(decompose(FormSpaceKey(4, 2), expand(G1 * G1, 4)), InsufficientOrder);
  // The depth bound matters: G1^2 is not in depth 1.
  CHECK_THROWS_AS(decompose(FormSpaceKey(4, 1), expand(G1 * G1, 10)), NoSolution);
}

TEST_CASE("freeness: expansion matrices have full column rank") {
  for (int m = 0; m <= 20; m += 2) {
    for (int n = 0; 2 * n <= m; ++n) {
      const auto basis = monomial_basis({m, n});
      const std::size_t order = basis.size() + 5;
      RationalMatrix mat(order + 1, basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const QSeries s = expand(QMForm::monomial(basis[c]), order);
        for (std::size_t r = 0; r <= order; ++r) mat(r, c) = s[r];
      }
      CHECK(rank(mat) == basis.size());
    }
  }
}

TEST_CASE("decompose inverts expand on random forms") {
  std::mt19937_64 rng(99);
  for (int m = 0; m <= 16; m += 2) {
    for (int n = 0; 2 * n <= m; ++n) {
      const FormSpaceKey key(m, n);
      const QMForm f = random_form(rng, key);
      CHECK(decompose(key, expand(f, monomial_basis(key).size() + 5)) == f);
    }
  }
}

TEST_CASE("Ramanujan derivation") {
  CHECK(derive(G1) == G1 * G1 - frac(1, 12) * G2);
  CHECK(derive(G2) == Rational(4) * G1 * G2 - Rational(6) * G3);
  CHECK(derive(G3) == Rational(6) * G1 * G3 - frac(1, 3) * G2 * G2);
  CHECK(derive(QMForm::constant(1)).is_zero());
  CHECK(derive(QMForm::constant(1)).weight() == 2);
}

TEST_CASE("derivation agrees with 12 q d/dq on expansions") {
  std::mt19937_64 rng(5);
  const std::size_t order = 60;
  for (int m = 0; m <= 12; m += 2) {
    for (int n = 0; 2 * n <= m; ++n) {
      const QMForm f = random_form(rng, {m, n});
      const QMForm df = derive(f);
      CHECK(expand(df, order) == Rational(12) * theta(expand(f, order)));
      CHECK(df.weight() == m + 2);
      CHECK(df.depth() <= n + 1);
    }
  }
}

TEST_CASE("products are graded") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const QMForm f = random_form(rng, {8, 2}), g = random_form(rng, {6, 3});
    const QMForm fg = f * g;
    CHECK(fg.weight() == 14);
    CHECK(fg.depth() <= f.depth() + g.depth());
  }
}

TEST_CASE("associated functions") {
  CHECK(associated(G1, 1, 1) == QMForm::constant(1));
  CHECK(associated(G1, 1, 0) == G1);
  CHECK(associated(G2, 0, 0) == G2);
  CHECK(associated(G1 * G1, 2, 1) == G1);
  CHECK(associated(G1 * G1, 2, 2) == QMForm::constant(1));
  CHECK_THROWS_AS(associated(G1, 1, 2), IndexOutOfRange);
  CHECK_THROWS_AS(associated(G1, 1, -1), IndexOutOfRange);
  CHECK_THROWS_AS(associated(G1 * G1, 1, 0), InvariantViolation);
  // Regarded in a larger depth, the functions are rescaled by binomials.
  CHECK(associated(G1, 3, 1) == frac(1, 3) * QMForm::constant(1));
}

TEST_CASE("associated functions of products") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2, np = 1;
    const QMForm f = random_form(rng, {8, n}), g = random_form(rng, {6, np});
    for (int r = 0; r <= n + np; ++r) {
      QMForm rhs(f.weight() + g.weight() - 2 * r);
      for (int s = 0; s <= r; ++s) {
        if (s > n || r - s > np) continue;
        const Rational w = binomial(n, s) * binomial(np, r - s) / binomial(n + np, r);
        rhs += w * associated(f, n, s) * associated(g, np, r - s);
      }
      CHECK(associated(f * g, n + np, r) == rhs);
    }
  }
}

TEST_CASE("associated functions of derivatives") {
  CHECK(assoc_derivative_check(G1, 1));
  CHECK(assoc_derivative_check(G2, 0));
  CHECK(assoc_derivative_check(G1 * G2, 1));
  std::mt19937_64 rng(17);
  for (int m = 0; m <= 12; m += 2)
    for (int n = 0; 2 * n <= m; ++n) CHECK(assoc_derivative_check(random_form(rng, {m, n}), n));
}

TEST_CASE("string form") {
  CHECK((G1 * G1 - frac(1, 12) * G2).str() == "g1^2 - 1/12*g2");
  CHECK(QMForm(4).str() == "0");
}
