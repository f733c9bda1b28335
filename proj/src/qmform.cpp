#include "qmforms/qmform.hpp"

#include <map>
#include <optional>
#include <utility>

#include "qmforms/error.hpp"
#include "qmforms/linalg.hpp"

namespace qmf {

FormSpaceKey::FormSpaceKey(int weight, int depth) : weight_(weight), depth_(depth) {
  if (!valid(weight, depth)) {
    throw InvariantViolation("invalid form space key (m=" + std::to_string(weight) + ", n=" + std::to_string(depth) +
                             "): need m even and 0 <= 2n <= m");
  }
}

QMForm::QMForm(int weight) : weight_(weight) {
  if (weight < 0 || weight % 2 != 0) {
    throw InvariantViolation("form weight must be even and nonnegative, got " + std::to_string(weight));
  }
}

QMForm::QMForm(int weight, FormPoly poly) : QMForm(weight) {
  for (const auto& [e, c] : poly.terms()) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw InvariantViolation("negative exponent in form");
  }
  if (!poly.is_homogeneous(kGeneratorWeights, weight)) {
    throw InvariantViolation("terms are not homogeneous of weight " + std::to_string(weight));
  }
  poly_ = std::move(poly);
}

QMForm QMForm::constant(const Rational& c) { return QMForm(0, FormPoly(c)); }
QMForm QMForm::g1() { return monomial({1, 0, 0}); }
QMForm QMForm::g2() { return monomial({0, 1, 0}); }
QMForm QMForm::g3() { return monomial({0, 0, 1}); }

QMForm QMForm::monomial(const Monomial& e, const Rational& c) {
  return QMForm(2 * e[0] + 4 * e[1] + 6 * e[2], FormPoly::monomial(e, c));
}

int QMForm::depth() const { return poly_.is_zero() ? 0 : poly_.degree_in(0); }

QMForm& QMForm::operator+=(const QMForm& o) {
  if (o.weight_ != weight_) throw InvariantViolation("adding forms of different weight");
  poly_ += o.poly_;
  return *this;
}

QMForm& QMForm::operator-=(const QMForm& o) {
  if (o.weight_ != weight_) throw InvariantViolation("subtracting forms of different weight");
  poly_ -= o.poly_;
  return *this;
}

std::string QMForm::str() const { return poly_.str({"g1", "g2", "g3"}); }

std::vector<Monomial> monomial_basis(const FormSpaceKey& key) {
  std::vector<Monomial> basis;
  const int m = key.weight();
  for (int a = 0; a <= key.depth(); ++a) {
    for (int b = 0; 2 * a + 4 * b <= m; ++b) {
      int rest = m - 2 * a - 4 * b;
      if (rest % 6 == 0) basis.push_back({a, b, rest / 6});
    }
  }
  return basis;
}

namespace {

// Powers of the three generator series, computed on demand.
class GeneratorPowers {
 public:
  explicit GeneratorPowers(std::size_t order) : order_(order) {
    base_[0] = eisenstein(1, order);
    base_[1] = Rational(12) * eisenstein(2, order);
    base_[2] = Rational(8) * eisenstein(3, order);
  }

  const QSeries& power(int gen, int e) {
    auto key = std::make_pair(gen, e);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    QSeries value = e == 0 ? QSeries::one(order_) : (e == 1 ? base_[gen] : power(gen, e - 1) * base_[gen]);
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::size_t order_;
  std::array<QSeries, 3> base_;
  std::map<std::pair<int, int>, QSeries> cache_;
};

QSeries expand_with(const QMForm& f, GeneratorPowers& gp, std::size_t order) {
  QSeries total(order);
  for (const auto& [e, c] : f.poly().terms()) {
    QSeries term = gp.power(0, e[0]) * gp.power(1, e[1]) * gp.power(2, e[2]);
    total = total + c * term;
  }
  return total;
}

}  // namespace

QSeries expand(const QMForm& f, std::size_t order) {
  GeneratorPowers gp(order);
  return expand_with(f, gp, order);
}

QMForm decompose(const FormSpaceKey& key, const QSeries& s) {
  const auto basis = monomial_basis(key);
  const std::size_t dim = basis.size();
  if (s.order() < dim + 5) {
    throw InsufficientOrder("decompose needs order >= " + std::to_string(dim + 5) + " for dim " +
                            std::to_string(dim) + ", got " + std::to_string(s.order()));
  }
  const std::size_t order = s.order();
  GeneratorPowers gp(order);
  RationalMatrix m(order + 1, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    QSeries col = expand_with(QMForm::monomial(basis[j]), gp, order);
    for (std::size_t r = 0; r <= order; ++r) m(r, j) = col[r];
  }
  auto x = solve_unique(std::move(m), s.coeffs());
  if (!x) {
    throw NoSolution("series is not the expansion of a form of weight " + std::to_string(key.weight()) +
                     " and depth <= " + std::to_string(key.depth()));
  }
  FormPoly poly;
  for (std::size_t j = 0; j < dim; ++j) poly.add_term(basis[j], (*x)[j]);
  return QMForm(key.weight(), std::move(poly));
}

QMForm decompose(int weight, int depth, const QSeries& s) {
  if (!FormSpaceKey::valid(weight, depth)) {
    throw NoSolution("no forms of weight " + std::to_string(weight) + " and depth " + std::to_string(depth));
  }
  return decompose(FormSpaceKey(weight, depth), s);
}

QMForm derive(const QMForm& f) {
  static const std::array<FormPoly, 3> images = [] {
    const FormPoly g1 = FormPoly::variable(0), g2 = FormPoly::variable(1), g3 = FormPoly::variable(2);
    return std::array<FormPoly, 3>{
        g1 * g1 - g2 / Rational(12),
        Rational(4) * g1 * g2 - Rational(6) * g3,
        Rational(6) * g1 * g3 - g2 * g2 / Rational(3),
    };
  }();
  FormPoly out;
  for (std::size_t i = 0; i < 3; ++i) out += f.poly().derivative(i) * images[i];
  return QMForm(f.weight() + 2, std::move(out));
}

QMForm associated(const QMForm& f, int n, int i) {
  if (i < 0 || i > n) {
    throw IndexOutOfRange("associated function index " + std::to_string(i) + " outside 0.." + std::to_string(n));
  }
  if (f.depth() > n) {
    throw InvariantViolation("form of depth " + std::to_string(f.depth()) + " regarded in depth " + std::to_string(n));
  }
  FormPoly p = f.poly();
  for (int k = 0; k < i; ++k) p = p.derivative(0);
  p *= Rational(1) / (factorial(i) * binomial(n, i));
  return QMForm(f.weight() - 2 * i, std::move(p));
}

bool assoc_derivative_check(const QMForm& f, int n) {
  const int m = f.weight();
  const QMForm df = derive(f);
  const Rational n1(n + 1);
  for (int i = 0; i <= n + 1; ++i) {
    QMForm expected(m + 2 - 2 * i);
    if (i >= 1) expected += Rational(i * (m - i + 1)) / n1 * associated(f, n, i - 1);
    if (i <= n) expected += Rational(n + 1 - i) / n1 * derive(associated(f, n, i));
    if (associated(df, n + 1, i) != expected) return false;
  }
  return true;
}

}  // namespace qmf
