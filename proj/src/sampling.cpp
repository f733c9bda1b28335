#include "qmforms/sampling.hpp"

#include <cmath>

namespace qmf {

QMForm random_form(Rng& rng, const FormSpaceKey& key) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  QMForm f(key.weight());
  for (const auto& e : monomial_basis(key)) f += QMForm::monomial(e, Rational(num(rng), den(rng)));
  return f;
}

ParamPoint random_param_point(Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0), angle(-kPi, kPi);
  auto draw = [&] { return std::polar(3.0 * std::sqrt(unit(rng)), angle(rng)); };
  for (;;) {
    const ParamPoint t{draw(), draw(), draw(), draw()};
    if (std::abs(t.t0) < 0.5) continue;
    if (std::abs(27.0 * t.t0 * t.t3 * t.t3 - t.t2 * t.t2 * t.t2) < 1.0) continue;
    return t;
  }
}

ComplexGroupElement random_group_element(Rng& rng) {
  std::uniform_real_distribution<double> mod(0.5, 2.0), angle(-kPi, kPi), part(-2.0, 2.0);
  const Complex k1 = std::polar(mod(rng), angle(rng));
  const Complex k2 = std::polar(mod(rng), angle(rng));
  const Complex k3(part(rng), part(rng));
  return {k1, k2, k3};
}

Complex random_upper_half(Rng& rng) {
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.6, 2.0);
  const double x = re(rng);
  return {x, im(rng)};
}

Rational random_rational(Rng& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (;;) {
    const int n = num(rng);
    if (nonzero && n == 0) continue;
    return Rational(n, den(rng));
  }
}

}  // namespace qmf
