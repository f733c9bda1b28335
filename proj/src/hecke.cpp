#include "qmforms/hecke.hpp"

#include <numeric>
#include <string>

#include "qmforms/error.hpp"

namespace qmf {

HeckeContext::HeckeContext(long p_, FormSpaceKey key_) : p(p_), key(key_) {
  if (p < 1) throw InvariantViolation("Hecke index must be positive");
}

QSeries hecke_series(const HeckeContext& ctx, const QSeries& s) {
  return hecke_series(ctx, s, s.order() / static_cast<std::size_t>(ctx.p));
}

QSeries hecke_series(const HeckeContext& ctx, const QSeries& s, std::size_t out_order) {
  const long p = ctx.p;
  const int m = ctx.key.weight(), n = ctx.key.depth();
  if (s.order() < static_cast<std::size_t>(p) * out_order) {
    throw InsufficientOrder("T_" + std::to_string(p) + " to order " + std::to_string(out_order) + " needs input order " +
                            std::to_string(p * static_cast<long>(out_order)) + ", got " + std::to_string(s.order()));
  }
  const Rational scale = pow(Rational(p), m - n - 1);
  QSeries out(out_order);
  // Divisors in ascending order keep the summation order fixed.
  for (long e = 1; e <= p; ++e) {
    if (p % e != 0) continue;
    const long pe = p / e;
    const Rational w = scale * pow(Rational(pe), 1 - m);
    for (std::size_t j = 0; j <= out_order; ++j) {
      if (j % static_cast<std::size_t>(e) != 0) continue;
      out[j] += w * s[static_cast<std::size_t>(pe) * (j / static_cast<std::size_t>(e))];
    }
  }
  return out;
}

QMForm hecke(const HeckeContext& ctx, const QMForm& f) {
  if (f.weight() != ctx.key.weight()) throw InvariantViolation("form weight does not match the Hecke context");
  if (f.depth() > ctx.key.depth()) throw InvariantViolation("form depth exceeds the Hecke context bound");
  const std::size_t order = monomial_basis(ctx.key).size() + 5;
  const QSeries image = hecke_series(ctx, expand(f, order * static_cast<std::size_t>(ctx.p)), order);
  try {
    return decompose(ctx.key, image);
  } catch (const NoSolution& e) {
    throw InternalConsistency(std::string("T_p image left the form space: ") + e.what());
  }
}

bool hecke_commutes_with_derive(const HeckeContext& ctx, const QMForm& f) {
  const HeckeContext up(ctx.p, FormSpaceKey(ctx.key.weight() + 2, ctx.key.depth() + 1));
  return hecke(up, derive(f)) == derive(hecke(ctx, f));
}

bool hecke_composition_check(long p, long q, const FormSpaceKey& key, const QMForm& f, CompositionExponent exponent) {
  const int m = key.weight(), n = key.depth();
  const int e = exponent == CompositionExponent::WeightMinusDepthMinusOne ? m - n - 1 : m - 2 * n - 1;
  const QMForm lhs = hecke({p, key}, hecke({q, key}, f));
  QMForm rhs(m);
  const long g = std::gcd(p, q);
  for (long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    rhs += pow(Rational(d), e) * hecke({p * q / (d * d), key}, f);
  }
  return lhs == rhs;
}

}  // namespace qmf
