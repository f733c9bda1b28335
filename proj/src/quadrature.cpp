#include "qmforms/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace qmf {

namespace {

GaussLegendreRule build_rule(std::size_t n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(pi * (double(i) + 0.75) / (double(n) + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * double(k) - 1) * x * p1 - (double(k) - 1) * p0) / double(k);
        p0 = p1;
        p1 = pk;
      }
      const double pn = n == 1 ? x : p1;
      const double pnm1 = n == 1 ? 1.0 : p0;
      dp = double(n) * (x * pn - pnm1) / (x * x - 1);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

}  // namespace qmf
