#pragma once

#include <cstddef>
#include <vector>

namespace qmf {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1]; rules are cached per n.
const GaussLegendreRule& gauss_legendre(std::size_t n);

}  // namespace qmf
