#include "qmforms/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qmf {

namespace {

// Gauss-Jordan on an augmented matrix; returns pivot columns in order.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return eliminate(m, m.cols()).size(); }

std::optional<std::vector<Rational>> solve_unique(RationalMatrix m, std::vector<Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  const std::size_t n = m.cols();
  RationalMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  auto pivots = eliminate(aug, n);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t r = n; r < aug.rows(); ++r) {
    if (!aug(r, n).is_zero()) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug(r, n);
  return x;
}

}  // namespace qmf
