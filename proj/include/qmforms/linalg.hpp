#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qmforms/rational.hpp"

namespace qmf {

// Dense row-major matrix over the rationals, used for the small exact
// systems that come up in decomposition.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix m);

// Solves m x = rhs exactly. Returns nullopt when the system is inconsistent
// or the solution is not unique.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix m, std::vector<Rational> rhs);

}  // namespace qmf
