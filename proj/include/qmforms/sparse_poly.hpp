#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmforms/rational.hpp"

namespace qmf {

// Sparse Laurent polynomial in a fixed number of variables over the
// rationals. Exponents may be negative so that monomials are invertible;
// zero coefficients are never stored.
template <std::size_t NumVars>
class SparsePoly {
 public:
  using Exponents = std::array<int, NumVars>;
  using Terms = std::map<Exponents, Rational>;

  SparsePoly() = default;
  SparsePoly(const Rational& c) {  // NOLINT: constants promote implicitly
    if (!c.is_zero()) terms_[Exponents{}] = c;
  }
  SparsePoly(int c) : SparsePoly(Rational(c)) {}  // NOLINT

  static SparsePoly monomial(const Exponents& e, const Rational& c = Rational(1)) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }

  static SparsePoly variable(std::size_t i, int power = 1) {
    Exponents e{};
    e.at(i) = power;
    return monomial(e);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator/(SparsePoly a, const Rational& s) { return a *= Rational(1) / s; }
  SparsePoly operator-() const { return SparsePoly(*this) *= Rational(-1); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < NumVars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  // Inverse of a single monomial; anything else is not invertible.
  SparsePoly inverse() const {
    if (terms_.size() != 1) throw std::domain_error("only monomials are invertible");
    const auto& [e, c] = *terms_.begin();
    Exponents ne;
    for (std::size_t i = 0; i < NumVars; ++i) ne[i] = -e[i];
    return monomial(ne, Rational(1) / c);
  }

  SparsePoly pow(unsigned exponent) const {
    SparsePoly result(1), base = *this;
    while (exponent) {
      if (exponent & 1u) result *= base;
      exponent >>= 1u;
      if (exponent) base *= base;
    }
    return result;
  }

  SparsePoly derivative(std::size_t var) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents ne = e;
      --ne[var];
      r.add_term(ne, c * Rational(e[var]));
    }
    return r;
  }

  int degree_in(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      d = first ? e[var] : std::max(d, e[var]);
      first = false;
    }
    return d;
  }

  int total_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = first ? s : std::max(d, s);
      first = false;
    }
    return d;
  }

  // True when every term has weighted degree sum_i w_i e_i == degree.
  bool is_homogeneous(const std::array<int, NumVars>& weights, int degree) const {
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (std::size_t i = 0; i < NumVars; ++i) s += weights[i] * e[i];
      if (s != degree) return false;
    }
    return true;
  }

  // Evaluation in any field-like scalar type constructible from double
  // (std::complex<double>) or from Rational.
  template <typename Scalar, typename FromRational>
  Scalar evaluate(const std::array<Scalar, NumVars>& point, FromRational&& convert) const {
    Scalar sum = convert(Rational(0));
    for (const auto& [e, c] : terms_) {
      Scalar term = convert(c);
      for (std::size_t i = 0; i < NumVars; ++i) {
        if (e[i] > 0) {
          for (int k = 0; k < e[i]; ++k) term *= point[i];
        } else if (e[i] < 0) {
          for (int k = 0; k < -e[i]; ++k) term /= point[i];
        }
      }
      sum += term;
    }
    return sum;
  }

  Rational evaluate(const std::array<Rational, NumVars>& point) const {
    return evaluate<Rational>(point, [](const Rational& r) { return r; });
  }

  // Substitute polynomials (in M variables) for every variable.
  template <std::size_t M>
  SparsePoly<M> compose(const std::array<SparsePoly<M>, NumVars>& images) const {
    SparsePoly<M> r;
    for (const auto& [e, c] : terms_) {
      SparsePoly<M> term(c);
      for (std::size_t i = 0; i < NumVars; ++i) {
        if (e[i] > 0) term *= images[i].pow(static_cast<unsigned>(e[i]));
        if (e[i] < 0) term *= images[i].inverse().pow(static_cast<unsigned>(-e[i]));
      }
      r += term;
    }
    return r;
  }

  std::string str(const std::array<std::string, NumVars>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Descending order reads like conventional notation.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      bool need_coeff = is_const || mag != Rational(1);
      std::string mono;
      for (std::size_t i = 0; i < NumVars; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (need_coeff) {
        std::ostringstream os;
        os << mag;
        out += os.str();
        if (!mono.empty()) out += "*";
      }
      out += mono;
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace qmf
