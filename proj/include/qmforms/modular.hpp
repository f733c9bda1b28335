#pragma once

#include <complex>

namespace qmf {

using Complex = std::complex<double>;

// Integer 2x2 matrix [[a, b], [c, d]], determinant 1 unless stated otherwise.
struct IntMatrix {
  long a = 1, b = 0, c = 0, d = 1;

  long det() const { return a * d - b * c; }
  Complex mobius(Complex z) const { return (double(a) * z + double(b)) / (double(c) * z + double(d)); }
  // Automorphy factor j(A, z) = cz + d.
  Complex automorphy(Complex z) const { return double(c) * z + double(d); }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct ReducedPoint {
  IntMatrix transform;  // z_reduced = transform.mobius(z)
  Complex z;
};

// Moves z into |Re z| <= 1/2, |z| >= 1. Boundary ties go to Re z >= 0.
ReducedPoint sl2z_reduce(Complex z);

}  // namespace qmf
