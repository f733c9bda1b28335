#include "qmforms/modular.hpp"

#include <cmath>
#include <stdexcept>

namespace qmf {

ReducedPoint sl2z_reduce(Complex z) {
  if (!(z.imag() > 0)) throw std::domain_error("sl2z_reduce needs Im z > 0");
  IntMatrix acc;
  const IntMatrix inversion{0, -1, 1, 0};
  for (int iter = 0; iter < 10000; ++iter) {
    // Translate Re z into (-1/2, 1/2].
    const long n = static_cast<long>(std::ceil(z.real() - 0.5));
    if (n != 0) {
      z -= double(n);
      acc = IntMatrix{1, -n, 0, 1} * acc;
    }
    if (std::norm(z) >= 1.0) break;
    z = -1.0 / z;
    acc = inversion * acc;
  }
  if (std::norm(z) == 1.0 && z.real() < 0) {
    z = -1.0 / z;
    acc = inversion * acc;
  }
  // Normalize the sign so that the lower-left entry is positive (or d > 0).
  if (acc.c < 0 || (acc.c == 0 && acc.d < 0)) acc = IntMatrix{-acc.a, -acc.b, -acc.c, -acc.d};
  return {acc, z};
}

}  // namespace qmf
