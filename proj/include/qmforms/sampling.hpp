#pragma once

#include <random>

#include "qmforms/periods.hpp"
#include "qmforms/qmform.hpp"

namespace qmf {

using Rng = std::mt19937_64;

// Coefficients num/den with |num| <= 12, 1 <= den <= 6 on every basis monomial.
QMForm random_form(Rng& rng, const FormSpaceKey& key);

// Each t_i uniform in the disc of radius 3, rejecting |t0| < 0.5 and
// |27 t0 t3^2 - t2^3| < 1 so the sample stays away from singular curves.
ParamPoint random_param_point(Rng& rng);

// |k1|, |k2| in [0.5, 2] with uniform arguments; k3 with parts in [-2, 2].
ComplexGroupElement random_group_element(Rng& rng);

// Re z in [-1/2, 1/2], Im z in [0.6, 2].
Complex random_upper_half(Rng& rng);

// Nonzero-denominator rationals num/den with |num| <= 20, den <= 9.
Rational random_rational(Rng& rng, bool nonzero = false);

}  // namespace qmf
