#pragma once

#include "thetaclass/rational.hpp"

namespace thetaclass {

// B_k with the convention B_1 = -1/2.
Rational bernoulli(unsigned k);

// zeta(1 - 2g) = -B_{2g} / (2g), for g >= 1.
Rational zeta_negative_odd(unsigned g);

}  // namespace thetaclass
