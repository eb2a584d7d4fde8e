#pragma once

#include "coble/rational.hpp"

namespace coble {

// B_n from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2)
Rational bernoulli(int n);

}  // namespace coble
