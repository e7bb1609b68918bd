// Factorial-family functions: falling factorials with the Gamma-ratio
// extension to negative order, generalized binomial coefficients.
#ifndef HALPHEN_FACTORIALS_HPP
#define HALPHEN_FACTORIALS_HPP

#include "halphen/rational.hpp"

namespace halphen {
namespace exactmath {

Rational factorial(int n);

// (k)_m = k (k-1) ... (k-m+1) for m >= 1, 1 for m = 0, and the Gamma ratio
// Gamma(k+1)/Gamma(k-m+1) = 1/((k+1)(k+2)...(k-m)) for m < 0.  The negative
// branch requires k - m + 1 > 0; a nonpositive integer Gamma argument is a
// pole and raises domain_error.
Rational falling_factorial(int k, int m);

// x (x-1) ... (x-p+1) / p!  for rational x and integer p >= 0.
Rational generalized_binomial(const Rational& x, int p);

}  // namespace exactmath
}  // namespace halphen

#endif
