// Closed-form cubic solving.  Exact rational roots are detected first
// (rational-root test with exact verification and deflation), the rest come
// from the depressed-cubic radical formulas with a Newton polish.
#ifndef HALPHEN_CUBIC_HPP
#define HALPHEN_CUBIC_HPP

#include "halphen/polynomial.hpp"
#include "halphen/scalar.hpp"

#include <array>
#include <vector>

namespace halphen {
namespace exactmath {

struct CubicRoot {
  Scalar value;
  int multiplicity = 1;
};

struct CubicRoots {
  std::vector<CubicRoot> roots;  // distinct roots; multiplicities sum to 3
  bool all_real = false;

  // The three roots with repetition, sorted descending by (re, im).
  std::array<Scalar, 3> flat() const;
};

// Roots of a3 x^3 + a2 x^2 + a1 x + a0.  a3 = 0 is a degree error.
CubicRoots solve_cubic(const Rational& a3, const Rational& a2, const Rational& a1,
                       const Rational& a0);

// All complex roots of a rational polynomial: rational roots extracted
// exactly (with multiplicity) by candidate snapping + exact verification,
// the deflated remainder solved numerically.  Deterministic output order:
// ascending (re, im).
std::vector<Scalar> polynomial_roots(const Polynomial& p);

// Durand-Kerner iteration on a monic polynomial given by ascending
// coefficients (c[0] + c[1] x + ... + x^n).  Deterministic start values.
std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& coeffs);

}  // namespace exactmath
}  // namespace halphen

#endif
