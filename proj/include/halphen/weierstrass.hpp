// Elliptic invariants (g2, g3) <-> root triple of 4r^3 - g2 r - g3, and the
// half-line elliptic integral w(r) by adaptive quadrature.
#ifndef HALPHEN_WEIERSTRASS_HPP
#define HALPHEN_WEIERSTRASS_HPP

#include "halphen/cubic.hpp"
#include "halphen/report.hpp"
#include "halphen/scalar.hpp"

#include <array>

namespace halphen {
namespace weierstrass {

using exactmath::Rational;
using exactmath::Scalar;

struct EllipticInvariants {
  Rational g2;
  Rational g3;

  Rational discriminant() const { return g2 * g2 * g2 - Rational(27) * g3 * g3; }
  bool all_real_roots() const { return discriminant() >= 0; }
};

// Root triple of the Weierstrass cubic, stored in descending order by
// (re, im).  Construction asserts the sum-zero and product-expansion
// invariants (exactly for exact roots, to 1e-12 otherwise).
struct RootTriple {
  std::array<Scalar, 3> e;

  double max_real() const;
  bool all_real(double tol = 1e-12) const;
  bool all_exact() const { return e[0].exact() && e[1].exact() && e[2].exact(); }
};

RootTriple roots_from_invariants(const EllipticInvariants& inv);

// Expansion-consistent convention: 4 prod (r - e_s) = 4r^3 - g2 r - g3 forces
// g2 = -4 (e1 e2 + e2 e3 + e1 e3), g3 = 4 e1 e2 e3.  The printed relation
// carries the opposite sign for g2; see sign_convention_findings().
EllipticInvariants invariants_from_roots(const Scalar& e1, const Scalar& e2, const Scalar& e3);

// w(r) = int_r^inf du / sqrt(4u^3 - g2 u - g3), tail mapped to [0,1) by
// u = r + t/(1-t), adaptive Gauss-Kronrod refinement, relative error 1e-10.
// Requires all roots real and r > max(e_s).
double r_to_w(double r, const EllipticInvariants& inv);

// Static findings for this module (the g2 sign convention).
report::Report sign_convention_findings();

}  // namespace weierstrass
}  // namespace halphen

#endif
