// sl(2) algebraization of second-order operators on polynomial subspaces:
// generator action, quadratic structure constants, the closed-form
// coefficient assembly, and the literal generator-composition path that
// serves as its oracle.
#ifndef HALPHEN_ALGEBRAIZATION_HPP
#define HALPHEN_ALGEBRAIZATION_HPP

#include "halphen/polynomial.hpp"
#include "halphen/report.hpp"

#include <array>

namespace halphen {
namespace algebra {

using exactmath::Polynomial;
using exactmath::Rational;

enum class Gen { Plus = 0, Zero = 1, Minus = 2 };

// J- = d/dr, J0 = r d/dr - j, J+ = r^2 d/dr - 2 j r, acting on polynomials.
Polynomial apply_generator(Gen which, const Rational& j, const Polynomial& p);

// [A, B] p = A(B p) - B(A p).
Polynomial commutator(Gen a, Gen b, const Rational& j, const Polynomial& p);

// A second-order operator as three coefficient polynomials:
// apply(p) = p2 p'' + p1 p' + p0 p.
struct DifferentialOperator {
  Polynomial p2, p1, p0;

  Polynomial apply(const Polynomial& p) const {
    return p2 * p.derivative(2) + p1 * p.derivative(1) + p0 * p;
  }
};

// Quadratic element of the enveloping algebra representing -H:
//   -H = sum c_ab J_a J_b (symmetrized) + sum c_a J_a + c_star.
// The c_ab block is symmetric by construction.
class OperatorSpec {
 public:
  OperatorSpec(const std::array<std::array<Rational, 3>, 3>& c_ab,
               const std::array<Rational, 3>& c_a, const Rational& c_star, const Rational& j);

  const Rational& c(Gen a, Gen b) const {
    return c_ab_[static_cast<int>(a)][static_cast<int>(b)];
  }
  const Rational& c(Gen a) const { return c_a_[static_cast<int>(a)]; }
  const Rational& c_star() const { return c_star_; }
  const Rational& j() const { return j_; }

  // No positive grading: c_{+-} = c_{++} = c_{+0} = 0 and c_+ = 0.
  bool exactly_solvable() const;

 private:
  std::array<std::array<Rational, 3>, 3> c_ab_;
  std::array<Rational, 3> c_a_;
  Rational c_star_;
  Rational j_;
};

// Literal generator composition of the nine quadratic terms, three linear
// terms and the constant.  This is the authoritative definition of the
// operator; the closed form below is validated against it.
Polynomial apply_spec_directly(const OperatorSpec& spec, const Polynomial& p);

// Closed-form coefficient assembly:
//   p2 = P4, p1 = P2 - ((2j-1)/2) P4', p0 = P0 - j P2' + (j(2j-1)/6) P4''
// with P4 = c_++ r^4 + 2 c_+0 r^3 + (c_00 + 2 c_+-) r^2 + 2 c_0- r + c_--,
//      P2 = c_+ r^2 + c_0 r + c_-,
//      P0 = (j(j+1)/3)(c_00 - 4 c_+-) + c_star.
DifferentialOperator build_from_spec(const OperatorSpec& spec);

// Adjoint within the -H storage convention: quadratic block unchanged,
// linear and constant parts conjugated and negated.  For real structure
// constants this negates c_a and c_star; an involution.
OperatorSpec adjoint(const OperatorSpec& spec);

struct StructureMetric {
  std::array<std::array<Rational, 3>, 3> matrix;
  Rational determinant;
  double vector_modulus;  // sqrt(c_+^2 + c_-^2 + c_0^2)
};

StructureMetric structure_metric(const OperatorSpec& spec);

// Structure constants of the radial operator:
// c_+0 = 2, c_0- = -g2/2, c_-- = -g3, c_+ = 3(1/2 - j), c_- = -(j - 1/4) g2,
// c_star = -B, everything else zero.
OperatorSpec canonical_spec(const Rational& j, const Rational& g2, const Rational& g3,
                            const Rational& B);

// The canonical operator actually used downstream: build_from_spec of the
// canonical structure constants (identical to the composition path).
DifferentialOperator canonical_operator(const Rational& j, const Rational& g2,
                                        const Rational& g3, const Rational& B);

// Transcription of the radial equation as displayed:
// (4r^3 - g2 r - g3) D^2 - (n - 1/2)(6r^2 - g2/2) D + n(2n-1) r - B.
DifferentialOperator radial_operator(int n, const Rational& g2, const Rational& g3,
                                     const Rational& B);

// Transcription of the printed explicit form of the algebraized operator:
// (4r^3 - g2 r - g3) D^2 + ((9/2)(2j-1) r^2 + g2/4) D + 7j(2j-1) r - B.
// Its first-order coefficient disagrees with the composition path; see
// canonical_form_findings().
DifferentialOperator printed_canonical_operator(const Rational& j, const Rational& g2,
                                                const Rational& g3, const Rational& B);

// Findings: the [J+,J-] sign and the printed first-order coefficient.
report::Report commutation_findings();
report::Report canonical_form_findings(const Rational& j, const Rational& g2,
                                       const Rational& g3);

}  // namespace algebra
}  // namespace halphen

#endif
