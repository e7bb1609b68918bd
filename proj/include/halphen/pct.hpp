// The exactly-solvable branch at spin 1/2: the transcribed operator, gauge
// potential residues, the exponential change of variable, terminating
// hypergeometric / Jacobi polynomials, normalization constants, and the
// assembled approximate wave functions with residual diagnostics.
#ifndef HALPHEN_PCT_HPP
#define HALPHEN_PCT_HPP

#include "halphen/algebraization.hpp"
#include "halphen/report.hpp"
#include "halphen/weierstrass.hpp"

#include <array>
#include <vector>

namespace halphen {
namespace pct {

using algebra::DifferentialOperator;
using exactmath::Polynomial;
using exactmath::Rational;
using exactmath::Scalar;
using weierstrass::EllipticInvariants;

// (4r^3 - g2 r - g3) D^2 + (g2/4) D + B, transcribed as displayed.  Its
// first-order and constant terms disagree in sign with the spin-1/2
// composition path; see exact_operator_findings().
DifferentialOperator exact_operator(const Rational& g2, const Rational& g3, const Rational& B);

// nu_s = g2 / (32 prod_{t != s} (e_s - e_t)), aligned with descending roots.
// Reconstruction invariant: sum nu_s / (r - e_s) = g2 / (8 (4r^3 - g2 r - g3)).
struct ResidueTriple {
  std::array<Scalar, 3> nu;
};
ResidueTriple gauge_residues(const EllipticInvariants& inv);

// k_{+-} = (-g2 +- sqrt(g2^2 + 64 B (g3+2))) / (4 (g3+2)); each root
// satisfies 2 (g3+2) k^2 + g2 k - 8 B = 0.  g3 = -2 degenerates to a linear
// equation and is rejected.
struct KPair {
  Scalar k_plus;
  Scalar k_minus;
  bool complex_pair = false;
};
KPair k_pm(const Rational& B, const Rational& g2, const Rational& g3);

// Terminating 2F1(-m, m+nu; gamma | w) as an exact polynomial in w.
// Satisfies w(w-1) F'' + ((nu+1) w - gamma) F' - m(m+nu) F = 0 identically.
Polynomial hyp2f1_terminating(int m, int nu, int gamma);

// Jacobi polynomial by the finite Gamma-ratio sum.
double jacobi_p(int m, double alpha, double beta, double x);
// Independent evaluation by the three-term recurrence.
double jacobi_p_recurrence(int m, double alpha, double beta, double x);

// N_m = 2^{nu-1} Gamma(m+nu-gamma+1) Gamma(m+gamma) / (m! (2m+nu) Gamma(m+nu)).
double jacobi_norm(int m, int nu, int gamma);

enum class Branch { plus, minus };

struct PCTParams {
  int nu = 2;
  int gamma = 1;
  int m = 0;
  Rational B;
  Branch branch = Branch::minus;
  EllipticInvariants inv;

  PCTParams(int nu_, int gamma_, int m_, Rational B_, Branch branch_, EllipticInvariants inv_);
};

// |k|^{-1/2} prod_s (r-e_s)^{-nu_s/2} w^{-(gamma+-1)/2} (w-1)^{(nu-gamma+-1)/2}
//   * P_m^{(nu-gamma, gamma-1)}(2w - 1),  w = exp(k r), k from k_pm.
// k = 0 raises the degenerate-branch error; fractional powers of negative
// (w-1) raise the singularity error.
double exact_wavefunction(const PCTParams& params, double r);

// |H_e R|(r) by finite differences (step 1e-5 * r, Richardson refined).
// Emitted as data, never asserted to vanish.
double wavefunction_residual(const PCTParams& params, double r);

// Findings: transcription vs composition at spin 1/2, the statement-vs-display
// product exponent, the printed Jacobi proportionality constant, and the
// printed expansion-variable sign.
report::Report exact_operator_findings(const Rational& g2, const Rational& g3,
                                       const Rational& B);
report::Report wavefunction_display_findings();
report::Report jacobi_proportionality_findings();

}  // namespace pct
}  // namespace halphen

#endif
