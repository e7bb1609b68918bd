// Quasi-exact solvability of the radial operator: the banded spectral
// matrix, accessory-parameter spectra, polynomial eigenfunctions, printed
// cross-check formulas (tau table, mu recurrence, determinant recurrences),
// gauge exponents, assembled radial wave functions, and the Schroedinger
// potential.
#ifndef HALPHEN_QES_HPP
#define HALPHEN_QES_HPP

#include "halphen/algebraization.hpp"
#include "halphen/cubic.hpp"
#include "halphen/report.hpp"
#include "halphen/weierstrass.hpp"

#include <optional>
#include <vector>

namespace halphen {
namespace qes {

using algebra::DifferentialOperator;
using exactmath::Polynomial;
using exactmath::Rational;
using exactmath::Scalar;
using weierstrass::EllipticInvariants;

// Action of an operator on the monomial basis of P_{n+1}, with the
// accessory parameter split out: the full matrix is T(B) = m - B I.
// Column k holds the coefficients of op(r^k).
struct SpectralMatrix {
  int dim = 0;
  std::vector<std::vector<Rational>> m;  // m[row][col]

  Rational entry(int row, int col) const { return m[row][col]; }
  // Band entries in tau indexing: tau_{k,k+1}, tau_{k,k-1}, tau_{k,k-2}.
  Rational sup(int k) const { return m[k + 1][k]; }
  Rational sub(int k) const { return m[k - 1][k]; }
  Rational subsub(int k) const { return m[k - 2][k]; }
  bool subsub_vanishes() const;
};

// Builds the matrix by applying op to r^0..r^n.  The operator must map
// P_{n+1} into itself: any coefficient beyond degree n raises
// structural_error naming the offending k.  Pass the operator with B = 0;
// the diagonal then carries the B-independent part.
SpectralMatrix matrix_from_operator(const DifferentialOperator& op, int n);

// Canonical spectral matrix at spin j = n/2 (diagonal identically zero).
SpectralMatrix canonical_matrix(int n, const Rational& g2, const Rational& g3);

// Printed tri-diagonal entries, transcribed verbatim:
//   tau_{k,k+1} = 4k(k-1) + (9/2)(2j-1)k + 7j(2j-1)
//   tau_{k,k}   = -B
//   tau_{k,k-1} = -(g2/4) k (4k-3)
//   tau_{k,k-2} = -k(k-1) g3
struct TauPaper {
  Rational sup, diag, sub, subsub;
};
TauPaper tau_paper(int k, const Rational& j, const Rational& g2, const Rational& g3,
                   const Rational& B = Rational(0));

// Spectral matrix assembled from the printed tau entries (j free, not tied
// to n); used for cross-checks and the free-spin two-level example.
SpectralMatrix paper_tau_matrix(int n, const Rational& j, const Rational& g2,
                                const Rational& g3);

// det(m - B I) as a polynomial in B (leading coefficient (-1)^dim).
Polynomial char_det_polynomial(const SpectralMatrix& sm);

// Accessory values B with det T(B) = 0, i.e. the eigenvalues of m.  Exact
// rational eigenvalues are extracted from the characteristic polynomial and
// the rest deflated numerically; ascending (re, im) with multiplicity.
std::vector<Scalar> accessory_spectrum(int n, const Rational& g2, const Rational& g3);
std::vector<Scalar> spectrum_of(const SpectralMatrix& sm);

// Null vector of T(B), first nonzero entry normalized to 1.  Exact Gaussian
// elimination for rational B, complex elimination otherwise.  Raises
// domain_error when T(B) is nonsingular.
std::vector<Scalar> eigen_polynomial(const Scalar& B, const SpectralMatrix& sm);

struct QESSolution {
  Scalar B;
  std::vector<Scalar> coeffs;  // a_0..a_n
  double residual_norm = 0.0;  // max |T(B) a| entry
  Rational j;
  EllipticInvariants inv;
};

struct QESResult {
  std::vector<QESSolution> solutions;
  SpectralMatrix matrix;
  report::Report findings;
};

// Full pipeline at spin j = n/2: spectrum, null vectors, residuals, and the
// printed-vs-derived findings (tau table, mu shortcut, determinant forms).
QESResult solve_qes(int n, const Rational& g2, const Rational& g3);

// Printed row-addition shortcut values mu_j^(m).  m = 1 and m = 2 follow the
// displayed closed forms; m >= 3 follows the displayed general ratio with
// tau_{k,k} = -B.  Vanishing denominators raise domain_error.
Rational mu_paper(int m, const Rational& j, const Rational& B, const Rational& g2,
                  const Rational& g3);

struct DeterminantReport {
  Scalar dense;                    // authoritative
  bool recurrence_applicable;      // sub-subdiagonal identically zero
  std::optional<Scalar> recurrence;
  Scalar closed_form;              // the lambda_+- expression, evaluated numerically
  report::Report findings;
};
DeterminantReport determinant_paper(const SpectralMatrix& sm, const Scalar& B);

struct CubicAccessoryReport {
  std::array<Scalar, 3> roots;
  report::Report findings;
};
// dim-3 case: the cubic in B from the determinant expansion, solved by the
// depressed-cubic radical formulas; printed coefficient slips are reported.
CubicAccessoryReport cubic_accessory_roots(const SpectralMatrix& sm);

// eta_s = ((9/2)(2j-1) e_s^2 + g2/4) / (4 prod_{t!=s} (e_s - e_t)), aligned
// with the descending root order.  Repeated or complex roots are errors.
std::array<Scalar, 3> gauge_exponents(const Rational& j, const EllipticInvariants& inv);

// 2^{-j} prod_s (r - e_s)^{eta_s - j/2} * sum a_m r^m, for r > max e_s.
double radial_wavefunction(const QESSolution& sol, double r);

// V = -(3 P'^2 - 8 P' Q + 4 Q^2)/(16 P) - P''/4 + Q'/2 - R with
// (P, Q, R) = (p2, p1, p0); requires p2(r) > 0.
double schrodinger_potential(const DifferentialOperator& op, double r);

// The displayed explicit potential, transcribed verbatim.
double potential_paper(const Rational& j, const Rational& g2, const Rational& g3,
                       const Rational& B, double r);

// Per-k tau comparisons (printed formulas vs canonical action vs printed
// operator's own action).
report::Report tau_findings(int n, const Rational& g2, const Rational& g3);

}  // namespace qes
}  // namespace halphen

#endif
