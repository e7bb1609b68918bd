// Delta-series machinery: symbolic Fourier rules for distributions, the
// weight-function expansion, the per-m coefficient chains, a closed-form
// cross-check, assembly of the distributional solution, and the
// Fourier-side verification oracle.
#ifndef HALPHEN_DELTASERIES_HPP
#define HALPHEN_DELTASERIES_HPP

#include "halphen/factorials.hpp"
#include "halphen/rational.hpp"
#include "halphen/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace halphen {
namespace dseries {

using exactmath::Integer;
using exactmath::Rational;

// Exact complex-rational coefficient (a + b i).
struct GaussianRational {
  Rational re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

// A single sigma-monomial: coeff * sigma^power.
struct SigmaTerm {
  GaussianRational coeff;
  int power = 0;
};

// Finite linear combination sum_j c_j sigma^j.
struct SigmaPolynomial {
  std::vector<GaussianRational> coeffs;  // index = power of sigma

  void add(const SigmaTerm& t);
  int max_order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// <r^a delta^(b)(r), chi_sigma> = (-i)^{a+b} (b)_a sigma^{b-a}; identically
// zero when a > b (differentiating sigma^b more than b times).
SigmaTerm fourier_term(int power_r, int deriv_order);

struct WeightTerm {
  int p;
  Rational weight;  // (-1)^p 2^{-2p} binom(N1, p)
  int m;            // 3 floor(N1) - 2p
};

struct WeightSpec {
  int n = 0;
  Rational exponent;   // N1 = N2 = N3 = -(2n+3)/4
  Integer floor_n1;
  bool integral_path = false;  // n = -2s with s >= 1
  int s = 0;
  std::vector<WeightTerm> terms;  // p = 0..floor(N1); empty when floor < 0
};

WeightSpec weight_exponents(int n);

// sigma_{k,m} = (1-2n)[3 (k)_{m+1} + (1/4)(k)_{m-1}] / d,
// epsilon_{k,m} = [4 (k)_{m+1} + (k)_{m-1}] / d,
// d = n(2n-1)(k)_{m+1} - (k)_m q.  Zero denominator raises domain_error
// naming (k, m).
std::pair<Rational, Rational> sigma_epsilon(int k, int m, int n, const Rational& q);

// c0 + c1 sqrt(disc): the coefficients live in a quadratic extension of the
// rationals once the a_1 closed form introduces its square root.
struct LinForm {
  Rational c0, c1;
  bool is_zero() const { return c0 == 0 && c1 == 0; }
  double value(double sqrt_disc) const;
};

// One per-m coefficient sequence a_0..a_K.  Coefficients never pinned by an
// instance of the chain (the trivial range) default to zero; see the module
// notes in README.
struct PerMChain {
  int m = 0;
  int p = 0;
  Rational weight;      // assembly metadata only; the merge is unweighted
  std::vector<LinForm> a;
  Rational disc;        // sigma_1^2 + 4 epsilon_1 when defined
  bool disc_defined = false;
  bool a1_prescribed = false;  // a_1 came from the closed form (vs a constraint/default)
  double sqrt_disc = 0.0;      // sqrt(|disc|); disc < 0 flags the complex branch
  bool disc_negative = false;

  double coeff_value(int k) const;
};

struct DistributionExpansion {
  int n = 0, s = 0, K = 0;
  Rational q, K2;
  std::vector<PerMChain> per_m;    // ascending m
  std::vector<double> assembled;   // unweighted sum over m of a_k

  const PerMChain* chain_for_m(int m) const;
};

// Builds every per-m chain for the weight expansion of n (= -2s) and the
// assembled coefficient view.  a_0 = 1 per chain; a_1 from the closed form
// sigma_1/2 + Lambda_1/2 where its denominator permits, otherwise from the
// zero-denominator constraints of the chain itself.
DistributionExpansion coefficients_recurrence(int K, int n, const Rational& q,
                                              const Rational& K2);

inline DistributionExpansion assemble_distribution(int s, const Rational& q,
                                                   const Rational& K2, int K) {
  if (s < 1) throw domain_error("assemble_distribution: s must be >= 1");
  return coefficients_recurrence(K, -2 * s, q, K2);
}

struct ClosedFormValue {
  double value = 0.0;
  bool complex_branch = false;
};

// a_k = K1 t_+^k + K2 t_-^k with t_+- = (sigma_{k,m} +- sqrt(disc_k))/2.
// Requires K1 + K2 = 1.  The characteristic-equation derivation assumes
// k-independent sigma/epsilon, which is false here; see
// closed_form_findings().
ClosedFormValue coefficients_closed_form(int k, int m, int n, const Rational& q, double K1,
                                         double K2);

struct FourierResidual {
  int m = 0;
  int k = 0;            // chain instance index
  int sigma_order = 0;  // k - 2
  LinForm value;
  double magnitude = 0.0;
  bool exact_zero = false;
};

struct FourierReport {
  std::vector<FourierResidual> interior;  // sigma orders 0..K-2
  std::vector<FourierResidual> boundary;  // sigma orders K-1, K (truncation edge)
  double max_interior_magnitude = 0.0;
  bool all_interior_exact_zero = true;
};

// Assembles, per m, the sigma-polynomial of the transformed condition whose
// order-j coefficient is the chain instance k = j + 2, and checks that every
// interior coefficient vanishes (exactly, in the rational data).  Orders past
// K - 2 involve truncated coefficients and are reported separately.
FourierReport verify_fourier_condition(const DistributionExpansion& exp);

// Closed form vs recurrence: equal for k <= 1, divergence for k >= 2 is
// measured and logged.
report::Report closed_form_findings(const DistributionExpansion& exp);

}  // namespace dseries
}  // namespace halphen

#endif
