#include "halphen/deltaseries.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace halphen {
namespace dseries {

using exactmath::falling_factorial;
using exactmath::generalized_binomial;
using exactmath::to_double;

void SigmaPolynomial::add(const SigmaTerm& t) {
  if (t.coeff.is_zero()) return;
  if (t.power < 0) throw domain_error("SigmaPolynomial: negative sigma power");
  if (t.power >= static_cast<int>(coeffs.size()))
    coeffs.resize(static_cast<std::size_t>(t.power) + 1, GaussianRational{Rational(0), Rational(0)});
  coeffs[static_cast<std::size_t>(t.power)].re += t.coeff.re;
  coeffs[static_cast<std::size_t>(t.power)].im += t.coeff.im;
}

SigmaTerm fourier_term(int power_r, int deriv_order) {
  if (power_r < 0 || deriv_order < 0)
    throw domain_error("fourier_term: negative power or derivative order");
  SigmaTerm t;
  if (power_r > deriv_order) {
    t.coeff = {Rational(0), Rational(0)};
    t.power = 0;
    return t;
  }
  Rational mag = falling_factorial(deriv_order, power_r);
  // (-i)^e cycles 1, -i, -1, i.
  switch ((power_r + deriv_order) % 4) {
    case 0: t.coeff = {mag, Rational(0)}; break;
    case 1: t.coeff = {Rational(0), -mag}; break;
    case 2: t.coeff = {-mag, Rational(0)}; break;
    default: t.coeff = {Rational(0), mag}; break;
  }
  t.power = deriv_order - power_r;
  return t;
}

WeightSpec weight_exponents(int n) {
  WeightSpec spec;
  spec.n = n;
  spec.exponent = Rational(-(2 * n + 3), 4);
  spec.floor_n1 = exactmath::floor(spec.exponent);
  spec.integral_path = (n < 0) && (n % 2 == 0);
  if (spec.integral_path) spec.s = -n / 2;
  if (spec.floor_n1 >= 0) {
    int fl = spec.floor_n1.template convert_to<int>();
    for (int p = 0; p <= fl; ++p) {
      WeightTerm term;
      term.p = p;
      Rational sign = (p % 2 == 0) ? Rational(1) : Rational(-1);
      Rational scale = Rational(1, Integer(1) << (2 * p));
      term.weight = sign * scale * generalized_binomial(spec.exponent, p);
      term.m = 3 * fl - 2 * p;
      spec.terms.push_back(term);
    }
  }
  return spec;
}

namespace {

struct InstanceData {
  Rational denom;      // n(2n-1)(k)_{m+1} - (k)_m q
  Rational num_eps;    // 4(k)_{m+1} + (k)_{m-1}, multiplies a_{k-1}
  Rational num_sigma;  // (1-2n)[3(k)_{m+1} + (1/4)(k)_{m-1}], multiplies a_{k-2}
};

InstanceData instance_data(int k, int m, int n, const Rational& q) {
  Rational fkm1 = falling_factorial(k, m + 1);
  Rational fkm = falling_factorial(k, m);
  Rational fkmm1 = falling_factorial(k, m - 1);
  Rational nn(n);
  InstanceData d;
  d.denom = nn * (Rational(2) * nn - 1) * fkm1 - fkm * q;
  d.num_eps = Rational(4) * fkm1 + fkmm1;
  d.num_sigma = (Rational(1) - Rational(2) * nn) * (Rational(3) * fkm1 + fkmm1 / Rational(4));
  return d;
}

LinForm lin_add(const LinForm& a, const LinForm& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
LinForm lin_scale(const LinForm& a, const Rational& f) { return {a.c0 * f, a.c1 * f}; }

}  // namespace

double LinForm::value(double sqrt_disc) const {
  return to_double(c0) + to_double(c1) * sqrt_disc;
}

double PerMChain::coeff_value(int k) const {
  const LinForm& f = a[static_cast<std::size_t>(k)];
  if (disc_negative && f.c1 != 0) return std::numeric_limits<double>::quiet_NaN();
  return f.value(sqrt_disc);
}

std::pair<Rational, Rational> sigma_epsilon(int k, int m, int n, const Rational& q) {
  InstanceData d = instance_data(k, m, n, q);
  if (d.denom == 0)
    throw domain_error("sigma_epsilon: zero denominator at (k=" + std::to_string(k) +
                       ", m=" + std::to_string(m) + ")");
  return {d.num_sigma / d.denom, d.num_eps / d.denom};
}

const PerMChain* DistributionExpansion::chain_for_m(int m) const {
  for (const auto& c : per_m)
    if (c.m == m) return &c;
  return nullptr;
}

namespace {

PerMChain build_chain(int K, int n, const Rational& q, const Rational& K2, const WeightTerm& wt) {
  PerMChain chain;
  chain.m = wt.m;
  chain.p = wt.p;
  chain.weight = wt.weight;
  chain.a.assign(static_cast<std::size_t>(K) + 1, LinForm{Rational(0), Rational(0)});
  std::vector<bool> set(static_cast<std::size_t>(K) + 1, false);

  chain.a[0] = {Rational(1), Rational(0)};
  set[0] = true;

  // a_1 from the printed closed form where its denominator permits:
  // a_1 = sigma_1/2 + (1 - 2 K2) sqrt(sigma_1^2 + 4 eps_1) / 2.
  {
    InstanceData d1 = instance_data(1, chain.m, n, q);
    if (d1.denom != 0) {
      Rational s1 = d1.num_sigma / d1.denom;
      Rational e1 = d1.num_eps / d1.denom;
      chain.disc = s1 * s1 + Rational(4) * e1;
      chain.disc_defined = true;
      chain.disc_negative = (chain.disc < 0);
      chain.sqrt_disc = std::sqrt(std::abs(to_double(chain.disc)));
      Rational lam_coeff = (Rational(1) - Rational(2) * K2) / Rational(2);
      auto exact_root = exactmath::sqrt_exact(chain.disc);
      if (exact_root) {
        // Square discriminant: the root folds into the rational part.
        chain.a[1] = {s1 / Rational(2) + lam_coeff * *exact_root, Rational(0)};
      } else {
        chain.a[1] = {s1 / Rational(2), lam_coeff};
      }
      set[1] = true;
      chain.a1_prescribed = true;
    }
  }

  auto use = [&](int idx) -> LinForm {
    if (!set[static_cast<std::size_t>(idx)]) {
      chain.a[static_cast<std::size_t>(idx)] = {Rational(0), Rational(0)};
      set[static_cast<std::size_t>(idx)] = true;
    }
    return chain.a[static_cast<std::size_t>(idx)];
  };

  for (int k = 2; k <= K; ++k) {
    InstanceData d = instance_data(k, chain.m, n, q);
    if (d.denom != 0) {
      LinForm prev = use(k - 1);
      LinForm prev2 = use(k - 2);
      chain.a[static_cast<std::size_t>(k)] = lin_scale(
          lin_add(lin_scale(prev, d.num_eps), lin_scale(prev2, d.num_sigma)),
          Rational(1) / d.denom);
      set[static_cast<std::size_t>(k)] = true;
      continue;
    }
    // Zero denominator: the instance constrains earlier coefficients instead
    // of defining a_k.
    if (d.num_eps == 0 && d.num_sigma == 0) continue;  // vacuous (trivial range)
    if (!set[static_cast<std::size_t>(k - 1)] && d.num_eps != 0) {
      LinForm prev2 = use(k - 2);
      chain.a[static_cast<std::size_t>(k - 1)] =
          lin_scale(prev2, -(d.num_sigma / d.num_eps));
      set[static_cast<std::size_t>(k - 1)] = true;
      continue;
    }
    LinForm lhs = lin_add(lin_scale(use(k - 1), d.num_eps), lin_scale(use(k - 2), d.num_sigma));
    if (!lhs.is_zero())
      throw domain_error("coefficients_recurrence: inconsistent zero-denominator instance "
                         "at (k=" + std::to_string(k) + ", m=" + std::to_string(chain.m) + ")");
  }
  return chain;
}

}  // namespace

DistributionExpansion coefficients_recurrence(int K, int n, const Rational& q,
                                              const Rational& K2) {
  if (K < 1) throw domain_error("coefficients_recurrence: K must be >= 1");
  if (!(K2 > 0 && K2 < 1)) throw domain_error("coefficients_recurrence: K2 must lie in (0,1)");
  WeightSpec spec = weight_exponents(n);
  if (!spec.integral_path)
    throw domain_error("coefficients_recurrence: the expansion path requires n = -2s, s >= 1 "
                       "(floor of the weight exponent is non-integral otherwise)");

  DistributionExpansion exp;
  exp.n = n;
  exp.s = spec.s;
  exp.K = K;
  exp.q = q;
  exp.K2 = K2;
  for (const auto& wt : spec.terms) exp.per_m.push_back(build_chain(K, n, q, K2, wt));
  std::sort(exp.per_m.begin(), exp.per_m.end(),
            [](const PerMChain& a, const PerMChain& b) { return a.m < b.m; });

  exp.assembled.assign(static_cast<std::size_t>(K) + 1, 0.0);
  for (const auto& chain : exp.per_m)
    for (int k = 0; k <= K; ++k) exp.assembled[static_cast<std::size_t>(k)] += chain.coeff_value(k);
  return exp;
}

ClosedFormValue coefficients_closed_form(int k, int m, int n, const Rational& q, double K1,
                                         double K2) {
  if (std::abs(K1 + K2 - 1.0) > 1e-12)
    throw domain_error("coefficients_closed_form: K1 + K2 must equal 1");
  if (k == 0) return {1.0, false};
  auto [sig, eps] = sigma_epsilon(k, m, n, q);
  double disc = to_double(sig) * to_double(sig) + 4.0 * to_double(eps);
  ClosedFormValue out;
  if (disc < 0) {
    out.complex_branch = true;
    // K1 t_+^k + K2 t_-^k with a conjugate pair; real part returned for the
    // symmetric K1 = K2 weighting, NaN otherwise.
    std::complex<double> tp(to_double(sig) / 2.0, std::sqrt(-disc) / 2.0);
    std::complex<double> value = K1 * std::pow(tp, k) + K2 * std::pow(std::conj(tp), k);
    out.value = value.real();
    return out;
  }
  double root = std::sqrt(disc);
  double tp = (to_double(sig) + root) / 2.0;
  double tm = (to_double(sig) - root) / 2.0;
  out.value = K1 * std::pow(tp, k) + K2 * std::pow(tm, k);
  return out;
}

FourierReport verify_fourier_condition(const DistributionExpansion& exp) {
  FourierReport rep;
  for (const auto& chain : exp.per_m) {
    auto coeff = [&](int idx) -> LinForm {
      if (idx < 0 || idx > exp.K) return {Rational(0), Rational(0)};
      return chain.a[static_cast<std::size_t>(idx)];
    };
    for (int k = 2; k <= exp.K + 2; ++k) {
      InstanceData d = instance_data(k, chain.m, exp.n, exp.q);
      LinForm bracket = lin_add(
          lin_add(lin_scale(coeff(k - 1), d.num_eps), lin_scale(coeff(k - 2), d.num_sigma)),
          lin_scale(coeff(k), -d.denom));
      FourierResidual res;
      res.m = chain.m;
      res.k = k;
      res.sigma_order = k - 2;
      res.value = bracket;
      res.exact_zero = bracket.is_zero();
      res.magnitude = res.exact_zero ? 0.0 : std::abs(bracket.value(chain.sqrt_disc));
      if (res.sigma_order <= exp.K - 2) {
        rep.max_interior_magnitude = std::max(rep.max_interior_magnitude, res.magnitude);
        if (!res.exact_zero) rep.all_interior_exact_zero = false;
        rep.interior.push_back(std::move(res));
      } else {
        rep.boundary.push_back(std::move(res));
      }
    }
  }
  return rep;
}

report::Report closed_form_findings(const DistributionExpansion& exp) {
  report::Report rep;
  double K2 = to_double(exp.K2);
  double K1 = 1.0 - K2;
  for (const auto& chain : exp.per_m) {
    if (!chain.disc_defined) continue;
    for (int k = 2; k <= std::min(exp.K, 4); ++k) {
      ClosedFormValue cf;
      try {
        cf = coefficients_closed_form(k, chain.m, exp.n, exp.q, K1, K2);
      } catch (const domain_error&) {
        continue;
      }
      double rec = chain.coeff_value(k);
      if (std::isnan(rec)) continue;
      if (std::abs(cf.value - rec) > 1e-12 * (1.0 + std::abs(rec)))
        rep.add("deltaseries.closed_form[m=" + std::to_string(chain.m) + ",k=" + std::to_string(k) + "]",
                "K1 t_+^k + K2 t_-^k = " + std::to_string(cf.value),
                "recurrence a_k = " + std::to_string(rec),
                "the characteristic-equation method assumes k-independent sigma/epsilon");
    }
  }
  return rep;
}

}  // namespace dseries
}  // namespace halphen
