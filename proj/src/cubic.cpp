#include "halphen/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace halphen {
namespace exactmath {

namespace {

using cdouble = std::complex<double>;

cdouble horner(const std::vector<cdouble>& c, cdouble x) {
  cdouble acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}


// Newton refinement in extended precision so the returned double root is
// limited only by its own representation.
cdouble newton_polish(const Polynomial& p, cdouble x0, int iters = 24) {
  using cld = std::complex<long double>;
  std::vector<cld> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(a.template convert_to<long double>(), 0.0L);
  cld x(x0.real(), x0.imag());
  for (int i = 0; i < iters; ++i) {
    cld f = 0, df = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
      df = df * x + f;
      f = f * x + c[k];
    }
    if (std::abs(df) == 0.0L) break;
    cld step = f / df;
    x -= step;
    if (std::abs(step) <= 1e-20L * (1.0L + std::abs(x))) break;
  }
  return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

// Divides p by (x - r) exactly; the caller guarantees p(r) = 0.
Polynomial deflate(const Polynomial& p, const Rational& r) {
  int n = p.degree();
  std::vector<Rational> q(static_cast<std::size_t>(n), Rational(0));
  Rational carry = p.coeff(n);
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = carry;
    carry = p.coeff(k) + carry * r;
  }
  return Polynomial(std::move(q));
}

// Tries to certify x as a rational root of the integer-cleared polynomial.
// Rational roots p/q have q dividing the leading integer coefficient, so
// x * lead is (nearly) an integer; snap and verify exactly.
std::optional<Rational> snap_rational_root(const Polynomial& p, double x) {
  Integer lead_den(1);
  for (const auto& c : p.coeffs()) lead_den = boost::multiprecision::lcm(lead_den, den(c));
  Integer lead = num(p.coeff(p.degree()) * Rational(lead_den));
  if (lead < 0) lead = -lead;
  double scaled = x * to_double(Rational(lead));
  if (!std::isfinite(scaled) || std::abs(scaled) > 9.0e15) return std::nullopt;
  Integer base(static_cast<long long>(std::llround(scaled)));
  for (long long off : {0ll, 1ll, -1ll}) {
    Rational cand(base + off, lead);
    if (p.eval(cand) == 0) return cand;
  }
  return std::nullopt;
}

std::vector<cdouble> to_cdouble(const Polynomial& p) {
  std::vector<cdouble> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(to_double(a), 0.0);
  return c;
}

}  // namespace

std::vector<std::complex<double>> durand_kerner(const std::vector<cdouble>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<cdouble> z(static_cast<std::size_t>(n));
  cdouble seed(0.4, 0.9);
  cdouble acc = 1.0;
  for (int i = 0; i < n; ++i) {
    acc *= seed;
    z[static_cast<std::size_t>(i)] = acc;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      cdouble num = horner(coeffs, z[i]);
      cdouble den = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != i) den *= (z[i] - z[k]);
      if (std::abs(den) == 0.0) {
        z[i] += cdouble(1e-8, 1e-8);
        continue;
      }
      cdouble step = num / den;
      z[i] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

std::array<Scalar, 3> CubicRoots::flat() const {
  std::vector<Scalar> all;
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) all.push_back(r.value);
  std::sort(all.begin(), all.end(), Scalar::descending);
  return {all[0], all[1], all[2]};
}

CubicRoots solve_cubic(const Rational& a3, const Rational& a2, const Rational& a1,
                       const Rational& a0) {
  if (a3 == 0) throw domain_error("solve_cubic: leading coefficient is zero (degree error)");
  Rational b2 = a2 / a3, b1 = a1 / a3, b0 = a0 / a3;
  Polynomial p({b0, b1, b2, Rational(1)});

  CubicRoots result;

  // Repeated-root structure is exact: a repeated root of a rational cubic is
  // itself rational (it is a root of the degree <= 2 gcd with p').
  // Discriminant of x^3 + b2 x^2 + b1 x + b0:
  Rational disc = Rational(18) * b2 * b1 * b0 - Rational(4) * b2 * b2 * b2 * b0 +
                  b2 * b2 * b1 * b1 - Rational(4) * b1 * b1 * b1 -
                  Rational(27) * b0 * b0;

  if (disc == 0) {
    // gcd(p, p') has degree 1 or 2; its rational roots are the repeated ones.
    Rational triple = -b2 / Rational(3);
    if (p.eval(triple) == 0 && p.derivative().eval(triple) == 0 &&
        p.derivative(2).eval(triple) == 0) {
      result.roots.push_back({Scalar::from_rational(triple), 3});
      result.all_real = true;
      return result;
    }
    // Double root d satisfies p = (x-d)^2 (x-e); from Vieta d is rational:
    // p'(x) = 3x^2 + 2b2 x + b1 has d as a rational root.
    Rational qa(3), qb = Rational(2) * b2, qc = b1;
    Rational qdisc = qb * qb - Rational(4) * qa * qc;
    auto sq = sqrt_exact(qdisc);
    if (!sq) throw structural_error("solve_cubic: zero discriminant without rational double root");
    for (int sign : {+1, -1}) {
      Rational d = (-qb + Rational(sign) * *sq) / (Rational(2) * qa);
      if (p.eval(d) == 0) {
        Rational e = -b2 - Rational(2) * d;  // root sum
        result.roots.push_back({Scalar::from_rational(d), 2});
        if (e != d) result.roots.push_back({Scalar::from_rational(e), 1});
        else result.roots[0].multiplicity = 3;
        result.all_real = true;
        return result;
      }
    }
    throw structural_error("solve_cubic: inconsistent repeated-root case");
  }

  // Squarefree cubic: pull out exact rational roots first.
  Polynomial rem = p;
  std::vector<Rational> rational_roots;
  {
    std::vector<cdouble> c = to_cdouble(p);
    auto approx = durand_kerner(c);
    for (auto z : approx) {
      if (rem.degree() < 1) break;
      if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z.real()))) continue;
      z = newton_polish(p, z);
      auto cand = snap_rational_root(rem, z.real());
      if (cand) {
        rational_roots.push_back(*cand);
        rem = deflate(rem, *cand);
      }
    }
  }
  for (const auto& r : rational_roots) result.roots.push_back({Scalar::from_rational(r), 1});

  if (rem.degree() == 2) {
    Rational qa = rem.coeff(2), qb = rem.coeff(1), qc = rem.coeff(0);
    Rational qdisc = qb * qb - Rational(4) * qa * qc;
    auto sq = sqrt_exact(qdisc);
    if (sq) {
      result.roots.push_back({Scalar::from_rational((-qb + *sq) / (Rational(2) * qa)), 1});
      result.roots.push_back({Scalar::from_rational((-qb - *sq) / (Rational(2) * qa)), 1});
    } else {
      double da = to_double(qa), db = to_double(qb);
      double dd = to_double(qdisc);
      if (dd >= 0) {
        double s = std::sqrt(dd);
        result.roots.push_back({Scalar::from_double((-db + s) / (2 * da)), 1});
        result.roots.push_back({Scalar::from_double((-db - s) / (2 * da)), 1});
      } else {
        double s = std::sqrt(-dd);
        result.roots.push_back({Scalar::from_double(-db / (2 * da), s / (2 * da)), 1});
        result.roots.push_back({Scalar::from_double(-db / (2 * da), -s / (2 * da)), 1});
      }
    }
  } else if (rem.degree() == 3) {
    // Depressed-cubic radical formulas (the q, t, s+- route).
    // q = b1/3 - b2^2/9, t = (b1 b2 - 3 b0)/6 - b2^3/27.
    double db2 = to_double(b2), db1 = to_double(b1), db0 = to_double(b0);
    double q = db1 / 3.0 - db2 * db2 / 9.0;
    double t = (db1 * db2 - 3.0 * db0) / 6.0 - db2 * db2 * db2 / 27.0;
    cdouble rad = std::sqrt(cdouble(q * q * q + t * t, 0.0));
    cdouble sp = std::pow(cdouble(t, 0.0) + rad, 1.0 / 3.0);
    if (std::abs(sp) < 1e-30) sp = std::pow(cdouble(t, 0.0) - rad, 1.0 / 3.0);
    cdouble sm = (std::abs(sp) < 1e-30) ? cdouble(0.0, 0.0) : cdouble(-q, 0.0) / sp;
    cdouble shift(-db2 / 3.0, 0.0);
    cdouble i_s3 = cdouble(0.0, std::sqrt(3.0) / 2.0);
    std::array<cdouble, 3> zs = {sp + sm + shift, -0.5 * (sp + sm) + shift + i_s3 * (sp - sm),
                                 -0.5 * (sp + sm) + shift - i_s3 * (sp - sm)};
    for (auto z : zs) {
      z = newton_polish(p, z);
      if (std::abs(z.imag()) <= 1e-12 * (1.0 + std::abs(z.real()))) z = cdouble(z.real(), 0.0);
      if (std::abs(z.real()) <= 1e-12 * (1.0 + std::abs(z.imag()))) z = cdouble(0.0, z.imag());
      result.roots.push_back({Scalar::from_complex(z), 1});
    }
  } else if (rem.degree() == 1) {
    result.roots.push_back({Scalar::from_rational(-rem.coeff(0) / rem.coeff(1)), 1});
  }

  result.all_real = true;
  for (const auto& r : result.roots)
    if (!r.value.is_real(0.0)) result.all_real = false;
  std::sort(result.roots.begin(), result.roots.end(),
            [](const CubicRoot& a, const CubicRoot& b) {
              return Scalar::descending(a.value, b.value);
            });
  return result;
}

std::vector<Scalar> polynomial_roots(const Polynomial& p) {
  if (p.degree() < 1) return {};
  Polynomial rem = p;
  std::vector<Scalar> out;

  // Exact factors of r^k.
  while (rem.degree() >= 1 && rem.coeff(0) == 0) {
    out.push_back(Scalar::from_rational(Rational(0)));
    std::vector<Rational> shifted(rem.coeffs().begin() + 1, rem.coeffs().end());
    rem = Polynomial(std::move(shifted));
  }

  while (rem.degree() >= 1) {
    if (rem.degree() == 1) {
      out.push_back(Scalar::from_rational(-rem.coeff(0) / rem.coeff(1)));
      break;
    }
    auto approx = durand_kerner(to_cdouble(rem * (Rational(1) / rem.coeff(rem.degree()))));
    bool found = false;
    for (auto z : approx) {
      if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z.real()))) continue;
      z = newton_polish(rem, z);
      auto cand = snap_rational_root(rem, z.real());
      if (cand) {
        out.push_back(Scalar::from_rational(*cand));
        rem = deflate(rem, *cand);
        found = true;
        break;  // restart root localization on the deflated polynomial
      }
    }
    if (!found) {
      for (auto z : approx) {
        z = newton_polish(rem, z);
        if (std::abs(z.imag()) <= 1e-10 * (1.0 + std::abs(z.real()))) z = cdouble(z.real(), 0.0);
        if (std::abs(z.real()) <= 1e-12 * (1.0 + std::abs(z.imag()))) z = cdouble(0.0, z.imag());
        out.push_back(Scalar::from_complex(z));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), Scalar::ascending);
  return out;
}

}  // namespace exactmath
}  // namespace halphen
