#include "halphen/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace halphen {
namespace weierstrass {

using exactmath::Integer;
using exactmath::to_double;

double RootTriple::max_real() const {
  return std::max({e[0].re(), e[1].re(), e[2].re()});
}

bool RootTriple::all_real(double tol) const {
  for (const auto& v : e)
    if (!v.is_real(tol)) return false;
  return true;
}

namespace {

void assert_triple_invariants(const RootTriple& t, const EllipticInvariants& inv) {
  if (t.all_exact()) {
    Rational sr = t.e[0].re_q() + t.e[1].re_q() + t.e[2].re_q();
    Rational si = t.e[0].im_q() + t.e[1].im_q() + t.e[2].im_q();
    if (sr != 0 || si != 0) throw structural_error("root triple: nonzero root sum");
    // 4 (r-e1)(r-e2)(r-e3) = 4r^3 - g2 r - g3, coefficient-wise.
    Scalar pair = t.e[0] * t.e[1] + t.e[1] * t.e[2] + t.e[0] * t.e[2];
    Scalar prod = t.e[0] * t.e[1] * t.e[2];
    Scalar c1 = Scalar::from_rational(Rational(4)) * pair;          // = -g2
    Scalar c0 = Scalar::from_rational(Rational(-4)) * prod;         // = -g3
    if (!(c1.re_q() == -inv.g2 && c1.im_q() == 0 && c0.re_q() == -inv.g3 && c0.im_q() == 0))
      throw structural_error("root triple: product expansion mismatch");
    return;
  }
  std::complex<double> sum = t.e[0].value() + t.e[1].value() + t.e[2].value();
  double scale = 1.0 + std::max({std::abs(t.e[0].value()), std::abs(t.e[1].value()),
                                 std::abs(t.e[2].value())});
  if (std::abs(sum) > 1e-12 * scale) throw structural_error("root triple: nonzero root sum");
  std::complex<double> pair =
      t.e[0].value() * t.e[1].value() + t.e[1].value() * t.e[2].value() +
      t.e[0].value() * t.e[2].value();
  std::complex<double> prod = t.e[0].value() * t.e[1].value() * t.e[2].value();
  double s2 = 1.0 + std::abs(to_double(inv.g2)) + std::abs(to_double(inv.g3));
  if (std::abs(4.0 * pair + to_double(inv.g2)) > 1e-10 * s2 ||
      std::abs(-4.0 * prod + to_double(inv.g3)) > 1e-10 * s2)
    throw structural_error("root triple: product expansion mismatch");
}

// Smallest-denominator rational within tol of x (continued fractions).
std::optional<Rational> rationalize(double x, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  double y = x;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int i = 0; i < 64; ++i) {
    double fl = std::floor(y);
    if (std::abs(fl) > 9.0e15) return std::nullopt;
    Integer a(static_cast<long long>(fl));
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    Rational cand(p2, q2);
    if (std::abs(to_double(cand) - x) <= tol) return cand;
    double frac = y - fl;
    if (frac < 1e-15) break;
    y = 1.0 / frac;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return std::nullopt;
}

}  // namespace

RootTriple roots_from_invariants(const EllipticInvariants& inv) {
  auto cubic = exactmath::solve_cubic(Rational(4), Rational(0), -inv.g2, -inv.g3);
  RootTriple triple{cubic.flat()};
  assert_triple_invariants(triple, inv);
  return triple;
}

EllipticInvariants invariants_from_roots(const Scalar& e1, const Scalar& e2, const Scalar& e3) {
  if (e1.exact() && e2.exact() && e3.exact()) {
    if (!(e1 + e2 + e3).is_zero())
      throw domain_error("invariants_from_roots: root sum is not zero");
    Scalar pair = e1 * e2 + e2 * e3 + e1 * e3;
    Scalar prod = e1 * e2 * e3;
    if (pair.im_q() != 0 || prod.im_q() != 0)
      throw domain_error("invariants_from_roots: invariants are not real");
    EllipticInvariants inv{Rational(-4) * pair.re_q(), Rational(4) * prod.re_q()};
    return inv;
  }
  std::complex<double> z1 = e1.value(), z2 = e2.value(), z3 = e3.value();
  double scale = 1.0 + std::abs(z1) + std::abs(z2) + std::abs(z3);
  if (std::abs(z1 + z2 + z3) > 1e-9 * scale)
    throw domain_error("invariants_from_roots: root sum is not zero");
  std::complex<double> pair = z1 * z2 + z2 * z3 + z1 * z3;
  std::complex<double> prod = z1 * z2 * z3;
  double g2d = -4.0 * pair.real(), g3d = 4.0 * prod.real();
  double s3 = scale * scale * scale;
  if (std::abs(pair.imag()) > 1e-9 * s3 || std::abs(prod.imag()) > 1e-9 * s3)
    throw domain_error("invariants_from_roots: invariants are not real");
  auto g2 = rationalize(g2d, 1e-9 * (1.0 + std::abs(g2d)));
  auto g3 = rationalize(g3d, 1e-9 * (1.0 + std::abs(g3d)));
  if (!g2 || !g3)
    throw domain_error("invariants_from_roots: could not reconstruct rational invariants");
  return EllipticInvariants{*g2, *g3};
}

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
const double kGK_X[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kGK_WK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kGK_WG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& result, double& err) {
  double hl = 0.5 * (b - a), c = 0.5 * (a + b);
  double fc = f(c);
  double resk = kGK_WK[7] * fc;
  double resg = kGK_WG[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double x = hl * kGK_X[i];
    double fsum = f(c - x) + f(c + x);
    resk += kGK_WK[i] * fsum;
    if (i % 2 == 1) resg += kGK_WG[i / 2] * fsum;
  }
  result = resk * hl;
  err = std::abs((resk - resg) * hl);
}

template <class F>
double adaptive_gk(const F& f, double a, double b, double rel_tol) {
  struct Seg { double a, b, val, err; };
  std::vector<Seg> segs;
  double v, e;
  gk15(f, a, b, v, e);
  segs.push_back({a, b, v, e});
  for (int iter = 0; iter < 2000; ++iter) {
    double total = 0, toterr = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].val;
      toterr += segs[i].err;
      if (segs[i].err > segs[worst].err) worst = i;
    }
    if (toterr <= rel_tol * std::abs(total) || segs[worst].err == 0.0) return total;
    Seg s = segs[worst];
    double mid = 0.5 * (s.a + s.b);
    if (mid <= s.a || mid >= s.b) return total;  // interval exhausted
    Seg left{s.a, mid, 0, 0}, right{mid, s.b, 0, 0};
    gk15(f, left.a, left.b, left.val, left.err);
    gk15(f, right.a, right.b, right.val, right.err);
    segs[worst] = left;
    segs.push_back(right);
  }
  double total = 0;
  for (const auto& s : segs) total += s.val;
  return total;
}

}  // namespace

double r_to_w(double r, const EllipticInvariants& inv) {
  if (!inv.all_real_roots())
    throw domain_error("r_to_w: complex Weierstrass roots (discriminant < 0)");
  RootTriple roots = roots_from_invariants(inv);
  double emax = roots.max_real();
  if (!(r > emax)) throw domain_error("r_to_w: r must exceed the largest root");

  double g2 = to_double(inv.g2), g3 = to_double(inv.g3);
  // u = r + t/(1-t) maps the tail to t in [0,1); the additional t = v(2-v)
  // reparametrization absorbs the (1-t)^{-1/2} endpoint singularity, leaving
  // a smooth integrand on [0,1].
  auto integrand = [&](double v) {
    double omv = 1.0 - v;
    if (omv <= 0) return 1.0;  // limit value at v = 1 (u ~ (1-v)^-2, P3 ~ 4u^3)
    double u = r + (v * (2.0 - v)) / (omv * omv);
    double p3 = ((4.0 * u * u - g2) * u) - g3;
    return 2.0 / (omv * omv * omv * std::sqrt(p3));
  };
  return adaptive_gk(integrand, 0.0, 1.0, 1e-12);
}

report::Report sign_convention_findings() {
  report::Report rep;
  rep.add("weierstrass.g2_sign_convention",
          "g2 = 4(e1 e2 + e2 e3 + e1 e3)",
          "g2 = -4(e1 e2 + e2 e3 + e1 e3)",
          "expanding 4 prod(r - e_s) = 4r^3 - g2 r - g3 forces the minus sign; "
          "the g3 = 4 e1 e2 e3 relation is expansion-consistent as stated");
  return rep;
}

}  // namespace weierstrass
}  // namespace halphen
