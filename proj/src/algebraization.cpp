#include "halphen/algebraization.hpp"

#include <cmath>

namespace halphen {
namespace algebra {

using exactmath::to_double;

Polynomial apply_generator(Gen which, const Rational& j, const Polynomial& p) {
  Polynomial d = p.derivative();
  switch (which) {
    case Gen::Minus:
      return d;
    case Gen::Zero:
      return d.shifted(1) - p * j;
    case Gen::Plus:
      return d.shifted(2) - p.shifted(1) * (Rational(2) * j);
  }
  return Polynomial();
}

Polynomial commutator(Gen a, Gen b, const Rational& j, const Polynomial& p) {
  return apply_generator(a, j, apply_generator(b, j, p)) -
         apply_generator(b, j, apply_generator(a, j, p));
}

OperatorSpec::OperatorSpec(const std::array<std::array<Rational, 3>, 3>& c_ab,
                           const std::array<Rational, 3>& c_a, const Rational& c_star,
                           const Rational& j)
    : c_ab_(c_ab), c_a_(c_a), c_star_(c_star), j_(j) {
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (c_ab_[a][b] != c_ab_[b][a])
        throw structural_error("OperatorSpec: structure constants must be symmetric");
}

bool OperatorSpec::exactly_solvable() const {
  return c(Gen::Plus, Gen::Minus) == 0 && c(Gen::Plus, Gen::Plus) == 0 &&
         c(Gen::Plus, Gen::Zero) == 0 && c(Gen::Plus) == 0;
}

Polynomial apply_spec_directly(const OperatorSpec& spec, const Polynomial& p) {
  const Rational& j = spec.j();
  auto J = [&](Gen g, const Polynomial& q) { return apply_generator(g, j, q); };

  Polynomial acc = p * spec.c_star();
  const Gen gens[3] = {Gen::Plus, Gen::Zero, Gen::Minus};
  for (Gen a : gens) acc = acc + J(a, p) * spec.c(a);
  // Quadratic part, symmetrized as written: diagonal terms J_a^2, off-diagonal
  // pairs J_a J_b + J_b J_a each weighted by the (symmetric) c_ab.
  for (int ia = 0; ia < 3; ++ia) {
    for (int ib = ia; ib < 3; ++ib) {
      Gen a = gens[ia], b = gens[ib];
      const Rational& cab = spec.c(a, b);
      if (cab == 0) continue;
      if (ia == ib) {
        acc = acc + J(a, J(a, p)) * cab;
      } else {
        acc = acc + (J(a, J(b, p)) + J(b, J(a, p))) * cab;
      }
    }
  }
  return acc;
}

DifferentialOperator build_from_spec(const OperatorSpec& spec) {
  const Rational& j = spec.j();
  const Rational cpp = spec.c(Gen::Plus, Gen::Plus), cp0 = spec.c(Gen::Plus, Gen::Zero),
                 c00 = spec.c(Gen::Zero, Gen::Zero), cpm = spec.c(Gen::Plus, Gen::Minus),
                 c0m = spec.c(Gen::Zero, Gen::Minus), cmm = spec.c(Gen::Minus, Gen::Minus);
  const Rational cp = spec.c(Gen::Plus), c0 = spec.c(Gen::Zero), cm = spec.c(Gen::Minus);

  Polynomial P4({cmm, Rational(2) * c0m, c00 + Rational(2) * cpm, Rational(2) * cp0, cpp});
  Polynomial P2({cm, c0, cp});
  Rational P0 = j * (j + 1) / Rational(3) * (c00 - Rational(4) * cpm) + spec.c_star();

  DifferentialOperator op;
  op.p2 = P4;
  op.p1 = P2 - P4.derivative() * ((Rational(2) * j - 1) / Rational(2));
  op.p0 = Polynomial::constant(P0) - P2.derivative() * j +
          P4.derivative(2) * (j * (Rational(2) * j - 1) / Rational(6));
  return op;
}

OperatorSpec adjoint(const OperatorSpec& spec) {
  std::array<std::array<Rational, 3>, 3> c_ab;
  std::array<Rational, 3> c_a;
  const Gen gens[3] = {Gen::Plus, Gen::Zero, Gen::Minus};
  for (int a = 0; a < 3; ++a) {
    c_a[a] = -spec.c(gens[a]);  // rational constants: conjugation is identity
    for (int b = 0; b < 3; ++b) c_ab[a][b] = spec.c(gens[a], gens[b]);
  }
  return OperatorSpec(c_ab, c_a, -spec.c_star(), spec.j());
}

StructureMetric structure_metric(const OperatorSpec& spec) {
  StructureMetric m;
  const Gen gens[3] = {Gen::Plus, Gen::Zero, Gen::Minus};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m.matrix[a][b] = spec.c(gens[a], gens[b]);
  const auto& g = m.matrix;
  m.determinant = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                  g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                  g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  Rational sq = spec.c(Gen::Plus) * spec.c(Gen::Plus) +
                spec.c(Gen::Minus) * spec.c(Gen::Minus) + spec.c(Gen::Zero) * spec.c(Gen::Zero);
  m.vector_modulus = std::sqrt(to_double(sq));
  return m;
}

OperatorSpec canonical_spec(const Rational& j, const Rational& g2, const Rational& g3,
                            const Rational& B) {
  std::array<std::array<Rational, 3>, 3> c_ab{};
  for (auto& row : c_ab) row.fill(Rational(0));
  c_ab[0][1] = c_ab[1][0] = Rational(2);                 // c_+0
  c_ab[1][2] = c_ab[2][1] = -g2 / Rational(2);           // c_0-
  c_ab[2][2] = -g3;                                      // c_--
  std::array<Rational, 3> c_a = {Rational(3) * (Rational(1, 2) - j),  // c_+
                                 Rational(0),                          // c_0
                                 -(j - Rational(1, 4)) * g2};          // c_-
  return OperatorSpec(c_ab, c_a, -B, j);
}

DifferentialOperator canonical_operator(const Rational& j, const Rational& g2,
                                        const Rational& g3, const Rational& B) {
  return build_from_spec(canonical_spec(j, g2, g3, B));
}

DifferentialOperator radial_operator(int n, const Rational& g2, const Rational& g3,
                                     const Rational& B) {
  Rational nn(n);
  DifferentialOperator op;
  op.p2 = Polynomial({-g3, -g2, Rational(0), Rational(4)});
  op.p1 = Polynomial({-g2 / Rational(2), Rational(0), Rational(6)}) * (-(nn - Rational(1, 2)));
  op.p0 = Polynomial({-B, nn * (Rational(2) * nn - 1)});
  return op;
}

DifferentialOperator printed_canonical_operator(const Rational& j, const Rational& g2,
                                                const Rational& g3, const Rational& B) {
  DifferentialOperator op;
  op.p2 = Polynomial({-g3, -g2, Rational(0), Rational(4)});
  op.p1 = Polynomial({g2 / Rational(4), Rational(0),
                      Rational(9, 2) * (Rational(2) * j - 1)});
  op.p0 = Polynomial({-B, Rational(7) * j * (Rational(2) * j - 1)});
  return op;
}

report::Report commutation_findings() {
  report::Report rep;
  rep.add("algebraization.commutator[J+,J-]", "[J+, J-] = +2 J0",
          "[J+, J-] = -2 J0 in the differential realization",
          "the 2x2 matrix realization satisfies [X+, X-] = +2H; the first-order "
          "differential operators satisfy the opposite sign, verified on r^k");
  return rep;
}

report::Report canonical_form_findings(const Rational& j, const Rational& g2,
                                       const Rational& g3) {
  report::Report rep;
  DifferentialOperator printed = printed_canonical_operator(j, g2, g3, Rational(0));
  DifferentialOperator derived = canonical_operator(j, g2, g3, Rational(0));
  if (printed.p1 != derived.p1) {
    rep.add("algebraization.canonical_operator.p1",
            printed.p1.to_string(), derived.p1.to_string(),
            "printed explicit form vs generator composition of the structure "
            "constants (j=" + exactmath::to_string(j) + ")");
  }
  if (printed.p0 != derived.p0) {
    rep.add("algebraization.canonical_operator.p0", printed.p0.to_string(), derived.p0.to_string(), "");
  }
  return rep;
}

}  // namespace algebra
}  // namespace halphen
