#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "halphen/algebraization.hpp"

#include <random>

using namespace halphen;
using namespace halphen::algebra;
using exactmath::Polynomial;
using exactmath::Rational;

namespace {

OperatorSpec random_spec(std::mt19937_64& gen, const Rational& j) {
  auto rnd = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(gen() % static_cast<unsigned long long>(hi - lo + 1));
  };
  std::array<std::array<Rational, 3>, 3> c_ab{};
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) c_ab[a][b] = c_ab[b][a] = Rational(rnd(-10, 10), rnd(1, 4));
  std::array<Rational, 3> c_a = {Rational(rnd(-10, 10), rnd(1, 4)),
                                 Rational(rnd(-10, 10), rnd(1, 4)),
                                 Rational(rnd(-10, 10), rnd(1, 4))};
  return OperatorSpec(c_ab, c_a, Rational(rnd(-10, 10), rnd(1, 4)), j);
}

}  // namespace

TEST_CASE("generator action on monomials") {
  Rational j(1, 2);
  // J- r^3 = 3 r^2
  CHECK(apply_generator(Gen::Minus, j, Polynomial::monomial(3)) ==
        Polynomial::monomial(2, Rational(3)));
  // J0 r^k = (k - j) r^k
  for (int k = 0; k <= 6; ++k) {
    Polynomial expect = Polynomial::monomial(k, Rational(k) - j);
    CHECK(apply_generator(Gen::Zero, j, Polynomial::monomial(k)) == expect);
  }
  // J+ r^{2j} = 0 for 2j integer
  for (int twoj = 0; twoj <= 6; ++twoj) {
    Rational spin = Rational(twoj) / 2;
    CHECK(apply_generator(Gen::Plus, spin, Polynomial::monomial(twoj)).is_zero());
  }
  // J+ r^k = (k - 2j) r^{k+1}
  CHECK(apply_generator(Gen::Plus, Rational(1), Polynomial::monomial(3)) ==
        Polynomial::monomial(4, Rational(1)));
}

TEST_CASE("commutation relations of the differential realization") {
  for (int twoj = 0; twoj <= 4; ++twoj) {
    Rational j = Rational(twoj) / 2;
    for (int k = 0; k <= 10; ++k) {
      Polynomial mono = Polynomial::monomial(k);
      CHECK(commutator(Gen::Zero, Gen::Plus, j, mono) == apply_generator(Gen::Plus, j, mono));
      CHECK(commutator(Gen::Zero, Gen::Minus, j, mono) ==
            -apply_generator(Gen::Minus, j, mono));
      // the realization satisfies [J+, J-] = -2 J0 (opposite to the printed sign)
      CHECK(commutator(Gen::Plus, Gen::Minus, j, mono) ==
            apply_generator(Gen::Zero, j, mono) * Rational(-2));
    }
  }
  auto rep = commutation_findings();
  REQUIRE(!rep.empty());
  CHECK(rep.items()[0].location.find("[J+,J-]") != std::string::npos);
}

TEST_CASE("spec symmetry is enforced") {
  std::array<std::array<Rational, 3>, 3> c_ab{};
  c_ab[0][1] = Rational(1);  // asymmetric on purpose
  std::array<Rational, 3> c_a{};
  CHECK_THROWS_AS(OperatorSpec(c_ab, c_a, Rational(0), Rational(1)), structural_error);
}

TEST_CASE("apply_spec_directly basic operators") {
  std::array<std::array<Rational, 3>, 3> zero{};
  for (auto& row : zero) row.fill(Rational(0));
  std::array<Rational, 3> no_linear = {Rational(0), Rational(0), Rational(0)};

  // only c_star: the operator is multiplication by c_star
  OperatorSpec const_spec(zero, no_linear, Rational(5), Rational(1));
  Polynomial p({Rational(2), Rational(0), Rational(3)});
  CHECK(apply_spec_directly(const_spec, p) == p * Rational(5));

  // only c_-- = 1: the second derivative
  auto c_mm = zero;
  c_mm[2][2] = Rational(1);
  OperatorSpec d2_spec(c_mm, no_linear, Rational(0), Rational(1));
  CHECK(apply_spec_directly(d2_spec, Polynomial::monomial(4)) ==
        Polynomial::monomial(2, Rational(12)));
}

TEST_CASE("composition on the constant gives 7j(2j-1) r - B") {
  for (int twoj = 0; twoj <= 5; ++twoj) {
    Rational j = Rational(twoj) / 2;
    Rational g2(3, 2), g3(-1, 3), B(7, 5);
    Polynomial got = apply_spec_directly(canonical_spec(j, g2, g3, B), Polynomial::constant(1));
    CHECK(got == Polynomial({-B, Rational(7) * j * (Rational(2) * j - 1)}));
  }
}

TEST_CASE("closed form equals generator composition on random specs") {
  std::mt19937_64 gen(23);
  const Rational spins[5] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                             Rational(2)};
  for (int trial = 0; trial < 25; ++trial) {
    for (const auto& j : spins) {
      OperatorSpec spec = random_spec(gen, j);
      DifferentialOperator op = build_from_spec(spec);
      int kmax = static_cast<int>(exactmath::to_double(j) * 2.0) + 4;
      for (int k = 0; k <= kmax; ++k) {
        Polynomial mono = Polynomial::monomial(k);
        CHECK(op.apply(mono) == apply_spec_directly(spec, mono));
      }
    }
  }
}

TEST_CASE("build_from_spec: constant-only spec") {
  std::array<std::array<Rational, 3>, 3> zero{};
  for (auto& row : zero) row.fill(Rational(0));
  std::array<Rational, 3> no_linear = {Rational(0), Rational(0), Rational(0)};
  DifferentialOperator op =
      build_from_spec(OperatorSpec(zero, no_linear, Rational(9, 4), Rational(2)));
  CHECK(op.p2.is_zero());
  CHECK(op.p1.is_zero());
  CHECK(op.p0 == Polynomial::constant(Rational(9, 4)));
}

TEST_CASE("canonical operator coefficients") {
  Rational j(3, 2), g2(1), g3(0), B(2);
  DifferentialOperator op = canonical_operator(j, g2, g3, B);
  // p2 = 4r^3 - g2 r - g3
  CHECK(op.p2 == Polynomial({Rational(0), Rational(-1), Rational(0), Rational(4)}));
  // p0 = 7j(2j-1) r - B
  CHECK(op.p0 == Polynomial({Rational(-2), Rational(21)}));
  // p1 from composition: (15/2)(1-2j) r^2 - g2/4
  CHECK(op.p1 == Polynomial({Rational(-1, 4), Rational(0), Rational(-15)}));
  // the printed form has (9/2)(2j-1) r^2 + g2/4 instead
  DifferentialOperator printed = printed_canonical_operator(j, g2, g3, B);
  CHECK(printed.p1 == Polynomial({Rational(1, 4), Rational(0), Rational(9)}));
  CHECK(printed.p2 == op.p2);
  CHECK(printed.p0 == op.p0);
  auto rep = canonical_form_findings(j, g2, g3);
  CHECK(!rep.empty());
}

TEST_CASE("radial operator transcription") {
  // n = 0: p1 = +(1/2)(6r^2 - g2/2)
  DifferentialOperator op0 = radial_operator(0, Rational(1), Rational(0), Rational(0));
  CHECK(op0.p1 == Polynomial({Rational(-1, 4), Rational(0), Rational(3)}));
  // n = 1, lemniscatic: p2 = 4r^3 - r, p1 = -(1/2)(6r^2 - 1/2), p0 = r
  DifferentialOperator op1 = radial_operator(1, Rational(1), Rational(0), Rational(0));
  CHECK(op1.p2 == Polynomial({Rational(0), Rational(-1), Rational(0), Rational(4)}));
  CHECK(op1.p1 == Polynomial({Rational(1, 4), Rational(0), Rational(-3)}));
  CHECK(op1.p0 == Polynomial({Rational(0), Rational(1)}));
  // applied to the constant: n(2n-1) r - B
  DifferentialOperator op2 = radial_operator(2, Rational(1), Rational(0), Rational(5));
  CHECK(op2.apply(Polynomial::constant(1)) == Polynomial({Rational(-5), Rational(6)}));
}

TEST_CASE("structure metric") {
  Rational g2(3), g3(7), B(1);
  StructureMetric m = structure_metric(canonical_spec(Rational(1), g2, g3, B));
  CHECK(m.determinant == Rational(28));  // 4 g3
  CHECK(m.matrix[0][1] == Rational(2));
  CHECK(m.matrix[1][2] == -g2 / 2);
  CHECK(m.matrix[2][2] == -g3);
  // g3 = 0 -> determinant 0
  StructureMetric m0 = structure_metric(canonical_spec(Rational(1), g2, Rational(0), B));
  CHECK(m0.determinant == 0);
  // |g^a| at j = 1/2: c_+ = 0, c_0 = 0, c_- = -g2/4 -> |g2|/4
  StructureMetric mh = structure_metric(canonical_spec(Rational(1, 2), Rational(3), g3, B));
  CHECK(mh.vector_modulus == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("adjoint flips linear and constant parts, fixes the quadratic block") {
  Rational j(1), g2(1), g3(2), B(5);
  OperatorSpec spec = canonical_spec(j, g2, g3, B);
  OperatorSpec dag = adjoint(spec);
  CHECK(dag.c(Gen::Plus, Gen::Zero) == spec.c(Gen::Plus, Gen::Zero));
  CHECK(dag.c(Gen::Zero, Gen::Minus) == spec.c(Gen::Zero, Gen::Minus));
  CHECK(dag.c(Gen::Minus, Gen::Minus) == spec.c(Gen::Minus, Gen::Minus));
  CHECK(dag.c(Gen::Plus) == -spec.c(Gen::Plus));
  CHECK(dag.c(Gen::Minus) == -spec.c(Gen::Minus));
  CHECK(dag.c_star() == Rational(5));  // c_* = -B maps to +B

  // zero spec stays zero; adjoint is an involution
  std::array<std::array<Rational, 3>, 3> zero{};
  for (auto& row : zero) row.fill(Rational(0));
  std::array<Rational, 3> zl = {Rational(0), Rational(0), Rational(0)};
  OperatorSpec z(zero, zl, Rational(0), Rational(1));
  OperatorSpec zdag = adjoint(z);
  CHECK(zdag.c_star() == 0);

  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    OperatorSpec s = random_spec(gen, Rational(1));
    OperatorSpec twice = adjoint(adjoint(s));
    for (int a = 0; a < 3; ++a) {
      CHECK(twice.c(static_cast<Gen>(a)) == s.c(static_cast<Gen>(a)));
      for (int b = 0; b < 3; ++b)
        CHECK(twice.c(static_cast<Gen>(a), static_cast<Gen>(b)) ==
              s.c(static_cast<Gen>(a), static_cast<Gen>(b)));
    }
    CHECK(twice.c_star() == s.c_star());
  }
}

TEST_CASE("exact-solvability flag") {
  // canonical spec always carries c_+0 = 2, so the flag is off even at j=1/2
  OperatorSpec spec = canonical_spec(Rational(1, 2), Rational(1), Rational(0), Rational(0));
  CHECK(!spec.exactly_solvable());
  CHECK(spec.c(Gen::Plus) == 0);  // the linear J+ term does vanish at j = 1/2

  std::array<std::array<Rational, 3>, 3> c_ab{};
  for (auto& row : c_ab) row.fill(Rational(0));
  c_ab[1][2] = c_ab[2][1] = Rational(1);
  c_ab[2][2] = Rational(3);
  std::array<Rational, 3> c_a = {Rational(0), Rational(2), Rational(1)};
  OperatorSpec lower(c_ab, c_a, Rational(1), Rational(1));
  CHECK(lower.exactly_solvable());
}

TEST_CASE("invariant subspace of canonical specs") {
  for (int twoj = 0; twoj <= 8; ++twoj) {
    Rational j = Rational(twoj) / 2;
    OperatorSpec spec = canonical_spec(j, Rational(5, 3), Rational(-2, 7), Rational(1, 9));
    for (int k = 0; k <= twoj; ++k) {
      Polynomial image = apply_spec_directly(spec, Polynomial::monomial(k));
      CHECK(image.degree() <= twoj + 1);
      if (k == twoj) CHECK(image.coeff(twoj + 1) == 0);
      if (k < twoj) CHECK(image.degree() <= k + 1);
    }
  }
}
