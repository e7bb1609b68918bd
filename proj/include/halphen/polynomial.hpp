// Dense univariate polynomials over the exact rationals.
#ifndef HALPHEN_POLYNOMIAL_HPP
#define HALPHEN_POLYNOMIAL_HPP

#include "halphen/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace halphen {
namespace exactmath {

// Coefficient index = power of the variable.  The zero polynomial has
// degree -1; otherwise the trailing coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& a);
  static Polynomial monomial(int power, const Rational& a = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of r^k; zero outside the stored range.
  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial derivative(int order = 1) const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& a) const;
  Polynomial operator-() const { return *this * Rational(-1); }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Multiplies by r^k.
  Polynomial shifted(int k) const;

  std::string to_string(const std::string& var = "r") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial differentiate(const Polynomial& p, int order) { return p.derivative(order); }

}  // namespace exactmath
}  // namespace halphen

#endif
