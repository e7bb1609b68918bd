#include "halphen/polynomial.hpp"

namespace halphen {
namespace exactmath {

Polynomial Polynomial::constant(const Rational& a) {
  Polynomial p;
  if (a != 0) p.c_.push_back(a);
  return p;
}

Polynomial Polynomial::monomial(int power, const Rational& a) {
  Polynomial p;
  if (a == 0) return p;
  p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
  p.c_.back() = a;
  return p;
}

Polynomial Polynomial::derivative(int order) const {
  if (order < 0) throw domain_error("polynomial derivative: negative order");
  Polynomial p = *this;
  for (int pass = 0; pass < order; ++pass) {
    if (p.c_.empty()) break;
    std::vector<Rational> d;
    d.reserve(p.c_.size());
    for (std::size_t k = 1; k < p.c_.size(); ++k) d.push_back(p.c_[k] * Rational(k));
    p.c_ = std::move(d);
  }
  p.trim();
  return p;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> s(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
  return Polynomial(std::move(s));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial();
  std::vector<Rational> s(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) s[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(s));
}

Polynomial Polynomial::operator*(const Rational& a) const {
  std::vector<Rational> s = c_;
  for (auto& v : s) v *= a;
  return Polynomial(std::move(s));
}

Polynomial Polynomial::shifted(int k) const {
  if (c_.empty()) return Polynomial();
  std::vector<Rational> s(c_.size() + static_cast<std::size_t>(k), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) s[i + static_cast<std::size_t>(k)] = c_[i];
  return Polynomial(std::move(s));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    if (!out.empty()) out += (a > 0) ? " + " : " - ";
    else if (a < 0) out += "-";
    Rational mag = a < 0 ? Rational(-a) : a;
    if (k == 0 || mag != 1) out += exactmath::to_string(mag);
    if (k > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace exactmath
}  // namespace halphen
