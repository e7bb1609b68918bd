// A complex value that stays exact (pair of rationals) when it can and
// degrades to double precision when it cannot. The exactness flag is part
// of the value and is carried through every output path.
#ifndef HALPHEN_SCALAR_HPP
#define HALPHEN_SCALAR_HPP

#include "halphen/rational.hpp"

#include <cmath>
#include <complex>

namespace halphen {
namespace exactmath {

class Scalar {
 public:
  Scalar() : exact_(true), re_q_(0), im_q_(0), re_d_(0), im_d_(0) {}

  static Scalar from_rational(const Rational& re, const Rational& im = Rational(0)) {
    Scalar s;
    s.exact_ = true;
    s.re_q_ = re;
    s.im_q_ = im;
    s.re_d_ = to_double(re);
    s.im_d_ = to_double(im);
    return s;
  }

  static Scalar from_double(double re, double im = 0.0) {
    Scalar s;
    s.exact_ = false;
    s.re_d_ = re;
    s.im_d_ = im;
    return s;
  }

  static Scalar from_complex(std::complex<double> z) { return from_double(z.real(), z.imag()); }

  bool exact() const { return exact_; }
  double re() const { return re_d_; }
  double im() const { return im_d_; }
  const Rational& re_q() const { return re_q_; }
  const Rational& im_q() const { return im_q_; }
  std::complex<double> value() const { return {re_d_, im_d_}; }

  bool is_real(double tol = 0.0) const {
    if (exact_) return im_q_ == 0;
    return std::abs(im_d_) <= tol;
  }

  bool is_zero(double tol = 0.0) const {
    if (exact_) return re_q_ == 0 && im_q_ == 0;
    return std::abs(re_d_) <= tol && std::abs(im_d_) <= tol;
  }

  Scalar conj() const {
    return exact_ ? from_rational(re_q_, -im_q_) : from_double(re_d_, -im_d_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return from_rational(a.re_q_ + b.re_q_, a.im_q_ + b.im_q_);
    return from_double(a.re_d_ + b.re_d_, a.im_d_ + b.im_d_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return from_rational(a.re_q_ - b.re_q_, a.im_q_ - b.im_q_);
    return from_double(a.re_d_ - b.re_d_, a.im_d_ - b.im_d_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_)
      return from_rational(a.re_q_ * b.re_q_ - a.im_q_ * b.im_q_,
                           a.re_q_ * b.im_q_ + a.im_q_ * b.re_q_);
    return from_complex(a.value() * b.value());
  }
  friend Scalar operator-(const Scalar& a) {
    if (a.exact_) return from_rational(-a.re_q_, -a.im_q_);
    return from_double(-a.re_d_, -a.im_d_);
  }

  // Deterministic ordering: ascending (re, im); exact pairs compare exactly.
  static bool ascending(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      if (a.re_q_ != b.re_q_) return a.re_q_ < b.re_q_;
      return a.im_q_ < b.im_q_;
    }
    if (a.re_d_ != b.re_d_) return a.re_d_ < b.re_d_;
    return a.im_d_ < b.im_d_;
  }

  static bool descending(const Scalar& a, const Scalar& b) { return ascending(b, a); }

 private:
  bool exact_;
  Rational re_q_, im_q_;
  double re_d_, im_d_;
};

}  // namespace exactmath
}  // namespace halphen

#endif
