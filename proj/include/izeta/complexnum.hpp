#ifndef IZETA_COMPLEXNUM_HPP
#define IZETA_COMPLEXNUM_HPP

#include <algorithm>
#include <string>

#include "izeta/real.hpp"

namespace izeta {

// Complex value over Real. Principal-branch conventions throughout: sqrt and
// log cut along the negative real axis, with the cut itself mapped to the
// upper side (im >= 0 results for negative real inputs).
class Complex {
 public:
  Complex() = default;
  explicit Complex(long prec_bits) : re_(prec_bits), im_(prec_bits) {
    mpfr_set_zero(re_.raw(), 1);
    mpfr_set_zero(im_.raw(), 1);
  }
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(Real re) : re_(std::move(re)), im_(re_.prec()) { mpfr_set_zero(im_.raw(), 1); }

  static Complex zero(long prec_bits) { return Complex(prec_bits); }
  static Complex of(long re, long im, long prec_bits) {
    return Complex(Real::of(re, prec_bits), Real::of(im, prec_bits));
  }
  static Complex i(long prec_bits) { return of(0, 1, prec_bits); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  long prec() const { return std::max(re_.prec(), im_.prec()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex conj() const { return Complex(re_, -im_); }
  Complex times_i() const { return Complex(-im_, re_); }        // i*z
  Complex times_minus_i() const { return Complex(im_, -re_); }  // -i*z

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator*(const Complex& a, const Real& s) {
    return Complex(a.re_ * s, a.im_ * s);
  }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator*(const Complex& a, long k) { return Complex(a.re_ * k, a.im_ * k); }
  friend Complex operator*(long k, const Complex& a) { return a * k; }
  friend Complex operator/(const Complex& a, const Real& s) {
    return Complex(a.re_ / s, a.im_ / s);
  }
  friend Complex operator/(const Complex& a, long k) { return Complex(a.re_ / k, a.im_ / k); }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re_ * b.re_ + b.im_ * b.im_;
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  friend Complex operator+(const Complex& a, const Real& s) { return Complex(a.re_ + s, a.im_); }
  friend Complex operator-(const Complex& a, const Real& s) { return Complex(a.re_ - s, a.im_); }
  friend Complex operator+(const Complex& a, long k) { return Complex(a.re_ + k, a.im_); }
  friend Complex operator-(long k, const Complex& a) { return Complex(k - a.re_, -a.im_); }

  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
  }

  friend Real abs(const Complex& z) { return hypot(z.re_, z.im_); }
  friend Real norm2(const Complex& z) { return z.re_ * z.re_ + z.im_ * z.im_; }
  friend Real arg(const Complex& z) { return atan2(z.im_, z.re_); }

  friend Complex sqrt(const Complex& z);
  friend Complex exp(const Complex& z);
  friend Complex log(const Complex& z);

  Complex at_prec(long prec_bits) const {
    return Complex(re_.at_prec(prec_bits), im_.at_prec(prec_bits));
  }

  std::string str(int digits) const {
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str(digits) + "i";
  }

 private:
  Real re_, im_;
};

// Principal square root; negative real axis maps to the positive imaginary one.
inline Complex sqrt(const Complex& z) {
  long p = z.prec();
  if (z.im().is_zero()) {
    if (z.re().sign() >= 0) return Complex(sqrt(z.re()), Real::of(0L, p));
    return Complex(Real::of(0L, p), sqrt(-z.re()));
  }
  Real m = abs(z);
  Real u = sqrt((m + abs(z.re())) / 2);
  if (z.re().sign() >= 0) return Complex(u, z.im() / (2 * u));
  Real v = abs(z.im()) / (2 * u);
  return z.im().sign() >= 0 ? Complex(v, u) : Complex(v, -u);
}

inline Complex exp(const Complex& z) {
  long p = z.prec();
  Real ex = exp(z.re());
  Real s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return Complex(ex * c, ex * s);
}

inline Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

// e(z) = exp(2 pi i z)
inline Complex e2pi(const Complex& z) {
  long p = z.prec();
  Real two_pi = 2 * Real::pi(p);
  Real ex = exp(-two_pi * z.im());
  Real s(p), c(p);
  Real ph = two_pi * z.re();
  mpfr_sin_cos(s.raw(), c.raw(), ph.raw(), MPFR_RNDN);
  return Complex(ex * c, ex * s);
}

inline Complex e2pi(const Real& x) {
  long p = x.prec();
  Real ph = 2 * Real::pi(p) * x;
  Real s(p), c(p);
  mpfr_sin_cos(s.raw(), c.raw(), ph.raw(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

}  // namespace izeta

#endif
