#ifndef IZETA_REAL_HPP
#define IZETA_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>

#include "izeta/errors.hpp"
#include "izeta/precision.hpp"

namespace izeta {

// Arbitrary-precision real, RAII over mpfr_t. The precision tag travels with
// the value (mpfr_get_prec); binary operations produce results at the larger
// operand precision. All rounding is to nearest.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); }
  explicit Real(long prec_bits) { mpfr_init2(v_, std::max(prec_bits, 2L)); }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long x, long prec_bits) {
    Real r(prec_bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(double x, long prec_bits) {
    Real r(prec_bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  // Parses a decimal string or an exact rational "num/den".
  static Real parse(std::string_view s, long prec_bits);

  static Real pi(long prec_bits) {
    Real r(prec_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real nan(long prec_bits) { return Real(prec_bits); }

  long prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return is_zero() ? -mpfr_get_emax() : mpfr_get_exp(v_); }

  // Decimal string with the given number of significant digits.
  std::string str(int digits) const;

  Real& operator+=(const Real& o) {
    bump_prec(o.prec());
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    bump_prec(o.prec());
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    bump_prec(o.prec());
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    bump_prec(o.prec());
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long k) {
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
  }
  Real& neg() {
    mpfr_neg(v_, v_, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long k) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long k, const Real& a) { return a * k; }
  friend Real operator/(const Real& a, long k) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long k, const Real& a) {
    Real r(a.prec());
    mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long k) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, long k) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long k, const Real& a) {
    Real r(a.prec());
    mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) < 0; }
  friend bool operator>(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) > 0; }
  friend bool operator==(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) == 0; }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sin(const Real& a) {
    Real r(a.prec());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real cos(const Real& a) {
    Real r(a.prec());
    mpfr_cos(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sinh(const Real& a) {
    Real r(a.prec());
    mpfr_sinh(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real cosh(const Real& a) {
    Real r(a.prec());
    mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real tanh(const Real& a) {
    Real r(a.prec());
    mpfr_tanh(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& x, const Real& y) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
  }
  friend Real floor(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow_si(const Real& a, long k) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real ldexp2(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
  friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

  // x - floor(x), in [0,1).
  friend Real frac1(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.v_, a.v_, MPFR_RNDN);
    mpfr_sub(r.v_, a.v_, r.v_, MPFR_RNDN);
    return r;
  }

  // Value rounded to a new precision.
  Real at_prec(long prec_bits) const {
    Real r(prec_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  void bump_prec(long p) {
    if (mpfr_get_prec(v_) < p) {
      Real tmp(p);
      mpfr_set(tmp.v_, v_, MPFR_RNDN);
      mpfr_swap(v_, tmp.v_);
    }
  }
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(BinFn f, const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

// 2^-(k) as a Real tolerance at matching precision.
inline Real pow2(long e, long prec_bits) {
  Real r(prec_bits);
  mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

// 10^e at the given precision (e may be negative); handy for tolerances.
inline Real pow10(long e, long prec_bits) {
  Real r(prec_bits);
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

}  // namespace izeta

#endif
