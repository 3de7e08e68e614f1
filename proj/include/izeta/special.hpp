#ifndef IZETA_SPECIAL_HPP
#define IZETA_SPECIAL_HPP

#include <optional>
#include <vector>

#include "izeta/admissible.hpp"
#include "izeta/complexnum.hpp"
#include "izeta/vecmat.hpp"

namespace izeta {

// E(alpha) = int_0^alpha exp(-pi u^2) du, split as half + tail.
// half is -1/2, 0 or +1/2; when half != 0 the tail is the exponentially small
// remainder computed to full *relative* accuracy (asymptotic series), so
// differences of saturated values never cancel catastrophically.
struct EParts {
  int half;  // -1, 0, +1 meaning half/2
  Complex tail;
};

EParts eE_parts(const Complex& alpha, long rel_bits);
EParts eE_parts(const Real& alpha, long rel_bits);

inline Complex eE(const Complex& alpha) {
  EParts p = eE_parts(alpha, alpha.prec());
  if (p.half == 0) return p.tail;
  Real h = Real::of(p.half, alpha.prec()) / 2;
  return Complex(h + p.tail.re(), p.tail.im());
}
inline Real eE(const Real& alpha) {
  EParts p = eE_parts(alpha, alpha.prec());
  if (p.half == 0) return p.tail.re();
  return Real::of(p.half, alpha.prec()) / 2 + p.tail.re();
}

// rho_M^{c1,c2}(v) = E(c2^T M v / mu2) - E(c1^T M v / mu1)
Complex rho(const RSym2& m, const AdmissibleVector& c1, const AdmissibleVector& c2,
            const CVec2& v);

// log(1 - w), stable for small |w|.
Complex clog1m(const Complex& w);

// Li_2 on the closed unit disk. z = 1 gives pi^2/6; |z| > 1 is a domain error.
Complex dilog(const Complex& z);

// Closed form of int_0^inf E(alpha t^(1/2)) e(beta t) dt
//   = -alpha / (4 pi i beta sqrt(alpha^2 - 2 i beta)),
// standard (principal) square root; requires re(alpha^2 - 2 i beta) > 0.
Complex eEe_transform(const Complex& alpha, const Complex& beta);

// Continuous logarithm of phi_{p1,p2} on the upper half-plane, anchored at
// i*infinity (0 for p1 != 0, log(1-e(p2)) for p1 = 0). With p1 in [0,1) every
// factor 1 - e((d +- p1) xi +- p2) stays in the disk |z-1| < 1, so the sum of
// principal logs of the factors *is* the anchored continuous branch.
class LogPhiTracker {
 public:
  // p1 and p2 are reduced mod 1 at construction; eps is the absolute target
  // driving the product truncation at the lowest usable height min_im.
  LogPhiTracker(const Real& p1, const Real& p2, const Real& min_im, const Real& eps);

  Complex eval(const Complex& xi) const;

  const Real& p1() const { return p1_; }
  const Real& p2() const { return p2_; }
  // i-infinity anchor value
  Complex limit_value() const;
  long max_terms() const { return d_max_; }
  long terms_used_last() const { return last_terms_; }
  double tail_bound(double im_xi) const;

 private:
  long terms_needed(const Real& im_xi) const;

  Real p1_, p2_;
  Real min_im_;
  Real eps_;
  long d_max_;
  long prec_;
  mutable long last_terms_ = 0;
};

}  // namespace izeta

#endif
