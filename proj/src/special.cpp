#include "izeta/special.hpp"

#include <cmath>

#include "izeta/quadrature.hpp"

namespace izeta {

namespace {

// Maclaurin sum E(a) = a * sum_n (-pi a^2)^n / (n! (2n+1)), run at elevated
// precision to absorb both the alternating-series cancellation (pi|a|^2 bits)
// and, when re(a^2) > 0, the resolution of the saturated tail below 1/2.
Complex eE_series(const Complex& alpha, long out_bits) {
  double a2abs = norm2(alpha).to_double();
  double a2re = (alpha.re() * alpha.re() - alpha.im() * alpha.im()).to_double();
  double guard_d = (a2abs + std::max(0.0, a2re)) * 3.1416 * 1.4427 + 32;
  long guard = static_cast<long>(guard_d);
  if (guard > 6 * out_bits + 512)
    throw ConvergenceError("eE: |alpha| too large for series regime", a2abs);
  long wp = out_bits + guard;
  Complex a = alpha.at_prec(wp);
  Complex ma2 = -(a * a) * Real::pi(wp);
  Complex c = Complex::of(1, 0, wp);  // (-pi a^2)^n / n!
  Complex sum(wp);
  Real thresh = pow2(-out_bits - 8, wp);
  Real maxmag = Real::of(1L, wp);
  for (long n = 0;; ++n) {
    Complex term = c / (2 * n + 1);
    sum += term;
    Real m = abs(term);
    if (m > maxmag) maxmag = m;
    if (n > 4 && m < thresh * maxmag && static_cast<double>(n) > 3.1416 * a2abs) break;
    c = c * ma2 / (n + 1);
    if (n > 64 + 8 * wp) throw ConvergenceError("eE series did not converge", m.to_double());
  }
  return (a * sum).at_prec(out_bits);
}

// Asymptotic tail S(a) = sum_k (-1)^k (2k-1)!! / (2 pi a^2)^k for the
// saturated regime; valid (error <= first omitted term) for re(a^2) > 0.
Complex eE_tail_asym(const Complex& alpha, long rel_bits) {
  long wp = rel_bits + 32;
  Complex a = alpha.at_prec(wp);
  Complex inv = Complex(Real::of(1L, wp)) / (2 * Real::pi(wp) * (a * a));
  Complex term = Complex::of(1, 0, wp);
  Complex s(wp);
  Real thresh = pow2(-rel_bits - 8, wp);
  Real prev_mag(wp);
  for (long k = 0;; ++k) {
    s += term;
    Real m = abs(term);
    if (m < thresh) break;
    if (k > 0 && m >= prev_mag) break;  // minimum term reached
    prev_mag = m;
    term = term * inv * (-(2 * k + 1));
    if (k > 4 * wp) break;
  }
  // tail = -e^{-pi a^2}/(2 pi a) * S
  Complex expf = exp(-(Real::pi(wp) * (a * a)));
  return (-(expf * s) / (2 * Real::pi(wp) * a)).at_prec(rel_bits);
}

}  // namespace

EParts eE_parts(const Complex& alpha, long rel_bits) {
  long p = std::max(alpha.prec(), rel_bits);
  if (alpha.is_zero()) return {0, Complex(p)};
  // saturation threshold: exp(-pi re(a^2)) resolvable by the asymptotic series
  double a0sq = (static_cast<double>(rel_bits) * 0.6931 + 14.0) / 3.1415926;
  Real re_a2 = alpha.re() * alpha.re() - alpha.im() * alpha.im();
  if (re_a2.to_double() >= a0sq) {
    if (alpha.re().sign() > 0) return {+1, eE_tail_asym(alpha, p)};
    return {-1, -eE_tail_asym(-alpha, p)};  // E odd
  }
  return {0, eE_series(alpha, p)};
}

EParts eE_parts(const Real& alpha, long rel_bits) {
  // real arguments saturate on both sides; reuse the complex path (the inner
  // loops stay real-valued in mpfr where it matters most: exp, series terms)
  return eE_parts(Complex(alpha), rel_bits);
}

Complex rho(const RSym2& m, const AdmissibleVector& c1, const AdmissibleVector& c2,
            const CVec2& v) {
  CVec2 mv = m.mul(v);
  Complex a1 = dot(c1.c(), mv) / c1.mu();
  Complex a2 = dot(c2.c(), mv) / c2.mu();
  long p = v.prec();
  EParts e1 = eE_parts(a1, p), e2 = eE_parts(a2, p);
  Complex d = e2.tail - e1.tail;
  if (e2.half != e1.half) {
    Real halves = Real::of(e2.half - e1.half, p) / 2;
    d = Complex(d.re() + halves, d.im());
  }
  return d;
}

Complex clog1m(const Complex& w) {
  long p = w.prec();
  Real aw = abs(w);
  if (aw.to_double() > 0.25) return log(Complex(1 - w.re(), -w.im()));
  if (aw.is_zero()) return Complex(p);
  // -sum w^k / k
  Complex term = w;
  Complex sum = w;
  Real thresh = pow2(-p - 8, p) * max(aw, pow2(-p, p));
  for (long k = 2;; ++k) {
    term = term * w;
    sum += term / k;
    if (abs(term) < thresh) break;
    if (k > 4 * p) throw ConvergenceError("clog1m series stalled", abs(term).to_double());
  }
  return -sum;
}

namespace {

Complex dilog_series(const Complex& z) {
  long p = z.prec();
  Complex term = z, sum = z;
  Real thresh = pow2(-p - 8, p);
  for (long n = 2;; ++n) {
    term = term * z;
    sum += term / (n * n);
    if (abs(term) / (n * n) < thresh) break;
    if (n > 64 * p) throw ConvergenceError("dilog series stalled", abs(term).to_double());
  }
  return sum;
}

Complex pi2_over_6(long p) {
  Real pi = Real::pi(p);
  return Complex(pi * pi / 6);
}

}  // namespace

Complex dilog(const Complex& z) {
  long p = z.prec();
  Real az = abs(z);
  if (az > Real::of(1L, p) + pow2(-p / 2, p))
    throw ValidationError("dilog: |z| > 1 is outside the supported domain");
  Complex one = Complex::of(1, 0, p);
  Complex w = one - z;
  if (abs(w).is_zero()) return pi2_over_6(p);
  if (az.to_double() <= 0.5) return dilog_series(z);
  if (abs(w).to_double() <= 0.5) {
    // Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
    return pi2_over_6(p) - log(z) * log(w) - dilog_series(w);
  }
  Complex l = z / (z - one);  // Landen target
  if (abs(l).to_double() <= 0.6) {
    Complex lw = clog1m(z);  // log(1-z)
    return -dilog_series(l) - (lw * lw) / 2;
  }
  // remaining ring: defining integral -z int_0^1 log(1 - z s)/s ds
  long wp = p + 16;
  Complex zw = z.at_prec(wp);
  auto f = [&](const Real& s) { return clog1m(zw * s) / s; };
  QuadResult q = tanh_sinh(f, Real::of(0L, wp), Real::of(1L, wp), pow2(-p - 6, wp), 5, 12);
  return (-(zw * q.value)).at_prec(p);
}

Complex eEe_transform(const Complex& alpha, const Complex& beta) {
  long p = std::max(alpha.prec(), beta.prec());
  Complex arg = alpha * alpha - 2 * beta.times_i();
  if (!(arg.re().sign() > 0))
    throw ValidationError("eEe_transform: re(alpha^2 - 2 i beta) <= 0");
  if (abs(beta) < pow2(-p + 8, p)) throw PoleError("eEe_transform: beta ~ 0");
  return -alpha / (4 * Real::pi(p) * beta.times_i() * sqrt(arg));
}

LogPhiTracker::LogPhiTracker(const Real& p1, const Real& p2, const Real& min_im, const Real& eps)
    : p1_(frac1(p1)), p2_(frac1(p2)), min_im_(min_im), eps_(eps), prec_(std::max(p1.prec(), p2.prec())) {
  if (!(min_im_ > 0)) throw ValidationError("LogPhiTracker: needs im(xi) bounded below by a positive height");
  if (p1_.is_zero() && p2_.is_zero())
    throw BranchError("LogPhiTracker: p1 = 0 with integral p2 hits the zero factor 1-e(p2)");
  d_max_ = terms_needed(min_im_);
}

long LogPhiTracker::terms_needed(const Real& im_xi) const {
  // tail <= 2 r^(D+1-p1) / (1-r)^2 with r = exp(-2 pi im_xi)
  double y = im_xi.to_double();
  double r = std::exp(-2 * 3.14159265358979 * y);
  double lr = -2 * 3.14159265358979 * y;
  double le = std::log(eps_.to_double() > 0 ? eps_.to_double() : 1e-320);
  double need = (le - std::log(2.0) + 2 * std::log1p(-r)) / lr + 1.0 + p1_.to_double();
  long d = static_cast<long>(std::ceil(std::max(4.0, need))) + 2;
  return d;
}

double LogPhiTracker::tail_bound(double im_xi) const {
  double r = std::exp(-2 * 3.14159265358979 * im_xi);
  double d = static_cast<double>(d_max_);
  return 2 * std::pow(r, d + 1 - p1_.to_double()) / ((1 - r) * (1 - r));
}

Complex LogPhiTracker::limit_value() const {
  long p = prec_;
  if (p1_.is_zero()) return clog1m(e2pi(p2_.at_prec(p)));
  return Complex(p);
}

Complex LogPhiTracker::eval(const Complex& xi) const {
  long p = std::max(prec_, xi.prec());
  if (!(xi.im().sign() > 0)) throw ValidationError("LogPhiTracker: im(xi) <= 0");
  long d_here = (xi.im() >= min_im_) ? terms_needed(xi.im()) : d_max_;
  if (xi.im() < min_im_)
    throw ValidationError("LogPhiTracker: below the configured minimum height");
  if (d_here > d_max_) d_here = d_max_;
  last_terms_ = d_here;
  Complex p1xi = xi * p1_;
  Complex sum(p);
  if (p1_.is_zero())
    sum = clog1m(e2pi(p2_.at_prec(p)));
  else
    sum = clog1m(e2pi(p1xi + Complex(p2_)));
  for (long d = 1; d <= d_here; ++d) {
    Complex wnum = xi * (p1_ + d) + Complex(p2_);
    Complex wden = xi * (d - p1_) - Complex(p2_);
    sum += clog1m(e2pi(wnum));
    sum -= clog1m(e2pi(wden));
  }
  return sum;
}

}  // namespace izeta
