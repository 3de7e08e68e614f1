#include "izeta/kappa.hpp"

#include "izeta/special.hpp"

namespace izeta {

namespace {

// sqrt with the cut rotated onto the positive imaginary axis:
// g(z)^2 = z, holomorphic off z in i*[0,inf), boundary value from the right.
Complex sqrt_cut_up(const Complex& z) {
  long p = z.prec();
  Complex s = sqrt(z.times_i());  // principal; negative reals map upward
  // e^{-i pi/4} * s
  Real r2 = sqrt(Real::of(2L, p));
  Complex rot = Complex(Real::of(1L, p) / r2, Real::of(-1L, p) / r2);
  return rot * s;
}

// cut on the negative imaginary axis
Complex sqrt_cut_down(const Complex& z) {
  long p = z.prec();
  Complex s = sqrt(z.times_minus_i());
  Real r2 = sqrt(Real::of(2L, p));
  Complex rot = Complex(Real::of(1L, p) / r2, Real::of(1L, p) / r2);
  return rot * s;
}

}  // namespace

KappaParams::KappaParams(const OmegaPoint& omega, const AdmissibleVector& c, bool calibrate)
    : omega_(omega),
      c_(c),
      lambda_([&] {
        // Lambda = Omega - (i/Q_M(c)) (Mc)(Mc)^T; construction validates H_2^(0)
        CVec2 mc = omega.m().mul(c.c());
        Complex f = Complex::i(omega.prec()) / c.q_mc();
        Complex l11 = omega.omega(1, 1) - f * mc.x * mc.x;
        Complex l12 = omega.omega(1, 2) - f * mc.x * mc.y;
        Complex l22 = omega.omega(2, 2) - f * mc.y * mc.y;
        return OmegaPoint({l11.im(), l12.im(), l22.im()}, {l11.re(), l12.re(), l22.re()}, 0);
      }()) {
  long p = omega_.prec();
  lambda11_ = lambda_.omega(1, 1);
  auto roots = quadratic_roots_split(lambda_);
  tau_plus_ = roots.first;
  tau_minus_ = roots.second;
  sqrt_mi_l11_ = sqrt(lambda11_.times_minus_i());

  // sigma: pin the vertical-cut product to the principal branch on the real
  // axis, where re W > 0 holds for every H_2^(0) matrix.
  Complex x0 = Complex(p);  // xi = 0
  CVec2 v0{x0, Complex::of(1, 0, p)};
  Complex w0 = w_value(v0);
  if (!(w0.re().sign() > 0)) throw BranchError("kappa: anchor left the principal region");
  Complex pieces = sqrt_mi_l11_ * sqrt_cut_up(x0 - tau_plus_) * sqrt_cut_down(x0 - tau_minus_);
  Complex sg = sqrt(w0) / pieces;
  Real dev_plus = abs(sg - Complex::of(1, 0, p));
  Real dev_minus = abs(sg + Complex::of(1, 0, p));
  int sigma;
  if (dev_plus < pow2(-p / 2, p))
    sigma = +1;
  else if (dev_minus < pow2(-p / 2, p))
    sigma = -1;
  else
    throw BranchError("kappa: cut-product calibration is not +-1");
  Real r2 = sqrt(Real::of(2L, p));
  Complex eip4 = Complex(Real::of(1L, p) / r2, Real::of(1L, p) / r2);
  ray_prefix_ = sqrt_mi_l11_ * eip4 * sigma;

  if (calibrate) {
    // one-time sign check of the closed form against the defining integral
    Real x1 = integral_anchor();
    CVec2 v1{Complex(x1), Complex::of(1, 0, p)};
    Complex closed = kappa_closed(*this, v1);
    long pl = bits_for_digits(12);
    OmegaPoint om_low(omega_.m().at_prec(pl), omega_.n().at_prec(pl), 1);
    AdmissibleVector c_low(c_.c().at_prec(pl), om_low.m());
    CVec2 v_low{Complex(x1.at_prec(pl)), Complex::of(1, 0, pl)};
    Complex integ = kappa_integral(om_low, c_low, v_low, Complex::of(1, 0, pl), pow10(-10, pl));
    Complex ratio = closed.at_prec(pl) / integ;
    if (abs(ratio - Complex::of(1, 0, pl)).to_double() < 0.1)
      s_cal_ = +1;
    else if (abs(ratio + Complex::of(1, 0, pl)).to_double() < 0.1)
      s_cal_ = -1;
    else
      throw BranchError("kappa: closed/integral calibration ratio is not +-1 (got " +
                        ratio.str(6) + ")");
  }
}

Complex KappaParams::numerator(const CVec2& v) const { return dot(c_.c(), omega_.m().mul(v)); }

Complex KappaParams::w_value(const CVec2& v) const {
  return (q_form(lambda_.omega(), v) * 2).times_minus_i();
}

Complex KappaParams::at_e1() const {
  long p = prec();
  CVec2 e1{Complex::of(1, 0, p), Complex(p)};
  Complex num = numerator(e1);
  Complex qo = q_omega(e1);
  Real pi = Real::pi(p);
  Complex den = (4 * pi) * (c_.mu() * qo * sqrt_mi_l11_).times_i();
  return (num / den) * s_cal_;
}

Complex KappaParams::ray_kernel_scaled(const Real& u) const {
  long p = prec();
  Complex xi = tau_plus_ + Complex(Real::of(0L, p), u * u);
  CVec2 v{xi, Complex::of(1, 0, p)};
  Complex num = numerator(v);
  Complex qo = q_omega(v);
  Complex wred = ray_prefix_ * sqrt_cut_down(xi - tau_minus_);
  Real pi = Real::pi(p);
  Complex den = (4 * pi) * (c_.mu() * qo * wred).times_i();
  return (num / den) * s_cal_;
}

Real KappaParams::integral_anchor() const {
  long p = prec();
  const RSym2& m = omega_.m();
  if (m.a11.sign() > 0) {
    // beyond the larger root of m11 x^2 + 2 m12 x + m22
    Real disc = sqrt(m.a12 * m.a12 - m.a11 * m.a22);
    return (disc - m.a12) / m.a11 + 1;
  }
  if (m.a11.sign() < 0) return -(m.a12 / m.a11);  // vertex; Q_M = det/(2 m11) > 0
  // m11 = 0: Q_M((x,1)) = m12 x + m22/2
  Real x = (Real::of(1L, p) - m.a22 / 2) / m.a12;
  return x;
}

Complex kappa_closed(const KappaParams& kp, const CVec2& v) {
  long p = kp.prec();
  Complex qo = kp.q_omega(v);
  Real v_scale = norm2(v.x) + norm2(v.y);
  if (abs(qo) <= pow2(-p / 2, p) * v_scale)
    throw PoleError(
        "kappa_closed: Q_Omega(v) ~ 0 (simple pole; residue 1/(pi i w11 (r - r')) at the roots "
        "of Q_Omega((xi,1)))");
  Complex w = kp.w_value(v);
  if (abs(w) <= pow2(-p / 2, p) * v_scale)
    throw BranchError("kappa_closed: branch point (|-2i Q_Lambda(v)| ~ 0)");
  if (!(w.re().sign() > 0))
    throw BranchError("kappa_closed: re(-2i Q_Lambda(v)) <= 0 is outside the principal-branch domain");
  Complex num = kp.numerator(v);
  Real pi = Real::pi(p);
  Complex den = (4 * pi) * (kp.c().mu() * qo * sqrt(w)).times_i();
  return (num / den) * kp.calibration_sign();
}

Complex kappa_integral(const OmegaPoint& omega, const AdmissibleVector& c, const CVec2& v,
                       const Complex& s, const Real& eps) {
  long p = omega.prec();
  if (!(s.re().sign() > 0)) throw ValidationError("kappa_integral: re(s) <= 0");
  Complex beta = omega.q(v);
  if (!(beta.im() > pow2(-p / 2, p)))
    throw ConvergenceError("kappa_integral: im Q_Omega(v) <= 0, integrand does not decay",
                           beta.im().to_double());
  Complex alpha = dot(c.c(), omega.m().mul(v)) / c.mu();
  Complex w = alpha * alpha - 2 * beta.times_i();
  if (!(w.re().sign() > 0))
    throw ConvergenceError("kappa_integral: re(alpha^2 - 2 i beta) <= 0, E-part does not decay",
                           w.re().to_double());

  // t = u^2; decay rate from both exp(-pi re(w) u^2) and exp(-2 pi im(beta) u^2)
  double rate = 3.14159265358979 *
                std::min(w.re().to_double(), 2 * beta.im().to_double());
  double digits = -eps.exponent() * 0.30103 + 6;
  double Ud = std::sqrt((digits * 2.302585 + 6) / rate) + 1.0;
  Real U = Real::of(Ud, p);
  Complex two_s_m1 = 2 * s - Real::of(1L, p);
  bool s_is_one = two_s_m1.im().is_zero() && two_s_m1.re() == 1;
  auto f = [&](const Real& u) -> Complex {
    if (u.is_zero()) return Complex(p);
    Complex ee = eE(alpha * u);
    Complex ph = e2pi(beta * (u * u));
    if (s_is_one) return ee * ph * u;
    return ee * ph * exp(two_s_m1 * Complex(log(u)));
  };
  QuadResult q = tanh_sinh(f, Real::of(0L, p), U, eps / 2, 5, 12);
  return -(q.value * 2);
}

}  // namespace izeta
