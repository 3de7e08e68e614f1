#include "izeta/klf.hpp"

#include <cmath>

namespace izeta {

namespace {

// int_0^inf (Log phi)(tau + it) kappa((tau+it,1)) dt with t = u^2 and the
// sqrt(t) of the cut factored out analytically (ray_kernel_scaled):
//   int_0^inf 2 (Log phi)(tau + i u^2) [u kappa] du.
// For p1 = 0, Log phi tends to the nonzero constant log(1-e(p2)) at i*inf and
// the integrand decays only like u^-3; the constant part is split off and its
// tail folded by u -> 1/u.
Complex ray_integral(const KappaParams& kp, const LogPhiTracker& phi, const Real& eps,
                     RayIntegralPlan* plan) {
  long prec = kp.prec();
  const Complex& tau = kp.tau_plus();
  double p1 = phi.p1().to_double();
  double rate = 2 * 3.14159265358979 * std::min(p1 > 0 ? p1 : 1.0, 1.0 - (p1 > 0 ? p1 : 0.0));

  Complex limit = phi.limit_value();
  bool split_const = !limit.is_zero();

  // scale estimate for the truncation height
  auto F = [&](const Real& u) -> Complex {
    Complex xi = tau + Complex(Real::of(0L, prec), u * u);
    Complex lp = phi.eval(xi);
    if (split_const) lp -= limit;
    return 2 * (lp * kp.ray_kernel_scaled(u));
  };
  double digits = -eps.exponent() * 0.30103 + 4;
  double c_est =
      std::max({1.0, abs(F(Real::of(0.5, prec))).to_double(), abs(F(Real::of(1L, prec))).to_double()});
  double Ud = std::sqrt((digits * 2.302585 + std::log(c_est) + 5) / rate) + 0.5;
  Real U = Real::of(Ud, prec);

  QuadResult main = tanh_sinh(F, Real::of(0L, prec), U, eps / (split_const ? 4 : 2), 4, 12);
  Complex total = main.value;
  long nodes = main.nodes;

  if (split_const) {
    // limit * int_0^inf kappa dt = limit * int_0^inf 2 [u kappa] du
    auto K = [&](const Real& u) -> Complex { return 2 * kp.ray_kernel_scaled(u); };
    Real u0 = Real::of(4L, prec);
    QuadResult head = tanh_sinh(K, Real::of(0L, prec), u0, eps / 8, 4, 12);
    auto Kfold = [&](const Real& w) -> Complex {
      if (w.is_zero()) return Complex(prec);
      Real u = 1 / w;
      return K(u) / (w * w);
    };
    QuadResult tail = tanh_sinh(Kfold, Real::of(0L, prec), 1 / u0, eps / 8, 4, 12);
    total += limit * (head.value + tail.value);
    nodes += head.nodes + tail.nodes;
  }

  if (plan) {
    plan->branch_point = tau;
    plan->truncation_u = Ud;
    plan->phi_terms = phi.max_terms();
    plan->nodes = nodes;
    plan->calibration_sign = kp.calibration_sign();
  }
  return total;
}

Real reduce_mod1(const Real& x) { return frac1(x); }

}  // namespace

double phi_terms_per_digit(double im_tau) {
  return 2.302585092994046 / (2 * 3.14159265358979 * im_tau);
}

Complex I_pm(const OmegaPoint& omega, const AdmissibleVector& c, const RVec2& p, int sign,
             const Real& eps, KlfDiagnostics* diag) {
  long prec = omega.prec();
  Real p1 = reduce_mod1(p.x);
  Real p2 = reduce_mod1(sign > 0 ? p.y : -p.y);

  KappaParams kp(omega, c);
  Complex dilog_coeff = kp.at_e1();
  Real sp1 = sign > 0 ? p1 : (p1.is_zero() ? p1 : 1 - p1);  // e(-p1) = e(1-p1)
  Complex dl = dilog(e2pi(sp1));

  RayIntegralPlan plan;
  Complex ray;
  if (sign > 0) {
    LogPhiTracker phi(p1, p2, kp.tau_plus().im(), eps / 64);
    ray = ray_integral(kp, phi, eps / 4, &plan);
  } else {
    KappaParams kpr(omega.reflect(), c.reflected(omega.reflect().m()));
    LogPhiTracker phi(p1, p2, kpr.tau_plus().im(), eps / 64);
    ray = ray_integral(kpr, phi, eps / 4, &plan);
  }
  if (diag) diag->rays.push_back(plan);
  return -(dl * dilog_coeff) + 2 * ray.times_i();
}

Complex klf_s1(const OmegaPoint& omega, const RVec2& p, const AdmissibleVector& c1,
               const AdmissibleVector& c2, const Real& eps, KlfDiagnostics* diag) {
  Real p1 = reduce_mod1(p.x), p2 = reduce_mod1(p.y);
  if (p1.is_zero() && p2.is_zero()) throw ValidationError("klf_s1: p must not be integral");
  RVec2 pr{p1, p2};
  Real eps4 = eps / 4;
  Complex i_p_c2 = I_pm(omega, c2, pr, +1, eps4, diag);
  Complex i_m_c2 = I_pm(omega, c2, pr, -1, eps4, diag);
  Complex i_p_c1 = I_pm(omega, c1, pr, +1, eps4, diag);
  Complex i_m_c1 = I_pm(omega, c1, pr, -1, eps4, diag);
  return i_p_c2 - i_m_c2 - i_p_c1 + i_m_c1;
}

Complex klf_s1_pure_imaginary(const RSym2& m, const RVec2& p, const AdmissibleVector& c1,
                              const AdmissibleVector& c2, const Real& eps,
                              KlfDiagnostics* diag) {
  Real p1 = reduce_mod1(p.x), p2 = reduce_mod1(p.y);
  if (p1.is_zero() && p2.is_zero())
    throw ValidationError("klf_s1_pure_imaginary: p must not be integral");
  OmegaPoint omega = OmegaPoint::pure(m, 1);
  RVec2 pr{p1, p2};
  Real eps2 = eps / 2;
  Complex i2 = I_pm(omega, c2, pr, +1, eps2, diag);
  Complex i1 = I_pm(omega, c1, pr, +1, eps2, diag);
  Real im_diff = (i2 - i1).im();
  long prec = m.prec();
  return Complex(Real::of(0L, prec), 2 * im_diff);
}

Complex klf_s0(const OmegaPoint& omega, const RVec2& q, const AdmissibleVector& c1,
               const AdmissibleVector& c2, const Real& eps, KlfDiagnostics* diag) {
  long prec = omega.prec();
  Real q1 = reduce_mod1(q.x), q2 = reduce_mod1(q.y);
  if (q1.is_zero() && q2.is_zero()) throw ValidationError("klf_s0: q must not be integral");
  OmegaPoint om2 = omega.neg_inverse();
  CSym2 conj_om = omega.omega();
  conj_om.a11 = conj_om.a11.conj();
  conj_om.a12 = conj_om.a12.conj();
  conj_om.a22 = conj_om.a22.conj();
  AdmissibleVector c1t(conj_om.mul(c1.c()), om2.m());
  AdmissibleVector c2t(conj_om.mul(c2.c()), om2.m());
  RVec2 mq{reduce_mod1(-q1), reduce_mod1(-q2)};
  Complex pref = Complex(Real::of(1L, prec)) / sqrt(omega.det_minus_i_omega());
  Real scale = abs(pref);
  Complex inner = klf_s1(om2, mq, c1t, c2t, eps / max(scale, Real::of(1L, prec)), diag);
  return pref * inner;
}

KlfS0PureImaginary klf_s0_pure_imaginary(const RSym2& m, const RVec2& q,
                                         const AdmissibleVector& c1, const AdmissibleVector& c2,
                                         const Real& eps, KlfDiagnostics* diag) {
  long prec = m.prec();
  Real q1 = reduce_mod1(q.x), q2 = reduce_mod1(q.y);
  if (q1.is_zero() && q2.is_zero())
    throw ValidationError("klf_s0_pure_imaginary: q must not be integral");
  Real det = m.det();
  if (!(det.sign() < 0)) throw ValidationError("klf_s0_pure_imaginary: det M must be negative");

  OmegaPoint omega = OmegaPoint::pure(m, 1);
  OmegaPoint om2 = omega.neg_inverse();  // i M^{-1}
  // conj(Omega) c = -i M c
  auto transport = [&](const AdmissibleVector& c) {
    CVec2 mc = m.mul(c.c());
    return AdmissibleVector({mc.x.times_minus_i(), mc.y.times_minus_i()}, om2.m());
  };
  AdmissibleVector c1t = transport(c1);
  AdmissibleVector c2t = transport(c2);
  RVec2 pr{reduce_mod1(-q1), reduce_mod1(-q2)};
  Real eps2 = eps / 2;
  // J = 2 * I^+ on the transported data (the worked-example normalization)
  Complex j1 = 2 * I_pm(om2, c1t, pr, +1, eps2, diag);
  Complex j2 = 2 * I_pm(om2, c2t, pr, +1, eps2, diag);
  Real zeta_re = (j2 - j1).im() / sqrt(-det);
  return {Complex(zeta_re, Real::of(0L, prec)), j1, j2};
}

}  // namespace izeta
