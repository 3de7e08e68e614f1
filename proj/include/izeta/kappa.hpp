#ifndef IZETA_KAPPA_HPP
#define IZETA_KAPPA_HPP

#include <optional>
#include <utility>

#include "izeta/admissible.hpp"
#include "izeta/halfspace.hpp"
#include "izeta/quadrature.hpp"

namespace izeta {

// Data shared by every kappa evaluation for a fixed (Omega, c):
// Lambda = Omega - (i/Q_M(c)) (Mc)(Mc)^T in H_2^(0), its roots tau+- split by
// the real axis, and the branch bookkeeping for
//   W(xi) = -2i Q_Lambda((xi,1)) = -i lambda11 (xi - tau+)(xi - tau-).
//
// Two sqrt determinations are exposed:
//  * principal sqrt of W on re(W) > 0 - the Mellin/Corollary branch used by
//    kappa_closed (the integral converges there);
//  * the vertical-cut continuation sigma * sqrt(-i l11) g(xi-tau+) h(xi-tau-)
//    with g cut upward, h cut downward, used on the collapsed contour. Its
//    boundary value from the right of the upper cut is what the ray integrals
//    consume; the factor sqrt(xi - tau+) = e^{i pi/4} sqrt(t) on the cut is
//    divided out analytically in ray_kernel_scaled.
class KappaParams {
 public:
  KappaParams(const OmegaPoint& omega, const AdmissibleVector& c, bool calibrate = true);

  const OmegaPoint& omega() const { return omega_; }
  const AdmissibleVector& c() const { return c_; }
  const OmegaPoint& lambda() const { return lambda_; }
  const Complex& tau_plus() const { return tau_plus_; }
  const Complex& tau_minus() const { return tau_minus_; }
  int calibration_sign() const { return s_cal_; }
  long prec() const { return omega_.prec(); }

  // c^T M v
  Complex numerator(const CVec2& v) const;
  Complex q_omega(const CVec2& v) const { return omega_.q(v); }
  Complex w_value(const CVec2& v) const;  // -2i Q_Lambda(v)

  // kappa at v = (1,0): W = -i lambda11, re > 0 always, principal branch.
  Complex at_e1() const;

  // u * kappa((tau+ + i u^2, 1)), the right-side boundary value on the upper
  // cut with the vanishing sqrt factored out; smooth and nonzero at u = 0.
  Complex ray_kernel_scaled(const Real& u) const;

  // A real abscissa x with Q_M((x,1)) > 0 (so im Q_Omega((x,1)) > 0 and the
  // defining integral of kappa converges at v = (x,1)).
  Real integral_anchor() const;

 private:
  OmegaPoint omega_;
  AdmissibleVector c_;
  OmegaPoint lambda_;
  Complex lambda11_;
  Complex tau_plus_, tau_minus_;
  Complex sqrt_mi_l11_;   // principal sqrt(-i lambda11)
  Complex ray_prefix_;    // sigma * sqrt(-i l11) * e^{i pi/4}
  int s_cal_ = +1;
};

// Corollary closed form kappa_Omega^c(v) on its principal domain
// re(-2i Q_Lambda(v)) > 0. Outside: BranchError. Q_Omega(v) ~ 0: PoleError
// (message carries the residue hint 1/(pi i w11 (r - r'))).
Complex kappa_closed(const KappaParams& kp, const CVec2& v);

// Defining Mellin integral -int_0^inf rho^c(v sqrt(t)) e(Q_Omega(v) t) t^s dt/t,
// the independent oracle for kappa_closed at s = 1. Requires decay:
// im Q_Omega(v) > 0 and re W(v) > 0.
Complex kappa_integral(const OmegaPoint& omega, const AdmissibleVector& c, const CVec2& v,
                       const Complex& s, const Real& eps);

}  // namespace izeta

#endif
