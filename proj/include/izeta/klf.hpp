#ifndef IZETA_KLF_HPP
#define IZETA_KLF_HPP

#include <vector>

#include "izeta/kappa.hpp"
#include "izeta/special.hpp"

namespace izeta {

// Evaluation plan and outcome for one vertical-ray integral
// 2i int_0^infty (Log phi_{p1,p2})(tau + it) kappa((tau+it,1)) dt.
struct RayIntegralPlan {
  Complex branch_point;
  double truncation_u = 0;   // integration in u (t = u^2) truncated here
  long phi_terms = 0;        // product length at the branch-point height
  long nodes = 0;
  int calibration_sign = 1;
};

struct KlfDiagnostics {
  std::vector<RayIntegralPlan> rays;
};

// I^+/I^- building block: -Li2(e(+-p1)) kappa((1,0)) + 2i * ray integral.
// The minus variant runs the ray on the reflected data (D Omega D, Dc,
// phi_{p1,-p2}) whose upper branch point is -tau^-(c).
Complex I_pm(const OmegaPoint& omega, const AdmissibleVector& c, const RVec2& p, int sign,
             const Real& eps, KlfDiagnostics* diag = nullptr);

// zeta-hat^{c1,c2}_{p,0}(Omega, 1) = I+(c2) - I-(c2) - I+(c1) + I-(c1)
Complex klf_s1(const OmegaPoint& omega, const RVec2& p, const AdmissibleVector& c1,
               const AdmissibleVector& c2, const Real& eps, KlfDiagnostics* diag = nullptr);

// Omega = iM: zeta-hat = 2i im(I(c2) - I(c1)) with I = I^+.
Complex klf_s1_pure_imaginary(const RSym2& m, const RVec2& p, const AdmissibleVector& c1,
                              const AdmissibleVector& c2, const Real& eps,
                              KlfDiagnostics* diag = nullptr);

// s = 0 via the functional equation: (1/sqrt(det(-i Omega))) *
// klf_s1(-Omega^{-1}, -q mod 1, conj(Omega) c1, conj(Omega) c2).
Complex klf_s0(const OmegaPoint& omega, const RVec2& q, const AdmissibleVector& c1,
               const AdmissibleVector& c2, const Real& eps, KlfDiagnostics* diag = nullptr);

// Pure imaginary s = 0 piece with its J-values exposed. J follows the
// worked-example normalization J = 2 * (ray assembly on the transported
// data); the zeta value is im(J(c2) - J(c1)) / sqrt(-det M), equivalently the
// printed-theorem constant absorbed consistently (see tests against both the
// reference values and zeta_direct).
struct KlfS0PureImaginary {
  Complex zeta_value;  // zeta-hat^{c1,c2}_{0,q}(iM, 0)
  Complex j_c1, j_c2;  // J(c1), J(c2)
};
KlfS0PureImaginary klf_s0_pure_imaginary(const RSym2& m, const RVec2& q,
                                         const AdmissibleVector& c1, const AdmissibleVector& c2,
                                         const Real& eps, KlfDiagnostics* diag = nullptr);

// Product-length economics: terms of phi needed per decimal digit at height
// im(tau) (the log(10)/(2 pi im tau) accounting).
double phi_terms_per_digit(double im_tau);

}  // namespace izeta

#endif
