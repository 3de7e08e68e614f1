#ifndef IZETA_THETA_HPP
#define IZETA_THETA_HPP

#include <memory>
#include <utility>

#include "izeta/admissible.hpp"
#include "izeta/special.hpp"

namespace izeta {

struct TruncationReport {
  long radius = 0;       // box truncation ||n||_inf <= radius
  long terms = 0;        // lattice points actually evaluated
  long screened = 0;     // points skipped by the double-precision bound
  double tail_bound = 0; // last two shell masses combined
  double accuracy = 0;   // achieved accuracy estimate
  bool transformed = false;  // t < 1 handled through the modular transformation
};

struct ThetaRequest {
  OmegaPoint omega;
  CVec2 z;
  AdmissibleVector c1, c2;
  Real eps;
};

// Theta^{c1,c2}(z, Omega) by shell-doubled lattice summation.
std::pair<Complex, TruncationReport> theta(const ThetaRequest& req);

// Theta_{p,q}^{c1,c2}(t * Omega) for a fixed request, many t. The shifted
// lattice form sum_n rho_M((n+q) t^(1/2)) e(Q_Omega(n+q) t + p^T (n+q)) is
// used directly for t >= 1; for t < 1 the evaluation routes through the
// transformation Theta_{p,q}(t Omega) =
//   e(p^T q) / (t sqrt(det(-i Omega))) * Theta_{-q,p}((1/t)(-Omega^{-1}))
// on the transported parameters (raw small-t lattice sums are infeasible).
class ThetaNullEvaluator {
 public:
  ThetaNullEvaluator(const OmegaPoint& omega, const RVec2& p, const RVec2& q,
                     const AdmissibleVector& c1, const AdmissibleVector& c2,
                     bool allow_transform = true);
  ~ThetaNullEvaluator();
  ThetaNullEvaluator(ThetaNullEvaluator&&) noexcept;

  std::pair<Complex, TruncationReport> value(const Real& t, const Real& eps) const;

  const OmegaPoint& omega() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Theta null with characteristics: prefactor e((1/2) q^T Omega q + p^T q)
// times Theta(p + Omega q; Omega), evaluated on the shifted lattice.
std::pair<Complex, TruncationReport> theta_null(const OmegaPoint& omega, const RVec2& p,
                                                const RVec2& q, const AdmissibleVector& c1,
                                                const AdmissibleVector& c2, const Real& eps,
                                                const Real& t_scale);

}  // namespace izeta

#endif
