#ifndef IZETA_ADMISSIBLE_HPP
#define IZETA_ADMISSIBLE_HPP

#include <utility>

#include "izeta/errors.hpp"
#include "izeta/halfspace.hpp"
#include "izeta/vecmat.hpp"

namespace izeta {

// c in C^2 with cbar^T M c < 0, checked at construction against the M it will
// be used with. Stores the certificate and mu = sqrt(-(1/2) c^T M c)
// (principal branch; positive real for real c).
class AdmissibleVector {
 public:
  AdmissibleVector(CVec2 c, const RSym2& m) : c_(std::move(c)) {
    certificate_ = hermitian_form(m, c_);
    if (!(certificate_.sign() < 0))
      throw ValidationError("AdmissibleVector: cbar^T M c = " +
                            certificate_.str(8) + " is not negative");
    q_mc_ = q_form(m, c_);              // complex for complex c
    mu_ = sqrt(-q_mc_);                 // sqrt(-(1/2) c^T M c)
  }

  const CVec2& c() const { return c_; }
  const Real& certificate() const { return certificate_; }
  const Complex& q_mc() const { return q_mc_; }  // Q_M(c)
  const Complex& mu() const { return mu_; }
  bool is_real() const { return c_.is_real(); }
  long prec() const { return c_.prec(); }

  AdmissibleVector reflected(const RSym2& m_reflected) const {
    return AdmissibleVector({-c_.x, c_.y}, m_reflected);
  }

 private:
  CVec2 c_;
  Real certificate_;
  Complex q_mc_;
  Complex mu_;
};

// Characteristics (p, q) in R^2 x R^2 with cached mod-1 reductions and
// integrality flags (at the value's own precision).
class Characteristics {
 public:
  Characteristics(RVec2 p, RVec2 q) : p_(std::move(p)), q_(std::move(q)) {
    p_frac_ = {frac1(p_.x), frac1(p_.y)};
    q_frac_ = {frac1(q_.x), frac1(q_.y)};
    p_integral_ = p_frac_.x.is_zero() && p_frac_.y.is_zero();
    q_integral_ = q_frac_.x.is_zero() && q_frac_.y.is_zero();
  }

  static Characteristics zero_p(RVec2 q) {
    long pr = q.prec();
    return Characteristics({Real::of(0L, pr), Real::of(0L, pr)}, std::move(q));
  }

  const RVec2& p() const { return p_; }
  const RVec2& q() const { return q_; }
  const RVec2& p_frac() const { return p_frac_; }
  const RVec2& q_frac() const { return q_frac_; }
  bool p_integral() const { return p_integral_; }
  bool q_integral() const { return q_integral_; }
  long prec() const { return std::max(p_.prec(), q_.prec()); }

 private:
  RVec2 p_, q_;
  RVec2 p_frac_, q_frac_;
  bool p_integral_, q_integral_;
};

}  // namespace izeta

#endif
