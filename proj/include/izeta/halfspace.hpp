#ifndef IZETA_HALFSPACE_HPP
#define IZETA_HALFSPACE_HPP

#include <utility>

#include "izeta/vecmat.hpp"

namespace izeta {

// Inertia (n_plus, n_minus) of a real symmetric 2x2 via leading minor and
// determinant. Rejects near-singular input: |det| must exceed
// 2^(-prec/2) * ||M||^2 (the 10^(-P/2) rule at the bit level).
std::pair<int, int> signature2(const RSym2& m);

// A point Omega = iM + N of the Siegel intermediate half-space H_2^(k),
// validated at construction. k = 1: signature (1,1), det M < 0.
// k = 0: M positive definite.
class OmegaPoint {
 public:
  OmegaPoint(RSym2 m, RSym2 n, int k);

  const RSym2& m() const { return m_; }
  const RSym2& n() const { return n_; }
  int k() const { return k_; }
  long prec() const { return std::max(m_.prec(), n_.prec()); }
  bool pure_imaginary() const {
    return n_.a11.is_zero() && n_.a12.is_zero() && n_.a22.is_zero();
  }

  Complex omega(int i, int j) const {
    const Real& nr = (i == 1 && j == 1) ? n_.a11 : (i == 2 && j == 2) ? n_.a22 : n_.a12;
    const Real& mr = (i == 1 && j == 1) ? m_.a11 : (i == 2 && j == 2) ? m_.a22 : m_.a12;
    return Complex(nr, mr);
  }
  CSym2 omega() const {
    return {Complex(n_.a11, m_.a11), Complex(n_.a12, m_.a12), Complex(n_.a22, m_.a22)};
  }
  Complex det_omega() const { return omega().det(); }
  // det(-i Omega) = -det(Omega) for g = 2
  Complex det_minus_i_omega() const { return -det_omega(); }

  CVec2 mul(const CVec2& v) const { return omega().mul(v); }
  Complex q(const CVec2& v) const { return q_form(omega(), v); }

  // -Omega^{-1}, staying in the same half-space family.
  OmegaPoint neg_inverse() const;
  // D Omega D, D = diag(-1,1).
  OmegaPoint reflect() const { return OmegaPoint(m_.reflect(), n_.reflect(), k_); }

  static OmegaPoint pure(RSym2 m, int k) {
    long p = m.prec();
    return OmegaPoint(std::move(m), RSym2::zero(p), k);
  }

 private:
  RSym2 m_, n_;
  int k_;
};

// Roots of Q_Lambda((xi,1)) = 0 for Lambda in H_2^(0), split by the real
// axis: first has im > 0, second im < 0.
std::pair<Complex, Complex> quadratic_roots_split(const OmegaPoint& lambda);

// The H_2^(0) inequality im(-1/w11) im(det/w11) > im(w12/w11)^2.
bool check_toomuch(const OmegaPoint& omega0);

}  // namespace izeta

#endif
