#include "izeta/halfspace.hpp"

#include "izeta/errors.hpp"

namespace izeta {

std::pair<int, int> signature2(const RSym2& m) {
  long p = m.prec();
  Real det = m.det();
  Real scale = m.norm_inf();
  if (scale.is_zero()) throw ValidationError("signature2: zero matrix");
  Real tol = pow2(-p / 2, p) * scale * scale;
  if (abs(det) <= tol) {
    double ev = (abs(det) / scale).to_double();
    throw ValidationError("signature2: near-singular matrix, smallest |eigenvalue| ~ " +
                          std::to_string(ev));
  }
  if (det.sign() < 0) return {1, 1};
  // definite; the sign of any diagonal entry decides (a11 = 0 impossible here:
  // det > 0 forces a11*a22 > a12^2 >= 0)
  return m.a11.sign() > 0 ? std::pair<int, int>{2, 0} : std::pair<int, int>{0, 2};
}

OmegaPoint::OmegaPoint(RSym2 m, RSym2 n, int k) : m_(std::move(m)), n_(std::move(n)), k_(k) {
  if (k_ != 0 && k_ != 1) throw ValidationError("OmegaPoint: only k in {0,1} supported");
  auto sig = signature2(m_);
  if (k_ == 1 && !(sig.first == 1 && sig.second == 1))
    throw ValidationError("OmegaPoint(2,1): im(Omega) must have signature (1,1)");
  if (k_ == 0 && !(sig.first == 2 && sig.second == 0))
    throw ValidationError("OmegaPoint(2,0): im(Omega) must be positive definite");
}

OmegaPoint OmegaPoint::neg_inverse() const {
  CSym2 om = omega();
  Complex d = om.det();
  // -Omega^{-1} = [[-w22, w12],[w12, -w11]] / det
  Complex b11 = -om.a22 / d, b12 = om.a12 / d, b22 = -om.a11 / d;
  return OmegaPoint({b11.im(), b12.im(), b22.im()}, {b11.re(), b12.re(), b22.re()}, k_);
}

std::pair<Complex, Complex> quadratic_roots_split(const OmegaPoint& lambda) {
  if (lambda.k() != 0) throw ValidationError("quadratic_roots_split: expects H_2^(0) point");
  CSym2 om = lambda.omega();
  long p = lambda.prec();
  if (abs(om.a11) <= pow2(-p + 8, p))
    throw ValidationError("quadratic_roots_split: leading entry ~ 0");
  // (-w12 +- sqrt(det(-i Omega))) / w11;  det(-i Omega) = w12^2 - w11 w22
  Complex disc = sqrt(om.a12 * om.a12 - om.a11 * om.a22);
  Complex r1 = (-om.a12 + disc) / om.a11;
  Complex r2 = (-om.a12 - disc) / om.a11;
  if (r1.im().sign() < 0) std::swap(r1, r2);
  Real guard = pow2(-p + 2, p);
  if (abs(r1.im()) <= guard || abs(r2.im()) <= guard)
    throw ValidationError("quadratic_roots_split: root too close to the real axis at this precision");
  if (!(r1.im().sign() > 0 && r2.im().sign() < 0))
    throw ValidationError("quadratic_roots_split: roots not split by the real axis");
  return {r1, r2};
}

bool check_toomuch(const OmegaPoint& omega0) {
  CSym2 om = omega0.omega();
  if (abs(om.a11).is_zero()) throw ValidationError("check_toomuch: w11 = 0");
  Complex lhs1 = Complex::of(-1, 0, omega0.prec()) / om.a11;
  Complex lhs2 = om.det() / om.a11;
  Complex rhs = om.a12 / om.a11;
  return (lhs1.im() * lhs2.im() > rhs.im() * rhs.im());
}

}  // namespace izeta
