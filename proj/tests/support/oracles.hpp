#ifndef IZETA_TESTS_ORACLES_HPP
#define IZETA_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "izeta/admissible.hpp"
#include "izeta/complexnum.hpp"
#include "izeta/halfspace.hpp"
#include "izeta/special.hpp"

namespace izeta::testing {

inline Real R(const char* s, int digits) { return Real::parse(s, bits_for_digits(digits)); }
inline Complex C(const char* re, const char* im, int digits) {
  return Complex(R(re, digits), R(im, digits));
}

// deterministic dyadic samples in [lo, hi] (k/2^20 grid)
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    uint64_t k = eng_() >> 44;  // 20 bits
    return lo + (hi - lo) * (static_cast<double>(k) / 1048576.0);
  }
  Real real(double lo, double hi, long bits) { return Real::of(uniform(lo, hi), bits); }
  bool flip() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Random well-conditioned signature-(1,1) matrix: rotation of diag(a, -b),
// a in [0.8, 1.8], b in [0.6, 1.6], angle in [0, pi/2).
inline RSym2 random_sig11(Rng& rng, long bits) {
  Real a = rng.real(0.8, 1.8, bits);
  Real b = rng.real(0.6, 1.6, bits);
  Real th = rng.real(0.0, 1.5, bits);
  Real c = cos(th), s = sin(th);
  return {a * c * c - b * s * s, (a + b) * c * s, a * s * s - b * c * c};
}

inline RSym2 random_posdef(Rng& rng, long bits) {
  Real a = rng.real(0.5, 1.6, bits);
  Real b = rng.real(0.5, 1.6, bits);
  Real th = rng.real(0.0, 1.5, bits);
  Real c = cos(th), s = sin(th);
  return {a * c * c + b * s * s, (a - b) * c * s, a * s * s + b * c * c};
}

inline RSym2 random_symmetric(Rng& rng, double scale, long bits) {
  return {rng.real(-scale, scale, bits), rng.real(-scale, scale, bits),
          rng.real(-scale, scale, bits)};
}

// Real admissible c for M: walk the negative cone. Samples directions until
// c^T M c < -margin * |c|^2-ish.
inline CVec2 random_real_admissible(Rng& rng, const RSym2& m, long bits) {
  for (int tries = 0; tries < 400; ++tries) {
    RVec2 c{rng.real(-1.5, 1.5, bits), rng.real(-1.5, 1.5, bits)};
    Real q = q_form(m, c) * 2;
    Real n2 = c.x * c.x + c.y * c.y;
    if (n2 < Real::of(0.2, bits)) continue;
    if (q < Real::of(-0.35, bits) * n2) return CVec2::from(c);
  }
  throw std::runtime_error("random_real_admissible: no sample found");
}

// Complex admissible c: real admissible core plus a small complex
// perturbation keeping the certificate below -0.2 |c|^2.
inline CVec2 random_complex_admissible(Rng& rng, const RSym2& m, long bits) {
  for (int tries = 0; tries < 400; ++tries) {
    CVec2 base = random_real_admissible(rng, m, bits);
    CVec2 c{Complex(base.x.re(), rng.real(-0.25, 0.25, bits)),
            Complex(base.y.re(), rng.real(-0.25, 0.25, bits))};
    Real cert = hermitian_form(m, c);
    Real n2 = norm2(c.x) + norm2(c.y);
    if (cert < Real::of(-0.25, bits) * n2) return c;
  }
  throw std::runtime_error("random_complex_admissible: no sample found");
}

// non-integral characteristic component on the 1/64 grid in [0.15, 0.85]
inline Real random_char(Rng& rng, long bits) {
  double u = rng.uniform(0.15, 0.85);
  double snapped = std::round(u * 64.0) / 64.0;
  if (snapped < 0.1) snapped = 0.15625;
  return Real::of(snapped, bits);
}

// Independent brute-force box sum for Theta_{p,q}(t i M + t N) with a fixed
// radius; no shells, no prescreen - pure reference semantics.
inline Complex brute_force_theta_null(const OmegaPoint& om, const RVec2& p, const RVec2& q,
                                      const AdmissibleVector& c1, const AdmissibleVector& c2,
                                      const Real& t, long radius) {
  long bits = om.prec();
  Complex acc(bits);
  Real st = sqrt(t);
  for (long n1 = -radius; n1 <= radius; ++n1) {
    for (long n2 = -radius; n2 <= radius; ++n2) {
      RVec2 v{q.x + n1, q.y + n2};
      CVec2 vc = CVec2::from(v);
      Complex r = rho(om.m(), c1, c2, {vc.x * st, vc.y * st});
      Complex expo = om.q(vc) * t + Complex(dot(p, v));
      acc += r * e2pi(expo);
    }
  }
  return acc;
}

}  // namespace izeta::testing

#endif
