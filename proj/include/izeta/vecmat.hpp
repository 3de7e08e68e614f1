#ifndef IZETA_VECMAT_HPP
#define IZETA_VECMAT_HPP

#include "izeta/complexnum.hpp"
#include "izeta/real.hpp"

namespace izeta {

struct RVec2 {
  Real x, y;
  long prec() const { return std::max(x.prec(), y.prec()); }
  RVec2 at_prec(long p) const { return {x.at_prec(p), y.at_prec(p)}; }
};

struct CVec2 {
  Complex x, y;
  long prec() const { return std::max(x.prec(), y.prec()); }
  bool is_real() const { return x.im().is_zero() && y.im().is_zero(); }
  CVec2 conj() const { return {x.conj(), y.conj()}; }
  CVec2 at_prec(long p) const { return {x.at_prec(p), y.at_prec(p)}; }
  static CVec2 from(const RVec2& v) { return {Complex(v.x), Complex(v.y)}; }
};

inline CVec2 operator-(const CVec2& v) { return {-v.x, -v.y}; }
inline Complex dot(const CVec2& a, const CVec2& b) { return a.x * b.x + a.y * b.y; }
inline Real dot(const RVec2& a, const RVec2& b) { return a.x * b.x + a.y * b.y; }

// Real symmetric 2x2; construction sites guarantee a == a^T by storing one
// off-diagonal entry.
struct RSym2 {
  Real a11, a12, a22;
  long prec() const { return std::max(a11.prec(), std::max(a12.prec(), a22.prec())); }
  Real det() const { return a11 * a22 - a12 * a12; }
  Real norm_inf() const {
    return max(abs(a11) + abs(a12), abs(a12) + abs(a22));
  }
  RVec2 mul(const RVec2& v) const { return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y}; }
  CVec2 mul(const CVec2& v) const {
    return {Complex(a11) * v.x + Complex(a12) * v.y, Complex(a12) * v.x + Complex(a22) * v.y};
  }
  RSym2 at_prec(long p) const { return {a11.at_prec(p), a12.at_prec(p), a22.at_prec(p)}; }
  RSym2 neg() const { return {-a11, -a12, -a22}; }
  // D A D with D = diag(-1, 1): flips the off-diagonal sign.
  RSym2 reflect() const { return {a11, -a12, a22}; }
  static RSym2 zero(long p) {
    return {Real::of(0L, p), Real::of(0L, p), Real::of(0L, p)};
  }
};

// Complex symmetric 2x2.
struct CSym2 {
  Complex a11, a12, a22;
  long prec() const { return std::max(a11.prec(), std::max(a12.prec(), a22.prec())); }
  Complex det() const { return a11 * a22 - a12 * a12; }
  CVec2 mul(const CVec2& v) const { return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y}; }
  CSym2 reflect() const { return {a11, -a12, a22}; }
};

// Q_A(v) = (1/2) v^T A v
inline Real q_form(const RSym2& m, const RVec2& v) {
  return (m.a11 * v.x * v.x + 2 * (m.a12 * v.x * v.y) + m.a22 * v.y * v.y) / 2;
}
inline Complex q_form(const RSym2& m, const CVec2& v) {
  return (Complex(m.a11) * v.x * v.x + 2 * (Complex(m.a12) * v.x * v.y) +
          Complex(m.a22) * v.y * v.y) /
         2;
}
inline Complex q_form(const CSym2& m, const CVec2& v) {
  return (m.a11 * v.x * v.x + 2 * (m.a12 * v.x * v.y) + m.a22 * v.y * v.y) / 2;
}

// v^bar^T A v: real for real symmetric A.
inline Real hermitian_form(const RSym2& m, const CVec2& v) {
  RVec2 re{v.x.re(), v.y.re()}, im{v.x.im(), v.y.im()};
  return q_form(m, re) * 2 + q_form(m, im) * 2;
}

struct IMat2 {
  long a, b, c, d;  // row-major [[a,b],[c,d]]
  IMat2 mul(const IMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  RVec2 mul(const RVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  CVec2 mul(const CVec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  long det() const { return a * d - b * c; }
};

}  // namespace izeta

#endif
