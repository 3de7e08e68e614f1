#include <doctest.h>

#include "izeta/quadrature.hpp"
#include "support/oracles.hpp"

using namespace izeta;
using namespace izeta::testing;

namespace {
constexpr int P = 40;
const long B = bits_for_digits(P);
}

TEST_CASE("tanh-sinh on smooth and endpoint-singular integrands") {
  Real eps = pow10(-P, B);
  // int_0^pi sin = 2
  auto f = [](const Real& x) { return Complex(sin(x)); };
  QuadResult q = tanh_sinh(f, Real::of(0L, B), Real::pi(B), eps);
  CHECK(abs(q.value - Complex::of(2, 0, B)) < eps * 8);

  // int_0^1 x^(-1/2) = 2 (endpoint singularity)
  auto g = [&](const Real& x) {
    return x.is_zero() ? Complex(B) : Complex(1 / sqrt(x));
  };
  q = tanh_sinh(g, Real::of(0L, B), Real::of(1L, B), eps);
  CHECK(abs(q.value - Complex::of(2, 0, B)) < eps * 8);

  // int_0^1 log(x) dx = -1
  auto h = [&](const Real& x) {
    return x.is_zero() ? Complex(B) : Complex(log(x));
  };
  q = tanh_sinh(h, Real::of(0L, B), Real::of(1L, B), eps);
  CHECK(abs(q.value + Complex::of(1, 0, B)) < eps * 8);
}

TEST_CASE("circle contour picks up residues") {
  Real eps = pow10(-P + 4, B);
  auto f = [](const Complex& z) { return Complex(Real::of(1L, z.prec())) / z; };
  QuadResult q = circle_contour(f, Complex(B), Real::of(1L, B) / 2, eps);
  Complex two_pi_i(Real::of(0L, B), 2 * Real::pi(B));
  CHECK(abs(q.value - two_pi_i) < eps * 8);

  // holomorphic integrand integrates to ~0
  auto g = [](const Complex& z) { return exp(z); };
  q = circle_contour(g, Complex::of(1, 1, B), Real::of(1L, B), eps);
  CHECK(abs(q.value) < eps * 8);
}
