#include <doctest.h>

#include "support/oracles.hpp"

using namespace izeta;
using namespace izeta::testing;

namespace {
constexpr int P = 40;
const long B = bits_for_digits(P);

RSym2 diag(long a, long d, long bits) {
  return {Real::of(a, bits), Real::of(0L, bits), Real::of(d, bits)};
}
}  // namespace

TEST_CASE("real arithmetic and string round-trips") {
  Real x = Real::parse("676/3", B);
  Real y = Real::of(676L, B) / 3;
  CHECK(abs(x - y) < pow2(-B + 4, B));
  CHECK(Real::parse("1.25", B).str(6) == "1.250000");
  CHECK(Real::parse("-3", B) == Real::of(-3L, B));
  CHECK_THROWS_AS(Real::parse("zz", B), ParseError);
  Real pi = Real::pi(B);
  CHECK(pi.str(10).substr(0, 11) == "3.141592653");
}

TEST_CASE("complex principal branches") {
  Complex m1 = Complex::of(-1, 0, B);
  Complex r = sqrt(m1);
  CHECK(abs(r - Complex::i(B)) < pow2(-B + 8, B));  // sqrt(-1) = +i
  Complex z = C("-2.25", "0", P);
  CHECK(sqrt(z).im() > 0);
  CHECK(abs(e2pi(Complex(Real::of(1L, B)))-Complex::of(1, 0, B)) < pow2(-B + 12, B));
}

TEST_CASE("q_form examples") {
  RSym2 id = diag(1, 1, B);
  CVec2 e1{Complex::of(1, 0, B), Complex(B)};
  CHECK(abs(q_form(id, e1) - Complex(Real::of(1L, B) / 2)) < pow2(-B + 4, B));

  RSym2 m = diag(2, -6, B);
  CVec2 v11{Complex::of(1, 0, B), Complex::of(1, 0, B)};
  CHECK(abs(q_form(m, v11) + Complex::of(2, 0, B)) < pow2(-B + 4, B));

  CVec2 p3c{Complex::of(45, 0, B), Complex::of(26, 0, B)};
  // (1/2)(2*45^2 - 6*26^2) = -3
  CHECK(abs(q_form(m, p3c) + Complex::of(3, 0, B)) < pow2(-B + 8, B));
}

TEST_CASE("q_form bilinear consistency on random vectors") {
  Rng rng(7001);
  RSym2 m = random_sig11(rng, B);
  for (int i = 0; i < 40; ++i) {
    CVec2 u{C("0", "0", P), C("0", "0", P)};
    u.x = Complex(rng.real(-2, 2, B), rng.real(-2, 2, B));
    u.y = Complex(rng.real(-2, 2, B), rng.real(-2, 2, B));
    CVec2 v{Complex(rng.real(-2, 2, B), rng.real(-2, 2, B)),
            Complex(rng.real(-2, 2, B), rng.real(-2, 2, B))};
    CVec2 w{u.x + v.x, u.y + v.y};
    Complex lhs = q_form(m, w) - q_form(m, u) - q_form(m, v);
    Complex rhs = dot(u, m.mul(v));
    CHECK(abs(lhs - rhs) < pow10(-P + 5, B));
  }
}

TEST_CASE("signature2 examples") {
  CHECK(signature2(diag(2, -6, B)) == std::pair<int, int>{1, 1});
  CHECK(signature2(diag(1, 1, B)) == std::pair<int, int>{2, 0});
  CHECK(signature2(diag(-1, -3, B)) == std::pair<int, int>{0, 2});

  // im(-Lambda) for the transported section-3 c1 = (0,1) data; the true matrix
  // is [[1351/2, 390], [390, 1351/6]] with det 1/12 (the rank-one part alone
  // is singular).
  RSym2 lam{Real::parse("1351/2", B), Real::of(390L, B), Real::parse("1351/6", B)};
  CHECK(signature2(lam) == std::pair<int, int>{2, 0});
  CHECK(abs(lam.det() - Real::parse("1/12", B)) < pow2(-B + 24, B));

  RSym2 singular{Real::of(675L, B), Real::of(390L, B), Real::parse("676/3", B)};
  CHECK_THROWS_AS(signature2(singular), ValidationError);  // det exactly 0
}

TEST_CASE("omega point validation") {
  CHECK_THROWS_AS(OmegaPoint::pure(diag(1, 1, B), 1), ValidationError);
  CHECK_THROWS_AS(OmegaPoint::pure(diag(2, -6, B), 0), ValidationError);
  CHECK_NOTHROW(OmegaPoint::pure(diag(2, -6, B), 1));
  CHECK_NOTHROW(OmegaPoint::pure(diag(1, 1, B), 0));
}

TEST_CASE("quadratic_roots_split on i*identity") {
  OmegaPoint lam = OmegaPoint::pure(diag(1, 1, B), 0);
  auto [tp, tm] = quadratic_roots_split(lam);
  CHECK(abs(tp - Complex::i(B)) < pow2(-B + 8, B));
  CHECK(abs(tm + Complex::i(B)) < pow2(-B + 8, B));
}

TEST_CASE("check_toomuch examples") {
  CHECK(check_toomuch(OmegaPoint::pure(diag(1, 1, B), 0)));
  RSym2 n{Real::of(1L, B), Real::of(0L, B), Real::of(0L, B)};
  CHECK(check_toomuch(OmegaPoint(diag(1, 1, B), n, 0)));
}

TEST_CASE("random H_2^(0) points: root splitting and the lemma inequality") {
  Rng rng(40411);
  int count = 200;  // the acceptance suite runs the full 1000
  for (int i = 0; i < count; ++i) {
    RSym2 m = random_posdef(rng, B);
    RSym2 n = random_symmetric(rng, 1.2, B);
    OmegaPoint om(m, n, 0);
    auto [tp, tm] = quadratic_roots_split(om);
    CHECK(tp.im() > 0);
    CHECK(tm.im() < 0);
    CHECK(check_toomuch(om));
  }
}

TEST_CASE("admissible vector certificates") {
  RSym2 m = diag(2, -6, B);
  CHECK_NOTHROW(AdmissibleVector(CVec2{C("0", "0", P), C("1", "0", P)}, m));
  CHECK_THROWS_AS(AdmissibleVector(CVec2{C("1", "0", P), C("0", "0", P)}, m),
                  ValidationError);
  AdmissibleVector c({C("-1", "0", P), C("1", "0", P)}, m);
  CHECK(abs(c.certificate() + Real::of(4L, B)) < pow2(-B + 4, B));
  // transported -iMc has the same certificate
  CVec2 mc = m.mul(c.c());
  RSym2 minv{Real::parse("1/2", B), Real::of(0L, B), Real::parse("-1/6", B)};
  AdmissibleVector ct({mc.x.times_minus_i(), mc.y.times_minus_i()}, minv);
  CHECK(abs(ct.certificate() + Real::of(4L, B)) < pow2(-B + 4, B));
}

TEST_CASE("characteristics flags") {
  Characteristics ch({R("1/5", P), R("0", P)}, {R("2/5", P), R("4/5", P)});
  CHECK(!ch.p_integral());
  CHECK(!ch.q_integral());
  Characteristics zero({R("0", P), R("0", P)}, {R("3", P), R("-2", P)});
  CHECK(zero.p_integral());
  CHECK(zero.q_integral());
}
