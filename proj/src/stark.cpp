#include "izeta/stark.hpp"

#include "izeta/parallel.hpp"

namespace izeta {

namespace {

CVec2 apply_pow(const IMat2& p, const CVec2& v, int k) {
  CVec2 r = v;
  for (int i = 0; i < k; ++i) r = p.mul(r);
  return r;
}

}  // namespace

void validate(const StarkInstance& inst) {
  long prec = inst.m.prec();
  auto sig = signature2(inst.m);
  if (!(sig.first == 1 && sig.second == 1))
    throw ValidationError("stark: M must have signature (1,1)");
  // P^T M P = M within 10^(-P+5)-grade tolerance
  const IMat2& P = inst.p_action;
  Real tol = pow2(-prec + 20, prec) * inst.m.norm_inf();
  Real b11 = inst.m.a11 * (P.a * P.a) + 2 * inst.m.a12 * (P.a * P.c) + inst.m.a22 * (P.c * P.c);
  Real b12 = inst.m.a11 * (P.a * P.b) + inst.m.a12 * (P.a * P.d + P.b * P.c) +
             inst.m.a22 * (P.c * P.d);
  Real b22 = inst.m.a11 * (P.b * P.b) + 2 * inst.m.a12 * (P.b * P.d) + inst.m.a22 * (P.d * P.d);
  if (abs(b11 - inst.m.a11) > tol || abs(b12 - inst.m.a12) > tol || abs(b22 - inst.m.a22) > tol)
    throw ValidationError("stark: P does not preserve the form (P^T M P != M)");
  for (const auto& q : inst.q_list) {
    if (frac1(q.x).is_zero() && frac1(q.y).is_zero())
      throw ValidationError("stark: every q_j must be non-integral");
  }
  AdmissibleVector c(inst.c, inst.m);      // throws if not admissible
  AdmissibleVector pc(inst.p_action.mul(inst.c), inst.m);
}

StarkResult z_prime(const StarkInstance& inst, const Real& eps) {
  validate(inst);
  long prec = inst.m.prec();
  AdmissibleVector c(inst.c, inst.m);
  AdmissibleVector pc(inst.p_action.mul(inst.c), inst.m);

  size_t n = inst.q_list.size();
  std::vector<KlfS0PureImaginary> pieces(n);
  Real eps_piece = n ? eps / static_cast<long>(2 * n) : eps;
  parallel_for(static_cast<long>(n), [&](long j) {
    pieces[static_cast<size_t>(j)] =
        klf_s0_pure_imaginary(inst.m, inst.q_list[static_cast<size_t>(j)], c, pc, eps_piece);
  });

  StarkResult out{Real::of(0L, prec), Real::of(0L, prec), {}, {}, Real::of(0L, prec), {}, {}, {}};
  Complex total(prec);
  for (auto& pi : pieces) {
    total += pi.zeta_value;
    out.j_diffs.push_back(pi.j_c2 - pi.j_c1);
    out.piece_values.push_back(pi.zeta_value);
  }
  out.z_prime = total.re();
  out.imag_defect = abs(total.im());
  if (out.imag_defect > eps * 16)
    out.warnings.push_back("assembled Z'(0) has an unexpectedly large imaginary part");
  // exp at elevated precision to protect the digits through the exponential
  long hi = prec + bits_for_digits(10) - 32;
  out.unit = exp(out.z_prime.at_prec(hi)).at_prec(prec);

  if (inst.polynomial) {
    auto rep = verify_unit_polynomial(out.unit, *inst.polynomial);
    out.poly_residual = rep.residual;
    out.poly_residual_reciprocal = rep.residual_reciprocal;
  }
  return out;
}

Real verify_piece_identity(const StarkInstance& inst, int j, const Real& eps) {
  validate(inst);
  if (j < 0 || static_cast<size_t>(j) >= inst.q_list.size())
    throw ValidationError("verify_piece_identity: piece index out of range");
  long prec = inst.m.prec();
  OmegaPoint omega = OmegaPoint::pure(inst.m, 1);
  AdmissibleVector cj(apply_pow(inst.p_action, inst.c, j), inst.m);
  AdmissibleVector cj1(apply_pow(inst.p_action, inst.c, j + 1), inst.m);
  AdmissibleVector c(inst.c, inst.m);
  AdmissibleVector pc(inst.p_action.mul(inst.c), inst.m);
  Complex s0 = Complex(prec);
  ZetaRequest lhs{omega, Characteristics::zero_p(inst.q_list[0]), cj, cj1, s0, eps / 2};
  ZetaRequest rhs{omega, Characteristics::zero_p(inst.q_list[static_cast<size_t>(j)]), c, pc, s0,
                  eps / 2};
  Complex a = zeta_direct(lhs);
  Complex b = zeta_direct(rhs);
  return abs(a - b);
}

UnitPolyReport verify_unit_polynomial(const Real& x, const UnitPolynomial& poly) {
  long prec = x.prec() + 64;
  Real sd = sqrt(Real::of(poly.d, prec));
  auto eval = [&](const Real& v) {
    Real acc = Real::of(0L, prec);
    for (size_t k = poly.coeffs.size(); k-- > 0;) {
      const auto& co = poly.coeffs[k];
      acc = acc * v + (Real::of(co.a, prec) + Real::of(co.b, prec) * sd);
    }
    return acc;
  };
  Real xe = x.at_prec(prec);
  UnitPolyReport rep{abs(eval(xe)).at_prec(x.prec()),
                     abs(eval(1 / xe)).at_prec(x.prec())};
  return rep;
}

}  // namespace izeta
