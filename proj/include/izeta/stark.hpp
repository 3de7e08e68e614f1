#ifndef IZETA_STARK_HPP
#define IZETA_STARK_HPP

#include <optional>
#include <string>
#include <vector>

#include "izeta/klf.hpp"
#include "izeta/zeta.hpp"

namespace izeta {

// Coefficient a + b sqrt(D) of the unit's minimal polynomial over Z[sqrt(D)].
struct QuadIntCoeff {
  long a = 0, b = 0;
};

struct UnitPolynomial {
  long d = 0;                        // the sqrt(D)
  std::vector<QuadIntCoeff> coeffs;  // ascending powers
};

// The assembled real-quadratic computation: M of signature (1,1), an
// admissible real c, the form-preserving integer action P (P^T M P = M), and
// the list of characteristics q_j produced by the unit action. The q-list is
// caller-supplied data; verify_piece_identity gives the numeric guard that a
// supplied list is consistent with the P-decomposition.
struct StarkInstance {
  RSym2 m;
  CVec2 c;
  IMat2 p_action;
  std::vector<RVec2> q_list;
  std::optional<UnitPolynomial> polynomial;
};

void validate(const StarkInstance& inst);

struct StarkResult {
  Real z_prime;                  // Z'(0)
  Real unit;                     // exp(Z'(0)), taken at elevated precision
  std::vector<Complex> j_diffs;  // J(Pc) - J(c) per piece
  std::vector<Complex> piece_values;
  Real imag_defect;              // |im| of the assembled sum (should be ~0)
  std::optional<Real> poly_residual;
  std::optional<Real> poly_residual_reciprocal;
  std::vector<std::string> warnings;
};

StarkResult z_prime(const StarkInstance& inst, const Real& eps);

// |zeta^{P^j c, P^{j+1} c}_{0, q_0} - zeta^{c, Pc}_{0, q_j}| at s = 0 through
// zeta_direct on both sides.
Real verify_piece_identity(const StarkInstance& inst, int j, const Real& eps);

struct UnitPolyReport {
  Real residual;             // |poly(x)|
  Real residual_reciprocal;  // |poly(1/x)|
};
UnitPolyReport verify_unit_polynomial(const Real& x, const UnitPolynomial& poly);

}  // namespace izeta

#endif
