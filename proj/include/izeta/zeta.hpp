#ifndef IZETA_ZETA_HPP
#define IZETA_ZETA_HPP

#include <vector>

#include "izeta/theta.hpp"

namespace izeta {

struct ZetaRequest {
  OmegaPoint omega;
  Characteristics chars;
  AdmissibleVector c1, c2;
  Complex s;
  Real eps;
};

struct ZetaDiagnostics {
  long nodes_direct = 0;
  long nodes_transported = 0;
  int level_direct = 0;
  int level_transported = 0;
};

// Reference evaluator: the Mellin integral over (0,infty), split at t = 1
// with t -> 1/t on (0,1]; every sample is a theta-null evaluation. The folded
// piece runs on the transported parameters (-Omega^{-1}, (-q,p), conj(Omega)c)
// with the prefactor e(p^T q)/sqrt(det(-i Omega)).
Complex zeta_direct(const ZetaRequest& req, ZetaDiagnostics* diag = nullptr);

// Same request evaluated at several s sharing all theta samples.
std::vector<Complex> zeta_direct_multi(const ZetaRequest& req, const std::vector<Complex>& svals,
                                       ZetaDiagnostics* diag = nullptr);

struct ZetaTransport {
  ZetaRequest request;  // Omega' = -Omega^{-1}, (p,q) -> (-q,p), c -> conj(Omega)c, s -> 1-s
  Complex prefactor;    // e(p^T q)/sqrt(det(-i Omega)), principal branch
};

// The parameter transport of the functional equation; nothing is evaluated.
// Transported admissibility is re-certified (failure signals a convention bug).
ZetaTransport functional_equation_transport(const ZetaRequest& req);

}  // namespace izeta

#endif
