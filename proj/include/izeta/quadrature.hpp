#ifndef IZETA_QUADRATURE_HPP
#define IZETA_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "izeta/complexnum.hpp"
#include "izeta/errors.hpp"

namespace izeta {

struct QuadResult {
  Complex value;
  Real err_est;   // |I_L - I_{L-1}| at the accepted level
  int level = 0;
  long nodes = 0;
};

// tanh-sinh abscissa/weight on (-1,1): x = tanh((pi/2) sinh(kh)),
// w = (pi/2) cosh(kh)/cosh^2((pi/2) sinh(kh)).
struct TSNode {
  Real x;  // in (0,1); use +-x
  Real w;
};

// Nodes new at `level` (odd multiples of h = 2^-level; level 0 gives k=0 plus
// the integer abscissas). Cut off when the weight underflows the precision.
std::vector<TSNode> ts_nodes_for_level(int level, long prec_bits);

// Adaptive tanh-sinh on [a,b], absolute tolerance eps: levels are doubled
// until two successive levels agree within eps/2.
QuadResult tanh_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                     const Real& eps, int min_level = 4, int max_level = 11);

// Trapezoid rule on a circle |z - center| = radius (spectrally accurate for
// holomorphic integrands): returns the contour integral of f dz, doubling the
// node count until two levels agree within eps.
QuadResult circle_contour(const std::function<Complex(const Complex&)>& f, const Complex& center,
                          const Real& radius, const Real& eps, int start_nodes = 32,
                          int max_nodes = 16384);

}  // namespace izeta

#endif
