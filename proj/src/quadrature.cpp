#include "izeta/quadrature.hpp"

#include <algorithm>

#include "izeta/parallel.hpp"

namespace izeta {

std::vector<TSNode> ts_nodes_for_level(int level, long prec_bits) {
  long wp = prec_bits + 24;
  std::vector<TSNode> out;
  Real h = pow2(-level, wp);
  Real half_pi = Real::pi(wp) / 2;
  // k = 0 appears only at level 0; levels >= 1 use odd k (even ones are reused)
  long k0 = (level == 0) ? 0 : 1;
  long step = (level == 0) ? 1 : 2;
  Real w_floor = pow2(-prec_bits - 16, wp);
  for (long k = k0;; k += step) {
    Real t = Real::of(k, wp) * h;
    Real sh = sinh(t), ch = cosh(t);
    Real u = half_pi * sh;
    Real cu = cosh(u);
    Real w = half_pi * ch / (cu * cu);
    if (w < w_floor) break;
    Real x = tanh(u);
    out.push_back({std::move(x), std::move(w)});
    if (k > (3000L << level)) throw ConvergenceError("tanh-sinh node cutoff not reached", w.to_double());
  }
  return out;
}

QuadResult tanh_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                     const Real& eps, int min_level, int max_level) {
  long prec = std::max(a.prec(), b.prec());
  long wp = prec + 24;
  Real mid = (a + b) / 2, rad = (b - a) / 2;
  Complex acc(wp);  // running h * sum(w f)
  long nodes = 0;
  Complex prev(wp);
  bool have_prev = false;
  for (int level = 0; level <= max_level; ++level) {
    auto ns = ts_nodes_for_level(level, prec);
    std::vector<Complex> vals(ns.size() * 2, Complex(wp));
    parallel_for(static_cast<long>(ns.size()), [&](long i) {
      const auto& nd = ns[static_cast<size_t>(i)];
      Real dx = rad * nd.x;
      vals[2 * static_cast<size_t>(i)] = f(mid + dx) * nd.w;
      // k = 0 node is its own mirror
      if (level == 0 && i == 0)
        vals[2 * static_cast<size_t>(i) + 1] = Complex(wp);
      else
        vals[2 * static_cast<size_t>(i) + 1] = f(mid - dx) * nd.w;
    });
    Complex lvl_sum(wp);
    for (auto& v : vals) lvl_sum += v;
    nodes += static_cast<long>(vals.size());
    Real h = pow2(-level, wp);
    if (level == 0)
      acc = lvl_sum * h;
    else
      acc = acc / 2 + lvl_sum * h;
    Complex cur = acc * rad;
    if (have_prev && level >= min_level) {
      Real delta = abs(cur - prev);
      if (delta <= eps / 2) return {cur, delta, level, nodes};
    }
    prev = cur;
    have_prev = true;
  }
  throw ConvergenceError("tanh-sinh did not reach tolerance by max level",
                         abs(acc * rad - prev).to_double());
}

QuadResult circle_contour(const std::function<Complex(const Complex&)>& f, const Complex& center,
                          const Real& radius, const Real& eps, int start_nodes, int max_nodes) {
  long prec = center.prec();
  long wp = prec + 24;
  Real two_pi = 2 * Real::pi(wp);
  Complex prev(wp);
  bool have_prev = false;
  long total = 0;
  for (int n = start_nodes; n <= max_nodes; n *= 2) {
    std::vector<Complex> vals(static_cast<size_t>(n), Complex(wp));
    parallel_for(n, [&](long j) {
      Real th = two_pi * Real::of(j, wp) / static_cast<long>(n);
      Real s(wp), c(wp);
      mpfr_sin_cos(s.raw(), c.raw(), th.raw(), MPFR_RNDN);
      Complex unit(c, s);
      Complex z = center + radius * unit;
      // f(z) * i * radius * e^{i theta} dtheta
      vals[static_cast<size_t>(j)] = f(z) * unit.times_i() * radius;
    });
    Complex sum(wp);
    for (auto& v : vals) sum += v;
    total += n;
    Complex cur = sum * (two_pi / static_cast<long>(n));
    if (have_prev) {
      Real delta = abs(cur - prev);
      if (delta <= eps) return {cur, delta, n, total};
    }
    prev = cur;
    have_prev = true;
  }
  throw ConvergenceError("circle contour did not converge", 0.0);
}

}  // namespace izeta
