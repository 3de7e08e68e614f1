#include "izeta/zeta.hpp"

#include <cmath>
#include <map>

#include "izeta/parallel.hpp"

namespace izeta {

namespace {

struct ESNode {
  Real t;     // abscissa in [1, inf)
  Real w;     // exp-sinh weight (pi/2) cosh(kh) x, x = t - 1
  Real logt;
  Complex th;  // theta sample
  double wf_mag = 0;  // |w * theta| in doubles, for cutoffs
};

// One piece: int_1^inf Theta(t Omega) t^(power-1) dt via exp-sinh nodes
// t = 1 + exp((pi/2) sinh(kh)). Samples are shared across powers.
class PieceIntegrator {
 public:
  PieceIntegrator(const ThetaNullEvaluator& ev, const Real& eps, long prec)
      : ev_(ev), eps_(eps), prec_(prec), wp_(prec + 24) {}

  // integral values for each power in `powers` (the t-exponent is power-1)
  std::vector<Complex> run(const std::vector<Complex>& powers, int* level_out, long* nodes_out) {
    std::vector<Complex> prev;
    for (int level = 0; level <= kMaxLevel; ++level) {
      extend_grid(level, powers);
      std::vector<Complex> cur = assemble(level, powers);
      if (level >= 3 && !prev.empty()) {
        bool ok = true;
        for (size_t i = 0; i < cur.size(); ++i)
          if (abs(cur[i] - prev[i]) > eps_ / 2) ok = false;
        if (ok) {
          if (level_out) *level_out = level;
          if (nodes_out) *nodes_out = static_cast<long>(nodes_.size());
          return cur;
        }
      }
      prev = std::move(cur);
    }
    throw ConvergenceError("zeta piece: exp-sinh did not stabilize by the level cap", 0.0);
  }

 private:
  static constexpr int kMaxLevel = 8;
  static constexpr long kGrid = 1L << kMaxLevel;  // global grid denominator

  void sample(long j, int level, double cut_log) {
    // j = k * 2^(kMaxLevel - level); abscissa parameter kh = j / kGrid
    Real kh = Real::of(j, wp_) / kGrid;
    Real u = Real::pi(wp_) / 2 * sinh(kh);
    Real x = exp(u);
    Real w = Real::pi(wp_) / 2 * cosh(kh) * x;
    ESNode nd{Real::of(1L, wp_) + x, std::move(w), Real(wp_), Complex(wp_), 0};
    nd.logt = log(nd.t);
    double wd = nd.w.to_double();
    Real eps_th = eps_ / (64 * max(Real::of(1L, wp_), nd.w));
    // skip the expensive sum when the weighted tail is already negligible:
    // theta magnitude never exceeds ~ shell-count * O(1), probe with eps_th
    auto [val, rep] = ev_.value(nd.t, eps_th);
    nd.th = val;
    nd.wf_mag = wd * abs(val).to_double();
    (void)cut_log;
    nodes_[j] = std::move(nd);
  }

  void extend_grid(int level, const std::vector<Complex>& powers) {
    double cut = eps_.to_double() / 64;
    double tpow_max = 0;
    for (auto& s : powers) tpow_max = std::max(tpow_max, s.re().to_double() - 1);
    long stride = kGrid >> level;
    // upward: need 3 consecutive negligible weighted samples among this level's grid
    int consec = 0;
    for (long j = 0;; j += stride) {
      auto it = nodes_.find(j);
      if (it == nodes_.end()) {
        sample(j, level, cut);
        it = nodes_.find(j);
      }
      double tmag = it->second.t.to_double();
      double m = it->second.wf_mag * std::pow(tmag, tpow_max);
      if (m < cut)
        ++consec;
      else
        consec = 0;
      if (consec >= 3 && j / stride >= 8) break;
      if (j / stride > 2400)
        throw ConvergenceError("zeta piece: integrand tail not decaying", m);
    }
    // downward (t -> 1+): weights vanish like x
    consec = 0;
    for (long j = -stride;; j -= stride) {
      auto it = nodes_.find(j);
      if (it == nodes_.end()) {
        sample(j, level, cut);
        it = nodes_.find(j);
      }
      if (it->second.wf_mag < cut && it->second.w < pow2(-prec_ - 16, wp_))
        ++consec;
      else
        consec = 0;
      if (consec >= 2 && (-j) / stride >= 8) break;
      if ((-j) / stride > 2400)
        throw ConvergenceError("zeta piece: t->1 endpoint not settling", it->second.w.to_double());
    }
  }

  std::vector<Complex> assemble(int level, const std::vector<Complex>& powers) const {
    long stride = kGrid >> level;
    Real h = pow2(-level, wp_);
    std::vector<Complex> out(powers.size(), Complex(wp_));
    for (auto& [j, nd] : nodes_) {
      if (j % stride != 0) continue;
      for (size_t i = 0; i < powers.size(); ++i) {
        Complex pm1 = powers[i] - Real::of(1L, wp_);
        Complex tp = (pm1.is_zero()) ? Complex::of(1, 0, wp_) : exp(pm1 * Complex(nd.logt));
        out[i] += nd.th * nd.w * tp;
      }
    }
    for (auto& v : out) v = v * h;
    return out;
  }

  const ThetaNullEvaluator& ev_;
  Real eps_;
  long prec_, wp_;
  std::map<long, ESNode> nodes_;
};

}  // namespace

std::vector<Complex> zeta_direct_multi(const ZetaRequest& req, const std::vector<Complex>& svals,
                                       ZetaDiagnostics* diag) {
  long prec = req.omega.prec();
  if (req.c1.certificate() >= 0 || req.c2.certificate() >= 0)
    throw ValidationError("zeta: inadmissible c");
  Real eps_piece = req.eps / 4;

  // direct piece on [1, inf)
  ThetaNullEvaluator ev1(req.omega, req.chars.p(), req.chars.q(), req.c1, req.c2,
                         /*allow_transform=*/false);
  PieceIntegrator p1(ev1, eps_piece, prec);
  int lv1 = 0;
  long nd1 = 0;
  std::vector<Complex> pows1(svals.begin(), svals.end());
  std::vector<Complex> i1 = p1.run(pows1, &lv1, &nd1);

  // folded piece: transported parameters, power 1 - s
  ZetaTransport tr = functional_equation_transport(req);
  ThetaNullEvaluator ev2(tr.request.omega, tr.request.chars.p(), tr.request.chars.q(),
                         tr.request.c1, tr.request.c2, /*allow_transform=*/false);
  Real eps2 = eps_piece / max(abs(tr.prefactor), pow2(-8, prec));
  PieceIntegrator p2(ev2, eps2, prec);
  std::vector<Complex> pows2;
  pows2.reserve(svals.size());
  for (auto& s : svals) pows2.push_back(Complex(Real::of(1L, prec)) - s);
  int lv2 = 0;
  long nd2 = 0;
  std::vector<Complex> i2 = p2.run(pows2, &lv2, &nd2);

  if (diag) {
    diag->nodes_direct = nd1;
    diag->nodes_transported = nd2;
    diag->level_direct = lv1;
    diag->level_transported = lv2;
  }

  std::vector<Complex> out;
  out.reserve(svals.size());
  for (size_t i = 0; i < svals.size(); ++i) out.push_back(i1[i] + tr.prefactor * i2[i]);
  return out;
}

Complex zeta_direct(const ZetaRequest& req, ZetaDiagnostics* diag) {
  return zeta_direct_multi(req, {req.s}, diag)[0];
}

ZetaTransport functional_equation_transport(const ZetaRequest& req) {
  long prec = req.omega.prec();
  OmegaPoint om2 = req.omega.neg_inverse();
  CSym2 conj_om = req.omega.omega();
  conj_om.a11 = conj_om.a11.conj();
  conj_om.a12 = conj_om.a12.conj();
  conj_om.a22 = conj_om.a22.conj();
  AdmissibleVector c1t = [&] {
    try {
      return AdmissibleVector(conj_om.mul(req.c1.c()), om2.m());
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("functional_equation_transport: transported c1 failed "
                                        "admissibility (branch/convention bug): ") +
                            e.what());
    }
  }();
  AdmissibleVector c2t = [&] {
    try {
      return AdmissibleVector(conj_om.mul(req.c2.c()), om2.m());
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("functional_equation_transport: transported c2 failed "
                                        "admissibility (branch/convention bug): ") +
                            e.what());
    }
  }();
  const RVec2& p = req.chars.p();
  const RVec2& q = req.chars.q();
  Characteristics chars2({-q.x, -q.y}, p);
  Complex pref = e2pi(dot(p, q)) / sqrt(req.omega.det_minus_i_omega());
  Complex s2 = Complex(Real::of(1L, prec)) - req.s;
  return {ZetaRequest{om2, chars2, c1t, c2t, s2, req.eps}, pref};
}

}  // namespace izeta
