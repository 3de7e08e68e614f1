#include "izeta/theta.hpp"

#include <cmath>
#include <mutex>

namespace izeta {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kPi = 3.141592653589793;

struct Cd {
  double re = 0, im = 0;
};

// Per-c data for the E-argument a(v) = (lx v1 + ly v2) * sqrt(t).
struct CData {
  Complex lx, ly;   // (c^T M e_j) / mu
  bool real_arg;    // true when a(v) is real for real v (real or pure-imaginary c)
  Cd lxd, lyd;      // doubles for the prescreen
};

CData make_cdata(const RSym2& m, const AdmissibleVector& c) {
  CData d;
  CVec2 row1{Complex(m.a11), Complex(m.a12)};
  CVec2 row2{Complex(m.a12), Complex(m.a22)};
  d.lx = dot(c.c(), row1) / c.mu();
  d.ly = dot(c.c(), row2) / c.mu();
  d.real_arg = d.lx.im().is_zero() && d.ly.im().is_zero();
  d.lxd = {d.lx.re().to_double(), d.lx.im().to_double()};
  d.lyd = {d.ly.re().to_double(), d.ly.im().to_double()};
  return d;
}

// log upper bound for |E(a1) - E(a0)| from the two arguments, doubles only
double rho_log_bound_args(double are0, double aim0, double are1, double aim1) {
  double rea2_0 = are0 * are0 - aim0 * aim0;
  double rea2_1 = are1 * are1 - aim1 * aim1;
  bool same_side = (are0 > 0) == (are1 > 0);
  if (same_side && rea2_0 > 0.5 && rea2_1 > 0.5) {
    // segment bound: |E(a1)-E(a0)| <= |a1-a0| exp(-pi lo),
    // lo = min(|re a|)^2 - max(|im a|)^2
    double lo = std::min(std::abs(are0), std::abs(are1));
    double hi = std::max(std::abs(aim0), std::abs(aim1));
    double seg = lo * lo - hi * hi;
    double dr = are1 - are0, di = aim1 - aim0;
    double len = std::sqrt(dr * dr + di * di);
    if (seg > 0) return std::log(len + 1e-300) - kPi * seg;
  }
  // |E(a)| <= (|a|+1) exp(pi max(0, -re a^2)); ~0.6 when saturated
  double b = 0;
  for (int j = 0; j < 2; ++j) {
    double rea2 = j ? rea2_1 : rea2_0;
    double amag = std::hypot(j ? are1 : are0, j ? aim1 : aim0);
    double bj = (rea2 > 0.5) ? 0.0 : std::log(amag + 1.0) + kPi * std::max(0.0, -rea2);
    b = std::max(b, bj);
  }
  return b + kLn2;
}

double rho_log_bound(const CData& c1, const CData& c2, double v1, double v2, double st) {
  double are[2], aim[2];
  const CData* cs[2] = {&c1, &c2};
  for (int j = 0; j < 2; ++j) {
    are[j] = (cs[j]->lxd.re * v1 + cs[j]->lyd.re * v2) * st;
    aim[j] = (cs[j]->lxd.im * v1 + cs[j]->lyd.im * v2) * st;
  }
  return rho_log_bound_args(are[0], aim[0], are[1], aim[1]);
}

struct ShellSummer {
  // fixed per evaluation
  const RSym2& m;
  const RSym2& n;
  const RVec2& p;
  const RVec2& q;
  const CData& c1;
  const CData& c2;
  const Real& t;
  Real st;
  long base_bits;
  double td, log_eps_term;
  // doubles
  double m11, m12, m22, n11, n12, n22, p1, p2, q1, q2;

  // accumulators
  Complex acc;
  double shell_mass = 0;
  long terms = 0, screened = 0;

  ShellSummer(const RSym2& m_, const RSym2& n_, const RVec2& p_, const RVec2& q_,
              const CData& c1_, const CData& c2_, const Real& t_, long bits)
      : m(m_), n(n_), p(p_), q(q_), c1(c1_), c2(c2_), t(t_), st(sqrt(t_)), base_bits(bits),
        acc(bits) {
    td = t.to_double();
    m11 = m.a11.to_double();
    m12 = m.a12.to_double();
    m22 = m.a22.to_double();
    n11 = n.a11.to_double();
    n12 = n.a12.to_double();
    n22 = n.a22.to_double();
    p1 = p.x.to_double();
    p2 = p.y.to_double();
    q1 = q.x.to_double();
    q2 = q.y.to_double();
  }

  void point(long i1, long i2) {
    double v1 = i1 + q1, v2 = i2 + q2;
    double qm = (m11 * v1 * v1 + 2 * m12 * v1 * v2 + m22 * v2 * v2) / 2;
    double logb = -2 * kPi * qm * td + rho_log_bound(c1, c2, v1, v2, std::sqrt(td));
    if (logb < log_eps_term) {
      ++screened;
      if (logb > -740) shell_mass += std::exp(logb);
      return;
    }
    long need = static_cast<long>((logb - log_eps_term) * 1.4427) + 32;
    if (need < 48) need = 48;
    if (need > base_bits) need = base_bits;

    RVec2 v{q.x + i1, q.y + i2};
    Complex rho = rho_parts(v, need);
    Real qmr = q_form(m, v);
    Real qnr = q_form(n, v);
    Real pv = dot(p, v);
    long pb = std::max<long>(need, 64);
    Real two_pi = 2 * Real::pi(pb);
    Real gauss = exp((-two_pi) * qmr.at_prec(pb) * t);
    Real ang = two_pi * (qnr * t + pv).at_prec(pb);
    Real sn(pb), cn(pb);
    mpfr_sin_cos(sn.raw(), cn.raw(), ang.raw(), MPFR_RNDN);
    Complex term = rho * Complex(gauss * cn, gauss * sn);
    acc += term;
    shell_mass += abs(term).to_double();
    ++terms;
  }

  Complex rho_parts(const RVec2& v, long need) const {
    const CData* cs[2] = {&c1, &c2};
    EParts e[2];
    for (int j = 0; j < 2; ++j) {
      if (cs[j]->real_arg) {
        Real a = (cs[j]->lx.re() * v.x + cs[j]->ly.re() * v.y) * st;
        e[j] = eE_parts(a, need);
      } else {
        Complex a = (cs[j]->lx * Complex(v.x) + cs[j]->ly * Complex(v.y)) * st;
        e[j] = eE_parts(a, need);
      }
    }
    Complex d = e[1].tail - e[0].tail;
    if (e[1].half != e[0].half) {
      Real h = Real::of(e[1].half - e[0].half, d.prec()) / 2;
      return Complex(d.re() + h, d.im());
    }
    return d;
  }
};

}  // namespace

struct ThetaNullEvaluator::Impl {
  OmegaPoint omega;
  RVec2 p, q;  // q centered into [-1/2, 1/2)^2 (exact reindexing of the lattice)
  AdmissibleVector c1, c2;
  CData cd1, cd2;
  bool allow_transform;
  Complex sqrt_det_mi;  // principal sqrt(det(-i Omega))
  Real pq_phase;        // p^T q (of the *original* q; q-centering keeps p^T(n+q) intact)

  mutable std::once_flag trans_once;
  mutable std::unique_ptr<ThetaNullEvaluator> transported;

  Impl(const OmegaPoint& om, const RVec2& p_, const RVec2& q_, const AdmissibleVector& c1_,
       const AdmissibleVector& c2_, bool allow)
      : omega(om),
        p(p_),
        q(center(q_)),
        c1(c1_),
        c2(c2_),
        cd1(make_cdata(om.m(), c1_)),
        cd2(make_cdata(om.m(), c2_)),
        allow_transform(allow),
        sqrt_det_mi(sqrt(om.det_minus_i_omega())),
        pq_phase(dot(p_, q_)) {
    if (om.k() != 1) throw ValidationError("theta: Omega must lie in H_2^(1)");
  }

  static RVec2 center(const RVec2& v) {
    auto cent = [](const Real& x) {
      Real f = frac1(x);
      if (f * 2 >= 1) f -= Real::of(1L, x.prec());
      return f;
    };
    return {cent(v.x), cent(v.y)};
  }

  const ThetaNullEvaluator& get_transported() const {
    std::call_once(trans_once, [&] {
      OmegaPoint om2 = omega.neg_inverse();
      CSym2 conj_om = omega.omega();
      conj_om.a11 = conj_om.a11.conj();
      conj_om.a12 = conj_om.a12.conj();
      conj_om.a22 = conj_om.a22.conj();
      CVec2 c1t = conj_om.mul(c1.c());
      CVec2 c2t = conj_om.mul(c2.c());
      transported = std::make_unique<ThetaNullEvaluator>(
          om2, RVec2{-q.x, -q.y}, p, AdmissibleVector(c1t, om2.m()),
          AdmissibleVector(c2t, om2.m()), /*allow_transform=*/false);
    });
    return *transported;
  }

  std::pair<Complex, TruncationReport> direct(const Real& t, const Real& eps) const {
    long bits = omega.prec() + 32;
    // beyond any representable decay scale every nonzero lattice term is far
    // below eps (the n+q = 0 term is identically zero); avoids double overflow
    if (t.to_double() > 1e200) {
      TruncationReport rep;
      rep.radius = 0;
      return {Complex(omega.prec()), rep};
    }
    ShellSummer s(omega.m(), omega.n(), p, q, cd1, cd2, t, bits);
    Real eps_term = eps / 4096;
    s.log_eps_term = std::log(std::max(eps_term.to_double(), 1e-300)) - 2 * kLn2;

    double prev_mass = -1;
    double eps_d = eps.to_double();
    TruncationReport rep;
    for (long R = 0;; ++R) {
      s.shell_mass = 0;
      if (R == 0) {
        s.point(0, 0);
      } else {
        for (long i1 = -R; i1 <= R; ++i1) {
          s.point(i1, R);
          s.point(i1, -R);
        }
        for (long i2 = -R + 1; i2 <= R - 1; ++i2) {
          s.point(R, i2);
          s.point(-R, i2);
        }
      }
      if (R >= 4 && prev_mass >= 0 && s.shell_mass < eps_d / 4 && prev_mass < eps_d / 4) {
        rep.radius = R;
        rep.tail_bound = s.shell_mass + prev_mass;
        break;
      }
      prev_mass = s.shell_mass;
      if (R > 4096)
        throw ConvergenceError("theta: shell mass not decaying by radius cap", s.shell_mass);
    }
    rep.terms = s.terms;
    rep.screened = s.screened;
    rep.accuracy = rep.tail_bound + eps_term.to_double() * 16;
    return {s.acc.at_prec(omega.prec()), rep};
  }

  std::pair<Complex, TruncationReport> value(const Real& t, const Real& eps) const {
    if (!(t > 0)) throw ValidationError("theta: t must be positive");
    if (t < 1 && allow_transform) {
      const ThetaNullEvaluator& tr = get_transported();
      // prefactor e(p^T q) / (t sqrt(det(-i Omega)))
      Complex pref = e2pi(pq_phase) / (sqrt_det_mi * t);
      Real sub_eps = eps / max(abs(pref), pow2(-8, eps.prec()));
      auto [val, rep] = tr.value(1 / t, sub_eps);
      rep.transformed = true;
      return {pref * val, rep};
    }
    return direct(t, eps);
  }
};

ThetaNullEvaluator::ThetaNullEvaluator(const OmegaPoint& omega, const RVec2& p, const RVec2& q,
                                       const AdmissibleVector& c1, const AdmissibleVector& c2,
                                       bool allow_transform)
    : impl_(std::make_unique<Impl>(omega, p, q, c1, c2, allow_transform)) {}

ThetaNullEvaluator::~ThetaNullEvaluator() = default;
ThetaNullEvaluator::ThetaNullEvaluator(ThetaNullEvaluator&&) noexcept = default;

std::pair<Complex, TruncationReport> ThetaNullEvaluator::value(const Real& t,
                                                               const Real& eps) const {
  return impl_->value(t, eps);
}

const OmegaPoint& ThetaNullEvaluator::omega() const { return impl_->omega; }

std::pair<Complex, TruncationReport> theta_null(const OmegaPoint& omega, const RVec2& p,
                                                const RVec2& q, const AdmissibleVector& c1,
                                                const AdmissibleVector& c2, const Real& eps,
                                                const Real& t_scale) {
  ThetaNullEvaluator ev(omega, p, q, c1, c2);
  return ev.value(t_scale, eps);
}

std::pair<Complex, TruncationReport> theta(const ThetaRequest& req) {
  const OmegaPoint& om = req.omega;
  if (om.k() != 1) throw ValidationError("theta: Omega must lie in H_2^(1)");
  long prec = om.prec();
  long bits = prec + 32;

  RVec2 im_z{req.z.x.im(), req.z.y.im()};
  RVec2 re_z{req.z.x.re(), req.z.y.re()};
  double iz1 = im_z.x.to_double(), iz2 = im_z.y.to_double();
  double m11 = om.m().a11.to_double(), m12 = om.m().a12.to_double(), m22 = om.m().a22.to_double();
  // c_j / mu_j in doubles for the prescreen: a_j = (c_j . w)/mu_j, w = Mn + im z
  Cd cmu[2][2];
  {
    const AdmissibleVector* av[2] = {&req.c1, &req.c2};
    for (int j = 0; j < 2; ++j) {
      Complex u1 = av[j]->c().x / av[j]->mu();
      Complex u2 = av[j]->c().y / av[j]->mu();
      cmu[j][0] = {u1.re().to_double(), u1.im().to_double()};
      cmu[j][1] = {u2.re().to_double(), u2.im().to_double()};
    }
  }

  Real eps_term = req.eps / 4096;
  double log_eps_term = std::log(std::max(eps_term.to_double(), 1e-300)) - 2 * kLn2;
  double eps_d = req.eps.to_double();

  Complex acc(bits);
  Real two_pi = 2 * Real::pi(bits);
  TruncationReport rep;
  double prev_mass = -1, shell_mass = 0;

  auto point = [&](long i1, long i2) {
    // E-argument vector M n + im z; exponent (1/2) n^T Omega n + n^T z
    double w1 = m11 * i1 + m12 * i2 + iz1, w2 = m12 * i1 + m22 * i2 + iz2;
    double qm = (m11 * i1 * i1 + 2.0 * m12 * i1 * i2 + m22 * i2 * i2) / 2;
    double gauss_log = -2 * kPi * (qm + i1 * iz1 + i2 * iz2);
    double are[2], aim[2];
    for (int j = 0; j < 2; ++j) {
      are[j] = cmu[j][0].re * w1 + cmu[j][1].re * w2;
      aim[j] = cmu[j][0].im * w1 + cmu[j][1].im * w2;
    }
    double logb = gauss_log + rho_log_bound_args(are[0], aim[0], are[1], aim[1]);
    if (logb < log_eps_term) {
      ++rep.screened;
      if (logb > -740) shell_mass += std::exp(logb);
      return;
    }
    long need = static_cast<long>((logb - log_eps_term) * 1.4427) + 32;
    if (need < 48) need = 48;
    if (need > bits) need = bits;

    RVec2 nvec{Real::of(i1, prec), Real::of(i2, prec)};
    RVec2 w{om.m().a11 * nvec.x + om.m().a12 * nvec.y + im_z.x,
            om.m().a12 * nvec.x + om.m().a22 * nvec.y + im_z.y};
    EParts e[2];
    const AdmissibleVector* av[2] = {&req.c1, &req.c2};
    for (int j = 0; j < 2; ++j) {
      Complex a = (av[j]->c().x * Complex(w.x) + av[j]->c().y * Complex(w.y)) / av[j]->mu();
      e[j] = eE_parts(a, need);
    }
    Complex rho = e[1].tail - e[0].tail;
    if (e[1].half != e[0].half)
      rho = Complex(rho.re() + Real::of(e[1].half - e[0].half, rho.prec()) / 2, rho.im());

    Real qm_r = q_form(om.m(), nvec);
    Real qn_r = q_form(om.n(), nvec);
    Real gauss = exp(-two_pi * (qm_r + dot(nvec, im_z)));
    Real ang = two_pi * (qn_r + dot(nvec, re_z));
    Real sn(bits), cn(bits);
    mpfr_sin_cos(sn.raw(), cn.raw(), ang.raw(), MPFR_RNDN);
    Complex term = rho * Complex(gauss * cn, gauss * sn);
    acc += term;
    shell_mass += abs(term).to_double();
    ++rep.terms;
  };

  for (long R = 0;; ++R) {
    shell_mass = 0;
    if (R == 0) {
      point(0, 0);
    } else {
      for (long i1 = -R; i1 <= R; ++i1) {
        point(i1, R);
        point(i1, -R);
      }
      for (long i2 = -R + 1; i2 <= R - 1; ++i2) {
        point(R, i2);
        point(-R, i2);
      }
    }
    if (R >= 4 && prev_mass >= 0 && shell_mass < eps_d / 4 && prev_mass < eps_d / 4) {
      rep.radius = R;
      rep.tail_bound = shell_mass + prev_mass;
      break;
    }
    prev_mass = shell_mass;
    if (R > 4096) throw ConvergenceError("theta: shell mass not decaying by radius cap", shell_mass);
  }
  rep.accuracy = rep.tail_bound + eps_term.to_double() * 16;
  return {acc.at_prec(prec), rep};
}

}  // namespace izeta
