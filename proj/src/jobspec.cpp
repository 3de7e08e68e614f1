#include "izeta/jobspec.hpp"

#include <chrono>

#include "izeta/klf.hpp"
#include "izeta/parallel.hpp"
#include "izeta/stark.hpp"
#include "izeta/theta.hpp"
#include "izeta/zeta.hpp"

namespace izeta {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

Real parse_real(const json& v, long bits) {
  if (v.is_string()) return Real::parse(v.get<std::string>(), bits);
  if (v.is_number_integer()) return Real::of(v.get<long>(), bits);
  if (v.is_number_float())
    bad("floating-point JSON numbers are not accepted; use decimal or rational strings");
  bad("expected a number string");
}

Complex parse_complex(const json& v, long bits) {
  if (v.is_array()) {
    if (v.size() != 2) bad("complex values are [re, im] pairs");
    return Complex(parse_real(v[0], bits), parse_real(v[1], bits));
  }
  return Complex(parse_real(v, bits), Real::of(0L, bits));
}

RVec2 parse_rvec2(const json& v, long bits) {
  if (!v.is_array() || v.size() != 2) bad("expected a 2-vector");
  return {parse_real(v[0], bits), parse_real(v[1], bits)};
}

CVec2 parse_cvec2(const json& v, long bits) {
  if (!v.is_array() || v.size() != 2) bad("expected a 2-vector");
  return {parse_complex(v[0], bits), parse_complex(v[1], bits)};
}

RSym2 parse_rsym2(const json& v, long bits, const char* name) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_array() || v[0].size() != 2 ||
      !v[1].is_array() || v[1].size() != 2)
    bad(std::string(name) + ": expected a 2x2 row-major matrix");
  Real a11 = parse_real(v[0][0], bits), a12 = parse_real(v[0][1], bits);
  Real a21 = parse_real(v[1][0], bits), a22 = parse_real(v[1][1], bits);
  if (a12 != a21) throw ValidationError(std::string(name) + ": matrix must be symmetric");
  return {std::move(a11), std::move(a12), std::move(a22)};
}

OmegaPoint parse_omega(const json& params, long bits) {
  if (!params.contains("m")) bad("missing 'm'");
  RSym2 m = parse_rsym2(params["m"], bits, "m");
  RSym2 n = params.contains("n") ? parse_rsym2(params["n"], bits, "n") : RSym2::zero(bits);
  return OmegaPoint(std::move(m), std::move(n), 1);
}

json complex_json(const Complex& z, int digits) {
  return json{{"re", z.re().str(digits)}, {"im", z.im().str(digits)}};
}

json ray_json(const KlfDiagnostics& diag, int digits) {
  json rays = json::array();
  for (const auto& r : diag.rays) {
    rays.push_back(json{{"branch_point", complex_json(r.branch_point, digits)},
                        {"truncation_u", r.truncation_u},
                        {"phi_terms", r.phi_terms},
                        {"quadrature_nodes", r.nodes},
                        {"calibration_sign", r.calibration_sign}});
  }
  return rays;
}

bool is_zero_matrix(const RSym2& m) {
  return m.a11.is_zero() && m.a12.is_zero() && m.a22.is_zero();
}

}  // namespace

Real parse_real_field(const json& v, long bits) { return parse_real(v, bits); }

JobSpec parse_job(const json& doc) {
  JobSpec job;
  if (!doc.is_object()) bad("job document must be a JSON object");
  if (!doc.contains("command") || !doc["command"].is_string()) bad("missing 'command'");
  job.command = doc["command"].get<std::string>();
  if (doc.contains("precision")) {
    if (!doc["precision"].is_number_integer()) bad("'precision' must be an integer");
    job.precision = doc["precision"].get<int>();
  }
  if (doc.contains("accuracy")) {
    if (!doc["accuracy"].is_string()) bad("'accuracy' must be a decimal string");
    job.accuracy = doc["accuracy"].get<std::string>();
  }
  if (doc.contains("format")) job.format = doc["format"].get<std::string>();
  if (doc.contains("jobs")) job.jobs = doc["jobs"].get<int>();
  if (!doc.contains("params") || !doc["params"].is_object()) bad("missing 'params'");
  job.params = doc["params"];
  return job;
}

namespace {

struct JobContext {
  long bits;
  int digits;
  Real eps;
};

JobContext make_context(const JobSpec& job) {
  if (job.precision < kMinDigits)
    throw ValidationError("precision must be at least " + std::to_string(kMinDigits));
  if (job.format != "text" && job.format != "structured")
    throw ValidationError("format must be 'text' or 'structured'");
  long bits = bits_for_digits(job.precision);
  Real floor_eps = pow10(-job.precision + 5, bits);
  Real eps = job.accuracy.empty() ? floor_eps : Real::parse(job.accuracy, bits);
  if (eps < floor_eps)
    throw ValidationError("accuracy must satisfy eps >= 10^(-P+5)");
  return {bits, job.precision, std::move(eps)};
}

json run_theta(const JobSpec& job, const JobContext& cx) {
  OmegaPoint om = parse_omega(job.params, cx.bits);
  CVec2 z = job.params.contains("z") ? parse_cvec2(job.params["z"], cx.bits)
                                     : CVec2{Complex(cx.bits), Complex(cx.bits)};
  AdmissibleVector c1(parse_cvec2(job.params.at("c1"), cx.bits), om.m());
  AdmissibleVector c2(parse_cvec2(job.params.at("c2"), cx.bits), om.m());
  if (job.params.contains("p") || job.params.contains("q")) {
    RVec2 p = job.params.contains("p") ? parse_rvec2(job.params["p"], cx.bits)
                                       : RVec2{Real::of(0L, cx.bits), Real::of(0L, cx.bits)};
    RVec2 q = job.params.contains("q") ? parse_rvec2(job.params["q"], cx.bits)
                                       : RVec2{Real::of(0L, cx.bits), Real::of(0L, cx.bits)};
    Real t = job.params.contains("t") ? parse_real(job.params["t"], cx.bits)
                                      : Real::of(1L, cx.bits);
    auto [val, rep] = theta_null(om, p, q, c1, c2, cx.eps, t);
    return json{{"value", complex_json(val, cx.digits)},
                {"truncation",
                 json{{"radius", rep.radius},
                      {"terms", rep.terms},
                      {"screened", rep.screened},
                      {"tail_bound", rep.tail_bound},
                      {"transformed", rep.transformed}}}};
  }
  auto [val, rep] = theta(ThetaRequest{om, z, c1, c2, cx.eps});
  return json{{"value", complex_json(val, cx.digits)},
              {"truncation",
               json{{"radius", rep.radius},
                    {"terms", rep.terms},
                    {"screened", rep.screened},
                    {"tail_bound", rep.tail_bound}}}};
}

json run_zeta(const JobSpec& job, const JobContext& cx) {
  OmegaPoint om = parse_omega(job.params, cx.bits);
  Characteristics ch(parse_rvec2(job.params.at("p"), cx.bits),
                     parse_rvec2(job.params.at("q"), cx.bits));
  AdmissibleVector c1(parse_cvec2(job.params.at("c1"), cx.bits), om.m());
  AdmissibleVector c2(parse_cvec2(job.params.at("c2"), cx.bits), om.m());
  Complex s = parse_complex(job.params.at("s"), cx.bits);
  ZetaDiagnostics diag;
  Complex val = zeta_direct(ZetaRequest{om, ch, c1, c2, s, cx.eps}, &diag);
  return json{{"value", complex_json(val, cx.digits)},
              {"quadrature",
               json{{"nodes_direct", diag.nodes_direct},
                    {"nodes_transported", diag.nodes_transported},
                    {"level_direct", diag.level_direct},
                    {"level_transported", diag.level_transported}}}};
}

json run_klf_s1(const JobSpec& job, const JobContext& cx) {
  OmegaPoint om = parse_omega(job.params, cx.bits);
  RVec2 p = parse_rvec2(job.params.at("p"), cx.bits);
  AdmissibleVector c1(parse_cvec2(job.params.at("c1"), cx.bits), om.m());
  AdmissibleVector c2(parse_cvec2(job.params.at("c2"), cx.bits), om.m());
  KlfDiagnostics diag;
  bool pure = om.pure_imaginary() && c1.is_real() && c2.is_real();
  Complex val = pure ? klf_s1_pure_imaginary(om.m(), p, c1, c2, cx.eps, &diag)
                     : klf_s1(om, p, c1, c2, cx.eps, &diag);
  return json{{"value", complex_json(val, cx.digits)},
              {"variant", pure ? "pure-imaginary" : "general"},
              {"rays", ray_json(diag, cx.digits)}};
}

json run_klf_s0(const JobSpec& job, const JobContext& cx) {
  OmegaPoint om = parse_omega(job.params, cx.bits);
  RVec2 q = parse_rvec2(job.params.at("q"), cx.bits);
  AdmissibleVector c1(parse_cvec2(job.params.at("c1"), cx.bits), om.m());
  AdmissibleVector c2(parse_cvec2(job.params.at("c2"), cx.bits), om.m());
  KlfDiagnostics diag;
  bool pure = om.pure_imaginary() && c1.is_real() && c2.is_real();
  json extra;
  Complex val(cx.bits);
  if (pure) {
    auto r = klf_s0_pure_imaginary(om.m(), q, c1, c2, cx.eps, &diag);
    val = r.zeta_value;
    extra = json{{"j_c1", complex_json(r.j_c1, cx.digits)},
                 {"j_c2", complex_json(r.j_c2, cx.digits)},
                 {"j_diff", complex_json(r.j_c2 - r.j_c1, cx.digits)}};
  } else {
    val = klf_s0(om, q, c1, c2, cx.eps, &diag);
  }
  json out{{"value", complex_json(val, cx.digits)},
           {"variant", pure ? "pure-imaginary" : "general"},
           {"rays", ray_json(diag, cx.digits)}};
  if (!extra.is_null()) out["j_values"] = extra;
  return out;
}

json run_funceq(const JobSpec& job, const JobContext& cx) {
  OmegaPoint om = parse_omega(job.params, cx.bits);
  Characteristics ch(parse_rvec2(job.params.at("p"), cx.bits),
                     parse_rvec2(job.params.at("q"), cx.bits));
  AdmissibleVector c1(parse_cvec2(job.params.at("c1"), cx.bits), om.m());
  AdmissibleVector c2(parse_cvec2(job.params.at("c2"), cx.bits), om.m());
  Complex s = parse_complex(job.params.at("s"), cx.bits);
  ZetaRequest req{om, ch, c1, c2, s, cx.eps};
  Complex lhs = zeta_direct(req);
  ZetaTransport tr = functional_equation_transport(req);
  Complex rhs = tr.prefactor * zeta_direct(tr.request);
  Real residual = abs(lhs - rhs);
  return json{{"value", json{{"re", residual.str(cx.digits)}, {"im", "0"}}},
              {"lhs", complex_json(lhs, cx.digits)},
              {"rhs", complex_json(rhs, cx.digits)},
              {"prefactor", complex_json(tr.prefactor, cx.digits)}};
}

json run_stark(const JobSpec& job, const JobContext& cx) {
  StarkInstance inst{parse_rsym2(job.params.at("m"), cx.bits, "m"),
                     parse_cvec2(job.params.at("c"), cx.bits),
                     IMat2{},
                     {},
                     {}};
  const json& pm = job.params.at("p_matrix");
  if (!pm.is_array() || pm.size() != 2 || pm[0].size() != 2 || pm[1].size() != 2)
    bad("p_matrix: expected a 2x2 integer matrix");
  inst.p_action = IMat2{pm[0][0].get<long>(), pm[0][1].get<long>(), pm[1][0].get<long>(),
                         pm[1][1].get<long>()};
  for (const auto& qj : job.params.at("q_list")) inst.q_list.push_back(parse_rvec2(qj, cx.bits));
  if (job.params.contains("polynomial")) {
    const json& pj = job.params["polynomial"];
    UnitPolynomial poly;
    poly.d = pj.at("d").get<long>();
    for (const auto& co : pj.at("coeffs"))
      poly.coeffs.push_back({co[0].get<long>(), co[1].get<long>()});
    inst.polynomial = std::move(poly);
  }
  StarkResult res = z_prime(inst, cx.eps);
  json pieces = json::array();
  for (size_t i = 0; i < res.piece_values.size(); ++i) {
    pieces.push_back(json{{"zeta_value", complex_json(res.piece_values[i], cx.digits)},
                          {"j_diff", complex_json(res.j_diffs[i], cx.digits)}});
  }
  json out{{"value", json{{"re", res.z_prime.str(cx.digits)}, {"im", "0"}}},
           {"unit", res.unit.str(cx.digits)},
           {"imag_defect", res.imag_defect.str(8)},
           {"pieces", pieces}};
  if (res.poly_residual) {
    out["polynomial_residual"] = res.poly_residual->str(8);
    out["polynomial_residual_reciprocal"] = res.poly_residual_reciprocal->str(8);
  }
  if (!res.warnings.empty()) out["warnings"] = res.warnings;
  return out;
}

std::string text_report(const json& body) {
  std::string out;
  if (body.contains("value")) {
    out += "value: " + body["value"]["re"].get<std::string>() + " + " +
           body["value"]["im"].get<std::string>() + " i\n";
  }
  for (auto& [k, v] : body.items()) {
    if (k == "value") continue;
    out += k + ": " + v.dump() + "\n";
  }
  return out;
}

}  // namespace

RunReport run_job(const JobSpec& job) {
  RunReport rep;
  json out{{"schema", "izeta-result/1"}, {"command", job.command}, {"precision", job.precision}};
  out["job"] = json{{"schema", "izeta-job/1"},
                    {"command", job.command},
                    {"precision", job.precision},
                    {"accuracy", job.accuracy},
                    {"format", job.format},
                    {"jobs", job.jobs},
                    {"params", job.params}};
  try {
    JobContext cx = make_context(job);
    if (job.jobs > 0) set_worker_count(job.jobs);
    json body;
    if (job.command == "theta")
      body = run_theta(job, cx);
    else if (job.command == "zeta")
      body = run_zeta(job, cx);
    else if (job.command == "klf-s1")
      body = run_klf_s1(job, cx);
    else if (job.command == "klf-s0")
      body = run_klf_s0(job, cx);
    else if (job.command == "funceq-check")
      body = run_funceq(job, cx);
    else if (job.command == "stark")
      body = run_stark(job, cx);
    else
      bad("unknown command '" + job.command + "'");
    out["status"] = "ok";
    for (auto& [k, v] : body.items()) out[k] = v;
    rep.exit_code = 0;
    rep.text = text_report(body);
  } catch (const ParseError& e) {
    out["status"] = "error";
    out["error"] = json{{"type", "parse"}, {"message", e.what()}};
    rep.exit_code = 2;
    rep.text = std::string("parse error: ") + e.what() + "\n";
  } catch (const ConvergenceError& e) {
    out["status"] = "error";
    out["error"] =
        json{{"type", "convergence"}, {"message", e.what()}, {"last_measure", e.last_measure()}};
    rep.exit_code = 4;
    rep.text = std::string("convergence error: ") + e.what() + "\n";
  } catch (const Error& e) {
    out["status"] = "error";
    out["error"] = json{{"type", "validation"}, {"message", e.what()}};
    rep.exit_code = 3;
    rep.text = std::string("validation error: ") + e.what() + "\n";
  }
  rep.structured = out;
  return rep;
}

}  // namespace izeta
