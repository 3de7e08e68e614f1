#include "izeta/real.hpp"

#include <gmp.h>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace izeta {

Real Real::parse(std::string_view s, long prec_bits) {
  std::string t(s);
  if (t.empty()) throw ParseError("empty numeric string");
  Real r(prec_bits);
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    // exact rational: converted once, at the target precision
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, t.c_str(), 10) != 0) {
      mpq_clear(q);
      throw ParseError("bad rational: '" + t + "'");
    }
    mpq_canonicalize(q);
    mpfr_set_q(r.raw(), q, MPFR_RNDN);
    mpq_clear(q);
    return r;
  }
  if (mpfr_set_str(r.raw(), t.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("bad number: '" + t + "'");
  return r;
}

std::string Real::str(int digits) const {
  if (is_nan()) return "nan";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  bool neg = !m.empty() && m[0] == '-';
  std::string digs = neg ? m.substr(1) : m;
  std::string out = neg ? "-" : "";
  // fixed notation for small exponents, scientific otherwise
  if (e >= -4 && e <= digits + 4) {
    if (e <= 0) {
      out += "0." + std::string(static_cast<size_t>(-e), '0') + digs;
    } else if (static_cast<size_t>(e) >= digs.size()) {
      out += digs + std::string(static_cast<size_t>(e) - digs.size(), '0');
    } else {
      out += digs.substr(0, static_cast<size_t>(e)) + "." + digs.substr(static_cast<size_t>(e));
    }
  } else {
    out += digs.substr(0, 1) + "." + digs.substr(1) + "e" + std::to_string(e - 1);
  }
  return out;
}

}  // namespace izeta
