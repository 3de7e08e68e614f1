#ifndef IZETA_JOBSPEC_HPP
#define IZETA_JOBSPEC_HPP

#include <string>

#include <json.hpp>

#include "izeta/real.hpp"

namespace izeta {

// A parsed job: command + numeric context + the (still textual) parameters.
// Numeric parameters stay as JSON until run time so that structured output
// can echo them back exactly (round-trip invariant).
struct JobSpec {
  std::string command;  // theta | zeta | klf-s1 | klf-s0 | funceq-check | stark
  int precision = 40;   // decimal digits, >= 15
  std::string accuracy; // decimal string; empty = default 10^(-P+5)
  std::string format = "text";  // text | structured
  int jobs = 0;                 // worker cap; 0 = auto
  nlohmann::ordered_json params;
};

JobSpec parse_job(const nlohmann::ordered_json& doc);

struct RunReport {
  int exit_code = 0;
  nlohmann::ordered_json structured;
  std::string text;
};

// Executes the job; exceptions are mapped to exit codes
// (parse 2, validation 3, convergence 4) with a structured error object.
RunReport run_job(const JobSpec& job);

// Helpers shared with tests.
Real parse_real_field(const nlohmann::ordered_json& v, long bits);

}  // namespace izeta

#endif
