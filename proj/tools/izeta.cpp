#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "izeta/jobspec.hpp"

namespace {

int run_from(const std::string& path, const std::string& expect_command, int precision,
             const std::string& accuracy, const std::string& format, int jobs, bool with_timing) {
  nlohmann::ordered_json doc;
  try {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open input file: " << path << "\n";
      return 2;
    }
    doc = nlohmann::ordered_json::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  izeta::JobSpec job;
  try {
    if (!doc.contains("command") && !expect_command.empty()) doc["command"] = expect_command;
    job = izeta::parse_job(doc);
    if (!expect_command.empty() && job.command != expect_command) {
      std::cerr << "input file command '" << job.command << "' does not match subcommand '"
                << expect_command << "'\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  if (precision > 0) job.precision = precision;
  if (!accuracy.empty()) job.accuracy = accuracy;
  if (!format.empty()) job.format = format;
  if (jobs > 0) job.jobs = jobs;

  auto t0 = std::chrono::steady_clock::now();
  izeta::RunReport rep = izeta::run_job(job);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
  if (job.format == "structured") {
    nlohmann::ordered_json out = rep.structured;
    if (with_timing) out["timing_ms"] = ms;  // opt-in: timing breaks bit-identical output
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep.text;
    std::cerr << "elapsed: " << ms << " ms\n";
  }
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"indefinite theta / zeta / Kronecker-limit-formula evaluator"};
  app.require_subcommand(1);

  std::string input, accuracy, format;
  int precision = 0, jobs = 0;
  bool with_timing = false;
  app.add_option("--input", input, "job file (JSON)")->required();
  app.add_option("--precision", precision, "working precision in decimal digits");
  app.add_option("--accuracy", accuracy, "absolute accuracy target (decimal string)");
  app.add_option("--format", format, "output format: text | structured");
  app.add_option("--jobs", jobs, "worker thread cap");
  app.add_flag("--with-timing", with_timing, "include timing in structured output");

  const char* commands[] = {"theta", "zeta", "klf-s1", "klf-s0", "funceq-check", "stark", "run"};
  for (const char* c : commands) app.add_subcommand(c, "");

  CLI11_PARSE(app, argc, argv);
  std::string sub = app.get_subcommands().front()->get_name();
  if (sub == "run") sub.clear();
  return run_from(input, sub, precision, accuracy, format, jobs, with_timing);
}
