#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cdirac/errors.hpp"
#include "cdirac_app/acceptance.hpp"
#include "cdirac_app/report.hpp"
#include "cdirac_app/runner.hpp"
#include "cdirac_app/scenario.hpp"

namespace {

constexpr int kOk = 0, kAssertion = 1, kParse = 2;

std::filesystem::path output_dir(const std::string& flag, const cdirac::app::Scenario& sc) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CDIRAC_OUT"); env && *env) return env;
  if (!sc.output.empty()) return sc.output;
  return std::filesystem::path("cdirac-out") / sc.name;
}

int run(const std::string& file, std::optional<std::size_t> depth, const std::string& out, std::size_t jobs) {
  using namespace cdirac::app;
  const Scenario sc = load_scenario(file);
  const Bundle b = run_scenario(sc, RunOptions{depth, jobs, kDefaultMaxDepth});
  const auto dir = output_dir(out, sc);
  write_bundle(b, dir);
  for (const auto& r : b.results)
    std::cout << (r.passed ? "PASS " : "FAIL ") << to_string(r.task) << (r.passed ? "" : ": " + r.failed_invariant) << "\n";
  std::cout << "bundle: " << dir.string() << "\n";
  if (!b.passed()) {
    std::cerr << "first failing invariant: " << b.first_failure() << "\n";
    return kAssertion;
  }
  return kOk;
}

int selftest(std::size_t jobs) {
  bool ok = true;
  for (const auto& r : cdirac::app::run_acceptance(jobs)) {
    std::cout << cdirac::app::format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? kOk : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dirac cohomology of highest weight modules"};
  app.require_subcommand(1);

  std::string scenario, out, bundle;
  std::size_t depth = 0, jobs = 1;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario and write a result bundle");
  run_cmd->add_option("scenario", scenario, "Scenario JSON file")->required();
  auto* depth_opt = run_cmd->add_option("--depth", depth, "Override the scenario depth");
  run_cmd->add_option("--out", out, "Bundle directory");
  run_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* report_cmd = app.add_subcommand("report", "Print CSV tables for a bundle");
  report_cmd->add_option("bundle", bundle, "Bundle directory")->required();

  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*run_cmd) return run(scenario, *depth_opt ? std::optional<std::size_t>(depth) : std::nullopt, out, jobs);
    if (*report_cmd) {
      cdirac::app::render_report(bundle, std::cout);
      return kOk;
    }
    return selftest(jobs);
  } catch (const cdirac::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const cdirac::CheckFailure& e) {
    std::cerr << "first failing invariant: " << e.invariant() << "\n";
    return kAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAssertion;
  }
}
