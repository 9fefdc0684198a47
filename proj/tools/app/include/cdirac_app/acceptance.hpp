#pragma once

#include <string>
#include <vector>

namespace cdirac::app {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs the ten acceptance criteria in order. `jobs` is the worker count for per-weight work.
std::vector<CriterionResult> run_acceptance(std::size_t jobs);

// One line per criterion: "PASS  3  title: detail (0.12 s)".
std::string format_line(const CriterionResult& r);

}  // namespace cdirac::app
