#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdirac_app/scenario.hpp"

namespace cdirac::app {

inline constexpr const char* kEngineVersion = "0.1.0";

struct RunOptions {
  std::optional<std::size_t> depth;
  std::size_t jobs = 1;
  std::size_t max_depth = kDefaultMaxDepth;
};

struct TaskResult {
  Task task = Task::Dirac;
  bool passed = false;
  std::string failed_invariant;
  Json doc;
};

struct Bundle {
  Json manifest;
  std::vector<TaskResult> results;
  bool passed() const;
  std::string first_failure() const;  // "task: invariant", empty when everything passed
  // File name and exact contents, manifest first.
  std::vector<std::pair<std::string, std::string>> files() const;
};

// Throws ParseError when a depth override is out of range.
Bundle run_scenario(Scenario s, const RunOptions& opt);
void write_bundle(const Bundle& b, const std::filesystem::path& dir);

}  // namespace cdirac::app
