#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdirac/roots.hpp"

namespace cdirac::app {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultMaxDepth = 10;

enum class Task { Dirac, Kostant, SimpleVerma, Higher, Index, Circle, Hodge, Vogan };
std::string to_string(Task t);
using cdirac::to_string;
std::optional<Task> task_from_string(const std::string& s);

struct ModuleSpec {
  std::string kind;  // verma | simple | finite | tensor | ses
  Weight lambda;     // simple-root coordinates
  std::optional<Weight> factor;     // tensor: highest weight of the finite-dimensional factor
  std::optional<Weight> embedding;  // ses: weight of the singular vector spanning the submodule
  std::optional<Weight> split_with;  // ses: highest weight of the second Verma summand
};

struct Scenario {
  std::string name;
  std::string cartan_type;
  std::vector<Weight> delta_h;  // positive roots of h, simple-root coordinates
  ModuleSpec module;
  std::size_t depth = 6;
  std::vector<Task> tasks;
  bool expect_unitary = true;
  std::string output;
};

// Rationals are JSON integers or strings "p/q". Weights are arrays of rationals in simple-root
// coordinates, or objects {"labels": [...]} giving Dynkin labels, or the strings "rho", "-rho", "0".
// Throws ParseError naming the JSON location.
Scenario parse_scenario(const nlohmann::json& j, std::size_t max_depth = kDefaultMaxDepth);
Scenario load_scenario(const std::filesystem::path& file, std::size_t max_depth = kDefaultMaxDepth);

// Normalized form with all defaults filled in; its compact dump is what the manifest hashes.
Json canonical_json(const Scenario& s);

Json to_json(const Scalar& x);
Json to_json(const Weight& w);
Scalar scalar_from_json(const nlohmann::json& j, const std::string& where);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace cdirac::app
