#include "cdirac_app/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cdirac/errors.hpp"
#include "cdirac/liealg.hpp"

namespace cdirac::app {

namespace {

const std::vector<std::pair<Task, std::string>> kTaskNames = {
    {Task::Dirac, "dirac"},   {Task::Kostant, "kostant"}, {Task::SimpleVerma, "simple_verma"},
    {Task::Higher, "higher"}, {Task::Index, "index"},     {Task::Circle, "circle"},
    {Task::Hodge, "hodge"},   {Task::Vogan, "vogan"},
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const nlohmann::json& require(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

Weight weight_from_json(const nlohmann::json& j, const RootSystem& rs, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "0") return rs.zero();
    if (s == "rho" || s == "-rho") {
      Weight rho = rho_vectors(rs, {}).first;
      return s == "rho" ? rho : -rho;
    }
    fail(where, "unknown weight shorthand \"" + s + "\"");
  }
  const bool labels = j.is_object();
  const nlohmann::json& arr = labels ? require(j, "labels", where) : j;
  const std::string base = labels ? where + "/labels" : where;
  if (!arr.is_array()) fail(base, "expected an array of rationals");
  if (arr.size() != rs.rank) fail(base, "expected " + std::to_string(rs.rank) + " coordinates");
  Weight w(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) w[i] = scalar_from_json(arr[i], base + "/" + std::to_string(i));
  return labels ? from_fundamental(rs, w) : w;
}

}  // namespace

std::string to_string(Task t) {
  for (const auto& [k, v] : kTaskNames)
    if (k == t) return v;
  return "?";
}

std::optional<Task> task_from_string(const std::string& s) {
  for (const auto& [k, v] : kTaskNames)
    if (v == s) return k;
  return std::nullopt;
}

Scalar scalar_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(where, "expected an integer or a rational string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::exception&) {
    fail(where, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& x : w.c) a.push_back(to_json(x));
  return a;
}

Scenario parse_scenario(const nlohmann::json& j, std::size_t max_depth) {
  if (!j.is_object()) fail("/", "scenario must be a JSON object");
  Scenario s;
  s.name = j.value("name", "scenario");
  const auto& ct = require(j, "cartan_type", "/");
  if (!ct.is_string()) fail("/cartan_type", "expected a string");
  s.cartan_type = ct.get<std::string>();
  RootSystem rs;
  try {
    rs = build_root_system(s.cartan_type);
  } catch (const Error& e) {
    fail("/cartan_type", e.what());
  }
  if (j.contains("delta_h")) {
    const auto& dh = j.at("delta_h");
    if (!dh.is_array()) fail("/delta_h", "expected an array of positive roots");
    for (std::size_t i = 0; i < dh.size(); ++i) s.delta_h.push_back(weight_from_json(dh[i], rs, "/delta_h/" + std::to_string(i)));
    try {
      build_pair(rs, s.delta_h);
    } catch (const Error& e) {
      fail("/delta_h", e.what());
    }
  }

  const auto& m = require(j, "module", "/");
  const auto& kind = require(m, "kind", "/module");
  if (!kind.is_string()) fail("/module/kind", "expected a string");
  s.module.kind = kind.get<std::string>();
  static const std::vector<std::string> kinds{"verma", "simple", "finite", "tensor", "ses"};
  if (std::find(kinds.begin(), kinds.end(), s.module.kind) == kinds.end())
    fail("/module/kind", "unknown module kind \"" + s.module.kind + "\"");
  s.module.lambda = weight_from_json(require(m, "lambda", "/module"), rs, "/module/lambda");
  if (s.module.kind == "finite" && !is_dominant_integral(s.module.lambda, rs))
    fail("/module/lambda", "a finite-dimensional module needs a dominant integral weight");
  if (s.module.kind == "tensor") {
    s.module.factor = weight_from_json(require(m, "factor", "/module"), rs, "/module/factor");
    if (!is_dominant_integral(*s.module.factor, rs)) fail("/module/factor", "the factor needs a dominant integral weight");
  }
  if (s.module.kind == "ses") {
    if (m.contains("embedding") == m.contains("split_with"))
      fail("/module", "an ses needs exactly one of \"embedding\" and \"split_with\"");
    if (m.contains("embedding")) s.module.embedding = weight_from_json(m.at("embedding"), rs, "/module/embedding");
    else s.module.split_with = weight_from_json(m.at("split_with"), rs, "/module/split_with");
  }

  if (j.contains("depth")) {
    const auto& d = j.at("depth");
    if (!d.is_number_integer() || d.get<long>() < 0) fail("/depth", "expected a nonnegative integer");
    s.depth = d.get<std::size_t>();
  }
  if (s.depth > max_depth) fail("/depth", "depth " + std::to_string(s.depth) + " exceeds the maximum " + std::to_string(max_depth));
  if (j.contains("tasks")) {
    const auto& t = j.at("tasks");
    if (!t.is_array()) fail("/tasks", "expected an array of task names");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string where = "/tasks/" + std::to_string(i);
      if (!t[i].is_string()) fail(where, "expected a task name");
      auto task = task_from_string(t[i].get<std::string>());
      if (!task) fail(where, "unknown task \"" + t[i].get<std::string>() + "\"");
      if (std::find(s.tasks.begin(), s.tasks.end(), *task) == s.tasks.end()) s.tasks.push_back(*task);
    }
  }
  auto has = [&](Task t) { return std::find(s.tasks.begin(), s.tasks.end(), t) != s.tasks.end(); };
  if (has(Task::Kostant) && s.module.kind != "finite") fail("/tasks", "kostant needs a finite module");
  if (has(Task::SimpleVerma) && s.module.kind != "verma") fail("/tasks", "simple_verma needs a verma module");
  if (has(Task::Circle) && s.module.kind != "ses") fail("/tasks", "circle needs an ses module");
  if (has(Task::Hodge) && s.module.kind != "verma" && s.module.kind != "simple")
    fail("/tasks", "hodge needs a verma or simple module");
  if (j.contains("expect_unitary")) {
    if (!j.at("expect_unitary").is_boolean()) fail("/expect_unitary", "expected a boolean");
    s.expect_unitary = j.at("expect_unitary").get<bool>();
  }
  if (j.contains("output")) {
    if (!j.at("output").is_string()) fail("/output", "expected a path string");
    s.output = j.at("output").get<std::string>();
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& file, std::size_t max_depth) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ": cannot open");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
  return parse_scenario(j, max_depth);
}

Json canonical_json(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["cartan_type"] = s.cartan_type;
  j["delta_h"] = Json::array();
  for (const auto& w : s.delta_h) j["delta_h"].push_back(to_json(w));
  Json m;
  m["kind"] = s.module.kind;
  m["lambda"] = to_json(s.module.lambda);
  if (s.module.factor) m["factor"] = to_json(*s.module.factor);
  if (s.module.embedding) m["embedding"] = to_json(*s.module.embedding);
  if (s.module.split_with) m["split_with"] = to_json(*s.module.split_with);
  j["module"] = m;
  j["depth"] = s.depth;
  j["tasks"] = Json::array();
  for (auto t : s.tasks) j["tasks"].push_back(to_string(t));
  j["expect_unitary"] = s.expect_unitary;
  return j;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace cdirac::app
