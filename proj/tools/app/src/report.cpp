#include "cdirac_app/report.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "cdirac/errors.hpp"

namespace cdirac::app {

namespace {

using nlohmann::ordered_json;

ordered_json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file.string() + ": cannot open");
  try {
    return ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
}

// Weights and dimension lists print as space-separated fields inside one CSV cell.
std::string cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + cell(x);
    return "(" + s + ")";
  }
  return v.dump();
}

void table(std::ostream& out, const ordered_json& rows, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << (row.contains(cols[i]) ? cell(row.at(cols[i])) : "");
    out << "\n";
  }
}

std::string eigen_cell(const ordered_json& ev) {
  std::string s;
  for (const auto& p : ev) s += (s.empty() ? "" : " ") + p[0].get<std::string>() + "^" + std::to_string(p[1].get<long>());
  return s;
}

void render_task(std::ostream& out, const std::string& task, const ordered_json& doc) {
  out << "\n# " << task << "\n";
  if (doc.contains("error")) {
    out << "error," << doc.at("error").get<std::string>() << "\n";
    return;
  }
  if (task == "dirac") {
    ordered_json rows = doc.value("blocks", ordered_json::array());
    for (auto& r : rows) r["eigenvalues"] = eigen_cell(r.at("eigenvalues"));
    table(out, rows, {"mu", "dim", "ker", "im", "hd", "hd_plus", "hd_minus", "square_identity", "spectrum_predicted",
                      "eigenvalues", "equivariant"});
    const auto& nv = doc.at("nonvanishing");
    out << "nonvanishing," << cell(nv.at("mu")) << "," << cell(nv.at("in_kernel")) << "," << cell(nv.at("outside_image"))
        << "\n";
  } else if (task == "kostant") {
    out << "constituent\n";
    for (const auto& w : doc.at("constituents")) out << cell(w) << "\n";
    out << "cubic_nonzero," << cell(doc.at("cubic_nonzero")) << "\ncubic_kills_vacuum," << cell(doc.at("cubic_kills_vacuum"))
        << "\n";
  } else if (task == "simple_verma") {
    out << "h_top," << cell(doc.at("h_top")) << "\nh_antidominant," << cell(doc.at("h_antidominant")) << "\n";
    table(out, doc.at("rows"), {"mu", "hd", "expected"});
  } else if (task == "higher") {
    table(out, doc.at("blocks"),
          {"mu", "gen0", "max_jordan", "direct_plus", "jordan_plus", "direct_minus", "jordan_minus", "agree"});
  } else if (task == "index") {
    table(out, doc.at("blocks"), {"mu", "htop_signed", "spin_difference", "equal"});
  } else if (task == "circle") {
    table(out, doc.at("blocks"), {"mu", "node_dims", "jordan_triples", "exact"});
  } else if (task == "hodge") {
    out << "unitary," << cell(doc.value("unitary", false)) << "\n";
    table(out, doc.value("blocks", ordered_json::array()),
          {"mu", "c_plus_is_d", "c_minus_is_boundary", "adjoint", "ker_im_direct", "hd", "cohomology", "homology",
           "comparison"});
  } else if (task == "vogan") {
    ordered_json rows = ordered_json::array();
    for (const char* kind : {"hd_entries", "htop_entries"})
      for (auto e : doc.at(kind)) {
        e["source"] = std::string(kind).substr(0, std::string(kind).find('_'));
        rows.push_back(e);
      }
    table(out, rows, {"source", "nu", "multiplicity", "shifted", "literal"});
  }
}

}  // namespace

void render_report(const std::filesystem::path& bundle_dir, std::ostream& out) {
  const ordered_json manifest = read_json(bundle_dir / "manifest.json");
  if (!manifest.contains("tasks") || !manifest.at("tasks").is_array())
    throw ParseError((bundle_dir / "manifest.json").string() + ": no task list");
  out << "# scenario," << manifest.value("scenario", "") << "\n";
  out << "# hash," << manifest.value("scenario_hash", "") << "\n";
  out << "task,passed,failed_invariant\n";
  for (const auto& t : manifest.at("tasks"))
    out << t.at("task").get<std::string>() << "," << cell(t.at("passed")) << "," << t.value("failed_invariant", "") << "\n";
  for (const auto& t : manifest.at("tasks")) {
    const std::string task = t.at("task").get<std::string>();
    render_task(out, task, read_json(bundle_dir / t.value("file", task + ".json")));
  }
}

}  // namespace cdirac::app
