#include "cdirac_app/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "cdirac/circle.hpp"
#include "cdirac/errors.hpp"
#include "cdirac/hodge.hpp"
#include "cdirac_app/pool.hpp"

namespace cdirac::app {

namespace {

struct Context {
  const Scenario& sc;
  std::size_t jobs;
  DiracSetup s;
  WeightModuleWindow module;  // the module whose blocks are analyzed (the middle term of an ses)
  std::optional<WeightModuleWindow> verma;  // parent Verma module of a simple quotient
  std::optional<ShortExactSequence> ses;
  std::vector<Weight> weights;
};

struct BlockInfo {
  Weight mu;
  std::size_t dim = 0, even = 0;
  CohomologyDims coh;
  std::string coh_error;
  bool square_identity = false, spectrum_predicted = false;
  std::map<Scalar, std::size_t> eigenvalues;
  std::optional<std::string> equivariance;
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> direct, jordan;
};

Json dims_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json character_json(const std::map<Weight, long>& ch) {
  Json a = Json::array();
  for (const auto& [mu, m] : ch) a.push_back(Json{{"mu", to_json(mu)}, {"mult", m}});
  return a;
}

void fail_with(TaskResult& r, const std::string& invariant) {
  if (r.passed) r.failed_invariant = invariant;
  r.passed = false;
}

Context build_context(const Scenario& sc, std::size_t jobs) {
  RootSystem rs = build_root_system(sc.cartan_type);
  Context c{sc, jobs, make_setup(rs, sc.delta_h), {}, {}, {}, {}};
  const auto& spec = sc.module;
  bool limit = true;
  if (spec.kind == "verma") {
    c.module = verma_window(c.s.pair, c.s.cb, spec.lambda, sc.depth);
  } else if (spec.kind == "simple") {
    c.verma = verma_window(c.s.pair, c.s.cb, spec.lambda, sc.depth);
    c.module = simple_quotient_window(*c.verma, shapovalov_grams(*c.verma));
  } else if (spec.kind == "finite") {
    c.module = finite_dim_simple(c.s.pair, c.s.cb, spec.lambda);
    limit = false;
  } else if (spec.kind == "tensor") {
    WeightModuleWindow f = finite_dim_simple(c.s.pair, c.s.cb, *spec.factor);
    std::size_t extra = 0;
    for (const auto& w : f.weights()) extra = std::max<std::size_t>(extra, rs.height(f.top - w).get_num().get_ui());
    c.module = tensor_with_finite_dim(verma_window(c.s.pair, c.s.cb, spec.lambda, sc.depth + extra), f);
  } else if (spec.kind == "ses") {
    WeightModuleWindow vw = verma_window(c.s.pair, c.s.cb, spec.lambda, sc.depth);
    if (spec.embedding) {
      Matrix sv = singular_vectors(vw, *spec.embedding);
      if (sv.cols() != 1)
        throw CheckFailure("singular vector", "expected one singular vector at " + to_string(*spec.embedding) + ", found " +
                                                  std::to_string(sv.cols()));
      c.ses = ses_from_embedding(sv, *spec.embedding, vw);
    } else {
      c.ses = split_ses(vw, verma_window(c.s.pair, c.s.cb, *spec.split_with, sc.depth));
    }
    c.module = c.ses->mid;
  }
  c.weights = limit ? block_weights(c.s, c.module, sc.depth) : block_weights(c.s, c.module);
  return c;
}

std::vector<BlockInfo> analyze_blocks(const Context& c, bool square, bool higher) {
  return parallel_map(c.weights.size(), c.jobs, [&](std::size_t i) {
    BlockInfo bi;
    bi.mu = c.weights[i];
    DiracBlock b = assemble_block(c.s, c.module, bi.mu);
    bi.dim = b.dim();
    bi.even = b.layout.even_dim();
    try {
      bi.coh = dirac_cohomology(b);
    } catch (const CheckFailure& e) {
      bi.coh_error = e.what();
    }
    if (square) {
      SquareReport sq = check_square(c.s, c.module, b);
      bi.square_identity = sq.casimir_identity;
      bi.spectrum_predicted = sq.eigenvalues_predicted;
      bi.eigenvalues = sq.eigenvalues;
      bi.equivariance = equivariance_defect(c.s, c.module, bi.mu);
    }
    if (higher) {
      bi.direct = higher_direct(b.d, b.layout.parity);
      bi.jordan = higher_from_jordan(jordan_blocks(b.d, b.layout.parity));
    }
    return bi;
  });
}

TaskResult task_dirac(const Context& c, const std::vector<BlockInfo>& blocks) {
  TaskResult r{Task::Dirac, true, "", Json{}};
  Json rows = Json::array(), hd = Json::array();
  for (const auto& b : blocks) {
    Json ev = Json::array();
    for (const auto& [val, mult] : b.eigenvalues) ev.push_back(Json::array({to_json(val), mult}));
    rows.push_back(Json{{"mu", to_json(b.mu)},
                        {"dim", b.dim},
                        {"ker", b.coh.ker},
                        {"im", b.coh.im},
                        {"hd", b.coh.hd},
                        {"hd_plus", b.coh.hd_plus},
                        {"hd_minus", b.coh.hd_minus},
                        {"square_identity", b.square_identity},
                        {"spectrum_predicted", b.spectrum_predicted},
                        {"eigenvalues", ev},
                        {"equivariant", !b.equivariance.has_value()}});
    if (b.coh.hd) hd.push_back(Json{{"mu", to_json(b.mu)}, {"dim", b.coh.hd}});
    if (!b.coh_error.empty()) fail_with(r, "higher cohomology cross-check");
    if (!b.square_identity) fail_with(r, "square formula");
    if (!b.spectrum_predicted) fail_with(r, "spectrum of D^2");
    if (b.equivariance) fail_with(r, "h-equivariance");
  }
  NonvanishingReport nv = nonvanishing_check(c.s, c.module);
  if (!nv.ok() || nv.block_dim != 1) fail_with(r, "nonvanishing");
  r.doc = Json{{"blocks", rows},
               {"hd_character", hd},
               {"nonvanishing",
                {{"mu", to_json(nv.mu)},
                 {"block_dim", nv.block_dim},
                 {"in_kernel", nv.in_kernel},
                 {"outside_image", nv.outside_image}}}};
  return r;
}

TaskResult task_kostant(const Context& c) {
  TaskResult r{Task::Kostant, true, "", Json{}};
  KostantReport k = kostant_kernel_check(c.s, c.sc.module.lambda);
  if (!k.ok) fail_with(r, "kostant character");
  Json cons = Json::array();
  for (const auto& w : k.constituents) cons.push_back(to_json(w));
  r.doc = Json{{"constituents", cons},
               {"kernel_character", character_json(k.kernel_character)},
               {"expected_character", character_json(k.expected_character)},
               {"cubic_nonzero", k.cubic_nonzero},
               {"cubic_kills_vacuum", k.cubic_kills_vacuum}};
  return r;
}

TaskResult task_simple_verma(const Context& c) {
  TaskResult r{Task::SimpleVerma, true, "", Json{}};
  SimpleVermaReport v = simple_verma_check(c.s, c.sc.module.lambda, c.sc.depth);
  if (!v.h_antidominant) fail_with(r, "h-antidominance");
  if (!v.ok) fail_with(r, "simple verma character");
  std::set<Weight> keys;
  for (const auto& [mu, m] : v.hd) keys.insert(mu);
  for (const auto& [mu, m] : v.expected) keys.insert(mu);
  Json rows = Json::array();
  for (const auto& mu : keys) {
    auto get = [&](const std::map<Weight, long>& ch) { auto it = ch.find(mu); return it == ch.end() ? 0L : it->second; };
    rows.push_back(Json{{"mu", to_json(mu)}, {"hd", get(v.hd)}, {"expected", get(v.expected)}});
  }
  r.doc = Json{{"h_top", to_json(v.h_top)}, {"h_antidominant", v.h_antidominant}, {"rows", rows}};
  return r;
}

TaskResult task_higher(const std::vector<BlockInfo>& blocks) {
  TaskResult r{Task::Higher, true, "", Json{}};
  Json rows = Json::array();
  std::size_t max_jordan = 0;
  for (const auto& b : blocks) {
    const bool agree = b.direct == b.jordan && b.coh_error.empty();
    if (!agree) fail_with(r, "higher cohomology cross-check");
    max_jordan = std::max(max_jordan, b.coh.max_jordan);
    rows.push_back(Json{{"mu", to_json(b.mu)},
                        {"gen0", b.coh.gen0},
                        {"max_jordan", b.coh.max_jordan},
                        {"direct_plus", dims_json(b.direct.first)},
                        {"direct_minus", dims_json(b.direct.second)},
                        {"jordan_plus", dims_json(b.jordan.first)},
                        {"jordan_minus", dims_json(b.jordan.second)},
                        {"agree", agree}});
  }
  r.doc = Json{{"max_jordan", max_jordan}, {"blocks", rows}};
  return r;
}

TaskResult task_index(const std::vector<BlockInfo>& blocks) {
  TaskResult r{Task::Index, true, "", Json{}};
  Json rows = Json::array();
  for (const auto& b : blocks) {
    const long spin = static_cast<long>(b.even) - static_cast<long>(b.dim - b.even);
    const long top = b.coh_error.empty() ? b.coh.htop_index() : 0;
    const bool eq = b.coh_error.empty() && top == spin;
    if (!eq) fail_with(r, "index identity");
    rows.push_back(Json{{"mu", to_json(b.mu)}, {"htop_signed", top}, {"spin_difference", spin}, {"equal", eq}});
  }
  r.doc = Json{{"blocks", rows}};
  return r;
}

TaskResult task_vogan(const Context& c, const std::vector<BlockInfo>& blocks) {
  TaskResult r{Task::Vogan, true, "", Json{}};
  std::map<Weight, long> hd, htop;
  for (const auto& b : blocks) {
    if (b.coh.hd) hd[b.mu] = static_cast<long>(b.coh.hd);
    if (b.coh.htop_total()) htop[b.mu] = static_cast<long>(b.coh.htop_total());
  }
  auto entries = [&](const VoganAudit& a) {
    Json e = Json::array();
    for (const auto& x : a.entries)
      e.push_back(Json{{"nu", to_json(x.nu)}, {"multiplicity", x.multiplicity}, {"shifted", x.shifted}, {"literal", x.literal}});
    return e;
  };
  VoganAudit a = vogan_audit(c.s, hd, c.module.infinitesimal_characters);
  VoganAudit b = vogan_audit(c.s, htop, c.module.infinitesimal_characters);
  if (!a.ok || !b.ok) fail_with(r, "infinitesimal character conjugacy");
  Json infs = Json::array();
  for (const auto& w : c.module.infinitesimal_characters) infs.push_back(to_json(w));
  r.doc = Json{{"infinitesimal_characters", infs}, {"hd_entries", entries(a)}, {"htop_entries", entries(b)}};
  return r;
}

TaskResult task_circle(const Context& c) {
  TaskResult r{Task::Circle, true, "", Json{}};
  struct Row {
    Json doc;
    bool exact = false, lift_failed = false;
  };
  auto rows = parallel_map(c.weights.size(), c.jobs, [&](std::size_t i) {
    Row row;
    const Weight& mu = c.weights[i];
    try {
      CircleResult cr = exact_circle(c.s, *c.ses, mu);
      Json triples = Json::array(), exact_at = Json::array(), nodes = Json::array();
      for (const auto& b : cr.blocks) triples.push_back(Json::array({b.k, b.l, b.m, b.parity}));
      for (bool e : cr.exact_at) exact_at.push_back(e);
      for (auto d : cr.node_dims) nodes.push_back(d);
      row.exact = cr.exact;
      row.doc = Json{{"mu", to_json(mu)}, {"node_dims", nodes}, {"jordan_triples", triples}, {"exact_at", exact_at},
                     {"exact", cr.exact}, {"failure", cr.failure}};
    } catch (const LiftFailure& e) {
      row.lift_failed = true;
      row.doc = Json{{"mu", to_json(mu)}, {"exact", false}, {"failure", e.what()}};
    }
    return row;
  });
  Json out = Json::array();
  for (auto& row : rows) {
    if (row.lift_failed) fail_with(r, "jordan lift");
    else if (!row.exact) fail_with(r, "exact circle");
    out.push_back(std::move(row.doc));
  }
  r.doc = Json{{"split", c.ses->split}, {"blocks", out}};
  return r;
}

TaskResult task_hodge(const Context& c) {
  TaskResult r{Task::Hodge, true, "", Json{}};
  HermitianPair hp;
  try {
    hp = detect_hermitian(c.s.pair, *c.s.cb);
  } catch (const NotHermitian& e) {
    fail_with(r, "hermitian pair");
    r.doc = Json{{"hermitian", false}, {"witness", e.what()}};
    return r;
  }
  const WeightModuleWindow& verma = c.verma ? *c.verma : c.module;
  ContravariantForm form = unitary_form(hp, verma, c.verma ? &c.module : nullptr);
  UnitarityReport u = unitarity_check(form);
  Json doc{{"hermitian", true},
           {"symmetric", hp.symmetric},
           {"p_plus", Json::array()},
           {"expect_unitary", c.sc.expect_unitary},
           {"unitary", u.unitary}};
  for (const auto& w : hp.p_plus_roots) doc["p_plus"].push_back(to_json(w));
  if (u.first_failure) doc["first_nonpositive_weight"] = to_json(*u.first_failure);
  if (!c.sc.expect_unitary) {
    // Negative scenario: the positivity check itself must reject the module.
    if (u.unitary) fail_with(r, "expected a non-unitary module");
  } else if (!u.unitary) {
    fail_with(r, "unitarity");
  }
  struct Row {
    Json doc;
    bool ident = false, ce = false, hodge = false, cmp = false;
  };
  auto rows = parallel_map(c.weights.size(), c.jobs, [&](std::size_t i) {
    const Weight& mu = c.weights[i];
    Row row;
    IdentificationReport id = identification_check(hp, c.s, c.module, mu);
    CESlice ce = ce_complex(hp, c.module, mu - hp.shift);
    auto eq = ce_equivariance_defect(hp, c.s, c.module, mu - hp.shift);
    HodgeReport h = hodge_decomposition_check(c.s, c.module, form, mu);
    std::size_t even = 0, odd = 0;
    for (std::size_t k = 0; k < ce.cohomology.size(); ++k) (k % 2 ? odd : even) += ce.cohomology[k];
    row.ident = id.ok();
    row.ce = ce.d_squared_zero && ce.boundary_squared_zero && !eq;
    row.hodge = h.ok();
    row.cmp = h.hd == ce.total_cohomology() && h.hd == ce.total_homology() && even + odd == h.hd;
    row.doc = Json{{"mu", to_json(mu)},
                   {"c_plus_is_d", id.c_plus_is_d},
                   {"c_minus_is_boundary", id.c_minus_is_boundary},
                   {"d_squared_zero", ce.d_squared_zero},
                   {"boundary_squared_zero", ce.boundary_squared_zero},
                   {"ce_equivariant", !eq},
                   {"positive", h.positive},
                   {"adjoint", h.adjoint_plus && h.adjoint_minus},
                   {"ker_im_direct", h.ker_meets_im_trivially && h.dims_add},
                   {"c_splittings", h.c_plus_split && h.c_minus_split},
                   {"hd", h.hd},
                   {"ker_d", h.ker_d},
                   {"cohomology", dims_json(ce.cohomology)},
                   {"homology", dims_json(ce.homology)},
                   {"comparison", row.cmp},
                   {"failure", h.failure}};
    return row;
  });
  Json out = Json::array();
  bool all_hodge = true, all_cmp = true;
  for (auto& row : rows) {
    if (!row.ident) fail_with(r, "identification");
    if (!row.ce) fail_with(r, "ce complex");
    all_hodge = all_hodge && row.hodge;
    all_cmp = all_cmp && row.cmp;
    out.push_back(std::move(row.doc));
  }
  if (c.sc.expect_unitary) {
    if (!all_hodge) fail_with(r, "hodge decomposition");
    if (!all_cmp) fail_with(r, "cohomology comparison");
  }
  doc["hodge_decomposition_holds"] = all_hodge;
  doc["comparison_holds"] = all_cmp;
  doc["blocks"] = out;
  r.doc = doc;
  return r;
}

TaskResult run_task(Task t, const Context& c, const std::vector<BlockInfo>& blocks) {
  switch (t) {
    case Task::Dirac: return task_dirac(c, blocks);
    case Task::Kostant: return task_kostant(c);
    case Task::SimpleVerma: return task_simple_verma(c);
    case Task::Higher: return task_higher(blocks);
    case Task::Index: return task_index(blocks);
    case Task::Circle: return task_circle(c);
    case Task::Hodge: return task_hodge(c);
    case Task::Vogan: return task_vogan(c, blocks);
  }
  return {};
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

bool Bundle::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string Bundle::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return to_string(r.task) + ": " + r.failed_invariant;
  return {};
}

std::vector<std::pair<std::string, std::string>> Bundle::files() const {
  std::vector<std::pair<std::string, std::string>> out{{"manifest.json", manifest.dump(2) + "\n"}};
  for (const auto& r : results) {
    Json doc{{"task", to_string(r.task)}, {"passed", r.passed}, {"failed_invariant", r.failed_invariant}};
    for (const auto& [k, v] : r.doc.items()) doc[k] = v;
    out.emplace_back(to_string(r.task) + ".json", doc.dump(2) + "\n");
  }
  return out;
}

Bundle run_scenario(Scenario s, const RunOptions& opt) {
  if (opt.depth) {
    if (*opt.depth > opt.max_depth)
      throw ParseError("--depth: " + std::to_string(*opt.depth) + " exceeds the maximum " + std::to_string(opt.max_depth));
    s.depth = *opt.depth;
  }
  Bundle b;
  const Json canon = canonical_json(s);
  b.manifest = Json{{"format", "cdirac-bundle/1"},
                    {"engine_version", kEngineVersion},
                    {"scenario", s.name},
                    {"scenario_hash", "fnv1a64:" + hex64(fnv1a64(canon.dump()))},
                    {"arithmetic", {{"scalar", "exact rational (GMP mpq)"}, {"floating_point_used", false}}},
                    {"depth", s.depth}};
  if (!s.tasks.empty()) {
    auto has = [&](Task t) { return std::find(s.tasks.begin(), s.tasks.end(), t) != s.tasks.end(); };
    std::optional<Context> ctx;
    std::string setup_error;
    try {
      ctx.emplace(build_context(s, opt.jobs));
    } catch (const CheckFailure& e) {
      setup_error = e.invariant();
    }
    std::vector<BlockInfo> blocks;
    if (ctx && (has(Task::Dirac) || has(Task::Higher) || has(Task::Index) || has(Task::Vogan)))
      blocks = analyze_blocks(*ctx, has(Task::Dirac), has(Task::Higher));
    for (Task t : s.tasks) {
      if (!ctx) {
        b.results.push_back({t, false, setup_error, Json{}});
        continue;
      }
      try {
        b.results.push_back(run_task(t, *ctx, blocks));
      } catch (const CheckFailure& e) {
        b.results.push_back({t, false, e.invariant(), Json{{"error", e.what()}}});
      } catch (const Error& e) {
        b.results.push_back({t, false, "engine error", Json{{"error", e.what()}}});
      }
    }
    if (ctx) b.manifest["blocks"] = ctx->weights.size();
  }
  Json tasks = Json::array();
  for (const auto& r : b.results)
    tasks.push_back(Json{{"task", to_string(r.task)},
                         {"passed", r.passed},
                         {"failed_invariant", r.failed_invariant},
                         {"file", to_string(r.task) + ".json"}});
  b.manifest["tasks"] = tasks;
  b.manifest["passed"] = b.passed();
  return b;
}

void write_bundle(const Bundle& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, text] : b.files()) {
    std::ofstream out(dir / name, std::ios::binary);
    out << text;
    if (!out) throw Error("cannot write " + (dir / name).string());
  }
}

}  // namespace cdirac::app
