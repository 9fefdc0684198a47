#include "cdirac_app/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <algorithm>
#include <random>

#include "cdirac/errors.hpp"
#include "cdirac/hodge.hpp"
#include "cdirac_app/runner.hpp"

namespace cdirac::app {

namespace {

using Clock = std::chrono::steady_clock;

const char* const kTitles[] = {
    "sl(3) example with h = gl(2)-type Levi",
    "Kostant kernel formula for finite-dimensional modules",
    "square formula and D^2 spectrum",
    "H_D of simple Verma modules",
    "nonvanishing of H_D",
    "higher Dirac index",
    "exact circle for short exact sequences",
    "Hodge decomposition and CE comparison for Hermitian pairs",
    "infinitesimal characters of H_D and H_top",
    "structural properties and determinism",
};

// Pinned result of the Jordan-block search over M(lambda) (x) F scenarios.
const char* const kJordanFixture = R"({
  "name": "jordan-tensor-fixture", "cartan_type": "A1", "delta_h": [],
  "module": {"kind": "tensor", "lambda": ["-1/2"], "factor": ["1/2"]},
  "depth": 6, "tasks": ["dirac", "higher", "index", "vogan"]})";
const Weight kJordanMu{Scalar(-1, 2)};
constexpr std::size_t kJordanSize = 3;

struct Run {
  std::string name;
  Scenario scenario;
  Bundle bundle;
};

const TaskResult* find_task(const Bundle& b, Task t) {
  for (const auto& r : b.results)
    if (r.task == t) return &r;
  return nullptr;
}

class Suite {
 public:
  explicit Suite(std::size_t jobs) : jobs_(jobs) {}

  const Run& run(const std::string& json) {
    Scenario sc = parse_scenario(nlohmann::json::parse(json));
    runs_.push_back({sc.name, sc, run_scenario(sc, RunOptions{std::nullopt, jobs_, kDefaultMaxDepth})});
    return runs_.back();
  }
  const std::deque<Run>& runs() const { return runs_; }
  std::size_t jobs() const { return jobs_; }

 private:
  std::size_t jobs_;
  std::deque<Run> runs_;  // references handed out by run() stay valid
};

std::string scenario_json(const std::string& name, const std::string& type, const std::string& delta_h,
                          const std::string& module, std::size_t depth, const std::string& tasks,
                          const std::string& extra = "") {
  return "{\"name\": \"" + name + "\", \"cartan_type\": \"" + type + "\", \"delta_h\": " + delta_h +
         ", \"module\": " + module + ", \"depth\": " + std::to_string(depth) + ", \"tasks\": " + tasks + extra + "}";
}

const std::string kAll = R"(["dirac", "higher", "index", "vogan"])";

// Collects failing scenario names for a per-task predicate over a set of runs.
struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failed;
  void add(const std::string& name, bool ok) {
    ++checked;
    if (!ok) failed.push_back(name);
  }
  bool ok() const { return checked > 0 && failed.empty(); }
  std::string summary(const std::string& what) const {
    std::string s = std::to_string(checked - failed.size()) + "/" + std::to_string(checked) + " " + what;
    if (!failed.empty()) {
      s += "; failing:";
      for (const auto& f : failed) s += " " + f;
    }
    return s;
  }
};

CriterionResult criterion_sl3(Suite& suite) {
  CriterionResult c{1, "sl(3) example with h = gl(2)-type Levi", false, "", 0};
  const Run& r = suite.run(scenario_json("sl3-paper-example", "A2", "[[1, 0]]", R"({"kind": "verma", "lambda": "-rho"})",
                                         8, R"(["simple_verma", "dirac", "higher", "index", "vogan"])"));
  RootSystem rs = build_root_system("A2");
  PairGH pair = build_pair(rs, {Weight{1, 0}});
  const Weight expected_top = from_epsilon(rs, {Scalar(-1, 2), Scalar(1, 2), Scalar(0)});
  const TaskResult* sv = find_task(r.bundle, Task::SimpleVerma);
  const TaskResult* d = find_task(r.bundle, Task::Dirac);
  const bool top_ok = sv->doc.at("h_top") == to_json(expected_top) && expected_top == -pair.rho_h;
  bool one_dim = false;
  for (const auto& row : d->doc.at("blocks"))
    if (row.at("mu") == to_json(-pair.rho_h)) one_dim = row.at("dim") == 1;
  const auto& nv = d->doc.at("nonvanishing");
  c.passed = sv->passed && d->passed && top_ok && one_dim && nv.at("in_kernel") == true;
  c.detail = "H_D matches the h-Verma character of -e1/2 + e2/2 on " + std::to_string(sv->doc.at("rows").size()) +
             " weights to depth 8; D(v+ (x) 1) = 0: " + (nv.at("in_kernel") == true ? "yes" : "no") +
             "; dim at -rho_h = 1: " + (one_dim ? "yes" : "no");
  return c;
}

CriterionResult criterion_kostant(Suite& suite) {
  CriterionResult c{2, "Kostant kernel formula for finite-dimensional modules", false, "", 0};
  Tally t;
  const std::string tasks = R"(["kostant", "dirac", "higher", "index", "vogan"])";
  for (int n = 0; n <= 4; ++n) {
    const Run& r = suite.run(scenario_json("kostant-A1-" + std::to_string(n), "A1", "[]",
                                           R"({"kind": "finite", "lambda": {"labels": [)" + std::to_string(n) + "]}}", 10, tasks));
    t.add(r.name, find_task(r.bundle, Task::Kostant)->passed);
  }
  for (const char* labels : {"[0, 0]", "[1, 0]", "[1, 1]"}) {
    const Run& r = suite.run(scenario_json(std::string("kostant-A2-levi-") + labels, "A2", "[[1, 0]]",
                                           std::string(R"({"kind": "finite", "lambda": {"labels": )") + labels + "}}", 10, tasks));
    t.add(r.name, find_task(r.bundle, Task::Kostant)->passed);
  }
  const Run& r = suite.run(scenario_json("kostant-A2-cartan", "A2", "[]", R"({"kind": "finite", "lambda": "0"})", 10, tasks));
  const TaskResult* k = find_task(r.bundle, Task::Kostant);
  const bool cubic = k->doc.at("cubic_nonzero") == true && k->doc.at("cubic_kills_vacuum") == true;
  t.add(r.name, k->passed && cubic);
  c.passed = t.ok();
  c.detail = t.summary("kernel characters equal the W^1 sum") + "; A2 with h = t: gamma(c) != 0 and gamma(c) 1 = 0: " +
             (cubic ? "yes" : "no");
  return c;
}

CriterionResult criterion_square(const Suite& suite) {
  CriterionResult c{3, "square formula and D^2 spectrum", false, "", 0};
  Tally t;
  std::size_t blocks = 0;
  for (const auto& r : suite.runs()) {
    const TaskResult* d = find_task(r.bundle, Task::Dirac);
    if (!d) continue;
    bool ok = true;
    for (const auto& row : d->doc.at("blocks")) ok = ok && row.at("square_identity") == true && row.at("spectrum_predicted") == true;
    blocks += d->doc.at("blocks").size();
    t.add(r.name, ok);
  }
  c.passed = t.ok();
  c.detail = t.summary("scenarios") + ", " + std::to_string(blocks) + " blocks with exact matrix identity and predicted eigenvalues";
  return c;
}

CriterionResult criterion_simple_verma(Suite& suite) {
  CriterionResult c{4, "H_D of simple Verma modules", false, "", 0};
  Tally t;
  struct Pair {
    std::string tag, type, delta_h;
    std::vector<std::string> lambdas;
  };
  const std::vector<Pair> pairs{
      {"A1-cartan", "A1", "[]", {"\"-rho\"", R"({"labels": ["-1/2"]})", R"({"labels": ["-7/3"]})"}},
      {"A2-levi", "A2", "[[1, 0]]", {"\"-rho\"", R"({"labels": ["-4/3", "-3/2"]})", R"({"labels": ["-1/2", "-5/2"]})"}},
      {"A2-cartan", "A2", "[]", {"\"-rho\"", R"({"labels": ["-4/3", "-3/2"]})", R"({"labels": ["-1/2", "-5/2"]})"}},
  };
  const std::string tasks = R"(["simple_verma", "dirac", "higher", "index", "vogan"])";
  for (const auto& p : pairs)
    for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
      const Run& r = suite.run(scenario_json("simple-verma-" + p.tag + "-" + std::to_string(i), p.type, p.delta_h,
                                             R"({"kind": "verma", "lambda": )" + p.lambdas[i] + "}", 8, tasks));
      const TaskResult* sv = find_task(r.bundle, Task::SimpleVerma);
      t.add(r.name, sv->passed && sv->doc.at("h_antidominant") == true);
    }
  c.passed = t.ok();
  c.detail = t.summary("antidominant Verma modules with H_D = h-Verma character of lambda + rho - rho_h to depth 8");
  return c;
}

CriterionResult criterion_nonvanishing(const Suite& suite) {
  CriterionResult c{5, "nonvanishing of H_D", false, "", 0};
  Tally t;
  for (const auto& r : suite.runs()) {
    const TaskResult* d = find_task(r.bundle, Task::Dirac);
    if (!d) continue;
    const auto& nv = d->doc.at("nonvanishing");
    t.add(r.name, nv.at("in_kernel") == true && nv.at("outside_image") == true);
  }
  c.passed = t.ok();
  c.detail = t.summary("module scenarios with v+ (x) 1 in ker D and outside im D");
  return c;
}

CriterionResult criterion_index(Suite& suite) {
  CriterionResult c{6, "higher Dirac index", false, "", 0};
  Tally verma, all;
  for (const auto& r : suite.runs()) {
    const TaskResult* ix = find_task(r.bundle, Task::Index);
    const TaskResult* hi = find_task(r.bundle, Task::Higher);
    if (!ix || !hi) continue;
    all.add(r.name, ix->passed && hi->passed);
    if (r.scenario.module.kind == "verma") verma.add(r.name, ix->passed && hi->passed);
  }
  const Run& fx = suite.run(kJordanFixture);
  const TaskResult* hi = find_task(fx.bundle, Task::Higher);
  std::size_t pinned = 0;
  for (const auto& row : hi->doc.at("blocks"))
    if (row.at("mu") == to_json(kJordanMu)) pinned = row.at("max_jordan").get<std::size_t>();
  auto found = search_jordan_scenario(2, 6);
  const bool reproduced = found && found->cartan_type == "A1" && found->lambda == fx.scenario.module.lambda &&
                          found->f_highest == *fx.scenario.module.factor && found->mu == kJordanMu &&
                          found->block_size == kJordanSize;
  c.passed = verma.ok() && all.ok() && fx.bundle.passed() && pinned == kJordanSize && reproduced;
  c.detail = verma.summary("Verma scenarios") + " (" + all.summary("scenarios overall") + "); pinned M(-rho) (x) F(1) block at " +
             to_string(kJordanMu) + " has a Jordan block of size " + std::to_string(pinned) +
             ", search reproduces it: " + (reproduced ? "yes" : "no");
  return c;
}

CriterionResult criterion_circle(Suite& suite) {
  CriterionResult c{7, "exact circle for short exact sequences", false, "", 0};
  Tally t;
  const std::string tasks = R"(["circle", "dirac", "higher", "index", "vogan"])";
  std::size_t blocks = 0;
  for (int lh = 0; lh <= 2; ++lh) {
    // 0 -> M(s.lambda) -> M(lambda) -> L(lambda) -> 0 with s.lambda = lambda - (lambda(h) + 1) alpha
    const std::string lam = "[\"" + to_string(Scalar(lh) / 2) + "\"]";
    const std::string emb = "[\"" + to_string(Scalar(lh) / 2 - Scalar(lh + 1)) + "\"]";
    const Run& r = suite.run(scenario_json("circle-A1-" + std::to_string(lh), "A1", "[]",
                                           R"({"kind": "ses", "lambda": )" + lam + R"(, "embedding": )" + emb + "}", 8, tasks));
    const TaskResult* ci = find_task(r.bundle, Task::Circle);
    blocks += ci->doc.at("blocks").size();
    t.add(r.name, ci->passed);
  }
  const Run& r = suite.run(scenario_json("circle-A1-split", "A1", "[]",
                                         R"({"kind": "ses", "lambda": "-rho", "split_with": {"labels": [-3]}})", 8, tasks));
  const TaskResult* ci = find_task(r.bundle, Task::Circle);
  blocks += ci->doc.at("blocks").size();
  t.add(r.name, ci->passed);
  c.passed = t.ok();
  c.detail = t.summary("sequences") + " exact at all six nodes on " + std::to_string(blocks) + " blocks, no lift failures";
  return c;
}

CriterionResult criterion_hodge(Suite& suite) {
  CriterionResult c{8, "Hodge decomposition and CE comparison for Hermitian pairs", false, "", 0};
  Tally t;
  const std::string tasks = R"(["hodge", "dirac", "higher", "index", "vogan"])";
  std::size_t blocks = 0;
  auto positive = [&](const Run& r) {
    const TaskResult* h = find_task(r.bundle, Task::Hodge);
    blocks += h->doc.at("blocks").size();
    t.add(r.name, h->passed && h->doc.at("unitary") == true && h->doc.at("comparison_holds") == true);
  };
  positive(suite.run(scenario_json("hodge-A1", "A1", "[]", R"({"kind": "verma", "lambda": "-rho"})", 6, tasks)));
  positive(suite.run(scenario_json("hodge-su21-t-1", "A2", "[[1, 0]]", R"({"kind": "simple", "lambda": {"labels": [0, -1]}})", 6, tasks)));
  positive(suite.run(scenario_json("hodge-su21-t-1/2", "A2", "[[1, 0]]",
                                   R"({"kind": "simple", "lambda": {"labels": [0, "-1/2"]}})", 6, tasks)));
  const Run& neg = suite.run(scenario_json("hodge-A1-nonunitary", "A1", "[]", R"({"kind": "verma", "lambda": {"labels": [1]}})", 6,
                                           R"(["hodge"])", R"(, "expect_unitary": false)"));
  const TaskResult* h = find_task(neg.bundle, Task::Hodge);
  const bool rejected = h->passed && h->doc.at("unitary") == false;
  t.add(neg.name, rejected);
  c.passed = t.ok();
  c.detail = t.summary("scenarios") + "; C+ = d, C- = boundary, adjointness, ker D + im D and CE dims on " +
             std::to_string(blocks) + " blocks; lambda(h) = 1 rejected by positivity: " + (rejected ? "yes" : "no");
  return c;
}

CriterionResult criterion_vogan(const Suite& suite) {
  CriterionResult c{9, "infinitesimal characters of H_D and H_top", false, "", 0};
  Tally t;
  std::size_t entries = 0;
  for (const auto& r : suite.runs()) {
    const TaskResult* v = find_task(r.bundle, Task::Vogan);
    if (!v) continue;
    entries += v->doc.at("hd_entries").size() + v->doc.at("htop_entries").size();
    t.add(r.name, v->passed);
  }
  c.passed = t.ok();
  c.detail = t.summary("scenarios") + ", " + std::to_string(entries) + " h-highest weights satisfy nu + rho_h in W(Lambda + rho)";
  return c;
}

bool clifford_relations(const DiracSetup& s) {
  const SpinModule& sm = *s.sm;
  const auto q = s.pair.q_elements(*s.cb);
  for (auto a : q)
    for (auto b : q) {
      Matrix lhs = sm.gamma.at(a) * sm.gamma.at(b) + sm.gamma.at(b) * sm.gamma.at(a);
      if (!(lhs == s.cb->pairing(a, b) * Matrix::identity(sm.dim))) return false;
    }
  return true;
}

Matrix random_basis(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  while (true) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = dist(gen);
    if (rank(p) == n) return p;
  }
}

CriterionResult criterion_structure(Suite& suite, Clock::time_point start) {
  CriterionResult c{10, "structural properties and determinism", false, "", 0};
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  std::size_t modules = 0, spin = 0;
  const std::vector<std::pair<std::string, std::vector<Weight>>> pairs{
      {"A1", {}}, {"A2", {}}, {"A2", {Weight{1, 0}}}, {"B2", {}}, {"B2", {Weight{0, 1}}}, {"G2", {}}, {"A1xA1", {}}};
  for (const auto& [type, h] : pairs) {
    RootSystem rs = build_root_system(type);
    DiracSetup s = make_setup(rs, h);
    ++spin;
    check(clifford_relations(s), "Clifford relations " + type);
    for (const Weight& lam : {-s.pair.rho, rs.zero()}) {
      WeightModuleWindow vw = verma_window(s.pair, s.cb, lam, 4);
      ++modules;
      check(!commutation_defect(vw), "commutation " + type);
      for (const auto& mu : block_weights(s, vw, 3)) check(!equivariance_defect(s, vw, mu), "h-equivariance " + type);
    }
    WeightModuleWindow f = finite_dim_simple(s.pair, s.cb, from_fundamental(rs, Weight(std::vector<Scalar>(rs.rank, 1))));
    ++modules;
    check(!commutation_defect(f), "commutation finite " + type);
  }
  // gamma(c) under rational changes of basis of q
  for (const char* type : {"A2", "B2"}) {
    RootSystem rs = build_root_system(type);
    DiracSetup s = make_setup(rs, {});
    Matrix p = random_basis(2 * s.sm->q_order.size(), 11);
    check(cubic_term(s.pair, *s.cb, *s.sm, &p) == s.sm->cubic, std::string("cubic basis independence ") + type);
  }
  // rank data of D under a permuted enumeration of Delta_q+
  {
    RootSystem rs = build_root_system("A2");
    DiracSetup a = make_setup(rs, {});
    auto order = a.pair.q_positive;
    std::reverse(order.begin(), order.end());
    DiracSetup b = make_setup(rs, {}, order);
    const Weight lam{Scalar(-1), Scalar(1, 2)};
    WeightModuleWindow va = verma_window(a.pair, a.cb, lam, 5), vb = verma_window(b.pair, b.cb, lam, 5);
    for (const auto& mu : block_weights(a, va, 4)) {
      CohomologyDims x = dirac_cohomology(assemble_block(a, va, mu)), y = dirac_cohomology(assemble_block(b, vb, mu));
      check(x.ker == y.ker && x.im == y.im && x.hd_plus == y.hd_plus && x.hd_minus == y.hd_minus &&
                x.htop_plus == y.htop_plus && x.htop_minus == y.htop_minus,
            "rank data under permuted q order at " + to_string(mu));
    }
  }
  // CE squares from the Hodge scenarios
  for (const auto& r : suite.runs()) {
    const TaskResult* h = find_task(r.bundle, Task::Hodge);
    if (!h) continue;
    for (const auto& row : h->doc.at("blocks"))
      check(row.at("d_squared_zero") == true && row.at("boundary_squared_zero") == true && row.at("ce_equivariant") == true,
            "CE complex " + r.name);
  }
  // bundles are byte-identical for 1 and 4 workers
  std::size_t compared = 0;
  for (const auto& r : suite.runs()) {
    if (r.name != "sl3-paper-example" && r.name != "jordan-tensor-fixture" && r.name != "hodge-su21-t-1" &&
        r.name != "circle-A1-1")
      continue;
    auto one = run_scenario(r.scenario, RunOptions{std::nullopt, 1, kDefaultMaxDepth}).files();
    auto four = run_scenario(r.scenario, RunOptions{std::nullopt, 4, kDefaultMaxDepth}).files();
    check(one == four && one == r.bundle.files(), "determinism " + r.name);
    ++compared;
  }
  check(compared == 4, "determinism scenarios present");
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  check(total < 180, "suite runtime");
  c.passed = failures.empty();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f s", total);
  c.detail = "commutation on " + std::to_string(modules) + " modules, Clifford on " + std::to_string(spin) +
             " spin modules, D equivariance, d^2 = 0 and boundary^2 = 0, gamma(c) and rank data basis-independent, " +
             std::to_string(compared) + " bundles identical under --jobs 1/4; suite time " + buf;
  if (!failures.empty()) {
    c.detail += "; failing:";
    for (const auto& f : failures) c.detail += " [" + f + "]";
  }
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::size_t jobs) {
  const auto start = Clock::now();
  Suite suite(jobs);
  std::vector<CriterionResult> out;
  auto timed = [&](const std::function<CriterionResult()>& f) {
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  };
  // Criteria 3, 5, 6 and 9 audit every scenario run before them, so the scenario-producing ones go first.
  CriterionResult c1 = timed([&] { return criterion_sl3(suite); });
  if (c1.seconds >= 10) {
    c1.passed = false;
    c1.detail += "; over the 10 s budget";
  }
  CriterionResult c2 = timed([&] { return criterion_kostant(suite); });
  if (c2.seconds >= 30) {
    c2.passed = false;
    c2.detail += "; over the 30 s budget";
  }
  CriterionResult c4 = timed([&] { return criterion_simple_verma(suite); });
  CriterionResult c7 = timed([&] { return criterion_circle(suite); });
  CriterionResult c8 = timed([&] { return criterion_hodge(suite); });
  CriterionResult c6 = timed([&] { return criterion_index(suite); });
  CriterionResult c3 = timed([&] { return criterion_square(suite); });
  CriterionResult c5 = timed([&] { return criterion_nonvanishing(suite); });
  CriterionResult c9 = timed([&] { return criterion_vogan(suite); });
  CriterionResult c10 = timed([&] { return criterion_structure(suite, start); });
  out = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].id = static_cast<int>(i + 1);
    out[i].title = kTitles[i];
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + (r.id < 10 ? "   " : "  ") + std::to_string(r.id) + "  " + r.title +
         ": " + r.detail + buf;
}

}  // namespace cdirac::app
