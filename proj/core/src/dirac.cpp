#include "cdirac/dirac.hpp"

#include <algorithm>
#include <set>

#include "cdirac/errors.hpp"
#include "detail.hpp"

namespace cdirac {

namespace detail {

std::size_t graded_dim(const Matrix& x, const std::vector<int>& parity, int p) {
  std::vector<std::size_t> other;
  for (std::size_t i = 0; i < parity.size(); ++i)
    if (parity[i] != p) other.push_back(i);
  return x.cols() - rank(select_rows(x, other));
}

std::vector<std::size_t> coords_of_parity(const std::vector<int>& parity, int p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parity.size(); ++i)
    if (parity[i] == p) out.push_back(i);
  return out;
}

// ker D^k for k = 0.. until stable; returns all of them.
std::vector<Matrix> kernel_filtration(const Matrix& d) {
  const std::size_t n = d.rows();
  std::vector<Matrix> ks{Matrix(n, 0)};
  Matrix p = Matrix::identity(n);
  while (true) {
    p = d * p;
    Matrix k = kernel(p);
    if (k.cols() == ks.back().cols()) break;
    ks.push_back(std::move(k));
  }
  return ks;
}

// Homogeneous basis of ker D^k restricted to parity p.
Matrix homogeneous_kernel(const Matrix& dk, const std::vector<int>& parity, int p) {
  auto idx = coords_of_parity(parity, p);
  Matrix k = kernel(select_columns(dk, idx));
  Matrix out(dk.cols(), k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j)
    for (std::size_t i = 0; i < idx.size(); ++i) out(idx[i], j) = k(i, j);
  return out;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

Matrix append_column(const Matrix& m, const std::vector<Scalar>& v) {
  Matrix out(v.size(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  for (std::size_t i = 0; i < v.size(); ++i) out(i, m.cols()) = v[i];
  return out;
}

Matrix columns_of(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
  Matrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  return out;
}

}  // namespace detail

using namespace detail;

DiracSetup make_setup(const RootSystem& rs, const std::vector<Weight>& delta_h_positive,
                      std::vector<std::size_t> q_order) {
  DiracSetup s;
  s.pair = build_pair(rs, delta_h_positive);
  s.cb = std::make_shared<ChevalleyBasis>(rs);
  s.sm = std::make_shared<SpinModule>(build_spin_module(s.pair, *s.cb, std::move(q_order)));
  s.casimir = casimir_elements(s.pair, *s.cb);
  return s;
}

std::size_t BlockLayout::even_dim() const {
  std::size_t n = 0;
  for (int p : parity) n += p == 0;
  return n;
}

bool block_covered(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu) {
  for (const auto& w : s.sm->weights)
    if (!m.covers(mu - w)) return false;
  return true;
}

BlockLayout block_layout(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu) {
  if (!block_covered(s, m, mu)) throw OutsideWindow("block at " + to_string(mu) + " leaves the module window");
  BlockLayout l;
  l.mu = mu;
  for (std::size_t a = 0; a < s.sm->dim; ++a) {
    std::size_t d = m.dim(mu - s.sm->weights[a]);
    l.offsets.push_back(l.dim);
    l.dims.push_back(d);
    l.dim += d;
    l.parity.insert(l.parity.end(), d, s.sm->parity[a]);
  }
  return l;
}

std::vector<Weight> block_weights(const DiracSetup& s, const WeightModuleWindow& m,
                                  std::optional<std::size_t> max_depth) {
  const RootSystem& rs = s.cb->roots();
  const Weight top = m.top + s.pair.rho - s.pair.rho_h;
  std::set<Weight> seen;
  for (const auto& [nu, d] : m.dims)
    for (const auto& w : s.sm->weights) {
      Weight mu = nu + w;
      if (max_depth && rs.height(top - mu) > static_cast<long>(*max_depth)) continue;
      if (!seen.count(mu) && block_covered(s, m, mu)) seen.insert(mu);
    }
  return {seen.begin(), seen.end()};
}

namespace {

void place(Matrix& target, std::size_t r0, std::size_t c0, const Matrix& src, const Scalar& coef) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (sgn(src(i, j)) != 0) target(r0 + i, c0 + j) += coef * src(i, j);
}

void place_identity(Matrix& target, std::size_t r0, std::size_t c0, std::size_t n, const Scalar& coef) {
  for (std::size_t i = 0; i < n; ++i) target(r0 + i, c0 + i) += coef;
}

std::size_t count_k(std::size_t s) { return s == 0 ? 1 : (s + 1) / 2; }

}  // namespace

DiracBlock assemble_block(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu) {
  const SpinModule& sm = *s.sm;
  const ChevalleyBasis& cb = *s.cb;
  DiracBlock b;
  b.layout = block_layout(s, m, mu);
  const auto& l = b.layout;
  b.d_plus = b.d_minus = b.cubic_part = Matrix(l.dim, l.dim);
  for (std::size_t a = 0; a < sm.dim; ++a) {
    if (l.dims[a] == 0) continue;
    const Weight nu = mu - sm.weights[a];
    for (std::size_t i = 0; i < sm.q_order.size(); ++i) {
      const std::size_t k = sm.q_order[i], bit = std::size_t{1} << i;
      if (!(a & bit)) {
        std::size_t t = a | bit;
        if (l.dims[t]) place(b.d_plus, l.offsets[t], l.offsets[a], m.action(cb.pos(k), nu), sm.gamma.at(cb.neg(k))(t, a));
      } else {
        std::size_t t = a & ~bit;
        if (l.dims[t])
          place(b.d_minus, l.offsets[t], l.offsets[a], m.action(cb.neg(k), nu), sm.gamma.at(cb.pos(k))(t, a));
      }
    }
    for (std::size_t t = 0; t < sm.dim; ++t)
      if (sgn(sm.cubic(t, a)) != 0) place_identity(b.cubic_part, l.offsets[t], l.offsets[a], l.dims[a], sm.cubic(t, a));
  }
  b.d = b.d_plus + b.d_minus - b.cubic_part;
  return b;
}

Matrix diagonal_action(const DiracSetup& s, const WeightModuleWindow& m, std::size_t gen, const Weight& mu) {
  const SpinModule& sm = *s.sm;
  const Weight target = mu + s.cb->weight(gen);
  BlockLayout from = block_layout(s, m, mu), to = block_layout(s, m, target);
  Matrix out(to.dim, from.dim);
  const Matrix& h = sm.h_action.at(gen);
  for (std::size_t a = 0; a < sm.dim; ++a) {
    if (from.dims[a] == 0) continue;
    const Weight nu = mu - sm.weights[a];
    if (to.dims[a]) place(out, to.offsets[a], from.offsets[a], m.action(gen, nu), 1);
    for (std::size_t t = 0; t < sm.dim; ++t)
      if (sgn(h(t, a)) != 0) place_identity(out, to.offsets[t], from.offsets[a], from.dims[a], h(t, a));
  }
  return out;
}

Matrix block_map(const DiracSetup& s, const std::map<Weight, Matrix>& per_weight, const WeightModuleWindow& from,
                 const WeightModuleWindow& to, const Weight& mu) {
  BlockLayout lf = block_layout(s, from, mu), lt = block_layout(s, to, mu);
  Matrix out(lt.dim, lf.dim);
  for (std::size_t a = 0; a < s.sm->dim; ++a) {
    auto it = per_weight.find(mu - s.sm->weights[a]);
    if (it == per_weight.end() || lf.dims[a] == 0 || lt.dims[a] == 0) continue;
    place(out, lt.offsets[a], lf.offsets[a], it->second, 1);
  }
  return out;
}

std::optional<std::string> equivariance_defect(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu) {
  DiracBlock b = assemble_block(s, m, mu);
  std::map<Weight, Matrix> cache;
  for (auto x : s.pair.h_elements(*s.cb)) {
    const Weight target = mu + s.cb->weight(x);
    if (!block_covered(s, m, target)) continue;
    auto it = cache.find(target);
    if (it == cache.end()) it = cache.emplace(target, target == mu ? b.d : assemble_block(s, m, target).d).first;
    Matrix h = diagonal_action(s, m, x, mu);
    if (!(it->second * h == h * b.d)) return "h-generator " + std::to_string(x) + " at " + to_string(mu);
  }
  return std::nullopt;
}

SquareReport check_square(const DiracSetup& s, const WeightModuleWindow& m, const DiracBlock& b) {
  SquareReport r;
  const auto& l = b.layout;
  const ChevalleyBasis& cb = *s.cb;
  const InvariantForm& form = s.pair.form;
  Matrix d2 = b.d * b.d;
  Matrix omega_g(l.dim, l.dim);
  ActionFn module_act = [&](std::size_t gen, const Weight& w) { return m.action(gen, w); };
  for (std::size_t a = 0; a < s.sm->dim; ++a) {
    if (l.dims[a] == 0) continue;
    Weight nu = l.mu - s.sm->weights[a];
    place(omega_g, l.offsets[a], l.offsets[a], evaluate_casimir(s.casimir.omega_g, cb, module_act, nu, l.dims[a]), 1);
  }
  ActionFn diag_act = [&](std::size_t gen, const Weight& w) { return diagonal_action(s, m, gen, w); };
  Matrix omega_h = evaluate_casimir(s.casimir.omega_h, cb, diag_act, l.mu, l.dim);
  Scalar shift = form.norm2(s.pair.rho) - form.norm2(s.pair.rho_h);
  r.casimir_identity = Scalar(2) * d2 == omega_g - omega_h + shift * Matrix::identity(l.dim);

  // Candidate h-highest weights: weights of M x S above mu in the h-root order.
  const RootSystem& rs = cb.roots();
  auto is_weight = [&](const Weight& w) {
    for (const auto& sw : s.sm->weights)
      if (m.dims.count(w - sw)) return true;
    return false;
  };
  Scalar bound = 0;
  for (const auto& [nu, d] : m.dims) bound = std::max(bound, rs.height(nu + s.pair.rho - s.pair.rho_h - l.mu));
  std::set<Weight> visited{l.mu}, candidates;
  std::vector<Weight> queue{l.mu};
  const auto hpos = s.pair.h_positive_roots();
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    if (is_weight(w)) candidates.insert(w);
    for (const auto& beta : hpos) {
      Weight n = w + beta;
      if (rs.height(n - l.mu) > bound || visited.count(n)) continue;
      visited.insert(n);
      queue.push_back(n);
    }
  }
  std::set<Scalar> predicted;
  for (const auto& lam : m.infinitesimal_characters)
    for (const auto& nu : candidates)
      predicted.insert(Scalar(1, 2) * (form.norm2(lam + s.pair.rho) - form.norm2(nu + s.pair.rho_h)));
  r.predicted.assign(predicted.begin(), predicted.end());
  Polynomial p = charpoly(d2);
  for (const auto& c : r.predicted) {
    std::size_t mult = strip_root(p, c);
    if (mult) r.eigenvalues[c] = mult;
  }
  r.eigenvalues_predicted = p.size() == 1;
  auto z = r.eigenvalues.find(Scalar(0));
  r.gen0_from_charpoly = z == r.eigenvalues.end() ? 0 : z->second;
  return r;
}

JordanData jordan_blocks(const Matrix& d, const std::vector<int>& parity) {
  JordanData jd;
  auto ks = kernel_filtration(d);
  const std::size_t s = ks.size() - 1, n = d.rows();
  jd.gen0_dim = ks.back().cols();
  std::vector<Matrix> powers{Matrix::identity(n)};
  for (std::size_t k = 1; k <= s; ++k) powers.push_back(d * powers.back());
  for (std::size_t k = s; k >= 1; --k) {
    // Level-k vectors of the longer chains, plus ker D^{k-1}.
    Matrix base = ks[k - 1];
    for (const auto& c : jd.chains) base = append_column(base, c.vectors[c.size() - k]);
    std::size_t r = rank(base);
    for (int p : {0, 1}) {
      Matrix cand = homogeneous_kernel(powers[k], parity, p);
      for (std::size_t j = 0; j < cand.cols(); ++j) {
        auto v = cand.col(j);
        Matrix trial = append_column(base, v);
        std::size_t tr = rank(trial);
        if (tr == r) continue;
        base = std::move(trial);
        r = tr;
        JordanChain chain;
        chain.top_parity = p;
        chain.vectors.push_back(v);
        for (std::size_t i = 1; i < k; ++i) chain.vectors.push_back(mat_vec(d, chain.vectors.back()));
        jd.chains.push_back(std::move(chain));
      }
    }
  }
  std::size_t total = 0;
  jd.layer_dims.assign(s, {0, 0});
  for (const auto& c : jd.chains) {
    total += c.size();
    for (std::size_t j = 0; j < c.size(); ++j) {
      int par = (c.top_parity + static_cast<int>(j)) % 2;
      auto& slot = jd.layer_dims[c.size() - j - 1];
      (par == 0 ? slot.first : slot.second)++;
    }
  }
  if (total != jd.gen0_dim) throw CheckFailure("jordan decomposition", "chain lengths do not fill the generalized kernel");
  return jd;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> higher_direct(const Matrix& d,
                                                                            const std::vector<int>& parity) {
  auto ks = kernel_filtration(d);
  const std::size_t s = ks.size() - 1;
  const std::size_t nk = count_k(s);
  std::vector<std::size_t> plus(nk), minus(nk);
  Matrix im = column_basis(d);
  for (std::size_t k = 0; k < nk; ++k) {
    const Matrix& num = ks[std::min(2 * k + 1, s)];
    const Matrix& lower = ks[std::min(2 * k, s)];
    Matrix den = subspace_sum(subspace_intersection(num, im), lower);
    if (!subspace_contains(num, den)) throw CheckFailure("higher cohomology", "quotient denominator leaves numerator");
    plus[k] = graded_dim(num, parity, 0) - graded_dim(den, parity, 0);
    minus[k] = graded_dim(num, parity, 1) - graded_dim(den, parity, 1);
  }
  return {plus, minus};
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> higher_from_jordan(const JordanData& jd) {
  const std::size_t nk = count_k(jd.max_size());
  std::vector<std::size_t> plus(nk), minus(nk);
  // dim H_top^k,+- = dim N_{2k+1}^+- - dim N_{2k+2}^-+
  auto layer = [&](std::size_t k, int p) -> std::size_t {
    if (k == 0 || k > jd.layer_dims.size()) return 0;
    return p == 0 ? jd.layer_dims[k - 1].first : jd.layer_dims[k - 1].second;
  };
  for (std::size_t k = 0; k < nk; ++k) {
    plus[k] = layer(2 * k + 1, 0) - layer(2 * k + 2, 1);
    minus[k] = layer(2 * k + 1, 1) - layer(2 * k + 2, 0);
  }
  return {plus, minus};
}

std::size_t CohomologyDims::htop_total() const {
  std::size_t t = 0;
  for (auto v : htop_plus) t += v;
  for (auto v : htop_minus) t += v;
  return t;
}

long CohomologyDims::htop_index() const {
  long t = 0;
  for (auto v : htop_plus) t += static_cast<long>(v);
  for (auto v : htop_minus) t -= static_cast<long>(v);
  return t;
}

CohomologyDims dirac_cohomology(const Matrix& d, const std::vector<int>& parity) {
  CohomologyDims c;
  c.dim = d.rows();
  Matrix ker = kernel(d), im = column_basis(d);
  c.ker = ker.cols();
  c.im = im.cols();
  Matrix both = subspace_intersection(ker, im);
  c.hd = c.ker - both.cols();
  c.hd_plus = graded_dim(ker, parity, 0) - graded_dim(both, parity, 0);
  c.hd_minus = graded_dim(ker, parity, 1) - graded_dim(both, parity, 1);
  JordanData jd = jordan_blocks(d, parity);
  c.gen0 = jd.gen0_dim;
  c.max_jordan = jd.max_size();
  auto direct = higher_direct(d, parity);
  auto jordan = higher_from_jordan(jd);
  if (direct != jordan) throw CheckFailure("higher cohomology cross-check", "quotient and Jordan counts differ");
  c.htop_plus = direct.first;
  c.htop_minus = direct.second;
  return c;
}

CohomologyDims dirac_cohomology(const DiracBlock& b) { return dirac_cohomology(b.d, b.layout.parity); }

bool index_identity_holds(const DiracBlock& b, const CohomologyDims& c) {
  long even = static_cast<long>(b.layout.even_dim());
  long odd = static_cast<long>(b.layout.dim) - even;
  return c.htop_index() == even - odd;
}

long h_weyl_multiplicity(const PairGH& pair, const Weight& nu, const Weight& mu) {
  const auto roots = pair.h_positive_roots();
  long total = 0;
  for (auto w : pair.weyl.subgroup_h)
    total += pair.weyl.sign(w) * partition_count(roots, pair.weyl.apply(w, nu + pair.rho_h) - (mu + pair.rho_h));
  return total;
}

bool is_h_antidominant(const PairGH& pair, const Weight& nu) {
  for (const auto& beta : pair.h_positive_roots()) {
    Scalar v = 2 * pair.form(nu + pair.rho_h, beta) / pair.form.norm2(beta);
    if (is_integer(v) && v > 0) return false;
  }
  return true;
}

KostantReport kostant_kernel_check(const DiracSetup& s, const Weight& lambda) {
  KostantReport r;
  const PairGH& pair = s.pair;
  WeightModuleWindow f = finite_dim_simple(pair, s.cb, lambda);
  for (auto w : pair.weyl.coset_w1) r.constituents.push_back(pair.weyl.apply(w, lambda + pair.rho) - pair.rho_h);
  long kernel_total = 0, expected_total = 0;
  for (const auto& mu : block_weights(s, f)) {
    DiracBlock b = assemble_block(s, f, mu);
    long k = static_cast<long>(b.dim() - rank(b.d));
    long e = 0;
    for (const auto& nu : r.constituents) e += h_weyl_multiplicity(pair, nu, mu);
    if (k) r.kernel_character[mu] = k;
    if (e) r.expected_character[mu] = e;
    kernel_total += k;
  }
  // Total size of the expected sum by the h Weyl dimension formula.
  for (const auto& nu : r.constituents) {
    Scalar dim = 1;
    for (const auto& beta : pair.h_positive_roots())
      dim *= pair.form(nu + pair.rho_h, beta) / pair.form(pair.rho_h, beta);
    expected_total += dim.get_num().get_si();
  }
  r.cubic_nonzero = !s.sm->cubic.is_zero();
  r.cubic_kills_vacuum = s.sm->cubic.col(0) == std::vector<Scalar>(s.sm->dim);
  r.ok = r.kernel_character == r.expected_character && kernel_total == expected_total;
  return r;
}

NonvanishingReport nonvanishing_check(const DiracSetup& s, const WeightModuleWindow& m) {
  NonvanishingReport r;
  r.mu = m.top + s.pair.rho - s.pair.rho_h;
  DiracBlock b = assemble_block(s, m, r.mu);
  r.block_dim = b.dim();
  const std::size_t top_dim = b.layout.dims[0];
  r.in_kernel = top_dim > 0;
  r.outside_image = top_dim > 0;
  Matrix im = column_basis(b.d);
  for (std::size_t i = 0; i < top_dim; ++i) {
    std::vector<Scalar> e(b.dim());
    e[b.layout.offsets[0] + i] = 1;
    if (!(b.d * Matrix::column(e)).is_zero()) r.in_kernel = false;
    if (subspace_contains(im, Matrix::column(e))) r.outside_image = false;
  }
  return r;
}

SimpleVermaReport simple_verma_check(const DiracSetup& s, const Weight& lambda, std::size_t depth) {
  SimpleVermaReport r;
  const PairGH& pair = s.pair;
  r.h_top = lambda + pair.rho - pair.rho_h;
  r.h_antidominant = is_h_antidominant(pair, r.h_top);
  WeightModuleWindow vw = verma_window(pair, s.cb, lambda, depth);
  CharacterTable expect = verma_character_h(pair, r.h_top, depth);
  bool ok = r.h_antidominant;
  for (const auto& mu : block_weights(s, vw, depth)) {
    CohomologyDims c = dirac_cohomology(assemble_block(s, vw, mu));
    long want = expect[mu];
    if (c.hd) r.hd[mu] = static_cast<long>(c.hd);
    if (want) r.expected[mu] = want;
  }
  for (const auto& [mu, v] : expect.entries)
    if (v && !r.hd.count(mu)) ok = false;
  r.ok = ok && r.hd == r.expected;
  return r;
}

VoganAudit vogan_audit(const DiracSetup& s, const std::map<Weight, long>& character,
                       const std::vector<Weight>& infinitesimal_characters) {
  VoganAudit audit;
  const PairGH& pair = s.pair;
  const RootSystem& rs = s.cb->roots();
  std::vector<Weight> order;
  for (const auto& [w, v] : character) order.push_back(w);
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return rs.height(a) > rs.height(b); });
  const auto hroots = pair.h_positive_roots();
  for (const auto& w : order) {
    long residual = character.at(w);
    for (const auto& e : audit.entries) residual -= e.multiplicity * partition_count(hroots, e.nu - w);
    if (residual == 0) continue;
    VoganEntry e;
    e.nu = w;
    e.multiplicity = residual;
    for (const auto& lam : infinitesimal_characters) {
      e.shifted = e.shifted || same_infinitesimal_character(lam, w, pair.rho, pair.rho_h, pair.weyl);
      e.literal = e.literal || same_infinitesimal_character(lam, w, rs.zero(), rs.zero(), pair.weyl);
    }
    audit.ok = audit.ok && e.shifted;
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

std::optional<JordanScenario> search_jordan_scenario(std::size_t min_size, std::size_t depth) {
  struct Candidate {
    std::string type;
    std::vector<Weight> h;
    std::vector<long> lambda_labels, f_labels;
  };
  std::vector<Candidate> cands;
  for (long l : {-1, -2, 0, -3, 1})
    for (long f : {1, 2, 3}) cands.push_back({"A1", {}, {l}, {f}});
  for (std::vector<long> l : {std::vector<long>{-1, -1}, {0, -1}, {-1, 0}, {0, 0}})
    for (std::vector<long> f : {std::vector<long>{1, 0}, {0, 1}, {1, 1}}) {
      cands.push_back({"A2", {Weight{1, 0}}, l, f});
      cands.push_back({"A2", {}, l, f});
    }
  for (const auto& c : cands) {
    RootSystem rs = build_root_system(c.type);
    DiracSetup s = make_setup(rs, c.h);
    Weight lam(rs.rank), fl(rs.rank);
    for (std::size_t i = 0; i < rs.rank; ++i) {
      lam[i] = c.lambda_labels[i];
      fl[i] = c.f_labels[i];
    }
    lam = from_fundamental(rs, lam);
    fl = from_fundamental(rs, fl);
    WeightModuleWindow t = tensor_with_finite_dim(verma_window(s.pair, s.cb, lam, depth),
                                                  finite_dim_simple(s.pair, s.cb, fl));
    for (const auto& mu : block_weights(s, t)) {
      DiracBlock b = assemble_block(s, t, mu);
      JordanData jd = jordan_blocks(b.d, b.layout.parity);
      if (jd.max_size() >= min_size) return JordanScenario{c.type, c.h, lam, fl, mu, depth, jd.max_size()};
    }
  }
  return std::nullopt;
}

}  // namespace cdirac
