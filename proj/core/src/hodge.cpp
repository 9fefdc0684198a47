#include "cdirac/hodge.hpp"

#include <algorithm>
#include <bit>

#include "cdirac/errors.hpp"

namespace cdirac {

namespace {

void place(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src, const Scalar& coef) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (sgn(src(i, j)) != 0) dst(r0 + i, c0 + j) += coef * src(i, j);
}

int sign_of_bits_below(std::size_t mask, std::size_t bit) {
  return std::popcount(mask & ((std::size_t{1} << bit) - 1)) % 2 ? -1 : 1;
}

Matrix degree_block(const CESlice& c, const Matrix& a, std::size_t from, std::size_t to) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < c.dim; ++i) {
    if (c.degree[i] == to) rows.push_back(i);
    if (c.degree[i] == from) cols.push_back(i);
  }
  return select_columns(select_rows(a, rows), cols);
}

// Direct-sum test for two subspaces given by column bases.
bool direct(const Matrix& u, const Matrix& v) { return subspace_intersection(u, v).cols() == 0; }

}  // namespace

HermitianPair detect_hermitian(const PairGH& pair, const ChevalleyBasis& cb) {
  const RootSystem& rs = pair.rs;
  HermitianPair hp;
  hp.pair = pair;
  hp.p_plus = pair.q_positive;
  for (auto k : hp.p_plus) hp.p_plus_roots.push_back(rs.positive_roots[k]);
  for (std::size_t a = 0; a < hp.p_plus.size(); ++a)
    for (std::size_t b = a; b < hp.p_plus.size(); ++b) {
      const Weight& x = hp.p_plus_roots[a];
      const Weight& y = hp.p_plus_roots[b];
      if (rs.is_root(x + y))
        throw NotHermitian("q is not abelian: " + to_string(x) + " + " + to_string(y) + " is a root");
    }
  hp.q_abelian = true;
  hp.parabolic_containment = true;
  for (const auto& a : pair.delta_h)
    for (const auto& b : hp.p_plus_roots)
      if (rs.is_root(a + b) && !std::count(hp.p_plus_roots.begin(), hp.p_plus_roots.end(), a + b))
        hp.parabolic_containment = false;
  hp.symmetric = is_symmetric_pair(pair, cb);
  hp.shift = pair.rho - pair.rho_h;
  return hp;
}

std::size_t CESlice::total_cohomology() const {
  std::size_t t = 0;
  for (auto x : cohomology) t += x;
  return t;
}

std::size_t CESlice::total_homology() const {
  std::size_t t = 0;
  for (auto x : homology) t += x;
  return t;
}

CESlice ce_complex(const HermitianPair& hp, const WeightModuleWindow& m, const Weight& nu) {
  const ChevalleyBasis& cb = *m.g;
  const std::size_t l = hp.p_plus.size(), n_sub = std::size_t{1} << l;
  CESlice c;
  c.nu = nu;
  c.chains.assign(l + 1, 0);
  std::vector<Weight> wt(n_sub, nu);
  for (std::size_t s = 0; s < n_sub; ++s) {
    for (std::size_t i = 0; i < l; ++i)
      if (s >> i & 1) wt[s] += hp.p_plus_roots[i];
    if (!m.covers(wt[s])) throw OutsideWindow("CE slice at " + to_string(nu) + " leaves the module window");
    c.offsets.push_back(c.dim);
    c.dims.push_back(m.dim(wt[s]));
    c.dim += c.dims.back();
    c.chains[std::popcount(s)] += c.dims.back();
    c.degree.insert(c.degree.end(), c.dims.back(), std::popcount(s));
  }
  c.d = c.boundary = Matrix(c.dim, c.dim);
  for (std::size_t s = 0; s < n_sub; ++s) {
    if (c.dims[s] == 0) continue;
    for (std::size_t i = 0; i < l; ++i) {
      const std::size_t bit = std::size_t{1} << i, k = hp.p_plus[i];
      const Scalar sign = sign_of_bits_below(s, i);
      if (!(s & bit)) {
        // (d w)(X_0 ^ .. ^ X_k) = sum (-1)^j X_j w(.. omit X_j ..)
        const std::size_t t = s | bit;
        if (c.dims[t]) place(c.d, c.offsets[t], c.offsets[s], m.action(cb.pos(k), wt[s]), sign);
      } else {
        // boundary(v (x) Y_1 ^ .. ^ Y_k) = sum (-1)^(j+1) Y_j v (x) (.. omit Y_j ..)
        const std::size_t t = s & ~bit;
        if (c.dims[t]) place(c.boundary, c.offsets[t], c.offsets[s], m.action(cb.neg(k), wt[s]), sign);
      }
    }
  }
  c.d_squared_zero = (c.d * c.d).is_zero();
  c.boundary_squared_zero = (c.boundary * c.boundary).is_zero();
  std::vector<std::size_t> rd(l + 1, 0), rb(l + 1, 0);  // rank d^k, rank of boundary C_{k+1} -> C_k
  for (std::size_t k = 0; k < l; ++k) {
    rd[k] = rank(degree_block(c, c.d, k, k + 1));
    rb[k] = rank(degree_block(c, c.boundary, k + 1, k));
  }
  for (std::size_t k = 0; k <= l; ++k) {
    c.cohomology.push_back(c.chains[k] - rd[k] - (k ? rd[k - 1] : 0));
    c.homology.push_back(c.chains[k] - rb[k] - (k ? rb[k - 1] : 0));
  }
  return c;
}

Matrix ce_identification(const HermitianPair& hp, const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu) {
  const SpinModule& sm = *s.sm;
  BlockLayout bl = block_layout(s, m, mu);
  std::vector<std::size_t> pos_in_hp;  // spin bit -> subset bit
  for (auto k : sm.q_order) {
    auto it = std::find(hp.p_plus.begin(), hp.p_plus.end(), k);
    if (it == hp.p_plus.end()) throw Error("spin module and Hermitian pair disagree on q");
    pos_in_hp.push_back(static_cast<std::size_t>(it - hp.p_plus.begin()));
  }
  CESlice c = ce_complex(hp, m, mu - hp.shift);
  Matrix phi(c.dim, bl.dim);
  for (std::size_t a = 0; a < sm.dim; ++a) {
    if (bl.dims[a] == 0) continue;
    std::vector<std::size_t> seq;
    std::size_t sub = 0;
    for (std::size_t i = 0; i < pos_in_hp.size(); ++i)
      if (a >> i & 1) {
        seq.push_back(pos_in_hp[i]);
        sub |= std::size_t{1} << pos_in_hp[i];
      }
    // Reordering Y_{i_1} ^ .. ^ Y_{i_k} into the subset's order.
    int sign = 1;
    for (std::size_t x = 0; x < seq.size(); ++x)
      for (std::size_t y = x + 1; y < seq.size(); ++y)
        if (seq[x] > seq[y]) sign = -sign;
    if (c.dims[sub] != bl.dims[a]) throw CheckFailure("identification", "slice dimensions differ at " + to_string(mu));
    for (std::size_t r = 0; r < bl.dims[a]; ++r) phi(c.offsets[sub] + r, bl.offsets[a] + r) = sign;
  }
  return phi;
}

IdentificationReport identification_check(const HermitianPair& hp, const DiracSetup& s, const WeightModuleWindow& m,
                                          const Weight& mu) {
  IdentificationReport r;
  r.mu = mu;
  if (!(s.sm->weights[0] == hp.shift)) throw CheckFailure("identification", "spin top weight is not rho - rho_k");
  DiracBlock b = assemble_block(s, m, mu);
  CESlice c = ce_complex(hp, m, mu - hp.shift);
  Matrix phi = ce_identification(hp, s, m, mu);
  for (std::size_t a = 0; a < s.sm->dim; ++a) {
    int sign = 1;
    for (std::size_t i = 0; i < phi.rows(); ++i)
      if (b.layout.dims[a] && sgn(phi(i, b.layout.offsets[a])) < 0) sign = -1;
    r.signs.push_back(sign);
  }
  r.c_plus_is_d = phi * b.d_plus == c.d * phi;
  r.c_minus_is_boundary = phi * b.d_minus == c.boundary * phi;
  r.d_is_sum = b.cubic_part.is_zero() && b.d == b.d_plus + b.d_minus;
  if (!r.c_plus_is_d) r.failure = "C+ differs from d at " + to_string(mu);
  else if (!r.c_minus_is_boundary) r.failure = "C- differs from the boundary map at " + to_string(mu);
  else if (!r.d_is_sum) r.failure = "D is not C+ + C- at " + to_string(mu);
  return r;
}

std::optional<std::string> ce_equivariance_defect(const HermitianPair& hp, const DiracSetup& s,
                                                  const WeightModuleWindow& m, const Weight& nu) {
  const Weight mu = nu + hp.shift;
  CESlice c = ce_complex(hp, m, nu);
  Matrix phi = ce_identification(hp, s, m, mu);
  for (auto gen : s.pair.h_elements(*s.cb)) {
    const Weight tgt = mu + s.cb->weight(gen);
    if (!block_covered(s, m, tgt)) continue;
    CESlice ct = ce_complex(hp, m, nu + s.cb->weight(gen));
    Matrix phit = ce_identification(hp, s, m, tgt);
    // phi is a signed permutation, so its transpose is its inverse.
    Matrix act = phit * diagonal_action(s, m, gen, mu) * phi.transpose();
    if (!(act * c.d == ct.d * act)) return "d fails k-equivariance for generator " + std::to_string(gen) + " at " + to_string(nu);
    if (!(act * c.boundary == ct.boundary * act))
      return "boundary fails k-equivariance for generator " + std::to_string(gen) + " at " + to_string(nu);
  }
  return std::nullopt;
}

ContravariantForm unitary_form(const HermitianPair& hp, const WeightModuleWindow& verma,
                               const WeightModuleWindow* quotient) {
  ContravariantForm f = shapovalov_grams(verma, hp.p_plus);
  if (!quotient) return f;
  ContravariantForm q;
  for (const auto& [mu, d] : quotient->dims) {
    const Matrix& g = f.grams.at(mu);
    auto piv = pivot_columns(g);
    const auto& full = verma.monomials.at(mu);
    const auto& reps = quotient->monomials.at(mu);
    if (piv.size() != d) throw CheckFailure("unitary form", "quotient rank differs at " + to_string(mu));
    for (std::size_t j = 0; j < d; ++j)
      if (full[piv[j]] != reps[j]) throw CheckFailure("unitary form", "quotient representatives differ at " + to_string(mu));
    q.grams[mu] = select_rows(select_columns(g, piv), piv);
  }
  return q;
}

UnitarityReport unitarity_check(const ContravariantForm& form) {
  UnitarityReport r;
  for (const auto& [mu, g] : form.grams) {
    Inertia in = inertia(g);
    r.signatures[mu] = in;
    if (in.negative || in.zero) {
      r.unitary = false;
      if (!r.first_failure) r.first_failure = mu;
    }
  }
  return r;
}

Matrix tensor_form(const DiracSetup& s, const WeightModuleWindow& m, const ContravariantForm& form, const Weight& mu) {
  const SpinModule& sm = *s.sm;
  const ChevalleyBasis& cb = *s.cb;
  BlockLayout bl = block_layout(s, m, mu);
  Matrix g(bl.dim, bl.dim);
  for (std::size_t a = 0; a < sm.dim; ++a) {
    if (bl.dims[a] == 0) continue;
    // Spin monomials are orthogonal; the wedge of e_{-beta} is adjoint to the contraction
    // by e_beta up to the transpose coefficient of e_{-beta}.
    Scalar spin = 1;
    for (std::size_t i = 0; i < sm.q_order.size(); ++i)
      if (a >> i & 1) spin *= cb.tau_coefficient(cb.neg(sm.q_order[i]));
    place(g, bl.offsets[a], bl.offsets[a], form.grams.at(mu - sm.weights[a]), spin);
  }
  return g;
}

bool HodgeReport::ok() const {
  return positive && adjoint_plus && adjoint_minus && ker_meets_im_trivially && dims_add && c_plus_split &&
         c_minus_split && ker_d == hd;
}

HodgeReport hodge_decomposition_check(const DiracSetup& s, const WeightModuleWindow& m, const ContravariantForm& form,
                                      const Weight& mu) {
  HodgeReport r;
  r.mu = mu;
  DiracBlock b = assemble_block(s, m, mu);
  const std::size_t n = b.dim();
  Matrix g = tensor_form(s, m, form, mu);
  Inertia in = inertia(g);
  r.positive = in.positive == n;
  Matrix gm = Scalar(-1) * g;
  r.adjoint_plus = b.d_plus.transpose() * g == gm * b.d_minus;
  r.adjoint_minus = b.d_minus.transpose() * g == gm * b.d_plus;
  Matrix kd = kernel(b.d), id = column_basis(b.d);
  r.ker_d = kd.cols();
  r.ker_meets_im_trivially = direct(kd, id);
  r.dims_add = kd.cols() + id.cols() == n;
  auto split = [&](const Matrix& c) {
    Matrix kc = kernel(c), ic = column_basis(c);
    return direct(ic, kd) && ic.cols() + kd.cols() == kc.cols() && subspace_contains(kc, hstack(ic, kd));
  };
  r.c_plus_split = split(b.d_plus);
  r.c_minus_split = split(b.d_minus);
  r.hd = dirac_cohomology(b).hd;
  const std::string at = " at " + to_string(mu);
  if (!r.positive) r.failure = "inner product is not positive definite" + at;
  else if (!r.adjoint_plus || !r.adjoint_minus) r.failure = "C+ and -C- are not adjoint" + at;
  else if (!r.ker_meets_im_trivially || !r.dims_add) r.failure = "ker D + im D is not the whole block" + at;
  else if (!r.c_plus_split) r.failure = "ker C+ differs from im C+ + ker D" + at;
  else if (!r.c_minus_split) r.failure = "ker C- differs from im C- + ker D" + at;
  else if (r.ker_d != r.hd) r.failure = "H_D differs from ker D" + at;
  return r;
}

ComparisonReport hodge_comparison(const HermitianPair& hp, const DiracSetup& s, const WeightModuleWindow& m,
                                  std::size_t depth) {
  ComparisonReport rep;
  for (const auto& mu : block_weights(s, m, depth)) {
    ComparisonRow row;
    row.mu = mu;
    CohomologyDims cd = dirac_cohomology(assemble_block(s, m, mu));
    row.hd = cd.hd;
    row.hd_plus = cd.hd_plus;
    row.hd_minus = cd.hd_minus;
    CESlice c = ce_complex(hp, m, mu - hp.shift);
    row.cohomology = c.cohomology;
    row.homology = c.homology;
    std::size_t even = 0, odd = 0;
    for (std::size_t k = 0; k < c.cohomology.size(); ++k) (k % 2 ? odd : even) += c.cohomology[k];
    row.ok = row.hd == c.total_cohomology() && row.hd == c.total_homology() && row.hd_plus == even &&
             row.hd_minus == odd;
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace cdirac
