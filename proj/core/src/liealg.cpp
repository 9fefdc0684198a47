#include "cdirac/liealg.hpp"

#include <algorithm>
#include <set>

#include "cdirac/errors.hpp"

namespace cdirac {

GeneratorModule build_from_generators(const RootSystem& rs, const Weight& lambda, std::size_t max_depth) {
  const std::size_t r = rs.rank;
  GeneratorModule gm;
  gm.top = lambda;
  // Block maps: e_blk[i][mu] : L_mu -> L_{mu+alpha_i}, f_blk[j][nu] : L_nu -> L_{nu-alpha_j}.
  std::vector<std::map<Weight, Matrix>> e_blk(r), f_blk(r);
  std::map<Weight, std::size_t> dim;
  dim[lambda] = 1;
  gm.weights.push_back(lambda);
  std::vector<Weight> layer = {lambda};
  std::size_t depth = 0;
  while (!layer.empty() && depth < max_depth) {
    ++depth;
    std::set<Weight> cands;
    for (const auto& nu : layer)
      for (std::size_t j = 0; j < r; ++j) cands.insert(nu - rs.simple_roots[j]);
    std::vector<Weight> next;
    for (const auto& mu : cands) {
      struct Src {
        std::size_t j, b;
      };
      std::vector<Src> src;
      for (std::size_t j = 0; j < r; ++j) {
        auto it = dim.find(mu + rs.simple_roots[j]);
        if (it == dim.end()) continue;
        for (std::size_t b = 0; b < it->second; ++b) src.push_back({j, b});
      }
      std::vector<std::size_t> row_off(r + 1, 0);
      for (std::size_t i = 0; i < r; ++i) {
        auto it = dim.find(mu + rs.simple_roots[i]);
        row_off[i + 1] = row_off[i] + (it == dim.end() ? 0 : it->second);
      }
      Matrix phi(row_off[r], src.size());
      for (std::size_t c = 0; c < src.size(); ++c) {
        const auto [j, b] = src[c];
        Weight nu = mu + rs.simple_roots[j];
        for (std::size_t i = 0; i < r; ++i) {
          if (row_off[i + 1] == row_off[i]) continue;
          Weight up = nu + rs.simple_roots[i];
          if (dim.count(up)) {
            const Matrix& ei = e_blk[i].at(nu);
            auto fit = f_blk[j].find(up);
            if (fit != f_blk[j].end()) {
              Matrix col = fit->second * select_columns(ei, {b});
              for (std::size_t k = 0; k < col.rows(); ++k) phi(row_off[i] + k, c) += col(k, 0);
            }
          }
          if (i == j) phi(row_off[i] + b, c) += rs.coroot_pairing(nu, i);
        }
      }
      auto piv = pivot_columns(phi);
      if (piv.empty()) continue;
      Matrix basis = select_columns(phi, piv);
      Matrix coords = *solve(basis, phi);
      dim[mu] = piv.size();
      next.push_back(mu);
      for (std::size_t i = 0; i < r; ++i) {
        if (row_off[i + 1] == row_off[i]) continue;
        std::vector<std::size_t> rows;
        for (std::size_t k = row_off[i]; k < row_off[i + 1]; ++k) rows.push_back(k);
        e_blk[i][mu] = select_rows(basis, rows);
      }
      for (std::size_t j = 0; j < r; ++j) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < src.size(); ++c)
          if (src[c].j == j) cols.push_back(c);
        if (!cols.empty()) f_blk[j][mu + rs.simple_roots[j]] = select_columns(coords, cols);
      }
    }
    for (const auto& w : next) gm.weights.push_back(w);
    layer = std::move(next);
  }
  gm.complete = layer.empty();
  std::size_t off = 0;
  for (std::size_t k = 0; k < gm.weights.size(); ++k) {
    gm.position[gm.weights[k]] = k;
    gm.dims.push_back(dim.at(gm.weights[k]));
    gm.offsets.push_back(off);
    off += gm.dims.back();
  }
  gm.total_dim = off;
  for (std::size_t i = 0; i < r; ++i) {
    Matrix e(off, off), f(off, off), h(off, off);
    for (std::size_t k = 0; k < gm.weights.size(); ++k) {
      const Weight& mu = gm.weights[k];
      std::size_t o = gm.offsets[k];
      Scalar hv = rs.coroot_pairing(mu, i);
      for (std::size_t a = 0; a < gm.dims[k]; ++a) h(o + a, o + a) = hv;
      auto eit = e_blk[i].find(mu);
      if (eit != e_blk[i].end()) {
        std::size_t t = gm.offsets[gm.position.at(mu + rs.simple_roots[i])];
        for (std::size_t a = 0; a < eit->second.rows(); ++a)
          for (std::size_t b = 0; b < eit->second.cols(); ++b) e(t + a, o + b) = eit->second(a, b);
      }
      auto fit = f_blk[i].find(mu);
      if (fit != f_blk[i].end()) {
        std::size_t t = gm.offsets[gm.position.at(mu - rs.simple_roots[i])];
        for (std::size_t a = 0; a < fit->second.rows(); ++a)
          for (std::size_t b = 0; b < fit->second.cols(); ++b) f(t + a, o + b) = fit->second(a, b);
      }
    }
    gm.e.push_back(std::move(e));
    gm.f.push_back(std::move(f));
    gm.h.push_back(std::move(h));
  }
  return gm;
}

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::vector<Scalar> flatten(const Matrix& m) {
  std::vector<Scalar> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

SparseVec sparse(const std::vector<Scalar>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(rs) {
  n_pos_ = rs.num_positive();
  const std::size_t r = rs.rank;
  dim_ = 2 * n_pos_ + r;
  // Adjoint module: one irreducible piece per simple component, highest root on top.
  GeneratorModule adj;
  {
    std::vector<std::size_t> comp(r, r);
    std::size_t ncomp = 0;
    for (std::size_t s = 0; s < r; ++s) {
      if (comp[s] != r) continue;
      std::vector<std::size_t> stack = {s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < r; ++b)
          if (rs.cartan[a][b] != 0 && comp[b] == r) {
            comp[b] = ncomp;
            stack.push_back(b);
          }
      }
      ++ncomp;
    }
    std::vector<std::vector<Matrix>> e(r), f(r), h(r);
    for (std::size_t c = 0; c < ncomp; ++c) {
      const Weight* theta = nullptr;
      for (const auto& b : rs.positive_roots) {
        bool inside = true;
        for (std::size_t i = 0; i < r; ++i)
          if (sgn(b[i]) != 0 && comp[i] != c) inside = false;
        if (inside) theta = &b;
      }
      GeneratorModule piece = build_from_generators(rs, *theta, 4 * n_pos_ + 4);
      if (!piece.complete) throw Error("adjoint module construction did not terminate");
      for (std::size_t i = 0; i < r; ++i) {
        e[i].push_back(piece.e[i]);
        f[i].push_back(piece.f[i]);
        h[i].push_back(piece.h[i]);
      }
      adj.total_dim += piece.total_dim;
    }
    for (std::size_t i = 0; i < r; ++i) {
      adj.e.push_back(block_diag(e[i]));
      adj.f.push_back(block_diag(f[i]));
      adj.h.push_back(block_diag(h[i]));
    }
  }
  if (adj.total_dim != dim_) throw Error("adjoint module has the wrong dimension");

  // Root vectors along a fixed path: smallest simple index i with beta - alpha_i positive.
  std::vector<Matrix> x(n_pos_), y(n_pos_);
  std::vector<std::size_t> parent(n_pos_), via(n_pos_);
  for (std::size_t k = 0; k < n_pos_; ++k) {
    const Weight& beta = rs.positive_roots[k];
    auto simple = std::find(rs.simple_roots.begin(), rs.simple_roots.end(), beta);
    Matrix X, Y;
    if (simple != rs.simple_roots.end()) {
      std::size_t i = simple - rs.simple_roots.begin();
      X = adj.e[i];
      Y = adj.f[i];
      via[k] = i;
      parent[k] = k;
    } else {
      std::size_t i = 0;
      std::optional<std::size_t> g;
      for (; i < r; ++i)
        if ((g = rs.positive_index(beta - rs.simple_roots[i]))) break;
      X = commutator(adj.e[i], x[*g]);
      Y = commutator(adj.f[i], y[*g]);
      via[k] = i;
      parent[k] = *g;
    }
    // [X, Y] = c h_beta with c = +-m^2; normalize to a Chevalley pair.
    Matrix xy = commutator(X, Y);
    Scalar two_c = 0;
    {
      Matrix hv(adj.total_dim, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t a = 0; a < adj.total_dim; ++a) hv(a, i) = adj.h[i](a, a);
      std::vector<Scalar> diag(adj.total_dim);
      for (std::size_t a = 0; a < adj.total_dim; ++a) diag[a] = xy(a, a);
      auto coef = solve(hv, Matrix::column(diag));
      if (!coef) throw Error("bracket of root vectors is not in the Cartan subalgebra");
      for (std::size_t i = 0; i < r; ++i) two_c += (*coef)(i, 0) * rs.coroot_pairing(beta, i);
    }
    Scalar c = two_c / 2;
    if (sgn(c) == 0) throw Error("degenerate root vector pair");
    if (c < 0) {
      Y *= Scalar(-1);
      c = -c;
    }
    Scalar s = 1 / exact_sqrt(c);
    x[k] = X * s;
    y[k] = Y * s;
  }

  std::vector<Matrix> basis;
  for (auto& m : x) basis.push_back(m);
  for (auto& m : y) basis.push_back(m);
  for (auto& m : adj.h) basis.push_back(m);
  weights_.resize(dim_, Weight(r));
  for (std::size_t k = 0; k < n_pos_; ++k) {
    weights_[pos(k)] = rs.positive_roots[k];
    weights_[neg(k)] = -rs.positive_roots[k];
  }

  // Coordinates of any matrix in the span of the basis via an invertible row selection.
  Matrix vecs(adj.total_dim * adj.total_dim, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    auto v = flatten(basis[b]);
    for (std::size_t i = 0; i < v.size(); ++i) vecs(i, b) = v[i];
  }
  auto rows = pivot_columns(vecs.transpose());
  if (rows.size() != dim_) throw Error("adjoint basis is dependent");
  Matrix sel_inv = *inverse(select_rows(vecs, rows));
  auto coords = [&](const Matrix& m) {
    auto v = flatten(m);
    Matrix col(rows.size(), 1);
    for (std::size_t i = 0; i < rows.size(); ++i) col(i, 0) = v[rows[i]];
    return (sel_inv * col).col(0);
  };
  chevalley_.assign(dim_, std::vector<SparseVec>(dim_));
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) {
      if (b < a) {
        chevalley_[a][b] = chevalley_[b][a];
        for (auto& [idx, v] : chevalley_[a][b]) v = -v;
        continue;
      }
      chevalley_[a][b] = sparse(coords(commutator(basis[a], basis[b])));
    }

  auto killing_of = [&](const std::vector<std::vector<SparseVec>>& table) {
    std::vector<Matrix> ads;
    for (std::size_t a = 0; a < dim_; ++a) {
      Matrix m(dim_, dim_);
      for (std::size_t b = 0; b < dim_; ++b)
        for (const auto& [c, v] : table[a][b]) m(c, b) = v;
      ads.push_back(std::move(m));
    }
    Matrix k(dim_, dim_);
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = a; b < dim_; ++b) {
        Scalar t = 0;
        Matrix p = ads[a] * ads[b];
        for (std::size_t i = 0; i < dim_; ++i) t += p(i, i);
        k(a, b) = t;
        k(b, a) = t;
      }
    return k;
  };
  Matrix kc = killing_of(chevalley_);
  kappa_.resize(n_pos_);
  std::vector<Scalar> scale(dim_, Scalar(1));
  for (std::size_t k = 0; k < n_pos_; ++k) {
    kappa_[k] = kc(pos(k), neg(k));
    scale[neg(k)] = 1 / kappa_[k];
  }
  bracket_.assign(dim_, std::vector<SparseVec>(dim_));
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (const auto& [c, v] : chevalley_[a][b]) bracket_[a][b].emplace_back(c, scale[a] * scale[b] * v / scale[c]);
  killing_ = killing_of(bracket_);

  // tau on the Chevalley basis, then transported to the rescaled basis.
  std::vector<Scalar> t_x(n_pos_);  // tau(x_beta) = t_x * y_beta
  for (std::size_t k = 0; k < n_pos_; ++k) {
    if (parent[k] == k) {
      t_x[k] = 1;
      continue;
    }
    std::size_t g = parent[k];
    std::size_t si = *rs.positive_index(rs.simple_roots[via[k]]);
    Scalar nconst = 0;
    for (const auto& [c, v] : chevalley_[pos(si)][pos(g)])
      if (c == pos(k)) nconst = v;
    // tau(x_beta) = (1/N) [tau x_gamma, y_{alpha_i}] = (t_gamma / N) [y_gamma, y_{alpha_i}]
    Scalar m = 0;
    for (const auto& [c, v] : chevalley_[neg(g)][neg(si)])
      if (c == neg(k)) m = v;
    t_x[k] = t_x[g] * m / nconst;
  }
  tau_ = Matrix(dim_, dim_);
  for (std::size_t k = 0; k < n_pos_; ++k) {
    tau_(neg(k), pos(k)) = t_x[k] * kappa_[k];
    tau_(pos(k), neg(k)) = 1 / (t_x[k] * kappa_[k]);
  }
  for (std::size_t i = 0; i < r; ++i) tau_(cartan(i), cartan(i)) = 1;
}

std::optional<std::size_t> ChevalleyBasis::element_for_root(const Weight& root) const {
  if (auto i = rs_.positive_index(root)) return pos(*i);
  if (auto i = rs_.positive_index(-root)) return neg(*i);
  return std::nullopt;
}

Scalar ChevalleyBasis::tau_coefficient(std::size_t a) const {
  if (is_cartan(a)) return 1;
  std::size_t k = root_of(a);
  return is_raising(a) ? tau_(neg(k), a) : tau_(pos(k), a);
}

Matrix ChevalleyBasis::ad(std::size_t a) const {
  Matrix m(dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b)
    for (const auto& [c, v] : bracket_[a][b]) m(c, b) = v;
  return m;
}

std::vector<Scalar> ChevalleyBasis::dense(const SparseVec& v) const {
  std::vector<Scalar> d(dim_);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

std::vector<Scalar> ChevalleyBasis::coroot_image(std::size_t i) const {
  std::vector<Scalar> out(rs_.rank);
  for (const auto& [c, v] : bracket_[pos(i)][neg(i)])
    if (is_cartan(c)) out[c - 2 * n_pos_] = v;
  return out;
}

bool PairGH::in_h(std::size_t positive_index) const {
  return std::find(h_positive.begin(), h_positive.end(), positive_index) != h_positive.end();
}

std::vector<Weight> PairGH::h_positive_roots() const {
  std::vector<Weight> out;
  for (auto i : h_positive) out.push_back(rs.positive_roots[i]);
  return out;
}

std::vector<std::size_t> PairGH::h_elements(const ChevalleyBasis& cb) const {
  std::vector<std::size_t> out;
  for (auto i : h_positive) out.push_back(cb.pos(i));
  for (auto i : h_positive) out.push_back(cb.neg(i));
  for (std::size_t i = 0; i < rs.rank; ++i) out.push_back(cb.cartan(i));
  return out;
}

std::vector<std::size_t> PairGH::q_elements(const ChevalleyBasis& cb) const {
  std::vector<std::size_t> out;
  for (auto i : q_positive) out.push_back(cb.pos(i));
  for (auto i : q_positive) out.push_back(cb.neg(i));
  return out;
}

PairGH validate_pair(const RootSystem& rs, const std::vector<Weight>& delta_h) {
  check_subsystem(rs, delta_h);
  PairGH p;
  p.rs = rs;
  p.delta_h = delta_h;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    bool inside = std::find(delta_h.begin(), delta_h.end(), rs.positive_roots[k]) != delta_h.end();
    (inside ? p.h_positive : p.q_positive).push_back(k);
  }
  p.form = killing_form_on_dual(rs);
  auto hpos = p.h_positive_roots();
  std::tie(p.rho, p.rho_h) = rho_vectors(rs, hpos);
  p.weyl = weyl_group(rs, hpos);
  return p;
}

PairGH build_pair(const RootSystem& rs, const std::vector<Weight>& delta_h_positive) {
  std::vector<Weight> full;
  for (const auto& a : delta_h_positive) {
    if (!rs.positive_index(a)) throw NotClosed("not a positive root: " + to_string(a));
    full.push_back(a);
  }
  for (const auto& a : delta_h_positive) full.push_back(-a);
  return validate_pair(rs, full);
}

bool is_symmetric_pair(const PairGH& pair, const ChevalleyBasis& cb) {
  auto q = pair.q_elements(cb);
  for (auto a : q)
    for (auto b : q) {
      Weight s = cb.weight(a) + cb.weight(b);
      if (s.is_zero() || !pair.rs.is_root(s)) continue;
      auto idx = pair.rs.positive_index(s);
      if (!idx) idx = pair.rs.positive_index(-s);
      if (!pair.in_h(*idx)) return false;
    }
  return true;
}

CasimirData casimir_elements(const PairGH& pair, const ChevalleyBasis& cb) {
  const std::size_t r = cb.rank();
  Matrix kt(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) kt(i, j) = cb.pairing(cb.cartan(i), cb.cartan(j));
  Matrix kinv = *inverse(kt);
  auto assemble = [&](const std::vector<std::size_t>& roots, CasimirElement& normal, CasimirElement& raw) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (sgn(kinv(i, j)) != 0) {
          normal.quadratic.push_back({kinv(i, j), cb.cartan(i), cb.cartan(j)});
          raw.quadratic.push_back({kinv(i, j), cb.cartan(i), cb.cartan(j)});
        }
    for (auto k : roots) {
      // dual of e_alpha is e_{-alpha} since kappa(e_alpha, e_{-alpha}) = 1
      normal.quadratic.push_back({Scalar(2), cb.neg(k), cb.pos(k)});
      for (const auto& [c, v] : cb.bracket(cb.pos(k), cb.neg(k))) normal.linear.push_back({v, c});
      raw.quadratic.push_back({Scalar(1), cb.neg(k), cb.pos(k)});
      raw.quadratic.push_back({Scalar(1), cb.pos(k), cb.neg(k)});
    }
  };
  CasimirData cd;
  std::vector<std::size_t> all(cb.num_positive());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  assemble(all, cd.omega_g, cd.omega_g_raw);
  assemble(pair.h_positive, cd.omega_h, cd.omega_h_raw);
  return cd;
}

}  // namespace cdirac
