#include "cdirac/spinor.hpp"

#include <bit>

#include "cdirac/errors.hpp"

namespace cdirac {

Matrix SpinModule::gamma_of(const std::vector<Scalar>& x) const {
  Matrix m(dim, dim);
  for (const auto& [idx, g] : gamma)
    if (sgn(x[idx]) != 0) m += x[idx] * g;
  return m;
}

std::size_t SpinModule::mask_bit(std::size_t positive_index) const {
  for (std::size_t i = 0; i < q_order.size(); ++i)
    if (q_order[i] == positive_index) return i;
  throw Error("root is not in Delta_q+");
}

std::vector<std::size_t> SpinModule::masks_with_weight(const Weight& w) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < dim; ++m)
    if (weights[m] == w) out.push_back(m);
  return out;
}

std::size_t SpinModule::even_dim() const {
  std::size_t n = 0;
  for (int p : parity) n += p == 0;
  return n;
}

namespace {

// Standard q coordinates: e_{beta_1..l} then e_{-beta_1..l}.
std::vector<std::size_t> q_basis(const ChevalleyBasis& cb, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> out;
  for (auto k : order) out.push_back(cb.pos(k));
  for (auto k : order) out.push_back(cb.neg(k));
  return out;
}

}  // namespace

SpinModule build_spin_module(const PairGH& pair, const ChevalleyBasis& cb, std::vector<std::size_t> q_order) {
  if (q_order.empty()) q_order = pair.q_positive;
  if (q_order.size() != pair.q_positive.size()) throw Error("spin ordering must list every root of Delta_q+");
  SpinModule sm;
  sm.q_order = q_order;
  const std::size_t l = q_order.size();
  sm.dim = std::size_t{1} << l;
  const RootSystem& rs = cb.roots();
  for (std::size_t m = 0; m < sm.dim; ++m) {
    Weight w = pair.rho - pair.rho_h;
    for (std::size_t i = 0; i < l; ++i)
      if (m >> i & 1) w -= rs.positive_roots[q_order[i]];
    sm.weights.push_back(w);
    sm.parity.push_back(std::popcount(m) % 2);
  }
  for (std::size_t i = 0; i < l; ++i) {
    Matrix wedge(sm.dim, sm.dim), contract(sm.dim, sm.dim);
    for (std::size_t m = 0; m < sm.dim; ++m) {
      int before = std::popcount(m & ((std::size_t{1} << i) - 1));
      Scalar sign = before % 2 ? -1 : 1;
      if (m >> i & 1)
        contract(m & ~(std::size_t{1} << i), m) = sign;
      else
        wedge(m | (std::size_t{1} << i), m) = sign;
    }
    sm.gamma[cb.neg(q_order[i])] = std::move(wedge);
    sm.gamma[cb.pos(q_order[i])] = std::move(contract);
  }
  // phi(ad x) = 1/4 sum_{Z in q} [gamma([x, Z]), gamma(Z^dual)]
  auto qb = q_basis(cb, q_order);
  for (auto x : pair.h_elements(cb)) {
    Matrix act(sm.dim, sm.dim);
    for (auto z : qb) {
      std::size_t zd = cb.is_raising(z) ? cb.neg(cb.root_of(z)) : cb.pos(cb.root_of(z));
      Matrix gx = sm.gamma_of(cb.dense(cb.bracket(x, z)));
      const Matrix& gz = sm.gamma.at(zd);
      act += gx * gz - gz * gx;
    }
    sm.h_action[x] = Scalar(1, 4) * act;
  }
  sm.cubic = cubic_term(pair, cb, sm);
  return sm;
}

Matrix cubic_term(const PairGH& pair, const ChevalleyBasis& cb, const SpinModule& sm, const Matrix* basis) {
  (void)pair;
  auto qb = q_basis(cb, sm.q_order);
  const std::size_t n = qb.size();
  Matrix p = basis ? *basis : Matrix::identity(n);
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = cb.pairing(qb[i], qb[j]);
  auto dual = inverse(p.transpose() * gram);
  if (!dual) throw Error("basis of q is singular");
  Matrix pd = *dual;  // columns: dual basis vectors, standard q coordinates
  auto lift = [&](const Matrix& m, std::size_t col) {
    std::vector<Scalar> v(cb.dim());
    for (std::size_t i = 0; i < n; ++i) v[qb[i]] = m(i, col);
    return v;
  };
  std::vector<std::vector<Scalar>> z(n), zd(n);
  std::vector<Matrix> gd(n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = lift(p, i);
    zd[i] = lift(pd, i);
    gd[i] = sm.gamma_of(zd[i]);
  }
  auto bracket = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out(cb.dim());
    for (std::size_t x = 0; x < cb.dim(); ++x) {
      if (sgn(a[x]) == 0) continue;
      for (std::size_t y = 0; y < cb.dim(); ++y) {
        if (sgn(b[y]) == 0) continue;
        for (const auto& [c, v] : cb.bracket(x, y)) out[c] += a[x] * b[y] * v;
      }
    }
    return out;
  };
  auto pairing = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar s = 0;
    for (std::size_t x = 0; x < cb.dim(); ++x) {
      if (sgn(a[x]) == 0) continue;
      for (std::size_t y = 0; y < cb.dim(); ++y)
        if (sgn(b[y]) != 0) s += a[x] * cb.pairing(x, y) * b[y];
    }
    return s;
  };
  Matrix c(sm.dim, sm.dim);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      auto jk = bracket(z[j], z[k]);
      Matrix gjk = gd[j] * gd[k];
      for (std::size_t i = 0; i < n; ++i) {
        Scalar coef = pairing(z[i], jk);
        if (sgn(coef) != 0) c += coef * (gd[i] * gjk);
      }
    }
  return Scalar(1, 6) * c;
}

}  // namespace cdirac
