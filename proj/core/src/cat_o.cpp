#include "cdirac/cat_o.hpp"

#include <algorithm>
#include <set>

#include "cdirac/errors.hpp"

namespace cdirac {

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::Verma: return "verma";
    case ModuleKind::SimpleQuotient: return "simple";
    case ModuleKind::FiniteDim: return "finite";
    case ModuleKind::Tensor: return "tensor";
    case ModuleKind::Sum: return "sum";
    case ModuleKind::Sub: return "sub";
    case ModuleKind::Quotient: return "quotient";
  }
  return "?";
}

bool CoverRule::covers(const Weight& mu) const {
  for (const auto& s : shifts) {
    Weight eta = top - (mu - s);
    bool outside = false;
    Scalar ht = 0;
    for (const auto& x : eta.c) {
      if (!is_integer(x) || x < 0) outside = true;
      ht += x;
    }
    if (!outside && ht > static_cast<long>(depth)) return false;
  }
  return true;
}

bool WeightModuleWindow::covers(const Weight& mu) const {
  if (finite) return true;
  return std::all_of(rules.begin(), rules.end(), [&](const CoverRule& r) { return r.covers(mu); });
}

std::size_t WeightModuleWindow::dim(const Weight& mu) const {
  if (!covers(mu)) throw OutsideWindow("weight " + to_string(mu) + " is outside the module window");
  auto it = dims.find(mu);
  return it == dims.end() ? 0 : it->second;
}

Matrix WeightModuleWindow::action(std::size_t gen, const Weight& mu) const {
  const Weight target = mu + g->weight(gen);
  std::size_t ds = dim(mu), dt = dim(target);
  if (g->is_cartan(gen)) {
    Matrix m(ds, ds);
    Scalar v = g->roots().coroot_pairing(mu, gen - 2 * g->num_positive());
    for (std::size_t i = 0; i < ds; ++i) m(i, i) = v;
    return m;
  }
  if (ds == 0 || dt == 0) return Matrix(dt, ds);
  auto it = actions[gen].find(mu);
  if (it == actions[gen].end()) return Matrix(dt, ds);
  return it->second;
}

std::vector<Weight> WeightModuleWindow::weights() const {
  std::vector<Weight> out;
  for (const auto& [w, d] : dims) out.push_back(w);
  return out;
}

std::size_t WeightModuleWindow::height_below_top(const Weight& mu) const {
  Scalar h = g->roots().height(top - mu);
  return h.get_num().get_ui();
}

long CharacterTable::operator[](const Weight& mu) const {
  auto it = entries.find(mu);
  return it == entries.end() ? 0 : it->second;
}

namespace {

using Vec = std::map<Monomial, Scalar>;

void axpy(Vec& out, const Scalar& c, const Vec& v) {
  for (const auto& [m, x] : v) {
    Scalar& slot = out[m];
    slot += c * x;
    if (sgn(slot) == 0) out.erase(m);
  }
}

// PBW straightening in U(g) acting on M(lambda) = U(n-) v.
class Straightener {
 public:
  Straightener(const ChevalleyBasis& cb, const Weight& lambda) : cb_(cb), lambda_(lambda), n_(cb.num_positive()) {}

  Vec act(std::size_t x, const Monomial& m) {
    auto key = std::make_pair(x, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Vec out;
    const auto& rs = cb_.roots();
    if (cb_.is_cartan(x)) {
      std::size_t i = x - 2 * n_;
      Scalar c = rs.coroot_pairing(lambda_, i);
      for (std::size_t k = 0; k < n_; ++k)
        if (m[k]) c -= static_cast<long>(m[k]) * rs.coroot_pairing(rs.positive_roots[k], i);
      if (sgn(c) != 0) out[m] = c;
    } else {
      std::size_t j = 0;
      while (j < n_ && m[j] == 0) ++j;
      std::size_t k = cb_.root_of(x);
      if (cb_.is_lowering(x) && k <= j) {
        Monomial up = m;
        ++up[k];
        out[up] = 1;
      } else if (j < n_) {
        Monomial rest = m;
        --rest[j];
        const std::size_t y = cb_.neg(j);
        // x y rest = y (x rest) + [x, y] rest
        Vec inner = act(x, rest);
        for (const auto& [mono, c] : inner) axpy(out, c, act(y, mono));
        for (const auto& [z, c] : cb_.bracket(x, y)) axpy(out, c, act(z, rest));
      }
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  const ChevalleyBasis& cb_;
  Weight lambda_;
  std::size_t n_;
  std::map<std::pair<std::size_t, Monomial>, Vec> memo_;
};

void enumerate_monomials(const RootSystem& rs, std::size_t k, long budget, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (k == rs.num_positive()) {
    out.push_back(cur);
    return;
  }
  long ht = rs.height(rs.positive_roots[k]).get_num().get_si();
  for (long e = 0; e * ht <= budget; ++e) {
    cur[k] = static_cast<unsigned>(e);
    enumerate_monomials(rs, k + 1, budget - e * ht, cur, out);
  }
  cur[k] = 0;
}

Weight monomial_weight(const RootSystem& rs, const Weight& top, const Monomial& m) {
  Weight w = top;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k]) w -= Scalar(static_cast<long>(m[k])) * rs.positive_roots[k];
  return w;
}

void place(Matrix& dst, const Matrix& src, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      if (sgn(src(i, j)) != 0) dst(r0 + i, c0 + j) += src(i, j);
}

}  // namespace

WeightModuleWindow verma_window(const PairGH& pair, std::shared_ptr<const ChevalleyBasis> cb, const Weight& lambda,
                                std::size_t depth) {
  (void)pair;
  const RootSystem& rs = cb->roots();
  WeightModuleWindow vw;
  vw.kind = ModuleKind::Verma;
  vw.g = cb;
  vw.top = lambda;
  vw.depth = depth;
  vw.rules = {CoverRule{lambda, depth, {rs.zero()}}};
  vw.infinitesimal_characters = {lambda};
  std::vector<Monomial> all;
  Monomial cur(rs.num_positive(), 0);
  enumerate_monomials(rs, 0, static_cast<long>(depth), cur, all);
  for (const auto& m : all) vw.monomials[monomial_weight(rs, lambda, m)].push_back(m);
  std::map<Weight, std::map<Monomial, std::size_t>> index;
  for (auto& [w, ms] : vw.monomials) {
    std::sort(ms.begin(), ms.end());
    vw.dims[w] = ms.size();
    for (std::size_t i = 0; i < ms.size(); ++i) index[w][ms[i]] = i;
  }
  Straightener st(*cb, lambda);
  vw.actions.resize(2 * cb->num_positive());
  for (std::size_t gen = 0; gen < 2 * cb->num_positive(); ++gen) {
    for (const auto& [mu, ms] : vw.monomials) {
      Weight tgt = mu + cb->weight(gen);
      if (!vw.covers(tgt) || !vw.dims.count(tgt)) continue;
      Matrix a(vw.dims.at(tgt), ms.size());
      const auto& tidx = index.at(tgt);
      for (std::size_t c = 0; c < ms.size(); ++c)
        for (const auto& [mono, v] : st.act(gen, ms[c])) a(tidx.at(mono), c) = v;
      vw.actions[gen][mu] = std::move(a);
    }
  }
  return vw;
}

ContravariantForm shapovalov_grams(const WeightModuleWindow& vw, const std::vector<std::size_t>& twisted) {
  const ChevalleyBasis& cb = *vw.g;
  const RootSystem& rs = cb.roots();
  ContravariantForm form;
  for (const auto& [mu, d] : vw.dims) {
    auto it = vw.monomials.find(mu);
    if (it == vw.monomials.end()) throw Error("contravariant form needs a highest-weight module");
    Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const Monomial& m = it->second[i];
      Matrix row = Matrix::identity(d);
      Weight cur = mu;
      Scalar coef = 1;
      for (std::size_t k = 0; k < m.size(); ++k)
        for (unsigned rep = 0; rep < m[k]; ++rep) {
          row = vw.action(cb.pos(k), cur) * row;
          cur += rs.positive_roots[k];
          coef *= cb.tau_coefficient(cb.neg(k));
          if (std::find(twisted.begin(), twisted.end(), k) != twisted.end()) coef = -coef;
        }
      if (!(cur == vw.top) || row.rows() != 1) throw Error("contravariant form chain did not reach the top");
      for (std::size_t j = 0; j < d; ++j) gram(i, j) = coef * row(0, j);
    }
    form.grams[mu] = std::move(gram);
  }
  return form;
}

WeightModuleWindow simple_quotient_window(const WeightModuleWindow& vw, const ContravariantForm& form,
                                          bool expect_finite) {
  WeightModuleWindow l;
  l.kind = ModuleKind::SimpleQuotient;
  l.g = vw.g;
  l.top = vw.top;
  l.depth = vw.depth;
  l.rules = vw.rules;
  l.infinitesimal_characters = vw.infinitesimal_characters;
  std::map<Weight, Matrix> proj, lift;
  for (const auto& [mu, d] : vw.dims) {
    const Matrix& gram = form.grams.at(mu);
    auto piv = pivot_columns(gram);
    if (piv.empty()) continue;
    proj[mu] = *solve(select_columns(gram, piv), gram);
    lift[mu] = select_columns(Matrix::identity(d), piv);
    l.dims[mu] = piv.size();
    auto mit = vw.monomials.find(mu);
    if (mit != vw.monomials.end()) {
      std::vector<Monomial> reps;
      for (auto p : piv) reps.push_back(mit->second[p]);
      l.monomials[mu] = std::move(reps);
    }
  }
  if (expect_finite) {
    for (const auto& [mu, d] : l.dims)
      if (l.height_below_top(mu) >= vw.depth)
        throw WindowTooShallow("simple quotient still nonzero at the window boundary " + to_string(mu));
    l.finite = true;
  }
  l.actions.resize(vw.actions.size());
  for (std::size_t gen = 0; gen < vw.actions.size(); ++gen)
    for (const auto& [mu, d] : l.dims) {
      Weight tgt = mu + vw.g->weight(gen);
      if (!vw.covers(tgt) || !l.dims.count(tgt)) continue;
      l.actions[gen][mu] = proj.at(tgt) * vw.action(gen, mu) * lift.at(mu);
    }
  return l;
}

Scalar weyl_dimension(const RootSystem& rs, const InvariantForm& form, const Weight& lambda) {
  auto [rho, unused] = rho_vectors(rs, {});
  Scalar d = 1;
  for (const auto& a : rs.positive_roots) d *= form(lambda + rho, a) / form(rho, a);
  return d;
}

WeightModuleWindow finite_dim_simple(const PairGH& pair, std::shared_ptr<const ChevalleyBasis> cb,
                                     const Weight& lambda) {
  const RootSystem& rs = cb->roots();
  if (!is_dominant_integral(lambda, rs)) throw Error("finite-dimensional simple needs dominant integral weight");
  Weight low = pair.weyl.apply(pair.weyl.longest(), lambda);
  std::size_t depth = rs.height(lambda - low).get_num().get_ui() + 1;
  WeightModuleWindow vw = verma_window(pair, cb, lambda, depth);
  WeightModuleWindow f = simple_quotient_window(vw, shapovalov_grams(vw), true);
  f.kind = ModuleKind::FiniteDim;
  std::size_t total = 0;
  for (const auto& [mu, d] : f.dims) total += d;
  if (Scalar(static_cast<unsigned long>(total)) != weyl_dimension(rs, pair.form, lambda))
    throw CheckFailure("weyl-dimension", "finite-dimensional simple " + to_string(lambda) + " has dimension " +
                                             std::to_string(total));
  return f;
}

WeightModuleWindow tensor_with_finite_dim(const WeightModuleWindow& m, const WeightModuleWindow& f) {
  if (!f.finite) throw Error("tensor factor must be finite-dimensional");
  const ChevalleyBasis& cb = *m.g;
  WeightModuleWindow t;
  t.kind = ModuleKind::Tensor;
  t.g = m.g;
  t.top = m.top + f.top;
  t.depth = m.depth;
  t.finite = m.finite;
  auto fweights = f.weights();
  for (const auto& r : m.rules) {
    CoverRule nr{r.top, r.depth, {}};
    for (const auto& s : r.shifts)
      for (const auto& nf : fweights) nr.shifts.push_back(s + nf);
    t.rules.push_back(std::move(nr));
  }
  for (const auto& lam : m.infinitesimal_characters)
    for (const auto& nf : fweights) {
      Weight c = lam + nf;
      if (std::find(t.infinitesimal_characters.begin(), t.infinitesimal_characters.end(), c) ==
          t.infinitesimal_characters.end())
        t.infinitesimal_characters.push_back(c);
    }
  struct Segment {
    Weight nf;
    std::size_t offset, dm, df;
  };
  auto segments = [&](const Weight& mu) {
    std::vector<Segment> segs;
    std::size_t off = 0;
    for (const auto& nf : fweights) {
      std::size_t dm = m.dim(mu - nf), df = f.dim(nf);
      if (dm == 0) continue;
      segs.push_back({nf, off, dm, df});
      off += dm * df;
    }
    return segs;
  };
  std::set<Weight> cand;
  for (const auto& [wm, dm] : m.dims)
    for (const auto& nf : fweights) cand.insert(wm + nf);
  std::map<Weight, std::vector<Segment>> segmap;
  for (const auto& mu : cand) {
    if (!t.covers(mu)) continue;
    auto segs = segments(mu);
    std::size_t d = 0;
    for (const auto& s : segs) d += s.dm * s.df;
    if (d == 0) continue;
    t.dims[mu] = d;
    segmap[mu] = std::move(segs);
  }
  t.actions.resize(2 * cb.num_positive());
  for (std::size_t gen = 0; gen < t.actions.size(); ++gen) {
    const Weight& wt = cb.weight(gen);
    for (const auto& [mu, segs] : segmap) {
      Weight tgt = mu + wt;
      if (!t.covers(tgt) || !t.dims.count(tgt)) continue;
      const auto& tsegs = segmap.at(tgt);
      auto find_seg = [&](const Weight& nf) -> const Segment* {
        for (const auto& s : tsegs)
          if (s.nf == nf) return &s;
        return nullptr;
      };
      Matrix a(t.dims.at(tgt), t.dims.at(mu));
      for (const auto& s : segs) {
        if (const Segment* ts = find_seg(s.nf)) {
          Matrix am = m.action(gen, mu - s.nf);
          place(a, kron(am, Matrix::identity(s.df)), ts->offset, s.offset);
        }
        if (const Segment* ts = find_seg(s.nf + wt)) {
          Matrix af = f.action(gen, s.nf);
          place(a, kron(Matrix::identity(s.dm), af), ts->offset, s.offset);
        }
      }
      t.actions[gen][mu] = std::move(a);
    }
  }
  return t;
}

WeightModuleWindow direct_sum(const WeightModuleWindow& a, const WeightModuleWindow& b) {
  WeightModuleWindow s;
  s.kind = ModuleKind::Sum;
  s.g = a.g;
  s.top = a.top;
  s.depth = std::max(a.depth, b.depth);
  s.finite = a.finite && b.finite;
  if (!a.finite) s.rules.insert(s.rules.end(), a.rules.begin(), a.rules.end());
  if (!b.finite) s.rules.insert(s.rules.end(), b.rules.begin(), b.rules.end());
  s.infinitesimal_characters = a.infinitesimal_characters;
  for (const auto& c : b.infinitesimal_characters)
    if (std::find(s.infinitesimal_characters.begin(), s.infinitesimal_characters.end(), c) ==
        s.infinitesimal_characters.end())
      s.infinitesimal_characters.push_back(c);
  std::set<Weight> ws;
  for (const auto& [w, d] : a.dims) ws.insert(w);
  for (const auto& [w, d] : b.dims) ws.insert(w);
  for (const auto& w : ws)
    if (s.covers(w)) s.dims[w] = a.dim(w) + b.dim(w);
  s.actions.resize(a.actions.size());
  for (std::size_t gen = 0; gen < s.actions.size(); ++gen)
    for (const auto& [mu, d] : s.dims) {
      Weight tgt = mu + a.g->weight(gen);
      if (!s.covers(tgt) || !s.dims.count(tgt)) continue;
      s.actions[gen][mu] = block_diag({a.action(gen, mu), b.action(gen, mu)});
    }
  return s;
}

Matrix singular_vectors(const WeightModuleWindow& vw, const Weight& mu) {
  const ChevalleyBasis& cb = *vw.g;
  const RootSystem& rs = cb.roots();
  std::size_t d = vw.dim(mu);
  Matrix stack(0, d);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    std::size_t gen = cb.pos(*rs.positive_index(rs.simple_roots[i]));
    stack = vstack(stack, vw.action(gen, mu));
  }
  return kernel(stack);
}

ShortExactSequence ses_from_embedding(const Matrix& sub_gen, const Weight& mu0, const WeightModuleWindow& vw) {
  const ChevalleyBasis& cb = *vw.g;
  const RootSystem& rs = cb.roots();
  Matrix sing = singular_vectors(vw, mu0);
  if (sing.cols() == 0 || !subspace_contains(sing, sub_gen))
    throw Error("submodule generator is not a singular vector");
  ShortExactSequence ses;
  ses.mid = vw;
  auto below = [&](const Weight& mu) {
    for (const auto& x : (mu0 - mu).c)
      if (!is_integer(x) || x < 0) return false;
    return true;
  };
  std::vector<Weight> order = vw.weights();
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    return vw.height_below_top(a) < vw.height_below_top(b);
  });
  std::map<Weight, Matrix> basis;
  for (const auto& mu : order) {
    std::size_t d = vw.dims.at(mu);
    Matrix span(d, 0);
    if (mu == mu0) {
      span = sub_gen;
    } else if (below(mu)) {
      for (std::size_t i = 0; i < rs.rank; ++i) {
        auto it = basis.find(mu + rs.simple_roots[i]);
        if (it == basis.end()) continue;
        std::size_t gen = cb.neg(*rs.positive_index(rs.simple_roots[i]));
        span = hstack(span, vw.action(gen, mu + rs.simple_roots[i]) * it->second);
      }
    }
    basis[mu] = column_basis(span);
  }
  WeightModuleWindow& sub = ses.sub;
  WeightModuleWindow& quot = ses.quot;
  sub.kind = ModuleKind::Sub;
  quot.kind = ModuleKind::Quotient;
  for (auto* w : {&sub, &quot}) {
    w->g = vw.g;
    w->depth = vw.depth;
    w->rules = vw.rules;
    w->finite = vw.finite;
    w->infinitesimal_characters = vw.infinitesimal_characters;
    w->actions.resize(vw.actions.size());
  }
  sub.top = mu0;
  quot.top = vw.top;
  std::map<Weight, Matrix> comp;
  for (const auto& mu : order) {
    const Matrix& b = basis.at(mu);
    std::size_t d = vw.dims.at(mu);
    auto piv = pivot_columns(hstack(b, Matrix::identity(d)));
    std::vector<std::size_t> extra;
    for (auto p : piv)
      if (p >= b.cols()) extra.push_back(p - b.cols());
    Matrix c = select_columns(Matrix::identity(d), extra);
    Matrix inv = *inverse(hstack(b, c));
    std::vector<std::size_t> qrows;
    for (std::size_t k = b.cols(); k < d; ++k) qrows.push_back(k);
    ses.inclusion[mu] = b;
    ses.projection[mu] = select_rows(inv, qrows);
    comp[mu] = c;
    if (b.cols()) sub.dims[mu] = b.cols();
    if (c.cols()) quot.dims[mu] = c.cols();
  }
  for (std::size_t gen = 0; gen < vw.actions.size(); ++gen)
    for (const auto& mu : order) {
      Weight tgt = mu + cb.weight(gen);
      if (!vw.covers(tgt) || !vw.dims.count(tgt)) continue;
      Matrix a = vw.action(gen, mu);
      if (sub.dims.count(mu)) {
        Matrix img = a * basis.at(mu);
        if (sub.dims.count(tgt)) {
          auto x = solve(basis.at(tgt), img);
          if (!x) throw CheckFailure("submodule-stability", "image leaves the submodule at " + to_string(mu));
          sub.actions[gen][mu] = *x;
        } else if (!img.is_zero()) {
          throw CheckFailure("submodule-stability", "image leaves the submodule at " + to_string(mu));
        }
      }
      if (quot.dims.count(mu) && quot.dims.count(tgt))
        quot.actions[gen][mu] = ses.projection.at(tgt) * a * comp.at(mu);
    }
  return ses;
}

ShortExactSequence split_ses(const WeightModuleWindow& a, const WeightModuleWindow& b) {
  ShortExactSequence ses;
  ses.sub = a;
  ses.quot = b;
  ses.mid = direct_sum(a, b);
  ses.split = true;
  for (const auto& [mu, d] : ses.mid.dims) {
    std::size_t da = a.dim(mu), db = b.dim(mu);
    Matrix inc(d, da), pr(db, d);
    for (std::size_t i = 0; i < da; ++i) inc(i, i) = 1;
    for (std::size_t i = 0; i < db; ++i) pr(i, da + i) = 1;
    ses.inclusion[mu] = inc;
    ses.projection[mu] = pr;
  }
  return ses;
}

CharacterTable character(const WeightModuleWindow& vw) {
  CharacterTable t;
  for (const auto& [w, d] : vw.dims) t.entries[w] = static_cast<long>(d);
  return t;
}

long partition_count(const std::vector<Weight>& roots, const Weight& eta) {
  std::map<std::pair<std::size_t, std::vector<Scalar>>, long> memo;
  std::function<long(std::size_t, const Weight&)> rec = [&](std::size_t k, const Weight& e) -> long {
    for (const auto& x : e.c)
      if (!is_integer(x) || x < 0) return 0;
    if (e.is_zero()) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(k, e.c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    Weight cur = e;
    while (true) {
      bool ok = true;
      for (const auto& x : cur.c)
        if (x < 0) ok = false;
      if (!ok) break;
      total += rec(k + 1, cur);
      cur -= roots[k];
    }
    memo[key] = total;
    return total;
  };
  return rec(0, eta);
}

CharacterTable verma_character_h(const PairGH& pair, const Weight& lambda, std::size_t depth) {
  const RootSystem& rs = pair.rs;
  auto hroots = pair.h_positive_roots();
  CharacterTable t;
  std::vector<long> cur(rs.rank, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long budget) {
    if (i == rs.rank) {
      Weight eta(rs.rank);
      for (std::size_t k = 0; k < rs.rank; ++k) eta[k] = cur[k];
      long c = partition_count(hroots, eta);
      if (c) t.entries[lambda - eta] = c;
      return;
    }
    for (long e = 0; e <= budget; ++e) {
      cur[i] = e;
      rec(i + 1, budget - e);
    }
    cur[i] = 0;
  };
  rec(0, static_cast<long>(depth));
  return t;
}

Matrix evaluate_casimir(const CasimirElement& c, const ChevalleyBasis& cb, const ActionFn& act, const Weight& mu,
                        std::size_t dim_mu) {
  Matrix out(dim_mu, dim_mu);
  for (const auto& t : c.quadratic) {
    Matrix r = act(t.right, mu);
    if (r.is_zero()) continue;
    out += t.coef * (act(t.left, mu + cb.weight(t.right)) * r);
  }
  for (const auto& l : c.linear) out += l.coef * act(l.gen, mu);
  return out;
}

std::optional<std::string> commutation_defect(const WeightModuleWindow& vw) {
  const ChevalleyBasis& cb = *vw.g;
  for (const auto& mu : vw.weights())
    for (std::size_t x = 0; x < cb.dim(); ++x)
      for (std::size_t y = 0; y < cb.dim(); ++y) {
        const Weight wx = cb.weight(x), wy = cb.weight(y);
        if (!vw.covers(mu + wx) || !vw.covers(mu + wy) || !vw.covers(mu + wx + wy)) continue;
        Matrix lhs = vw.action(x, mu + wy) * vw.action(y, mu) - vw.action(y, mu + wx) * vw.action(x, mu);
        Matrix rhs(lhs.rows(), lhs.cols());
        for (const auto& [z, c] : cb.bracket(x, y)) rhs += c * vw.action(z, mu);
        if (!(lhs == rhs))
          return "commutator of generators " + std::to_string(x) + ", " + std::to_string(y) + " fails at " +
                 to_string(mu);
      }
  return std::nullopt;
}

}  // namespace cdirac
