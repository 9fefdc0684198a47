#include "cdirac/roots.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cdirac/errors.hpp"

namespace cdirac {

namespace {

std::vector<std::vector<long>> cartan_for(std::string_view type) {
  if (type == "A1") return {{2}};
  if (type == "A2") return {{2, -1}, {-1, 2}};
  if (type == "A3") return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  if (type == "A1xA1") return {{2, 0}, {0, 2}};
  // alpha_1 long, alpha_2 short
  if (type == "B2") return {{2, -1}, {-2, 2}};
  // alpha_1 short, alpha_2 long
  if (type == "G2") return {{2, -3}, {-1, 2}};
  throw UnsupportedType("unsupported Cartan type '" + std::string(type) + "'");
}

bool root_order(const Weight& a, const Weight& b) {
  Scalar ha = 0, hb = 0;
  for (const auto& x : a.c) ha += x;
  for (const auto& x : b.c) hb += x;
  if (ha != hb) return ha < hb;
  return b.c < a.c;
}

std::vector<long> integer_key(const Matrix& m) {
  std::vector<long> key;
  key.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) key.push_back(m(i, j).get_num().get_si());
  return key;
}

Matrix weight_column(const Weight& w) { return Matrix::column(w.c); }

}  // namespace

Scalar RootSystem::coroot_pairing(const Weight& mu, std::size_t i) const {
  Scalar s = 0;
  for (std::size_t j = 0; j < rank; ++j) s += cartan[i][j] * mu[j];
  return s;
}

Scalar RootSystem::height(const Weight& mu) const {
  Scalar s = 0;
  for (const auto& x : mu.c) s += x;
  return s;
}

std::optional<std::size_t> RootSystem::positive_index(const Weight& w) const {
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == w) return i;
  return std::nullopt;
}

bool RootSystem::is_root(const Weight& w) const {
  return positive_index(w).has_value() || positive_index(-w).has_value();
}

RootSystem build_root_system(std::string_view cartan_type) {
  RootSystem rs;
  rs.cartan_type = std::string(cartan_type);
  rs.cartan = cartan_for(cartan_type);
  rs.rank = rs.cartan.size();
  for (std::size_t i = 0; i < rs.rank; ++i) {
    Weight a(rs.rank);
    a[i] = 1;
    rs.simple_roots.push_back(a);
  }
  // Root strings: beta + alpha_i is a root iff q - <beta, alpha_i^vee> > 0,
  // q the length of the string below beta.
  std::set<std::vector<Scalar>> known;
  std::vector<Weight> layer = rs.simple_roots;
  for (const auto& a : layer) known.insert(a.c);
  std::vector<Weight> all = layer;
  while (!layer.empty()) {
    std::vector<Weight> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < rs.rank; ++i) {
        if (beta == rs.simple_roots[i]) continue;
        long q = 0;
        Weight down = beta;
        while (true) {
          down -= rs.simple_roots[i];
          if (!known.count(down.c)) break;
          ++q;
        }
        Scalar p = Scalar(q) - rs.coroot_pairing(beta, i);
        if (p > 0) {
          Weight up = beta + rs.simple_roots[i];
          if (known.insert(up.c).second) {
            next.push_back(up);
            all.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), root_order);
  rs.positive_roots = all;
  rs.all_roots = all;
  for (const auto& a : all) rs.all_roots.push_back(-a);
  return rs;
}

Scalar InvariantForm::operator()(const Weight& a, const Weight& b) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(a[i]) != 0 && sgn(b[j]) != 0) s += a[i] * gram(i, j) * b[j];
  return s;
}

InvariantForm killing_form_on_dual(const RootSystem& rs) {
  const std::size_t n = rs.rank;
  InvariantForm f;
  f.killing_on_t = Matrix(n, n);
  for (const auto& a : rs.all_roots)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f.killing_on_t(i, j) += rs.coroot_pairing(a, i) * rs.coroot_pairing(a, j);
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = rs.cartan[i][j];
  auto kinv = inverse(f.killing_on_t);
  if (!kinv) throw Error("Killing form on t is degenerate");
  f.gram = c.transpose() * (*kinv) * c;
  return f;
}

void check_subsystem(const RootSystem& rs, const std::vector<Weight>& delta_h) {
  std::set<std::vector<Scalar>> in;
  for (const auto& a : delta_h) {
    if (!rs.is_root(a)) throw NotClosed("not a root: " + to_string(a));
    in.insert(a.c);
  }
  for (const auto& a : delta_h)
    if (!in.count((-a).c)) throw NotNegationClosed("missing the negative of " + to_string(a));
  for (const auto& a : delta_h)
    for (const auto& b : delta_h) {
      Weight s = a + b;
      if (!s.is_zero() && rs.is_root(s) && !in.count(s.c))
        throw NotClosed(to_string(a) + " + " + to_string(b) + " is a root outside the subsystem");
    }
}

std::pair<Weight, Weight> rho_vectors(const RootSystem& rs, const std::vector<Weight>& delta_h) {
  std::vector<Weight> full;
  for (const auto& a : delta_h) {
    if (!rs.positive_index(a)) throw NotClosed("not a positive root: " + to_string(a));
    full.push_back(a);
    full.push_back(-a);
  }
  check_subsystem(rs, full);
  Weight rho = rs.zero(), rho_h = rs.zero();
  for (const auto& a : rs.positive_roots) rho += a;
  for (const auto& a : delta_h) rho_h += a;
  return {Scalar(1, 2) * rho, Scalar(1, 2) * rho_h};
}

Weight WeylData::apply(std::size_t w, const Weight& mu) const {
  Matrix r = elements[w] * weight_column(mu);
  return Weight(r.col(0));
}

std::size_t WeylData::longest() const {
  return static_cast<std::size_t>(std::max_element(length.begin(), length.end()) - length.begin());
}

WeylData weyl_group(const RootSystem& rs, const std::vector<Weight>& delta_h_positive) {
  const std::size_t n = rs.rank;
  std::vector<Matrix> simple;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix s = Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= rs.cartan[i][j];
    simple.push_back(s);
  }
  WeylData wd;
  std::map<std::vector<long>, std::size_t> index;
  wd.elements.push_back(Matrix::identity(n));
  wd.length.push_back(0);
  index[integer_key(wd.elements[0])] = 0;
  for (std::size_t k = 0; k < wd.elements.size(); ++k) {
    for (const auto& s : simple) {
      Matrix w = s * wd.elements[k];
      auto key = integer_key(w);
      if (index.count(key)) continue;
      index[key] = wd.elements.size();
      wd.elements.push_back(w);
      wd.length.push_back(wd.length[k] + 1);
    }
  }
  // W_h: closure of the reflections in delta_h.
  InvariantForm form = killing_form_on_dual(rs);
  std::vector<Matrix> refl;
  for (const auto& b : delta_h_positive) {
    Matrix r = Matrix::identity(n);
    Scalar bb = form(b, b);
    for (std::size_t k = 0; k < n; ++k) {
      Weight ek(n);
      ek[k] = 1;
      Scalar coef = 2 * form(ek, b) / bb;
      for (std::size_t i = 0; i < n; ++i) r(i, k) -= coef * b[i];
    }
    refl.push_back(r);
  }
  std::set<std::size_t> sub = {0};
  std::deque<std::size_t> queue = {0};
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& r : refl) {
      std::size_t w = index.at(integer_key(r * wd.elements[k]));
      if (sub.insert(w).second) queue.push_back(w);
    }
  }
  wd.subgroup_h.assign(sub.begin(), sub.end());
  for (std::size_t k = 0; k < wd.elements.size(); ++k) {
    Matrix winv = *inverse(wd.elements[k]);
    bool ok = true;
    for (const auto& b : delta_h_positive) {
      Weight img((winv * weight_column(b)).col(0));
      if (!rs.positive_index(img)) {
        ok = false;
        break;
      }
    }
    if (ok) wd.coset_w1.push_back(k);
  }
  return wd;
}

bool is_antidominant(const Weight& lambda, const RootSystem& rs, const InvariantForm& form) {
  auto [rho, unused] = rho_vectors(rs, {});
  Weight shifted = lambda + rho;
  for (const auto& a : rs.positive_roots) {
    Scalar v = 2 * form(shifted, a) / form(a, a);
    if (is_integer(v) && v > 0) return false;
  }
  return true;
}

bool is_dominant_integral(const Weight& lambda, const RootSystem& rs) {
  for (std::size_t i = 0; i < rs.rank; ++i) {
    Scalar v = rs.coroot_pairing(lambda, i);
    if (!is_integer(v) || v < 0) return false;
  }
  return true;
}

bool same_infinitesimal_character(const Weight& lambda, const Weight& mu, const Weight& shift_l,
                                  const Weight& shift_r, const WeylData& weyl,
                                  const std::vector<std::size_t>* subset) {
  Weight a = lambda + shift_l, b = mu + shift_r;
  auto test = [&](std::size_t w) { return weyl.apply(w, a) == b; };
  if (subset) return std::any_of(subset->begin(), subset->end(), test);
  for (std::size_t w = 0; w < weyl.elements.size(); ++w)
    if (test(w)) return true;
  return false;
}

Weight to_fundamental(const RootSystem& rs, const Weight& mu) {
  Weight l(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) l[i] = rs.coroot_pairing(mu, i);
  return l;
}

Weight from_fundamental(const RootSystem& rs, const Weight& labels) {
  Matrix c(rs.rank, rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j) c(i, j) = rs.cartan[i][j];
  auto x = solve(c, Matrix::column(labels.c));
  return Weight(x->col(0));
}

bool has_epsilon_coordinates(const RootSystem& rs) {
  return rs.cartan_type == "A1" || rs.cartan_type == "A2" || rs.cartan_type == "A3";
}

std::vector<Scalar> to_epsilon(const RootSystem& rs, const Weight& mu) {
  if (!has_epsilon_coordinates(rs)) throw UnsupportedType("epsilon coordinates need type A");
  std::vector<Scalar> e(rs.rank + 1);
  for (std::size_t k = 0; k <= rs.rank; ++k) {
    Scalar cur = k < rs.rank ? mu[k] : Scalar(0);
    Scalar prev = k > 0 ? mu[k - 1] : Scalar(0);
    e[k] = cur - prev;
  }
  return e;
}

Weight from_epsilon(const RootSystem& rs, const std::vector<Scalar>& eps) {
  if (!has_epsilon_coordinates(rs) || eps.size() != rs.rank + 1)
    throw UnsupportedType("epsilon coordinates need type A and rank+1 entries");
  Scalar mean = 0;
  for (const auto& x : eps) mean += x;
  mean /= static_cast<long>(eps.size());
  Weight mu(rs.rank);
  Scalar acc = 0;
  for (std::size_t k = 0; k < rs.rank; ++k) {
    acc += eps[k] - mean;
    mu[k] = acc;
  }
  return mu;
}

}  // namespace cdirac
