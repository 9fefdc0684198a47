#include "cdirac/circle.hpp"

#include "cdirac/errors.hpp"
#include "detail.hpp"

namespace cdirac {

using namespace detail;

namespace {

struct Chain {
  std::vector<std::vector<Scalar>> v;  // v[0] is the top
  int parity = 0;
};

Chain make_chain(const Matrix& d, std::vector<Scalar> top, std::size_t len, int parity) {
  Chain c{{std::move(top)}, parity};
  while (c.v.size() < len) c.v.push_back(mat_vec(d, c.v.back()));
  return c;
}

bool is_jordan_basis(const Matrix& d, const std::vector<Chain>& chains, std::size_t gen0_dim) {
  std::vector<std::vector<Scalar>> all;
  for (const auto& c : chains) {
    for (std::size_t j = 0; j < c.v.size(); ++j) {
      auto next = mat_vec(d, c.v[j]);
      if (j + 1 < c.v.size() ? next != c.v[j + 1] : next != std::vector<Scalar>(d.rows())) return false;
      all.push_back(c.v[j]);
    }
  }
  return all.size() == gen0_dim && rank(columns_of(all, d.rows())) == gen0_dim;
}

// Node positions of the odd chains, grouped by top parity.
std::vector<long> node_positions(const std::vector<Chain>& chains, std::array<std::size_t, 2>& counts) {
  std::vector<long> pos(chains.size(), -1);
  for (std::size_t j = 0; j < chains.size(); ++j)
    if (chains[j].v.size() % 2 == 1) pos[j] = static_cast<long>(counts[chains[j].parity]++);
  return pos;
}

}  // namespace

CircleResult exact_circle_linear(const Matrix& d1, const Matrix& d2, const Matrix& d3, const Matrix& i, const Matrix& p,
                                 const std::vector<int>& par1, const std::vector<int>& par2,
                                 const std::vector<int>& par3) {
  CircleResult r;
  const std::size_t n1 = d1.rows(), n2 = d2.rows(), n3 = d3.rows();
  r.intertwines = i * d1 == d2 * i && p * d2 == d3 * p;
  r.short_exact = rank(i) == n1 && rank(p) == n3 && (p * i).is_zero() && n1 + n3 == n2;
  if (!r.intertwines || !r.short_exact) {
    r.failure = r.intertwines ? "sequence is not short exact" : "maps do not commute with the Dirac operators";
    return r;
  }
  auto ks1 = kernel_filtration(d1), ks2 = kernel_filtration(d2);
  const std::size_t s1 = ks1.size() - 1, s2 = ks2.size() - 1;
  const Matrix top1 = power(d1, s1), top2 = power(d2, s2);
  std::array<Matrix, 2> v1{homogeneous_kernel(top1, par1, 0), homogeneous_kernel(top1, par1, 1)};
  std::array<Matrix, 2> v2{homogeneous_kernel(top2, par2, 0), homogeneous_kernel(top2, par2, 1)};
  JordanData jd3 = jordan_blocks(d3, par3);
  const Matrix im2 = column_basis(d2);

  std::vector<Chain> c1, c2, c3;
  struct Link {
    long j1, j2, j3;
  };
  std::vector<Link> links;
  for (const auto& t : jd3.chains) {
    const std::size_t m = t.size();
    const int par = t.top_parity;
    auto x = solve(p * v2[par], Matrix::column(t.vectors[0]));
    if (!x) throw LiftFailure("Jordan top of M3 has no preimage in the generalized kernel of M2");
    const Matrix s0 = v2[par] * *x;
    const Matrix base = i * v1[par];
    // Shortest homogeneous lift: correct s0 by i(V1) until D2^l kills it.
    Matrix lift;
    std::size_t l = m;
    for (;; ++l) {
      if (l > s2) throw CheckFailure("exact circle", "no lift is killed by a power of D2");
      Matrix dl = power(d2, l);
      auto y = solve(dl * base, dl * s0);
      if (y) {
        lift = s0 - base * *y;
        break;
      }
    }
    if (subspace_contains(im2, lift)) throw LiftFailure("lifted Jordan top lies in the image of D2");
    Chain ch2 = make_chain(d2, lift.col(0), l, par);
    Link link{-1, static_cast<long>(c2.size()), static_cast<long>(c3.size())};
    c3.push_back(Chain{t.vectors, par});
    if (l > m) {
      Chain ch1;
      ch1.parity = (par + static_cast<int>(m)) % 2;
      for (std::size_t q = m; q < l; ++q) {
        auto pre = solve(i, Matrix::column(ch2.v[q]));
        if (!pre) throw CheckFailure("exact circle", "chain tail is not in the image of M1");
        ch1.v.push_back(pre->col(0));
      }
      link.j1 = static_cast<long>(c1.size());
      c1.push_back(std::move(ch1));
    }
    c2.push_back(std::move(ch2));
    links.push_back(link);
    r.blocks.push_back({l - m, l, m, par});
  }

  // Blocks of M1 that are not reached from M3: a Jordan complement of the tails.
  std::vector<std::vector<Scalar>> tails;
  for (const auto& c : c1) tails.insert(tails.end(), c.v.begin(), c.v.end());
  const Matrix tail_span = columns_of(tails, n1);
  std::vector<Chain> rest;
  for (std::size_t k = s1; k >= 1; --k) {
    Matrix base = hstack(ks1[k - 1], subspace_intersection(tail_span, ks1[k]));
    for (const auto& c : rest) base = append_column(base, c.v[c.v.size() - k]);
    std::size_t rk = rank(base);
    const Matrix dk = power(d1, k);
    for (int par : {0, 1}) {
      Matrix cand = homogeneous_kernel(dk, par1, par);
      for (std::size_t j = 0; j < cand.cols(); ++j) {
        Matrix trial = append_column(base, cand.col(j));
        std::size_t tr = rank(trial);
        if (tr == rk) continue;
        base = std::move(trial);
        rk = tr;
        rest.push_back(make_chain(d1, cand.col(j), k, par));
      }
    }
  }
  for (const auto& c : rest) {
    Chain up{{}, c.parity};
    for (const auto& v : c.v) up.v.push_back(mat_vec(i, v));
    links.push_back({static_cast<long>(c1.size()), static_cast<long>(c2.size()), -1});
    r.blocks.push_back({c.v.size(), c.v.size(), 0, c.parity});
    c1.push_back(c);
    c2.push_back(std::move(up));
  }

  r.jordan_bases = is_jordan_basis(d1, c1, ks1.back().cols()) && is_jordan_basis(d2, c2, ks2.back().cols()) &&
                   is_jordan_basis(d3, c3, jd3.gen0_dim);
  if (!r.jordan_bases) {
    r.failure = "no compatible Jordan decomposition extends the lifted chains";
    return r;
  }

  std::array<std::size_t, 2> cnt1{}, cnt2{}, cnt3{};
  auto pos1 = node_positions(c1, cnt1), pos2 = node_positions(c2, cnt2), pos3 = node_positions(c3, cnt3);
  r.node_dims = {cnt1[0], cnt2[0], cnt3[0], cnt1[1], cnt2[1], cnt3[1]};
  // The odd tops must account for all of H_top.
  auto sum = [](const std::vector<std::size_t>& v) {
    std::size_t t = 0;
    for (auto x : v) t += x;
    return t;
  };
  std::array<std::pair<const Matrix*, const std::vector<int>*>, 3> ops{{{&d1, &par1}, {&d2, &par2}, {&d3, &par3}}};
  for (std::size_t a = 0; a < 3; ++a) {
    auto h = higher_direct(*ops[a].first, *ops[a].second);
    if (sum(h.first) != r.node_dims[a] || sum(h.second) != r.node_dims[a + 3]) {
      r.failure = "odd Jordan tops do not match higher cohomology of M" + std::to_string(a + 1);
      return r;
    }
  }
  for (std::size_t n = 0; n < 6; ++n) r.maps[n] = Matrix(r.node_dims[(n + 1) % 6], r.node_dims[n]);
  for (std::size_t b = 0; b < r.blocks.size(); ++b) {
    const auto& blk = r.blocks[b];
    const auto& lk = links[b];
    const std::size_t off = blk.parity == 0 ? 0 : 3;
    const bool k_odd = blk.k % 2, l_odd = blk.l % 2, m_odd = blk.m % 2;
    if (!k_odd && l_odd && m_odd) r.maps[off + 1](pos3[lk.j3], pos2[lk.j2]) = 1;
    if (k_odd && l_odd && !m_odd) r.maps[off](pos2[lk.j2], pos1[lk.j1]) = 1;
    if (k_odd && !l_odd && m_odd) r.maps[off + 2](pos1[lk.j1], pos3[lk.j3]) = 1;
  }
  r.exact = true;
  for (std::size_t n = 0; n < 6; ++n) {
    const Matrix& in = r.maps[(n + 5) % 6];
    const Matrix& out = r.maps[n];
    r.exact_at[n] = (out * in).is_zero() && rank(in) + rank(out) == r.node_dims[n];
    r.exact = r.exact && r.exact_at[n];
  }
  if (!r.exact) r.failure = "image and kernel differ at some node";
  return r;
}

CircleResult exact_circle(const DiracSetup& s, const ShortExactSequence& ses, const Weight& mu) {
  DiracBlock b1 = assemble_block(s, ses.sub, mu), b2 = assemble_block(s, ses.mid, mu), b3 = assemble_block(s, ses.quot, mu);
  Matrix i = block_map(s, ses.inclusion, ses.sub, ses.mid, mu);
  Matrix p = block_map(s, ses.projection, ses.mid, ses.quot, mu);
  CircleResult r = exact_circle_linear(b1.d, b2.d, b3.d, i, p, b1.layout.parity, b2.layout.parity, b3.layout.parity);
  r.mu = mu;
  return r;
}

}  // namespace cdirac
