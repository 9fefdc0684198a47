#include <gtest/gtest.h>

#include "cdirac/errors.hpp"
#include "cdirac/spinor.hpp"

using namespace cdirac;

namespace {

struct Ctx {
  RootSystem rs;
  ChevalleyBasis cb;
  PairGH pair;
  SpinModule sm;
  explicit Ctx(const std::string& type, std::vector<Weight> h = {})
      : rs(build_root_system(type)), cb(rs), pair(build_pair(rs, h)), sm(build_spin_module(pair, cb)) {}
};

Matrix h_action_of(const SpinModule& sm, const std::vector<Scalar>& x) {
  Matrix m(sm.dim, sm.dim);
  for (const auto& [idx, a] : sm.h_action)
    if (sgn(x[idx]) != 0) m += x[idx] * a;
  return m;
}

std::vector<Scalar> unit(const ChevalleyBasis& cb, std::size_t a) {
  std::vector<Scalar> v(cb.dim());
  v[a] = 1;
  return v;
}

const std::vector<std::pair<std::string, std::vector<Weight>>> kPairs = {
    {"A1", {}},
    {"A2", {}},
    {"A2", {Weight{1, 0}}},
    {"B2", {}},
    {"B2", {Weight{0, 1}}},
    {"A1xA1", {Weight{1, 0}}},
    {"A3", {Weight{1, 0, 0}}},
    {"G2", {Weight{1, 0}}},
};

}  // namespace

TEST(Spinor, A2PairBasisAndTopWeight) {
  // Oracle: S = C{1, e31, e32, e31^e32}, top weight (1/2, 1/2, -1) in epsilon coordinates.
  Ctx s("A2", {Weight{1, 0}});
  ASSERT_EQ(s.sm.dim, 4u);
  EXPECT_EQ(s.sm.weights[0], from_epsilon(s.rs, {Scalar(1, 2), Scalar(1, 2), Scalar(-1)}));
  EXPECT_EQ(s.sm.weights[3], from_epsilon(s.rs, {Scalar(-1, 2), Scalar(-1, 2), Scalar(1)}));
  std::vector<int> parity{0, 1, 1, 0};
  EXPECT_EQ(s.sm.parity, parity);
  EXPECT_EQ(s.sm.even_dim(), 2u);
}

TEST(Spinor, WeightsFollowSubsetSums) {
  for (const auto& [type, h] : kPairs) {
    Ctx s(type, h);
    ASSERT_EQ(s.sm.dim, std::size_t{1} << s.pair.q_positive.size());
    EXPECT_EQ(s.sm.weights.back(), s.pair.rho_h - s.pair.rho) << type;
    for (std::size_t m = 0; m < s.sm.dim; ++m) {
      Weight w = s.pair.rho - s.pair.rho_h;
      for (std::size_t i = 0; i < s.sm.q_order.size(); ++i)
        if (m >> i & 1) w -= s.rs.positive_roots[s.sm.q_order[i]];
      EXPECT_EQ(s.sm.weights[m], w);
    }
    if (!s.pair.q_positive.empty()) EXPECT_EQ(2 * s.sm.even_dim(), s.sm.dim);
    // Cartan elements act through these weights.
    for (std::size_t i = 0; i < s.rs.rank; ++i) {
      const Matrix& a = s.sm.h_action.at(s.cb.cartan(i));
      for (std::size_t m = 0; m < s.sm.dim; ++m) {
        Scalar val = 0;
        for (std::size_t j = 0; j < s.rs.rank; ++j) val += s.rs.cartan[i][j] * s.sm.weights[m][j];
        for (std::size_t n = 0; n < s.sm.dim; ++n) EXPECT_EQ(a(n, m), n == m ? val : Scalar(0)) << type;
      }
    }
  }
}

TEST(Spinor, CliffordRelations) {
  for (const auto& [type, h] : kPairs) {
    Ctx s(type, h);
    for (const auto& [x, gx] : s.sm.gamma)
      for (const auto& [y, gy] : s.sm.gamma)
        EXPECT_EQ(gx * gy + gy * gx, s.cb.pairing(x, y) * Matrix::identity(s.sm.dim)) << type;
    for (const auto& [x, gx] : s.sm.gamma) {
      EXPECT_TRUE((gx * gx).is_zero());
      // gamma flips parity
      for (std::size_t m = 0; m < s.sm.dim; ++m)
        for (std::size_t n = 0; n < s.sm.dim; ++n)
          if (sgn(gx(n, m)) != 0) EXPECT_NE(s.sm.parity[n], s.sm.parity[m]);
    }
    for (auto k : s.pair.q_positive) EXPECT_TRUE(s.sm.gamma.at(s.cb.pos(k)).col(0) == std::vector<Scalar>(s.sm.dim));
  }
}

TEST(Spinor, HActionIsEquivariantAndFaithful) {
  for (const auto& [type, h] : kPairs) {
    Ctx s(type, h);
    auto hb = s.pair.h_elements(s.cb);
    for (auto x : hb) {
      const Matrix& ax = s.sm.h_action.at(x);
      for (const auto& [v, gv] : s.sm.gamma)
        EXPECT_EQ(ax * gv - gv * ax, s.sm.gamma_of(s.cb.dense(s.cb.bracket(x, v)))) << type;
      for (auto y : hb) {
        const Matrix& ay = s.sm.h_action.at(y);
        EXPECT_EQ(ax * ay - ay * ax, h_action_of(s.sm, s.cb.dense(s.cb.bracket(x, y)))) << type;
      }
    }
  }
}

TEST(Spinor, CubicTermProperties) {
  for (const auto& [type, h] : kPairs) {
    Ctx s(type, h);
    const Matrix& c = s.sm.cubic;
    for (const auto& [x, a] : s.sm.h_action) EXPECT_EQ(a * c, c * a) << type;
    for (std::size_t m = 0; m < s.sm.dim; ++m)
      for (std::size_t n = 0; n < s.sm.dim; ++n)
        if (sgn(c(n, m)) != 0) EXPECT_NE(s.sm.parity[n], s.sm.parity[m]);
    EXPECT_TRUE(c.col(0) == std::vector<Scalar>(s.sm.dim)) << type;
    EXPECT_EQ(c.is_zero(), is_symmetric_pair(s.pair, s.cb)) << type;
  }
}

TEST(Spinor, CubicTermVanishesForSymmetricPairs) {
  Ctx a1("A1");
  EXPECT_TRUE(a1.sm.cubic.is_zero());
  Ctx a2("A2", {Weight{1, 0}});
  EXPECT_TRUE(a2.sm.cubic.is_zero());
  Ctx a2t("A2");
  EXPECT_FALSE(a2t.sm.cubic.is_zero());
}

TEST(Spinor, CubicTermIsBasisIndependent) {
  for (const auto& [type, h] : kPairs) {
    Ctx s(type, h);
    const std::size_t n = 2 * s.pair.q_positive.size();
    // Permuted and rescaled basis.
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p((i + 1) % n, i) = Scalar(static_cast<long>(i) + 2, 3);
    EXPECT_EQ(cubic_term(s.pair, s.cb, s.sm, &p), s.sm.cubic) << type;
    // A dense unipotent change of basis.
    Matrix u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) u(i, j) = Scalar(static_cast<long>(i + 2 * j) % 5 - 2);
    EXPECT_EQ(cubic_term(s.pair, s.cb, s.sm, &u), s.sm.cubic) << type;
  }
}

TEST(Spinor, PermutedEnumerationGivesConjugateData) {
  Ctx s("A2");
  std::vector<std::size_t> order(s.pair.q_positive.rbegin(), s.pair.q_positive.rend());
  SpinModule alt = build_spin_module(s.pair, s.cb, order);
  EXPECT_EQ(rank(alt.cubic), rank(s.sm.cubic));
  EXPECT_EQ(charpoly(alt.cubic), charpoly(s.sm.cubic));
  std::vector<std::size_t> bad{s.pair.q_positive[0]};
  EXPECT_THROW(build_spin_module(s.pair, s.cb, bad), Error);
}
