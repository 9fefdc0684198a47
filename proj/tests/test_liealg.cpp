#include <gtest/gtest.h>

#include "cdirac/errors.hpp"
#include "cdirac/liealg.hpp"

using namespace cdirac;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A1xA1", "B2", "G2", "A3"};

std::vector<Scalar> bracket_dense(const ChevalleyBasis& cb, const std::vector<Scalar>& x,
                                  const std::vector<Scalar>& y) {
  std::vector<Scalar> out(cb.dim());
  for (std::size_t a = 0; a < cb.dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < cb.dim(); ++b) {
      if (sgn(y[b]) == 0) continue;
      for (const auto& [c, v] : cb.bracket(a, b)) out[c] += x[a] * y[b] * v;
    }
  }
  return out;
}

std::vector<Scalar> unit(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n);
  v[i] = 1;
  return v;
}

}  // namespace

TEST(GeneratorModule, WeylDimensions) {
  // Oracle: Weyl dimension formula values.
  RootSystem a2 = build_root_system("A2");
  EXPECT_EQ(build_from_generators(a2, from_fundamental(a2, Weight{1, 0}), 20).total_dim, 3u);
  EXPECT_EQ(build_from_generators(a2, from_fundamental(a2, Weight{1, 1}), 20).total_dim, 8u);
  EXPECT_EQ(build_from_generators(a2, from_fundamental(a2, Weight{2, 1}), 20).total_dim, 15u);
  RootSystem g2 = build_root_system("G2");
  EXPECT_EQ(build_from_generators(g2, from_fundamental(g2, Weight{1, 0}), 20).total_dim, 7u);
  RootSystem b2 = build_root_system("B2");
  EXPECT_EQ(build_from_generators(b2, from_fundamental(b2, Weight{0, 1}), 20).total_dim, 4u);
  EXPECT_EQ(build_from_generators(b2, from_fundamental(b2, Weight{1, 0}), 20).total_dim, 5u);
}

TEST(Chevalley, IntegralStructureConstants) {
  for (const auto& type : kTypes) {
    ChevalleyBasis cb(build_root_system(type));
    for (std::size_t a = 0; a < cb.dim(); ++a)
      for (std::size_t b = 0; b < cb.dim(); ++b)
        for (const auto& [c, v] : cb.chevalley_bracket(a, b)) EXPECT_TRUE(is_integer(v)) << type;
  }
}

TEST(Chevalley, A1Triple) {
  ChevalleyBasis cb(build_root_system("A1"));
  // Oracle: kappa(e, f) = 4 for sl2, so e_{-alpha} = f / 4.
  EXPECT_EQ(cb.chevalley_kappa(0), 4);
  auto h = cb.coroot_image(0);
  EXPECT_EQ(h[0], Scalar(1, 4));
  EXPECT_EQ(cb.pairing(cb.pos(0), cb.neg(0)), 1);
}

TEST(Chevalley, A2MatrixUnits) {
  RootSystem rs = build_root_system("A2");
  ChevalleyBasis cb(rs);
  const auto& br = cb.bracket(cb.pos(0), cb.pos(1));
  ASSERT_EQ(br.size(), 1u);
  EXPECT_EQ(br[0].first, cb.pos(2));
  EXPECT_NE(br[0].second, 0);
}

TEST(Chevalley, AntisymmetryJacobiInvariance) {
  for (const auto& type : kTypes) {
    ChevalleyBasis cb(build_root_system(type));
    const std::size_t n = cb.dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto ab = cb.dense(cb.bracket(a, b));
        auto ba = cb.dense(cb.bracket(b, a));
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(ab[i], -ba[i]) << type;
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          auto ea = unit(n, a), eb = unit(n, b), ec = unit(n, c);
          auto t1 = bracket_dense(cb, ea, bracket_dense(cb, eb, ec));
          auto t2 = bracket_dense(cb, eb, bracket_dense(cb, ec, ea));
          auto t3 = bracket_dense(cb, ec, bracket_dense(cb, ea, eb));
          for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(t1[i] + t2[i] + t3[i], 0) << type;
          // kappa([a,b],c) + kappa(b,[a,c]) = 0
          Scalar inv = 0;
          auto abv = cb.dense(cb.bracket(a, b));
          auto acv = cb.dense(cb.bracket(a, c));
          for (std::size_t i = 0; i < n; ++i) inv += abv[i] * cb.pairing(i, c) + cb.pairing(b, i) * acv[i];
          ASSERT_EQ(inv, 0) << type;
        }
  }
}

TEST(Chevalley, PairingNormalization) {
  for (const auto& type : kTypes) {
    ChevalleyBasis cb(build_root_system(type));
    for (std::size_t a = 0; a < cb.dim(); ++a)
      for (std::size_t b = 0; b < cb.dim(); ++b) {
        Weight s = cb.weight(a) + cb.weight(b);
        if (!s.is_zero()) EXPECT_EQ(cb.pairing(a, b), 0) << type;
      }
    for (std::size_t k = 0; k < cb.num_positive(); ++k) EXPECT_EQ(cb.pairing(cb.pos(k), cb.neg(k)), 1) << type;
  }
}

TEST(Chevalley, KillingOnTMatchesRootSum) {
  // Oracle: the root-sum formula of the dual form; trace form computed independently from brackets.
  for (const auto& type : kTypes) {
    RootSystem rs = build_root_system(type);
    ChevalleyBasis cb(rs);
    InvariantForm f = killing_form_on_dual(rs);
    for (std::size_t i = 0; i < rs.rank; ++i)
      for (std::size_t j = 0; j < rs.rank; ++j)
        EXPECT_EQ(cb.pairing(cb.cartan(i), cb.cartan(j)), f.killing_on_t(i, j)) << type;
  }
}

TEST(Chevalley, TransposeIsAntiautomorphism) {
  for (const auto& type : kTypes) {
    ChevalleyBasis cb(build_root_system(type));
    const Matrix& t = cb.transpose_map();
    const std::size_t n = cb.dim();
    EXPECT_EQ(t * t, Matrix::identity(n)) << type;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto lhs = (t * Matrix::column(cb.dense(cb.bracket(a, b)))).col(0);
        auto rhs = bracket_dense(cb, t.col(b), t.col(a));
        ASSERT_EQ(lhs, rhs) << type;
      }
  }
}

TEST(Chevalley, Sl2TriplesOnQ) {
  for (const auto& type : kTypes) {
    RootSystem rs = build_root_system(type);
    ChevalleyBasis cb(rs);
    for (std::size_t k = 0; k < cb.num_positive(); ++k) {
      auto h = cb.dense(cb.bracket(cb.pos(k), cb.neg(k)));
      auto he = bracket_dense(cb, h, unit(cb.dim(), cb.pos(k)));
      Scalar alpha_h = 0;
      for (std::size_t i = 0; i < rs.rank; ++i) alpha_h += h[cb.cartan(i)] * rs.coroot_pairing(rs.positive_roots[k], i);
      EXPECT_NE(alpha_h, 0);
      for (std::size_t i = 0; i < cb.dim(); ++i) EXPECT_EQ(he[i], i == cb.pos(k) ? alpha_h : Scalar(0)) << type;
    }
  }
}

TEST(Pairs, Validation) {
  RootSystem a2 = build_root_system("A2");
  PairGH p = build_pair(a2, {a2.simple_roots[0]});
  ASSERT_EQ(p.q_positive.size(), 2u);
  // Oracle: Delta_q+ = {e2-e3, e1-e3}
  std::set<std::vector<Scalar>> q;
  for (auto i : p.q_positive) q.insert(to_epsilon(a2, a2.positive_roots[i]));
  EXPECT_EQ(q, (std::set<std::vector<Scalar>>{{0, 1, -1}, {1, 0, -1}}));
  EXPECT_NO_THROW(build_pair(a2, {}));
  EXPECT_THROW(validate_pair(a2, {a2.simple_roots[0], -a2.simple_roots[0], a2.positive_roots[2], -a2.positive_roots[2]}),
               NotClosed);
  EXPECT_THROW(validate_pair(a2, {a2.simple_roots[0]}), NotNegationClosed);
}

TEST(Pairs, Symmetric) {
  RootSystem a1 = build_root_system("A1");
  ChevalleyBasis c1(a1);
  EXPECT_TRUE(is_symmetric_pair(build_pair(a1, {}), c1));
  RootSystem a2 = build_root_system("A2");
  ChevalleyBasis c2(a2);
  EXPECT_TRUE(is_symmetric_pair(build_pair(a2, {a2.simple_roots[0]}), c2));
  EXPECT_FALSE(is_symmetric_pair(build_pair(a2, {}), c2));
}
