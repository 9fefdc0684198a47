#include <gtest/gtest.h>

#include "cdirac/circle.hpp"
#include "cdirac/errors.hpp"

using namespace cdirac;

namespace {

Weight a1(long lh) { return Weight{Scalar(lh) / 2}; }

Matrix shift(std::size_t n) {
  Matrix d(n, n);
  for (std::size_t i = 1; i < n; ++i) d(i, i - 1) = 1;
  return d;
}

Matrix rows_of_identity(std::size_t n, std::vector<std::size_t> rows) {
  return select_rows(Matrix::identity(n), rows);
}

}  // namespace

TEST(Circle, ParityCaseKEven) {
  // J2 = (e0 -> e1 -> e2), J1 = (e1 -> e2), J3 = (e0): sizes k=2, l=3, m=1, maps (0, 1, 0).
  Matrix d2 = shift(3), d1 = shift(2), d3(1, 1);
  Matrix i = select_columns(Matrix::identity(3), {1, 2});
  Matrix p = rows_of_identity(3, {0});
  CircleResult r = exact_circle_linear(d1, d2, d3, i, p, {1, 0}, {0, 1, 0}, {0});
  ASSERT_TRUE(r.exact) << r.failure;
  ASSERT_EQ(r.blocks.size(), 1u);
  EXPECT_EQ(r.blocks[0].k, 2u);
  EXPECT_EQ(r.blocks[0].l, 3u);
  EXPECT_EQ(r.blocks[0].m, 1u);
  EXPECT_EQ(r.node_dims, (std::array<std::size_t, 6>{0, 1, 1, 0, 0, 0}));
  EXPECT_EQ(rank(r.maps[1]), 1u);  // H(M2)+ -> H(M3)+ is the identity on the tops
  EXPECT_EQ(rank(r.maps[0]) + rank(r.maps[2]), 0u);
}

TEST(Circle, ParityCaseLEven) {
  // J2 = (e0 -> e1), J1 = (e1), J3 = (e0): l even, connecting map is an isomorphism.
  Matrix d2 = shift(2), d1(1, 1), d3(1, 1);
  Matrix i = select_columns(Matrix::identity(2), {1});
  Matrix p = rows_of_identity(2, {0});
  CircleResult r = exact_circle_linear(d1, d2, d3, i, p, {1}, {0, 1}, {0});
  ASSERT_TRUE(r.exact) << r.failure;
  EXPECT_EQ(r.node_dims, (std::array<std::size_t, 6>{0, 0, 1, 1, 0, 0}));
  EXPECT_EQ(rank(r.maps[2]), 1u);
}

TEST(Circle, RejectsNonIntertwiningMaps) {
  Matrix d2 = shift(2), d1(1, 1), d3(1, 1);
  Matrix i = select_columns(Matrix::identity(2), {0});
  Matrix p = rows_of_identity(2, {1});
  CircleResult r = exact_circle_linear(d1, d2, d3, i, p, {0}, {0, 1}, {1});
  EXPECT_FALSE(r.intertwines);
  EXPECT_FALSE(r.exact);
}

TEST(Circle, A1VermaSequences) {
  // 0 -> M(s.lambda) -> M(lambda) -> L(lambda) -> 0 for integral dominant lambda.
  DiracSetup s = make_setup(build_root_system("A1"), {});
  for (long l : {0, 1, 2}) {
    WeightModuleWindow vw = verma_window(s.pair, s.cb, a1(l), 8);
    Weight mu0 = a1(l) - Scalar(l + 1) * Weight{1};
    ShortExactSequence ses = ses_from_embedding(singular_vectors(vw, mu0), mu0, vw);
    std::size_t checked = 0;
    for (const auto& mu : block_weights(s, vw, 7)) {
      CircleResult r = exact_circle(s, ses, mu);
      EXPECT_TRUE(r.intertwines);
      EXPECT_TRUE(r.short_exact);
      EXPECT_TRUE(r.exact) << l << " " << to_string(mu) << " " << r.failure;
      ++checked;
    }
    EXPECT_GE(checked, 8u);
  }
}

TEST(Circle, SplitSequenceHasZeroConnectingMaps) {
  DiracSetup s = make_setup(build_root_system("A1"), {});
  WeightModuleWindow a = verma_window(s.pair, s.cb, a1(-1), 6), b = verma_window(s.pair, s.cb, a1(-3), 6);
  ShortExactSequence ses = split_ses(a, b);
  for (const auto& mu : block_weights(s, ses.mid, 5)) {
    CircleResult r = exact_circle(s, ses, mu);
    ASSERT_TRUE(r.exact) << r.failure;
    EXPECT_TRUE(r.maps[2].is_zero());
    EXPECT_TRUE(r.maps[5].is_zero());
  }
}

TEST(Circle, A2SequenceFromSimpleRootEmbedding) {
  DiracSetup s = make_setup(build_root_system("A2"), {Weight{1, 0}});
  const RootSystem& rs = s.cb->roots();
  WeightModuleWindow vw = verma_window(s.pair, s.cb, rs.zero(), 5);
  Weight mu0 = -rs.simple_roots[0];
  ShortExactSequence ses = ses_from_embedding(singular_vectors(vw, mu0), mu0, vw);
  for (const auto& mu : block_weights(s, vw, 3)) {
    CircleResult r = exact_circle(s, ses, mu);
    EXPECT_TRUE(r.exact) << to_string(mu) << " " << r.failure;
  }
}

TEST(Circle, NonSemisimpleTensorModule) {
  // M(-rho) (x) F(1) for sl2 contains M(0); the quotient is M(-2) and D has a size-3 block.
  DiracSetup s = make_setup(build_root_system("A1"), {});
  WeightModuleWindow t = tensor_with_finite_dim(verma_window(s.pair, s.cb, -s.pair.rho, 8),
                                                finite_dim_simple(s.pair, s.cb, a1(1)));
  Weight mu0 = a1(0);
  ShortExactSequence ses = ses_from_embedding(singular_vectors(t, mu0), mu0, t);
  bool saw_long_block = false;
  for (const auto& mu : block_weights(s, t, 6)) {
    CircleResult r = exact_circle(s, ses, mu);
    ASSERT_TRUE(r.exact) << to_string(mu) << " " << r.failure;
    for (const auto& b : r.blocks)
      if (b.l == 3) {
        saw_long_block = true;
        EXPECT_EQ(b.k, 2u);
        EXPECT_EQ(b.m, 1u);
      }
  }
  EXPECT_TRUE(saw_long_block);
}
