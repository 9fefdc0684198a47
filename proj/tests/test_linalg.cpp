#include <gtest/gtest.h>

#include "cdirac/matrix.hpp"

using namespace cdirac;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_scalar("-2/4")), "-1/2");
  EXPECT_EQ(to_string(parse_scalar("+6")), "6");
  EXPECT_THROW(parse_scalar("1.5"), std::exception);
  EXPECT_THROW(parse_scalar("1/0"), std::exception);
  EXPECT_THROW(parse_scalar("abc"), std::exception);
}

TEST(Scalar, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(Scalar(9, 4)), Scalar(3, 2));
  EXPECT_THROW(exact_sqrt(Scalar(2)), std::exception);
}

TEST(Linalg, RankKernelSolve) {
  // rank 2: third row = first + second
  Matrix a = from_rows({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}});
  EXPECT_EQ(rank(a), 2u);
  Matrix k = kernel(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  auto x = solve(a, Matrix::column({Scalar(6), Scalar(2), Scalar(8)}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, Matrix::column({Scalar(6), Scalar(2), Scalar(8)}));
  EXPECT_FALSE(solve(a, Matrix::column({Scalar(1), Scalar(0), Scalar(0)})).has_value());
}

TEST(Linalg, SubspaceArithmetic) {
  Matrix u = from_rows({{1, 0}, {0, 1}, {0, 0}});
  Matrix v = from_rows({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(subspace_intersection(u, v).cols(), 1u);
  EXPECT_EQ(subspace_sum(u, v).cols(), 3u);
  EXPECT_TRUE(subspace_contains(u, from_rows({{2}, {3}, {0}})));
  EXPECT_FALSE(subspace_contains(u, from_rows({{0}, {0}, {1}})));
}

TEST(Linalg, CharpolyCompanion) {
  // (x-1)(x-2)^2 = x^3 - 5x^2 + 8x - 4
  Matrix a = from_rows({{0, 0, 4}, {1, 0, -8}, {0, 1, 5}});
  Polynomial p = charpoly(a);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], -4);
  EXPECT_EQ(p[1], 8);
  EXPECT_EQ(p[2], -5);
  EXPECT_EQ(p[3], 1);
  EXPECT_EQ(strip_root(p, 2), 2u);
  EXPECT_EQ(strip_root(p, 1), 1u);
  EXPECT_EQ(p.size(), 1u);
}

TEST(Linalg, CharpolyNeedsPivoting) {
  // Zero subdiagonal entries force row/column swaps in the Hessenberg step.
  Matrix a = from_rows({{1, 2, 0, 1}, {0, 3, 1, 0}, {5, 0, 2, 1}, {0, 1, 0, 4}});
  Polynomial p = charpoly(a);
  // Oracle: p(A) = 0 by Cayley-Hamilton.
  Matrix acc(4, 4);
  for (std::size_t d = 0; d < p.size(); ++d) acc += p[d] * power(a, d);
  EXPECT_TRUE(acc.is_zero());
}

TEST(Linalg, Inertia) {
  Inertia in = inertia(from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(in.positive, 1u);
  EXPECT_EQ(in.negative, 1u);
  Inertia pd = inertia(from_rows({{2, 1}, {1, 2}}));
  EXPECT_EQ(pd.positive, 2u);
  Inertia sing = inertia(from_rows({{1, 1}, {1, 1}}));
  EXPECT_EQ(sing.positive, 1u);
  EXPECT_EQ(sing.zero, 1u);
}
