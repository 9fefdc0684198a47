#include <gtest/gtest.h>

#include "cdirac/errors.hpp"
#include "cdirac/roots.hpp"

using namespace cdirac;

TEST(Roots, Counts) {
  // Oracle: classical |Delta+| and |W|.
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> oracle = {
      {"A1", 1, 2}, {"A2", 3, 6}, {"A1xA1", 2, 4}, {"B2", 4, 8}, {"G2", 6, 12}, {"A3", 6, 24}};
  for (const auto& [type, npos, order] : oracle) {
    RootSystem rs = build_root_system(type);
    EXPECT_EQ(rs.num_positive(), npos) << type;
    EXPECT_EQ(rs.all_roots.size(), 2 * npos) << type;
    EXPECT_EQ(weyl_group(rs, {}).elements.size(), order) << type;
  }
  EXPECT_THROW(build_root_system("E8"), UnsupportedType);
}

TEST(Roots, A2EpsilonPresentation) {
  // Oracle: Delta+ = {e1-e2, e1-e3, e2-e3}.
  RootSystem rs = build_root_system("A2");
  std::set<std::vector<Scalar>> want = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  std::set<std::vector<Scalar>> got;
  for (const auto& a : rs.positive_roots) got.insert(to_epsilon(rs, a));
  EXPECT_EQ(got, want);
  Weight w{1, 2};
  EXPECT_EQ(from_epsilon(rs, to_epsilon(rs, w)), w);
  EXPECT_EQ(from_fundamental(rs, to_fundamental(rs, w)), w);
}

TEST(Roots, KillingForm) {
  // Oracle: A1 <alpha, alpha> = 1/2; A2 <alpha, alpha> = 1/3 for every root.
  RootSystem a1 = build_root_system("A1");
  EXPECT_EQ(killing_form_on_dual(a1).norm2(a1.simple_roots[0]), Scalar(1, 2));
  RootSystem a2 = build_root_system("A2");
  InvariantForm f = killing_form_on_dual(a2);
  for (const auto& a : a2.all_roots) EXPECT_EQ(f.norm2(a), Scalar(1, 3));
  auto [rho, rho_h] = rho_vectors(a2, {});
  EXPECT_EQ(f.norm2(rho), Scalar(1, 3));  // rho = e1 - e3 is itself a root
  EXPECT_TRUE(rho_h.is_zero());
}

TEST(Roots, FormIsWeylInvariant) {
  for (std::string type : {"A2", "B2", "G2", "A3", "A1xA1"}) {
    RootSystem rs = build_root_system(type);
    InvariantForm f = killing_form_on_dual(rs);
    WeylData w = weyl_group(rs, {});
    Weight a = rs.positive_roots.front(), b = rs.positive_roots.back();
    for (std::size_t k = 0; k < w.elements.size(); ++k)
      EXPECT_EQ(f(w.apply(k, a), w.apply(k, b)), f(a, b)) << type;
  }
}

TEST(Roots, RhoAndSimpleReflections) {
  for (std::string type : {"A1", "A2", "B2", "G2", "A3", "A1xA1"}) {
    RootSystem rs = build_root_system(type);
    auto [rho, unused] = rho_vectors(rs, {});
    for (std::size_t i = 0; i < rs.rank; ++i) EXPECT_EQ(rs.coroot_pairing(rho, i), 1) << type;
    // s_i permutes Delta+ minus alpha_i
    for (std::size_t i = 0; i < rs.rank; ++i)
      for (const auto& b : rs.positive_roots) {
        if (b == rs.simple_roots[i]) continue;
        Weight img = b - rs.coroot_pairing(b, i) * rs.simple_roots[i];
        EXPECT_TRUE(rs.positive_index(img).has_value()) << type;
      }
  }
}

TEST(Roots, RhoVectorsA2Pair) {
  // Oracle: rho = e1 - e3, rho - rho_h = e1/2 + e2/2 - e3.
  RootSystem rs = build_root_system("A2");
  auto [rho, rho_h] = rho_vectors(rs, {rs.simple_roots[0]});
  EXPECT_EQ(to_epsilon(rs, rho), (std::vector<Scalar>{1, 0, -1}));
  EXPECT_EQ(to_epsilon(rs, rho - rho_h), (std::vector<Scalar>{Scalar(1, 2), Scalar(1, 2), -1}));
  EXPECT_THROW(rho_vectors(rs, {rs.simple_roots[0], rs.positive_roots[2]}), NotClosed);
}

TEST(Roots, CosetRepresentatives) {
  RootSystem a1 = build_root_system("A1");
  EXPECT_EQ(weyl_group(a1, {}).coset_w1.size(), 2u);
  RootSystem a2 = build_root_system("A2");
  WeylData w = weyl_group(a2, {a2.simple_roots[0]});
  // Oracle: |W1| = 6 / 2.
  EXPECT_EQ(w.coset_w1.size(), 3u);
  EXPECT_EQ(w.subgroup_h.size(), 2u);
  EXPECT_EQ(w.coset_w1.front(), 0u);
  RootSystem b2 = build_root_system("B2");
  WeylData wb = weyl_group(b2, {b2.simple_roots[1]});
  EXPECT_EQ(wb.coset_w1.size() * wb.subgroup_h.size(), wb.elements.size());
}

TEST(Roots, Antidominance) {
  RootSystem a2 = build_root_system("A2");
  InvariantForm f = killing_form_on_dual(a2);
  auto [rho, unused] = rho_vectors(a2, {});
  EXPECT_TRUE(is_antidominant(-rho, a2, f));
  EXPECT_TRUE(is_antidominant(Scalar(-2) * rho, a2, f));
  RootSystem a1 = build_root_system("A1");
  EXPECT_FALSE(is_antidominant(a1.zero(), a1, killing_form_on_dual(a1)));
}

TEST(Roots, SameInfinitesimalCharacter) {
  RootSystem a1 = build_root_system("A1");
  WeylData w1 = weyl_group(a1, {});
  Weight z = a1.zero();
  Weight half{0};
  half[0] = Scalar(1, 2);
  EXPECT_TRUE(same_infinitesimal_character(half, -half, z, z, w1));
  RootSystem a2 = build_root_system("A2");
  WeylData w2 = weyl_group(a2, {});
  auto [rho, unused] = rho_vectors(a2, {});
  EXPECT_FALSE(same_infinitesimal_character(-rho, -rho + a2.simple_roots[0], rho, rho, w2));
  EXPECT_TRUE(same_infinitesimal_character(-rho, -rho, rho, rho, w2));
}
