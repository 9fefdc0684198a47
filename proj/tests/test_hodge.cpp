#include <gtest/gtest.h>

#include "cdirac/errors.hpp"
#include "cdirac/hodge.hpp"

using namespace cdirac;

namespace {

Weight a1(long lh) { return Weight{Scalar(lh) / 2}; }

struct Su21 {
  DiracSetup s = make_setup(build_root_system("A2"), {Weight{1, 0}});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
};

// L(lambda) with lambda(h1) = 0, lambda(h2) = t, on a window deep enough for depth-6 blocks.
WeightModuleWindow su21_module(const Su21& x, const Scalar& t, WeightModuleWindow* verma = nullptr) {
  Weight lam = from_fundamental(x.s.pair.rs, Weight{0, t});
  WeightModuleWindow vw = verma_window(x.s.pair, x.s.cb, lam, 9);
  WeightModuleWindow l = simple_quotient_window(vw, shapovalov_grams(vw));
  if (verma) *verma = vw;
  return l;
}

}  // namespace

TEST(Hermitian, Detection) {
  DiracSetup a = make_setup(build_root_system("A1"), {});
  HermitianPair h1 = detect_hermitian(a.pair, *a.cb);
  EXPECT_TRUE(h1.q_abelian && h1.parabolic_containment && h1.symmetric);
  EXPECT_EQ(h1.p_plus_roots, std::vector<Weight>{Weight{1}});

  Su21 x;
  EXPECT_TRUE(x.hp.parabolic_containment && x.hp.symmetric);
  EXPECT_EQ(x.hp.p_plus_roots, (std::vector<Weight>{Weight{0, 1}, Weight{1, 1}}));
  EXPECT_EQ(x.hp.shift, x.s.pair.rho - x.s.pair.rho_h);

  DiracSetup t = make_setup(build_root_system("A2"), {});
  try {
    detect_hermitian(t.pair, *t.cb);
    FAIL() << "A2 with h = t is not Hermitian";
  } catch (const NotHermitian& e) {
    // witness: alpha_1 + alpha_2 is a root
    EXPECT_NE(std::string(e.what()).find("(1, 0) + (0, 1)"), std::string::npos) << e.what();
  }
}

TEST(CEComplex, A1VermaStringEnds) {
  // Oracle: 0 -> M -> M -> 0 with d = e; e is injective below the top of M(-rho) and f is too.
  DiracSetup s = make_setup(build_root_system("A1"), {});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
  WeightModuleWindow vw = verma_window(s.pair, s.cb, a1(-1), 8);
  CESlice top = ce_complex(hp, vw, a1(-1));
  EXPECT_EQ(top.chains, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(top.cohomology, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(top.homology, (std::vector<std::size_t>{1, 0}));
  for (long k = 1; k <= 6; ++k) {
    CESlice c = ce_complex(hp, vw, a1(-1 - 2 * k));
    EXPECT_TRUE(c.d_squared_zero && c.boundary_squared_zero);
    EXPECT_EQ(c.chains, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(c.cohomology, (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(c.homology, (std::vector<std::size_t>{0, 0}));
  }
}

TEST(CEComplex, DegreeZeroIsInvariants) {
  Su21 x;
  WeightModuleWindow l = su21_module(x, -1);
  const Weight nu = l.top - Weight{0, 2};
  CESlice c = ce_complex(x.hp, l, nu);
  Matrix d0(0, c.dims[0]);
  for (auto k : x.hp.p_plus) d0 = vstack(d0, l.action(x.s.cb->pos(k), nu));
  EXPECT_EQ(c.cohomology[0], c.dims[0] - rank(d0));
  EXPECT_GT(c.dims[0], 0u);
}

TEST(CEComplex, SquaresVanishAndEquivariance) {
  Su21 x;
  for (Scalar t : {Scalar(-1), Scalar(-1, 2)}) {
    WeightModuleWindow l = su21_module(x, t);
    for (const auto& mu : block_weights(x.s, l, 5)) {
      CESlice c = ce_complex(x.hp, l, mu - x.hp.shift);
      EXPECT_TRUE(c.d_squared_zero) << to_string(mu);
      EXPECT_TRUE(c.boundary_squared_zero) << to_string(mu);
      EXPECT_EQ(ce_equivariance_defect(x.hp, x.s, l, mu - x.hp.shift), std::nullopt);
    }
  }
}

TEST(CEComplex, OutsideWindow) {
  DiracSetup s = make_setup(build_root_system("A1"), {});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
  WeightModuleWindow vw = verma_window(s.pair, s.cb, a1(-1), 2);
  EXPECT_THROW(ce_complex(hp, vw, a1(-1) - Weight{4}), OutsideWindow);
}

TEST(Identification, A1AndSu21) {
  DiracSetup s = make_setup(build_root_system("A1"), {});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
  WeightModuleWindow vw = verma_window(s.pair, s.cb, a1(-1), 8);
  for (const auto& mu : block_weights(s, vw, 8)) {
    IdentificationReport r = identification_check(hp, s, vw, mu);
    EXPECT_TRUE(r.ok()) << r.failure;
    EXPECT_EQ(assemble_block(s, vw, mu).dim(), mu == a1(-1) + s.pair.rho ? 1u : 2u);
  }
  Su21 x;
  WeightModuleWindow m = verma_window(x.s.pair, x.s.cb, -x.s.pair.rho, 9);
  for (const auto& mu : block_weights(x.s, m, 6)) {
    IdentificationReport r = identification_check(x.hp, x.s, m, mu);
    EXPECT_TRUE(r.ok()) << r.failure;
    for (int sg : r.signs) EXPECT_EQ(sg, 1);
  }
}

TEST(Identification, DegreeZeroLine) {
  // C- kills M (x) wedge^0 and so does the boundary map.
  Su21 x;
  WeightModuleWindow m = verma_window(x.s.pair, x.s.cb, -x.s.pair.rho, 9);
  const Weight mu = m.top + x.hp.shift - Weight{1, 1};
  DiracBlock b = assemble_block(x.s, m, mu);
  CESlice c = ce_complex(x.hp, m, mu - x.hp.shift);
  for (std::size_t j = 0; j < b.layout.dims[0]; ++j)
    for (std::size_t i = 0; i < b.dim(); ++i) EXPECT_EQ(b.d_minus(i, b.layout.offsets[0] + j), 0);
  for (std::size_t j = 0; j < c.dims[0]; ++j)
    for (std::size_t i = 0; i < c.dim; ++i) EXPECT_EQ(c.boundary(i, c.offsets[0] + j), 0);
}

TEST(Identification, ReversedSpinOrderNeedsASign) {
  Su21 x;
  DiracSetup rev = make_setup(build_root_system("A2"), {Weight{1, 0}}, {x.hp.p_plus[1], x.hp.p_plus[0]});
  WeightModuleWindow m = verma_window(rev.pair, rev.cb, -rev.pair.rho, 9);
  for (const auto& mu : block_weights(rev, m, 4)) {
    IdentificationReport r = identification_check(x.hp, rev, m, mu);
    EXPECT_TRUE(r.ok()) << r.failure;
    if (assemble_block(rev, m, mu).layout.dims[3]) EXPECT_EQ(r.signs[3], -1);
  }
}

TEST(Unitarity, TrivialAndA1) {
  DiracSetup s = make_setup(build_root_system("A1"), {});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
  WeightModuleWindow triv = verma_window(s.pair, s.cb, a1(0), 0);
  EXPECT_TRUE(unitarity_check(unitary_form(hp, triv)).unitary);

  // Oracle: the twisted gram at depth k is k! * prod_{j<k} (j - lambda(h)) up to positive normalization.
  WeightModuleWindow good = verma_window(s.pair, s.cb, a1(-1), 8);
  UnitarityReport u = unitarity_check(unitary_form(hp, good));
  EXPECT_TRUE(u.unitary);
  EXPECT_EQ(u.signatures.size(), 9u);

  WeightModuleWindow bad = verma_window(s.pair, s.cb, a1(1), 8);
  UnitarityReport v = unitarity_check(unitary_form(hp, bad));
  EXPECT_FALSE(v.unitary);
  ContravariantForm f = unitary_form(hp, bad);
  EXPECT_GT(f.grams.at(a1(1))(0, 0), 0);
  EXPECT_LT(f.grams.at(a1(-1))(0, 0), 0);
  EXPECT_EQ(f.grams.at(a1(-3))(0, 0), 0);
}

TEST(Unitarity, Su21ScalarWeights) {
  Su21 x;
  for (Scalar t : {Scalar(-1), Scalar(-2), Scalar(-1, 2), Scalar(-5, 2)}) {
    WeightModuleWindow vw;
    WeightModuleWindow l = su21_module(x, t, &vw);
    EXPECT_TRUE(unitarity_check(unitary_form(x.hp, vw, &l)).unitary) << t;
    // the compact direction alone is not enough: the Verma itself has a radical
    EXPECT_FALSE(unitarity_check(unitary_form(x.hp, vw)).unitary) << t;
  }
  WeightModuleWindow vw;
  WeightModuleWindow l = su21_module(x, 1, &vw);
  EXPECT_FALSE(unitarity_check(unitary_form(x.hp, vw, &l)).unitary);
}

TEST(Hodge, TrivialModule) {
  Su21 x;
  WeightModuleWindow triv = su21_module(x, 0);
  ContravariantForm f;
  for (const auto& [mu, d] : triv.dims) f.grams[mu] = Matrix::identity(d);
  for (const auto& mu : block_weights(x.s, triv)) {
    HodgeReport r = hodge_decomposition_check(x.s, triv, f, mu);
    EXPECT_TRUE(r.ok()) << r.failure;
    EXPECT_TRUE(assemble_block(x.s, triv, mu).d.is_zero());
  }
}

TEST(Hodge, A1UnitaryVermaToDepth8) {
  DiracSetup s = make_setup(build_root_system("A1"), {});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
  WeightModuleWindow vw = verma_window(s.pair, s.cb, a1(-1), 9);
  ContravariantForm f = unitary_form(hp, vw);
  auto ws = block_weights(s, vw, 8);
  EXPECT_EQ(ws.size(), 9u);
  for (const auto& mu : ws) {
    HodgeReport r = hodge_decomposition_check(s, vw, f, mu);
    EXPECT_TRUE(r.ok()) << r.failure;
  }
  ComparisonReport c = hodge_comparison(hp, s, vw, 8);
  EXPECT_TRUE(c.ok);
  // a single line, at the top: lambda + rho
  std::size_t total = 0;
  for (const auto& row : c.rows) {
    total += row.hd;
    if (row.hd) EXPECT_EQ(row.mu, a1(-1) + s.pair.rho);
  }
  EXPECT_EQ(total, 1u);
}

TEST(Hodge, Su21UnitaryModules) {
  Su21 x;
  for (Scalar t : {Scalar(-1), Scalar(-2), Scalar(-1, 2)}) {
    WeightModuleWindow vw;
    WeightModuleWindow l = su21_module(x, t, &vw);
    ContravariantForm f = unitary_form(x.hp, vw, &l);
    for (const auto& mu : block_weights(x.s, l, 6)) {
      HodgeReport r = hodge_decomposition_check(x.s, l, f, mu);
      EXPECT_TRUE(r.ok()) << t << " " << r.failure;
      EXPECT_TRUE(identification_check(x.hp, x.s, l, mu).ok());
    }
    ComparisonReport c = hodge_comparison(x.hp, x.s, l, 6);
    EXPECT_TRUE(c.ok) << t;
    EXPECT_FALSE(c.rows.empty());
  }
}

TEST(Hodge, AdjointnessNeedsTheTwist) {
  // With the untwisted form C+ and C- are adjoint with the opposite sign.
  DiracSetup s = make_setup(build_root_system("A1"), {});
  WeightModuleWindow vw = verma_window(s.pair, s.cb, a1(-1), 6);
  ContravariantForm plain = shapovalov_grams(vw);
  const Weight mu = a1(-1) + s.pair.rho - Weight{2};
  HodgeReport r = hodge_decomposition_check(s, vw, plain, mu);
  EXPECT_FALSE(r.adjoint_plus);
  DiracBlock b = assemble_block(s, vw, mu);
  Matrix g = tensor_form(s, vw, plain, mu);
  EXPECT_EQ(b.d_plus.transpose() * g, g * b.d_minus);
}

TEST(Hodge, NonUnitaryIsReported) {
  DiracSetup s = make_setup(build_root_system("A1"), {});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
  WeightModuleWindow vw = verma_window(s.pair, s.cb, a1(1), 8);
  ContravariantForm f = unitary_form(hp, vw);
  EXPECT_FALSE(unitarity_check(f).unitary);
  bool any_failure = false;
  for (const auto& mu : block_weights(s, vw, 6)) {
    HodgeReport r = hodge_decomposition_check(s, vw, f, mu);
    if (!r.ok()) {
      any_failure = true;
      EXPECT_FALSE(r.positive);
      EXPECT_NE(r.failure.find("positive"), std::string::npos);
    }
  }
  EXPECT_TRUE(any_failure);
  // the decomposition itself breaks: one block has ker D meeting im D
  HodgeReport r = hodge_decomposition_check(s, vw, f, a1(1) + s.pair.rho - Weight{2});
  EXPECT_FALSE(r.ker_meets_im_trivially);
  EXPECT_FALSE(hodge_comparison(hp, s, vw, 6).ok);
}
