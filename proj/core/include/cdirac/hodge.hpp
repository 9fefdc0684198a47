#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdirac/dirac.hpp"

namespace cdirac {

// g = k + p+ + p- with p+ spanned by the positive q-root vectors.
struct HermitianPair {
  PairGH pair;
  std::vector<std::size_t> p_plus;  // positive-root indices of Delta_q+, in root order
  std::vector<Weight> p_plus_roots;
  bool q_abelian = false;
  bool parabolic_containment = false;  // [k, p+] in p+
  bool symmetric = false;
  Weight shift;  // rho - rho_k
};

// Throws NotHermitian naming two q-roots whose sum is a root.
HermitianPair detect_hermitian(const PairGH& pair, const ChevalleyBasis& cb);

// One weight slice of M (x) wedge p- (equivalently Hom(wedge p+, M)), all degrees at once.
// Basis: subsets I of p_plus ascending as bitmasks, each holding M_{nu + sum_I beta}.
struct CESlice {
  Weight nu;
  std::vector<std::size_t> offsets, dims;  // per subset
  std::vector<std::size_t> degree;         // per basis vector
  std::size_t dim = 0;
  Matrix d, boundary;  // raise and lower the degree by one
  bool d_squared_zero = false, boundary_squared_zero = false;
  std::vector<std::size_t> chains, cohomology, homology;  // indexed by degree
  std::size_t total_cohomology() const;
  std::size_t total_homology() const;
};

CESlice ce_complex(const HermitianPair& hp, const WeightModuleWindow& m, const Weight& nu);

// First k-generator whose action fails to commute with d or the boundary map at nu.
std::optional<std::string> ce_equivariance_defect(const HermitianPair& hp, const DiracSetup& s,
                                                  const WeightModuleWindow& m, const Weight& nu);

// Signed basis bijection from the M (x) S block at mu to the CE slice at mu - (rho - rho_k).
Matrix ce_identification(const HermitianPair& hp, const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu);

struct IdentificationReport {
  Weight mu;
  std::vector<int> signs;  // per spin mask
  bool c_plus_is_d = false, c_minus_is_boundary = false, d_is_sum = false;
  std::string failure;
  bool ok() const { return c_plus_is_d && c_minus_is_boundary && d_is_sum; }
};

IdentificationReport identification_check(const HermitianPair& hp, const DiracSetup& s, const WeightModuleWindow& m,
                                          const Weight& mu);

// Contravariant form with the sign twist on the noncompact root vectors. For a simple quotient
// of `verma` the grams are restricted to the quotient's representatives.
ContravariantForm unitary_form(const HermitianPair& hp, const WeightModuleWindow& verma,
                               const WeightModuleWindow* quotient = nullptr);

struct UnitarityReport {
  bool unitary = true;
  std::optional<Weight> first_failure;  // first weight, in map order, with an indefinite or degenerate gram
  std::map<Weight, Inertia> signatures;
};

UnitarityReport unitarity_check(const ContravariantForm& form);

// Tensor product of the module form with the diagonal spin form on the block at mu.
Matrix tensor_form(const DiracSetup& s, const WeightModuleWindow& m, const ContravariantForm& form, const Weight& mu);

struct HodgeReport {
  Weight mu;
  bool positive = false;
  bool adjoint_plus = false, adjoint_minus = false;  // (C+)^T G = -G C-, (C-)^T G = -G C+
  bool ker_meets_im_trivially = false, dims_add = false;
  bool c_plus_split = false, c_minus_split = false;  // ker C = im C + ker D, direct
  std::size_t ker_d = 0, hd = 0;
  std::string failure;
  bool ok() const;
};

HodgeReport hodge_decomposition_check(const DiracSetup& s, const WeightModuleWindow& m, const ContravariantForm& form,
                                      const Weight& mu);

struct ComparisonRow {
  Weight mu;
  std::size_t hd = 0, hd_plus = 0, hd_minus = 0;
  std::vector<std::size_t> cohomology, homology;  // by degree, at mu - (rho - rho_k)
  bool ok = false;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  bool ok = true;
};

// H_D against total CE cohomology and homology, weight by weight, on blocks within `depth`.
ComparisonReport hodge_comparison(const HermitianPair& hp, const DiracSetup& s, const WeightModuleWindow& m,
                                  std::size_t depth);

}  // namespace cdirac
