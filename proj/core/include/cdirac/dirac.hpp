#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdirac/cat_o.hpp"
#include "cdirac/spinor.hpp"

namespace cdirac {

// Everything shared by the blocks of one pair (g, h).
struct DiracSetup {
  PairGH pair;
  std::shared_ptr<const ChevalleyBasis> cb;
  std::shared_ptr<const SpinModule> sm;
  CasimirData casimir;
};

DiracSetup make_setup(const RootSystem& rs, const std::vector<Weight>& delta_h_positive,
                      std::vector<std::size_t> q_order = {});

// Basis of (M x S)_mu: for each spin mask in ascending order, the module basis of M_{mu - wt(mask)}.
struct BlockLayout {
  Weight mu;
  std::vector<std::size_t> offsets;  // per mask
  std::vector<std::size_t> dims;     // per mask
  std::vector<int> parity;           // per basis vector
  std::size_t dim = 0;
  std::size_t even_dim() const;
};

BlockLayout block_layout(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu);
bool block_covered(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu);
// Weights of M x S whose block is fully inside the window, sorted; optionally limited
// to height <= max_depth below the top weight m.top + rho - rho_h.
std::vector<Weight> block_weights(const DiracSetup& s, const WeightModuleWindow& m,
                                  std::optional<std::size_t> max_depth = std::nullopt);

struct DiracBlock {
  BlockLayout layout;
  Matrix d, d_plus, d_minus, cubic_part;  // d = d_plus + d_minus - cubic_part
  std::size_t dim() const { return layout.dim; }
};

DiracBlock assemble_block(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu);

// Diagonal h-action x(.)1 + 1(.)x : (M x S)_mu -> (M x S)_{mu + wt(x)}.
Matrix diagonal_action(const DiracSetup& s, const WeightModuleWindow& m, std::size_t gen, const Weight& mu);
// Module-side map induced per weight (inclusion or projection) on blocks at mu.
Matrix block_map(const DiracSetup& s, const std::map<Weight, Matrix>& per_weight, const WeightModuleWindow& from,
                 const WeightModuleWindow& to, const Weight& mu);

// First h-generator x whose diagonal action fails to commute with D between mu and mu + wt(x).
std::optional<std::string> equivariance_defect(const DiracSetup& s, const WeightModuleWindow& m, const Weight& mu);

struct SquareReport {
  bool casimir_identity = false;
  bool eigenvalues_predicted = false;
  std::map<Scalar, std::size_t> eigenvalues;  // generalized eigenvalues of D^2 with multiplicity
  std::vector<Scalar> predicted;
  std::size_t gen0_from_charpoly = 0;
  bool ok() const { return casimir_identity && eigenvalues_predicted; }
};

// 2D^2 = Omega_g(.)1 - (Omega_h)_diag + |rho|^2 - |rho_h|^2 and the spectrum of D^2
// against 1/2(|L + rho|^2 - |nu + rho_h|^2) over the module's infinitesimal characters L.
SquareReport check_square(const DiracSetup& s, const WeightModuleWindow& m, const DiracBlock& b);

struct JordanChain {
  std::vector<std::vector<Scalar>> vectors;  // vectors[0] is the top, D maps vectors[i] to vectors[i+1]
  int top_parity = 0;
  std::size_t size() const { return vectors.size(); }
};

struct JordanData {
  std::vector<JordanChain> chains;  // ordered by decreasing size
  std::size_t gen0_dim = 0;
  // layer_dims[k-1] = {dim N_k^+, dim N_k^-}
  std::vector<std::pair<std::size_t, std::size_t>> layer_dims;
  std::size_t max_size() const { return chains.empty() ? 0 : chains.front().size(); }
};

// Kernel filtration ker D^k with homogeneous, lowest-pivot chain tops; D is parity odd.
JordanData jordan_blocks(const Matrix& d, const std::vector<int>& parity);

struct CohomologyDims {
  std::size_t dim = 0, ker = 0, im = 0, gen0 = 0;
  std::size_t hd = 0, hd_plus = 0, hd_minus = 0;
  std::vector<std::size_t> htop_plus, htop_minus;  // indexed by k
  std::size_t max_jordan = 0;
  std::size_t htop_total() const;
  long htop_index() const;
};

// H_D and H_top; H_top is computed from the defining quotient and from Jordan counts,
// and a mismatch throws CheckFailure.
CohomologyDims dirac_cohomology(const DiracBlock& b);
CohomologyDims dirac_cohomology(const Matrix& d, const std::vector<int>& parity);

// Direct quotient computation only.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> higher_direct(const Matrix& d,
                                                                            const std::vector<int>& parity);
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> higher_from_jordan(const JordanData& jd);

bool index_identity_holds(const DiracBlock& b, const CohomologyDims& c);

struct KostantReport {
  std::vector<Weight> constituents;  // w(lambda + rho) - rho_h for w in W^1
  std::map<Weight, long> kernel_character, expected_character;
  bool cubic_nonzero = false, cubic_kills_vacuum = false;
  bool ok = false;
};

KostantReport kostant_kernel_check(const DiracSetup& s, const Weight& lambda_dominant);

// Character of the finite-dimensional h-module of h-dominant highest weight nu at mu.
long h_weyl_multiplicity(const PairGH& pair, const Weight& nu, const Weight& mu);
bool is_h_antidominant(const PairGH& pair, const Weight& nu);

struct NonvanishingReport {
  Weight mu;
  std::size_t block_dim = 0;
  bool in_kernel = false, outside_image = false;
  bool ok() const { return in_kernel && outside_image; }
};

NonvanishingReport nonvanishing_check(const DiracSetup& s, const WeightModuleWindow& m);

struct SimpleVermaReport {
  Weight h_top;  // lambda + rho - rho_h
  bool h_antidominant = false;
  std::map<Weight, long> hd, expected;
  bool ok = false;
};

SimpleVermaReport simple_verma_check(const DiracSetup& s, const Weight& lambda, std::size_t depth);

struct VoganEntry {
  Weight nu;
  long multiplicity = 0;
  bool shifted = false;  // nu + rho_h in W(L + rho)
  bool literal = false;  // nu in W L
};

struct VoganAudit {
  std::vector<VoganEntry> entries;
  bool ok = true;
};

// Peels the character into h-Verma characters (highest first) and tests each highest weight.
VoganAudit vogan_audit(const DiracSetup& s, const std::map<Weight, long>& character,
                       const std::vector<Weight>& infinitesimal_characters);

// A tensor scenario M(lambda) (x) F(f) with a Jordan block of size >= min_size at some weight.
struct JordanScenario {
  std::string cartan_type;
  std::vector<Weight> delta_h_positive;
  Weight lambda, f_highest, mu;
  std::size_t depth = 0, block_size = 0;
};

std::optional<JordanScenario> search_jordan_scenario(std::size_t min_size, std::size_t depth);

}  // namespace cdirac
