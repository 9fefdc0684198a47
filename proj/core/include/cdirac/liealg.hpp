#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cdirac/matrix.hpp"
#include "cdirac/roots.hpp"

namespace cdirac {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// Irreducible highest-weight module built from the Serre generators alone,
// layer by layer below the top. Only terminates for dominant integral lambda;
// otherwise stops at max_depth with complete = false.
struct GeneratorModule {
  Weight top;
  std::vector<Weight> weights;  // construction order: by depth
  std::map<Weight, std::size_t> position;
  std::vector<std::size_t> dims, offsets;
  std::size_t total_dim = 0;
  std::vector<Matrix> e, f, h;  // total_dim x total_dim, one per simple root
  bool complete = false;
};

GeneratorModule build_from_generators(const RootSystem& rs, const Weight& lambda, std::size_t max_depth);

// Basis layout: e_alpha for positive roots, then e_{-alpha}, then h_i (coroots).
// e_{-alpha} is rescaled so kappa(e_alpha, e_{-alpha}) = 1.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_positive() const { return n_pos_; }
  std::size_t rank() const { return rs_.rank; }
  std::size_t pos(std::size_t i) const { return i; }
  std::size_t neg(std::size_t i) const { return n_pos_ + i; }
  std::size_t cartan(std::size_t i) const { return 2 * n_pos_ + i; }
  bool is_raising(std::size_t a) const { return a < n_pos_; }
  bool is_lowering(std::size_t a) const { return a >= n_pos_ && a < 2 * n_pos_; }
  bool is_cartan(std::size_t a) const { return a >= 2 * n_pos_; }
  // Positive-root index of a root vector.
  std::size_t root_of(std::size_t a) const { return is_raising(a) ? a : a - n_pos_; }
  std::optional<std::size_t> element_for_root(const Weight& root) const;

  const Weight& weight(std::size_t a) const { return weights_[a]; }
  const SparseVec& bracket(std::size_t a, std::size_t b) const { return bracket_[a][b]; }
  const SparseVec& chevalley_bracket(std::size_t a, std::size_t b) const { return chevalley_[a][b]; }
  const Scalar& pairing(std::size_t a, std::size_t b) const { return killing_(a, b); }
  const Matrix& killing() const { return killing_; }
  // kappa(x_alpha, f_alpha) before rescaling.
  const Scalar& chevalley_kappa(std::size_t i) const { return kappa_[i]; }
  // Column b holds tau(basis b); tau is the transpose antiautomorphism.
  const Matrix& transpose_map() const { return tau_; }
  Scalar tau_coefficient(std::size_t a) const;  // tau(e_a) = coefficient * e_{partner}
  Matrix ad(std::size_t a) const;
  std::vector<Scalar> dense(const SparseVec& v) const;
  // Cartan part of [e_alpha, e_{-alpha}] as coefficients on h_i.
  std::vector<Scalar> coroot_image(std::size_t i) const;

 private:
  RootSystem rs_;
  std::size_t n_pos_ = 0, dim_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::vector<SparseVec>> bracket_, chevalley_;
  std::vector<Scalar> kappa_;
  Matrix killing_, tau_;
};

struct PairGH {
  RootSystem rs;
  std::vector<Weight> delta_h;  // negation closed
  std::vector<std::size_t> h_positive, q_positive;  // positive-root indices
  InvariantForm form;
  WeylData weyl;
  Weight rho, rho_h;

  bool in_h(std::size_t positive_index) const;
  std::vector<Weight> h_positive_roots() const;
  // Basis elements of h (Cartan plus root vectors of delta_h) and of q.
  std::vector<std::size_t> h_elements(const ChevalleyBasis& cb) const;
  std::vector<std::size_t> q_elements(const ChevalleyBasis& cb) const;
};

PairGH validate_pair(const RootSystem& rs, const std::vector<Weight>& delta_h);
// Convenience: delta_h given by its positive roots.
PairGH build_pair(const RootSystem& rs, const std::vector<Weight>& delta_h_positive);

bool is_symmetric_pair(const PairGH& pair, const ChevalleyBasis& cb);

struct CasimirTerm {
  Scalar coef;
  std::size_t left, right;  // coef * left * right, right applied first
};
struct CasimirLinear {
  Scalar coef;
  std::size_t gen;
};
struct CasimirElement {
  std::vector<CasimirTerm> quadratic;
  std::vector<CasimirLinear> linear;
};

struct CasimirData {
  // Normal ordered: the right factor is always raising or Cartan.
  CasimirElement omega_g, omega_h;
  // Symmetric dual-basis sums, kept for cross-checks.
  CasimirElement omega_g_raw, omega_h_raw;
};

CasimirData casimir_elements(const PairGH& pair, const ChevalleyBasis& cb);

}  // namespace cdirac
