#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdirac/matrix.hpp"
#include "cdirac/scalar.hpp"

namespace cdirac {

// Weights live in simple-root coordinates throughout.
struct RootSystem {
  std::string cartan_type;
  std::size_t rank = 0;
  // cartan[i][j] = <alpha_j, alpha_i^vee> = alpha_j(h_i)
  std::vector<std::vector<long>> cartan;
  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;  // height, then lexicographic
  std::vector<Weight> all_roots;       // positives, then their negatives in the same order

  // <mu, alpha_i^vee>
  Scalar coroot_pairing(const Weight& mu, std::size_t i) const;
  Scalar height(const Weight& mu) const;
  std::optional<std::size_t> positive_index(const Weight& w) const;
  bool is_root(const Weight& w) const;
  Weight zero() const { return Weight(rank); }
  std::size_t num_positive() const { return positive_roots.size(); }
};

RootSystem build_root_system(std::string_view cartan_type);

struct InvariantForm {
  Matrix gram;  // in simple-root coordinates
  Matrix killing_on_t;  // kappa(h_i, h_j)

  Scalar operator()(const Weight& a, const Weight& b) const;
  Scalar norm2(const Weight& a) const { return (*this)(a, a); }
};

InvariantForm killing_form_on_dual(const RootSystem& rs);

// Returns (rho, rho_h); delta_h lists positive roots of h.
std::pair<Weight, Weight> rho_vectors(const RootSystem& rs, const std::vector<Weight>& delta_h);

// Closure checks shared by rho_vectors and validate_pair. Throws NotClosed / NotNegationClosed.
void check_subsystem(const RootSystem& rs, const std::vector<Weight>& delta_h);

struct WeylData {
  std::vector<Matrix> elements;  // act on simple-root coordinate columns
  std::vector<std::size_t> length;
  std::vector<std::size_t> subgroup_h;  // indices into elements
  std::vector<std::size_t> coset_w1;

  Weight apply(std::size_t w, const Weight& mu) const;
  int sign(std::size_t w) const { return length[w] % 2 ? -1 : 1; }
  std::size_t longest() const;
};

// delta_h_positive are the positive roots of h.
WeylData weyl_group(const RootSystem& rs, const std::vector<Weight>& delta_h_positive);

bool is_antidominant(const Weight& lambda, const RootSystem& rs, const InvariantForm& form);
bool is_dominant_integral(const Weight& lambda, const RootSystem& rs);

// mu + shift_r in W(lambda + shift_l), W the listed elements.
bool same_infinitesimal_character(const Weight& lambda, const Weight& mu, const Weight& shift_l,
                                  const Weight& shift_r, const WeylData& weyl,
                                  const std::vector<std::size_t>* subset = nullptr);

// Presentation helpers. The epsilon helpers are defined for type A only.
Weight to_fundamental(const RootSystem& rs, const Weight& mu);  // Dynkin labels
Weight from_fundamental(const RootSystem& rs, const Weight& labels);
bool has_epsilon_coordinates(const RootSystem& rs);
std::vector<Scalar> to_epsilon(const RootSystem& rs, const Weight& mu);
Weight from_epsilon(const RootSystem& rs, const std::vector<Scalar>& eps);

}  // namespace cdirac
