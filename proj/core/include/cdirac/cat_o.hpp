#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdirac/liealg.hpp"

namespace cdirac {

enum class ModuleKind { Verma, SimpleQuotient, FiniteDim, Tensor, Sum, Sub, Quotient };
std::string to_string(ModuleKind k);

// mu is covered when, for every shift s, the weight mu - s is either outside
// top - N.Delta+ (so the module is zero there) or within `depth` of top.
struct CoverRule {
  Weight top;
  std::size_t depth = 0;
  std::vector<Weight> shifts;
  bool covers(const Weight& mu) const;
};

using Monomial = std::vector<unsigned>;  // PBW exponents over Delta+

class WeightModuleWindow {
 public:
  ModuleKind kind = ModuleKind::Verma;
  std::shared_ptr<const ChevalleyBasis> g;
  Weight top;
  std::size_t depth = 0;
  bool finite = false;  // every weight is covered
  std::vector<CoverRule> rules;
  std::map<Weight, std::size_t> dims;  // nonzero weight spaces only
  // PBW representatives for highest-weight modules (Verma and its quotients).
  std::map<Weight, std::vector<Monomial>> monomials;
  // actions[gen][mu] : M_mu -> M_{mu + wt(gen)}, root generators only.
  std::vector<std::map<Weight, Matrix>> actions;
  // Lambda such that the module has generalized infinitesimal character chi_Lambda.
  std::vector<Weight> infinitesimal_characters;

  bool covers(const Weight& mu) const;
  std::size_t dim(const Weight& mu) const;  // throws OutsideWindow
  Matrix action(std::size_t gen, const Weight& mu) const;  // throws OutsideWindow
  std::vector<Weight> weights() const;
  std::size_t height_below_top(const Weight& mu) const;
};

struct CharacterTable {
  std::map<Weight, long> entries;
  long operator[](const Weight& mu) const;
};

WeightModuleWindow verma_window(const PairGH& pair, std::shared_ptr<const ChevalleyBasis> cb,
                                const Weight& lambda, std::size_t depth);

struct ContravariantForm {
  std::map<Weight, Matrix> grams;
};

// gram(mu)[i][j] = top coefficient of tau'(m_i) m_j v, tau' = tau composed with the
// sign -1 on each root vector listed in `twisted` (positive-root indices).
ContravariantForm shapovalov_grams(const WeightModuleWindow& vw, const std::vector<std::size_t>& twisted = {});

WeightModuleWindow simple_quotient_window(const WeightModuleWindow& vw, const ContravariantForm& form,
                                          bool expect_finite = false);

WeightModuleWindow finite_dim_simple(const PairGH& pair, std::shared_ptr<const ChevalleyBasis> cb,
                                     const Weight& lambda);
Scalar weyl_dimension(const RootSystem& rs, const InvariantForm& form, const Weight& lambda);

WeightModuleWindow tensor_with_finite_dim(const WeightModuleWindow& m, const WeightModuleWindow& f);
WeightModuleWindow direct_sum(const WeightModuleWindow& a, const WeightModuleWindow& b);

Matrix singular_vectors(const WeightModuleWindow& vw, const Weight& mu);

struct ShortExactSequence {
  WeightModuleWindow sub, mid, quot;
  std::map<Weight, Matrix> inclusion, projection;  // per weight of mid
  bool split = false;
};

// sub_gen is a singular vector (column) in mid at weight mu0.
ShortExactSequence ses_from_embedding(const Matrix& sub_gen, const Weight& mu0, const WeightModuleWindow& vw);
ShortExactSequence split_ses(const WeightModuleWindow& a, const WeightModuleWindow& b);

CharacterTable character(const WeightModuleWindow& vw);
// Kostant partition count of eta over the listed roots.
long partition_count(const std::vector<Weight>& roots, const Weight& eta);
// Character of the h-Verma module of highest weight lambda, down to `depth`.
CharacterTable verma_character_h(const PairGH& pair, const Weight& lambda, std::size_t depth);

using ActionFn = std::function<Matrix(std::size_t gen, const Weight& mu)>;
// Casimir element evaluated on a weight space through an action provider.
Matrix evaluate_casimir(const CasimirElement& c, const ChevalleyBasis& cb, const ActionFn& act,
                        const Weight& mu, std::size_t dim_mu);

// First violation of action([x,y]) = [action(x), action(y)] on covered weights, if any.
std::optional<std::string> commutation_defect(const WeightModuleWindow& vw);

}  // namespace cdirac
