#pragma once

#include <map>
#include <vector>

#include "cdirac/liealg.hpp"

namespace cdirac {

// S = exterior algebra on n_q^-; basis u_I indexed by bitmasks over q_order.
struct SpinModule {
  std::vector<std::size_t> q_order;  // positive-root indices beta_1..beta_l
  std::size_t dim = 1;
  std::vector<Weight> weights;  // per mask
  std::vector<int> parity;      // |I| mod 2
  std::map<std::size_t, Matrix> gamma;     // g-basis index of e_{+-beta} -> Clifford action
  std::map<std::size_t, Matrix> h_action;  // g-basis index of an h element -> action
  Matrix cubic;

  // gamma of a q-vector given in g-basis coordinates.
  Matrix gamma_of(const std::vector<Scalar>& x) const;
  std::size_t mask_bit(std::size_t positive_index) const;
  std::vector<std::size_t> masks_with_weight(const Weight& w) const;
  std::size_t even_dim() const;
};

// q_order defaults to Delta_q+ in the fixed positive-root order.
SpinModule build_spin_module(const PairGH& pair, const ChevalleyBasis& cb, std::vector<std::size_t> q_order = {});

// gamma(c) = 1/6 sum <Z_i, [Z_j, Z_k]> gamma(Z^i) gamma(Z^j) gamma(Z^k) over a basis Z of q
// (columns of `basis` in the standard q coordinates e_{beta_1..l}, e_{-beta_1..l}) and its dual.
Matrix cubic_term(const PairGH& pair, const ChevalleyBasis& cb, const SpinModule& sm, const Matrix* basis = nullptr);

}  // namespace cdirac
