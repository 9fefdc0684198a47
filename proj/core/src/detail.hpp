#pragma once

#include <vector>

#include "cdirac/matrix.hpp"

namespace cdirac::detail {

// dim of x intersected with the coordinate subspace of parity p
std::size_t graded_dim(const Matrix& x, const std::vector<int>& parity, int p);
// ker D^k for k = 0.. until the dimension stops growing
std::vector<Matrix> kernel_filtration(const Matrix& d);
// basis of ker(dk) inside the parity-p coordinates
Matrix homogeneous_kernel(const Matrix& dk, const std::vector<int>& parity, int p);
std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v);
Matrix append_column(const Matrix& m, const std::vector<Scalar>& v);
Matrix columns_of(const std::vector<std::vector<Scalar>>& cols, std::size_t rows);

}  // namespace cdirac::detail
