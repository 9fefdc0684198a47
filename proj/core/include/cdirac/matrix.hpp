#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cdirac/scalar.hpp"

namespace cdirac {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix transpose() const;
  std::vector<Scalar> col(std::size_t j) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix r;                         // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Echelon rref(Matrix a);
std::size_t rank(const Matrix& a);
// Columns form a basis of {x : a x = 0}; one column per free variable.
Matrix kernel(const Matrix& a);
// Independent columns of a spanning its column space (the pivot columns).
Matrix column_basis(const Matrix& a);
std::vector<std::size_t> pivot_columns(const Matrix& a);

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& idx);
Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& idx);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, std::size_t k);

// Subspaces are matrices whose columns are a basis (n x dim).
Matrix subspace_sum(const Matrix& u, const Matrix& v);
Matrix subspace_intersection(const Matrix& u, const Matrix& v);
bool subspace_contains(const Matrix& u, const Matrix& v);

// Some X with a X = b, or nothing when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

// Coefficients low to high; monic when produced by charpoly.
using Polynomial = std::vector<Scalar>;
Polynomial charpoly(const Matrix& a);
// Divides p by (x - c) in place while c is a root; returns the multiplicity.
std::size_t strip_root(Polynomial& p, const Scalar& c);

// Signature counts of a symmetric matrix via exact congruence diagonalization.
struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
};
Inertia inertia(const Matrix& sym);

}  // namespace cdirac
