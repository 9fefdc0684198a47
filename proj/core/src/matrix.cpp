#include "cdirac/matrix.hpp"

#include <utility>

#include "cdirac/errors.hpp"

namespace cdirac {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Echelon rref(Matrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Scalar inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.r = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return rref(a).pivots.size();
}

Matrix kernel(const Matrix& a) {
  Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix k(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.r(r, free[f]);
  }
  return k;
}

std::vector<std::size_t> pivot_columns(const Matrix& a) {
  if (a.rows() == 0) return {};
  return rref(a).pivots;
}

Matrix column_basis(const Matrix& a) { return select_columns(a, pivot_columns(a)); }

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& idx) {
  Matrix m(a.rows(), idx.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = a(i, idx[j]);
  return m;
}

Matrix select_rows(const Matrix& a, const std::vector<std::size_t>& idx) {
  Matrix m(idx.size(), a.cols());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(idx[i], j);
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  Matrix m(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Matrix power(const Matrix& a, std::size_t k) {
  Matrix r = Matrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

Matrix subspace_sum(const Matrix& u, const Matrix& v) { return column_basis(hstack(u, v)); }

Matrix subspace_intersection(const Matrix& u, const Matrix& v) {
  if (u.cols() == 0 || v.cols() == 0) return Matrix(u.rows(), 0);
  Matrix k = kernel(hstack(u, Scalar(-1) * v));
  Matrix x(u.cols(), k.cols());
  for (std::size_t i = 0; i < u.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) x(i, j) = k(i, j);
  return column_basis(u * x);
}

bool subspace_contains(const Matrix& u, const Matrix& v) {
  if (v.cols() == 0) return true;
  return rank(hstack(u, v)) == rank(u);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("solve shape mismatch");
  Echelon e = rref(hstack(a, b));
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.r(r, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.rows()));
}

Polynomial charpoly(const Matrix& a) {
  if (!a.is_square()) throw Error("charpoly of non-square matrix");
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && sgn(h(p, j)) == 0) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    for (std::size_t k = j + 2; k < n; ++k) {
      if (sgn(h(k, j)) == 0) continue;
      Scalar u = h(k, j) / h(j + 1, j);
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
    }
  }
  std::vector<Polynomial> p(n + 1);
  p[0] = {Scalar(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial cur(m + 1);
    // (x - h_mm) p_{m-1}
    for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
      cur[d + 1] += p[m - 1][d];
      cur[d] -= h(m - 1, m - 1) * p[m - 1][d];
    }
    Scalar t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (sgn(t) == 0) break;
      Scalar f = t * h(m - i - 1, m - 1);
      for (std::size_t d = 0; d < p[m - i - 1].size(); ++d) cur[d] -= f * p[m - i - 1][d];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::size_t strip_root(Polynomial& p, const Scalar& c) {
  std::size_t mult = 0;
  while (p.size() > 1) {
    // Synthetic division by (x - c).
    Polynomial q(p.size() - 1);
    Scalar carry = 0;
    for (std::size_t d = p.size(); d-- > 1;) {
      carry = p[d] + carry * c;
      q[d - 1] = carry;
    }
    Scalar rem = p[0] + carry * c;
    if (sgn(rem) != 0) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

Inertia inertia(const Matrix& sym) {
  Matrix a = sym;
  const std::size_t n = a.rows();
  Inertia out;
  std::size_t done = 0;
  std::vector<bool> used(n, false);
  while (done < n) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && sgn(a(i, i)) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // No usable diagonal entry: fold a nonzero off-diagonal one into the diagonal.
      std::size_t fi = n, fj = n;
      for (std::size_t i = 0; i < n && fi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!used[i] && !used[j] && i != j && sgn(a(i, j)) != 0) {
            fi = i;
            fj = j;
            break;
          }
      if (fi == n) {
        for (std::size_t i = 0; i < n; ++i)
          if (!used[i]) ++out.zero;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(fi, c) += a(fj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, fi) += a(r, fj);
      continue;
    }
    used[piv] = true;
    ++done;
    (sgn(a(piv, piv)) > 0 ? out.positive : out.negative)++;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i] || sgn(a(i, piv)) == 0) continue;
      Scalar f = a(i, piv) / a(piv, piv);
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(piv, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, piv);
    }
  }
  return out;
}

}  // namespace cdirac
