#pragma once

// Exact integer/rational arithmetic and integer linear algebra.
//
// Int and Rat are GMP's mpz_class / mpq_class. Every Rat produced by the
// functions here is canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "latcount/error.hpp"

namespace latcount {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Dense row-major matrix. Dimensions are fixed at construction.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; all rows must have the same length.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix whose rows are the given vectors.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    return from_rows(cols).transposed();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  std::vector<T> column_vector(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw Error("matrix-vector dimension mismatch");
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// ---------------------------------------------------------------------------
// Scalar and vector helpers

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);
int sign(const Int& x);
int sign(const Rat& x);
Rat make_rat(const Int& num, const Int& den);

RatVector to_rat(const IntVector& v);
RatMatrix to_rat(const IntMatrix& m);

Rat dot(const RatVector& a, const RatVector& b);
Rat dot(const IntVector& a, const RatVector& b);
Int dot(const IntVector& a, const IntVector& b);

/// Scales a nonzero rational vector by a positive factor to the unique
/// primitive integer vector on the same ray.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);
bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

// ---------------------------------------------------------------------------
// Linear algebra

/// Fraction-free (Bareiss) determinant.
Int det(const IntMatrix& m);
/// Gaussian elimination over the rationals.
Rat det(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Throws SemanticError("singular matrix") if m is singular.
RatMatrix inverse(const RatMatrix& m);
RatVector solve(const RatMatrix& m, const RatVector& rhs);
RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs);

/// Integer normal vector of the hyperplane spanned by the rows of an
/// (n-1) x n matrix of rank n-1 (generalized cross product). Orientation is
/// not normalized.
IntVector hyperplane_normal(const IntMatrix& rows);

// ---------------------------------------------------------------------------
// Smith normal form

/// B * V = W * diag(s), with V, W unimodular and s_1 | s_2 | ... | s_d, s_j > 0.
struct SmithDecomposition {
  IntMatrix V;
  IntMatrix W;
  IntVector s;
};

SmithDecomposition smith_normal_form(const IntMatrix& B);

// ---------------------------------------------------------------------------
// Lattice reduction

/// Rows of `basis` after reduction, and the unimodular integer matrix T with
/// basis_out = T * basis_in.
struct LllResult {
  RatMatrix basis;
  IntMatrix transform;
};

/// LLL reduction of the lattice spanned by the (linearly independent) rows
/// of `basis`. Rational input is handled by clearing denominators.
LllResult lll_reduce(const RatMatrix& basis, const Rat& delta = Rat(3, 4));
/// Integer input; returns only the reduced basis.
IntMatrix lll_reduce(const IntMatrix& basis, const Rat& delta = Rat(3, 4));

/// Checks the size-reduction and Lovasz conditions for the rows of `basis`.
bool is_lll_reduced(const RatMatrix& basis, const Rat& delta = Rat(3, 4));

/// All nonzero lattice vectors v = c^T * basis (c integer, one of each pair
/// +-v) with squared Euclidean norm at most `radius_sq`. Exact
/// Fincke-Pohst enumeration; intended for an LLL-reduced basis in small
/// dimension.
std::vector<RatVector> lattice_vectors_within(const RatMatrix& basis, const Rat& radius_sq);

}  // namespace latcount
