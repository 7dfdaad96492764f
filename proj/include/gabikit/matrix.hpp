#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gabikit/scalar.hpp"

namespace gabikit {

/// Dense matrix of exact Scalars over one FieldSpec, row-major.
///
/// All linear maps in the toolkit are matrices under one global convention:
/// a map f: V -> W with dim V = c, dim W = r is the r x c matrix whose j-th
/// column holds the coordinates of f(v_j); tensor bases are flattened
/// left-factor-major, e_i (x) e_j -> i * dim(second factor) + j.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(const FieldSpec& field, std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const FieldSpec& field() const { return field_; }

  [[nodiscard]] Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  [[nodiscard]] const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  /// Bounds-checked access; throws input_error out of range.
  [[nodiscard]] Scalar& at(std::size_t r, std::size_t c);
  [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const;

  [[nodiscard]] bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  [[nodiscard]] Matrix transpose() const;

  [[nodiscard]] std::vector<Scalar> col(std::size_t j) const;
  [[nodiscard]] std::vector<Scalar> row(std::size_t i) const;
  void set_col(std::size_t j, const std::vector<Scalar>& v);
  void set_row(std::size_t i, const std::vector<Scalar>& v);

  /// Matrix-vector product.
  [[nodiscard]] std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Column vector from coordinates.
  static Matrix column(const FieldSpec& field, const std::vector<Scalar>& v);
  /// Row vector from coordinates.
  static Matrix row_vector(const FieldSpec& field, const std::vector<Scalar>& v);

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
[[nodiscard]] RrefResult rref(const Matrix& m);

/// Two-sided inverse, or nullopt when singular. Throws input_error when the
/// input is not square.
[[nodiscard]] std::optional<Matrix> invert(const Matrix& m);

/// True iff m is square with full rank.
[[nodiscard]] bool is_invertible(const Matrix& m);

/// Rows form a basis of the right null space {v : m v^T = 0}; row count is
/// cols - rank. Basis vectors are indexed by the free columns, ascending.
[[nodiscard]] Matrix kernel_basis(const Matrix& m);

/// Canonical solution of m x = rhs (free variables set to zero after row
/// reduction), or nullopt when the system is inconsistent.
[[nodiscard]] std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                                       const std::vector<Scalar>& rhs);

/// Kronecker product under the left-factor-major convention:
/// (a (x) b)[(i*rows_b + k), (j*cols_b + l)] = a[i,j] * b[k,l].
[[nodiscard]] Matrix kronecker(const Matrix& a, const Matrix& b);

/// Row span maintained in echelon form under incremental insertion: each
/// basis row is normalized to a leading 1 at its pivot column and rows are
/// kept in ascending pivot order. Memory stays proportional to
/// rank x ambient no matter how many rows are inserted.
class RowSpan {
 public:
  RowSpan(const FieldSpec& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  /// Reduces the row against the current basis and absorbs any remainder.
  void insert(std::vector<Scalar> row);

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  /// True iff the row lies in the current span.
  [[nodiscard]] bool contains(std::vector<Scalar> row) const;
  /// The echelon basis as a rank x ambient matrix.
  [[nodiscard]] Matrix basis_rows() const;

 private:
  /// Eliminates the basis pivots from the row in place; returns the column
  /// of its leading nonzero afterwards, or ambient when it reduced to zero.
  std::size_t reduce_row(std::vector<Scalar>& row) const;

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

/// A finite-dimensional quotient V / span(relations) with a deterministic
/// normal form: canonical representatives have zero coordinates at the pivot
/// columns of the relations' rref.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Matrix relations;                   ///< rref of the relation span, zero rows dropped
  std::vector<std::size_t> pivot_cols;
  Matrix reduce;                      ///< dim x ambient: ambient coords -> quotient coords
  Matrix section;                     ///< ambient x dim: quotient coords -> canonical reps

  [[nodiscard]] std::size_t dim() const { return reduce.rows(); }
};

/// Quotient of k^ambient_dim by the row span of relation_rows.
/// reduce annihilates every relation row; reduce * section = identity.
[[nodiscard]] QuotientSpace quotient_by_rows(std::size_t ambient_dim, const Matrix& relation_rows);

/// The permutation matrix reordering tensor legs: source legs have
/// dimensions dims[0..k-1]; target position t carries source leg perm[t].
/// Indices flatten left-factor-major on both sides.
[[nodiscard]] Matrix tensor_leg_permutation(const FieldSpec& field,
                                            const std::vector<std::size_t>& dims,
                                            const std::vector<std::size_t>& perm);

}  // namespace gabikit
