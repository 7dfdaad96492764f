#include "gabikit/matrix.hpp"

#include <algorithm>
#include <string>

namespace gabikit {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    throw input_error("field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) {
    throw input_error("index (" + std::to_string(r) + "," + std::to_string(c) +
                      ") out of range for " + shape(*this) + " matrix");
  }
  return (*this)(r, c);
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  return const_cast<Matrix&>(*this).at(r, c);
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw input_error("shape mismatch in sum: " + shape(*this) + " vs " + shape(o));
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw input_error("shape mismatch in difference: " + shape(*this) + " vs " + shape(o));
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= o.entries_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(*this, o);
  if (cols_ != o.rows_) {
    throw input_error("shape mismatch in product: " + shape(*this) + " * " + shape(o));
  }
  Matrix out(field_, rows_, o.cols_);
  // i-k-j order with zero skips: the toolkit's matrices are mostly sparse.
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out(*this);
  for (Scalar& e : out.entries_) e *= s;
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (Scalar& e : out.entries_) e = -e;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.entries_ == b.entries_;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_col(std::size_t j, const std::vector<Scalar>& v) {
  if (v.size() != rows_) throw input_error("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(std::size_t i, const std::vector<Scalar>& v) {
  if (v.size() != cols_) throw input_error("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) {
    throw input_error("vector length " + std::to_string(v.size()) + " does not match " +
                      shape(*this) + " matrix");
  }
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& e = (*this)(i, j);
      if (!e.is_zero()) out[i] += e * v[j];
    }
  }
  return out;
}

Matrix Matrix::column(const FieldSpec& field, const std::vector<Scalar>& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::row_vector(const FieldSpec& field, const std::vector<Scalar>& v) {
  Matrix m(field, 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

RrefResult rref(const Matrix& input) {
  RrefResult res{input, {}, 0};
  Matrix& m = res.matrix;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    }
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = res.pivots.size();
  return res;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw input_error("cannot invert a " + shape(m) + " matrix");
  }
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  }
  return inv;
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rref(m).rank == m.rows();
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, pi = 0; c < m.cols(); ++c) {
    if (pi < r.pivots.size() && r.pivots[pi] == c) {
      ++pi;
    } else {
      free_cols.push_back(c);
    }
  }
  Matrix basis(m.field(), free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(k, free_cols[k]) = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) {
      basis(k, r.pivots[i]) = -r.matrix(i, free_cols[k]);
    }
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw input_error("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto r = rref(aug);
  std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;  // pivot in the rhs column
    x[r.pivots[i]] = r.matrix(i, m.cols());
  }
  return x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (!bkl.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
      }
    }
  }
  return out;
}

QuotientSpace quotient_by_rows(std::size_t ambient_dim, const Matrix& relation_rows) {
  if (relation_rows.cols() != ambient_dim) {
    throw input_error("relation rows have length " + std::to_string(relation_rows.cols()) +
                      ", ambient dimension is " + std::to_string(ambient_dim));
  }
  const FieldSpec& field = relation_rows.field();
  RrefResult r = rref(relation_rows);

  Matrix relations(field, r.rank, ambient_dim);
  for (std::size_t i = 0; i < r.rank; ++i) relations.set_row(i, r.matrix.row(i));

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0, pi = 0; c < ambient_dim; ++c) {
    if (pi < r.pivots.size() && r.pivots[pi] == c) {
      ++pi;
    } else {
      free_cols.push_back(c);
    }
  }
  const std::size_t q = free_cols.size();

  // Canonical representatives carry zero at every pivot column: subtracting
  // sum_i v[p_i] * relations[i] from v clears the pivot coordinates, leaving
  // v[f_j] - sum_i relations[i][f_j] * v[p_i] at the free columns.
  Matrix reduce(field, q, ambient_dim);
  for (std::size_t j = 0; j < q; ++j) {
    reduce(j, free_cols[j]) = Scalar::one(field);
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Scalar& coeff = relations(i, free_cols[j]);
      if (!coeff.is_zero()) reduce(j, r.pivots[i]) = -coeff;
    }
  }
  Matrix section(field, ambient_dim, q);
  for (std::size_t j = 0; j < q; ++j) section(free_cols[j], j) = Scalar::one(field);

  return QuotientSpace{ambient_dim, std::move(relations), std::move(r.pivots), std::move(reduce),
                       std::move(section)};
}

std::size_t RowSpan::reduce_row(std::vector<Scalar>& row) const {
  // Pivots ascend, and each basis row's support starts at its pivot, so one
  // left-to-right sweep clears every pivot coordinate.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p].is_zero()) continue;
    const Scalar f = row[p];
    const std::vector<Scalar>& basis = rows_[k];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (basis[j].is_zero()) continue;
      row[j] -= f * basis[j];
    }
  }
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!row[j].is_zero()) return j;
  }
  return ambient_;
}

void RowSpan::insert(std::vector<Scalar> row) {
  if (row.size() != ambient_) throw input_error("row span: row length mismatch");
  for (const Scalar& s : row) {
    if (!(s.field() == field_)) throw input_error("row span: field mismatch");
  }
  const std::size_t p = reduce_row(row);
  if (p == ambient_) return;
  const Scalar inv = row[p].inverse();
  for (std::size_t j = p; j < ambient_; ++j) {
    if (!row[j].is_zero()) row[j] *= inv;
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
}

bool RowSpan::contains(std::vector<Scalar> row) const {
  if (row.size() != ambient_) throw input_error("row span: row length mismatch");
  return reduce_row(row) == ambient_;
}

Matrix RowSpan::basis_rows() const {
  Matrix out(field_, rows_.size(), ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) out.set_row(i, rows_[i]);
  return out;
}

Matrix tensor_leg_permutation(const FieldSpec& field, const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& perm) {
  if (perm.size() != dims.size()) throw input_error("leg permutation arity mismatch");
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  Matrix out(field, total, total);
  std::vector<std::size_t> digit(dims.size(), 0);
  for (std::size_t src = 0; src < total; ++src) {
    std::size_t rem = src;
    for (std::size_t leg = dims.size(); leg-- > 0;) {
      digit[leg] = rem % dims[leg];
      rem /= dims[leg];
    }
    std::size_t dst = 0;
    for (std::size_t t = 0; t < perm.size(); ++t) {
      dst = dst * dims[perm[t]] + digit[perm[t]];
    }
    out(dst, src) = Scalar::one(field);
  }
  return out;
}

}  // namespace gabikit
