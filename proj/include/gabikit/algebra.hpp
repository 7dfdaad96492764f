// Finite-dimensional unital associative algebras presented by structure
// constants, plus the opposite/tensor constructions and algebra-map checks.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gabikit/matrix.hpp"
#include "gabikit/report.hpp"
#include "gabikit/scalar.hpp"

namespace gabikit {

/// An algebra over an exact field: basis e_0..e_{n-1}, products
/// e_i * e_j = sum_k mul[i][j][k] e_k, and the coordinates of 1.
struct FinAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;                  ///< n labels, reporting only
  std::vector<std::vector<std::vector<Scalar>>> mul;     ///< mul[i][j] = coords of e_i e_j
  std::vector<Scalar> unit;                              ///< coords of 1

  /// Throws input_error unless mul is n x n x n, unit has length n, and
  /// basis_names has n entries.
  void validate_shape() const;

  /// Name of basis element i, for findings and derived-data labels.
  [[nodiscard]] const std::string& name(std::size_t i) const { return basis_names[i]; }
};

/// A k-linear map between tensor powers of algebras, stored as a matrix
/// (rows = product of target dims, cols = product of source dims).
struct LinMapA {
  std::vector<std::size_t> source_dims;
  std::vector<std::size_t> target_dims;
  Matrix matrix;

  LinMapA(std::vector<std::size_t> src, std::vector<std::size_t> tgt, Matrix m);

  [[nodiscard]] std::size_t source_dim() const;
  [[nodiscard]] std::size_t target_dim() const;
};

/// Check all n^3 associativity identities and the 2n unit identities exactly;
/// every violated triple becomes a finding.
[[nodiscard]] Report check_algebra(const FinAlgebra& a);

/// Bilinear extension of the multiplication table to coordinate vectors.
[[nodiscard]] std::vector<Scalar> multiply(const FinAlgebra& a, const std::vector<Scalar>& u,
                                           const std::vector<Scalar>& v);

/// Opposite algebra: same space and unit, products reversed.
[[nodiscard]] FinAlgebra opposite(const FinAlgebra& a);

/// Tensor product algebra with componentwise product (x (x) y)(x' (x) y') =
/// xx' (x) yy'; basis index of e_i (x) f_j is i * dim(b) + j.
[[nodiscard]] FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b);

/// Verify f(e_i e_j) = f(e_i) f(e_j) on all basis pairs and f(1) = 1.
[[nodiscard]] Report is_algebra_map(const LinMapA& f, const FinAlgebra& a, const FinAlgebra& b);

/// An augmentation is an algebra map A -> k onto the base field.
[[nodiscard]] Report is_augmentation(const LinMapA& eps, const FinAlgebra& a);

/// The base field as the 1-dimensional algebra (basis name "1").
[[nodiscard]] FinAlgebra field_algebra(const FieldSpec& field);

/// Multiplication as a linear map A (x) A -> A: the n x n^2 matrix whose
/// column i*n+j holds the coordinates of e_i e_j.
[[nodiscard]] Matrix mul_matrix(const FinAlgebra& a);

/// Left multiplication operator L_x (n x n), column j = x * e_j.
[[nodiscard]] Matrix left_mul(const FinAlgebra& a, const std::vector<Scalar>& x);

/// Right multiplication operator R_x (n x n), column j = e_j * x.
[[nodiscard]] Matrix right_mul(const FinAlgebra& a, const std::vector<Scalar>& x);

/// The unit as a linear map k -> A (an n x 1 matrix).
[[nodiscard]] Matrix unit_matrix(const FinAlgebra& a);

/// Structural equality of field, dimension, table, and unit (labels ignored).
[[nodiscard]] bool same_table(const FinAlgebra& a, const FinAlgebra& b);

/// Render a coordinate vector as a linear combination of named basis
/// elements, e.g. "1 - 2*g"; "0" for the zero vector.
[[nodiscard]] std::string format_element(const FinAlgebra& a, const std::vector<Scalar>& coords);

}  // namespace gabikit
