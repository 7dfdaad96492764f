#include "gabikit/coalgebra.hpp"

namespace gabikit {

namespace {

// Columns i of two equal-shaped matrices that differ become findings.
void report_column_mismatches(Report& report, const Matrix& lhs, const Matrix& rhs,
                              const std::string& axiom, const std::string& detail,
                              const std::vector<std::string>* names = nullptr) {
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    if (lhs.col(j) != rhs.col(j)) {
      std::string witness = names ? (*names)[j] : "e" + std::to_string(j);
      report.fail(axiom, witness, detail);
    }
  }
}

}  // namespace

void CoalgebraData::validate_shape() const {
  if (comul.rows() != dim * dim || comul.cols() != dim)
    throw input_error("comultiplication matrix must be " + std::to_string(dim * dim) + "x" +
                      std::to_string(dim) + ", got " + std::to_string(comul.rows()) + "x" +
                      std::to_string(comul.cols()));
  if (counit.rows() != 1 || counit.cols() != dim)
    throw input_error("counit matrix must be 1x" + std::to_string(dim));
  if (!(comul.field() == field) || !(counit.field() == field))
    throw input_error("coalgebra matrices use the wrong field");
}

void BialgebraData::validate_shape() const {
  algebra.validate_shape();
  coalgebra.validate_shape();
  if (algebra.dim != coalgebra.dim || !(algebra.field == coalgebra.field))
    throw input_error("algebra and coalgebra live on different spaces");
}

std::string to_string(AntipodeSide side) {
  switch (side) {
    case AntipodeSide::Left: return "Left";
    case AntipodeSide::Right: return "Right";
    default: return "TwoSided";
  }
}

Report check_coalgebra(const CoalgebraData& c) {
  c.validate_shape();
  Report report;
  const auto id = Matrix::identity(c.field, c.dim);
  // (Delta (x) id) . Delta = (id (x) Delta) . Delta as n^3 x n matrices.
  auto lhs = kronecker(c.comul, id) * c.comul;
  auto rhs = kronecker(id, c.comul) * c.comul;
  report_column_mismatches(report, lhs, rhs, "coassociativity",
                           "(Delta (x) id).Delta differs from (id (x) Delta).Delta");
  // (eps (x) id) . Delta = id and (id (x) eps) . Delta = id.
  report_column_mismatches(report, kronecker(c.counit, id) * c.comul, id, "counitality",
                           "(eps (x) id).Delta is not the identity");
  report_column_mismatches(report, kronecker(id, c.counit) * c.comul, id, "counitality",
                           "(id (x) eps).Delta is not the identity");
  return report;
}

Report check_bialgebra(const BialgebraData& b) {
  b.validate_shape();
  Report report;
  report.merge(check_algebra(b.algebra), "algebra");
  report.merge(check_coalgebra(b.coalgebra), "coalgebra");
  // Delta: A -> A (x) A with the componentwise product; eps: A -> k.
  auto square = tensor_algebra(b.algebra, b.algebra);
  LinMapA comul({b.algebra.dim}, {b.algebra.dim, b.algebra.dim}, b.coalgebra.comul);
  report.merge(is_algebra_map(comul, b.algebra, square), "comultiplication");
  LinMapA counit({b.algebra.dim}, {1}, b.coalgebra.counit);
  report.merge(is_augmentation(counit, b.algebra), "counit");
  return report;
}

Matrix convolution(const Matrix& f, const Matrix& g, const BialgebraData& b) {
  const std::size_t n = b.algebra.dim;
  if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n)
    throw input_error("convolution expects n x n matrices");
  return mul_matrix(b.algebra) * kronecker(f, g) * b.coalgebra.comul;
}

namespace {

// Slice p of the comultiplication: (C_p)[q][j] = Delta[(p*n+q), j], so that
// Delta(e_j) = sum_{p,q} (C_p)[q][j] e_p (x) e_q.
Matrix comul_slice(const CoalgebraData& c, std::size_t p) {
  Matrix s(c.field, c.dim, c.dim);
  for (std::size_t q = 0; q < c.dim; ++q)
    for (std::size_t j = 0; j < c.dim; ++j) s(q, j) = c.comul(p * c.dim + q, j);
  return s;
}

// Coefficient matrix of S |-> m.(id (x) S).Delta (Right) or
// m.(S (x) id).Delta (Left) acting on the row-major vectorization of S.
Matrix convolution_system(const BialgebraData& b, AntipodeSide side) {
  const std::size_t n = b.algebra.dim;
  Matrix system(b.algebra.field, n * n, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Scalar> basis(n, Scalar::zero(b.algebra.field));
    basis[p] = Scalar::one(b.algebra.field);
    if (side == AntipodeSide::Right) {
      // sum_p L_{e_p} S C_p with (C_p)[q][j] the Delta coefficients:
      // vec_row(L S C) = (L (x) C^T) vec_row(S).
      system = system + kronecker(left_mul(b.algebra, basis), comul_slice(b.coalgebra, p).transpose());
    } else {
      // sum_q R_{e_q} S D_q where (D_q)[p][j] = Delta[(p*n+q), j].
      Matrix d(b.algebra.field, n, n);
      for (std::size_t p2 = 0; p2 < n; ++p2)
        for (std::size_t j = 0; j < n; ++j) d(p2, j) = b.coalgebra.comul(p2 * n + p, j);
      system = system + kronecker(right_mul(b.algebra, basis), d.transpose());
    }
  }
  return system;
}

std::vector<Scalar> vec_row(const Matrix& m) {
  std::vector<Scalar> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

std::optional<AntipodeCandidate> solve_antipode(const BialgebraData& b, AntipodeSide side) {
  b.validate_shape();
  const std::size_t n = b.algebra.dim;
  auto target = vec_row(unit_matrix(b.algebra) * b.coalgebra.counit);
  Matrix system(b.algebra.field, 0, 0);
  std::vector<Scalar> rhs;
  if (side == AntipodeSide::TwoSided) {
    // Stack the Right and Left systems.
    auto right = convolution_system(b, AntipodeSide::Right);
    auto left = convolution_system(b, AntipodeSide::Left);
    Matrix stacked(b.algebra.field, 2 * n * n, n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      stacked.set_row(i, right.row(i));
      stacked.set_row(n * n + i, left.row(i));
    }
    system = stacked;
    rhs = target;
    rhs.insert(rhs.end(), target.begin(), target.end());
  } else {
    system = convolution_system(b, side);
    rhs = target;
  }
  auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  Matrix s(b.algebra.field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = (*x)[i * n + j];
  return AntipodeCandidate{s, side};
}

Report check_anti_bialgebra_map(const Matrix& S, const BialgebraData& b) {
  b.validate_shape();
  const std::size_t n = b.algebra.dim;
  if (S.rows() != n || S.cols() != n) throw input_error("antipode matrix must be n x n");
  Report report;
  const auto& a = b.algebra;
  // S(uv) = S(v) S(u) on basis pairs.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = S.apply(a.mul[i][j]);
      auto rhs = multiply(a, S.col(j), S.col(i));
      if (lhs != rhs)
        report.fail("anti-multiplicativity", "(" + a.name(i) + ", " + a.name(j) + ")",
                    "S(uv) = " + format_element(a, lhs) + " but S(v)S(u) = " +
                        format_element(a, rhs));
    }
  if (S.apply(a.unit) != a.unit)
    report.fail("unit", "S(1)", "got " + format_element(a, S.apply(a.unit)));
  // (S (x) S) . Delta = twist . Delta . S.
  auto twist = tensor_leg_permutation(a.field, {n, n}, {1, 0});
  auto lhs = kronecker(S, S) * b.coalgebra.comul;
  auto rhs = twist * b.coalgebra.comul * S;
  for (std::size_t j = 0; j < n; ++j)
    if (lhs.col(j) != rhs.col(j))
      report.fail("anti-comultiplicativity", a.name(j),
                  "(S (x) S).Delta differs from twist.Delta.S");
  // eps . S = eps.
  auto eps_s = b.coalgebra.counit * S;
  for (std::size_t j = 0; j < n; ++j)
    if (!(eps_s(0, j) == b.coalgebra.counit(0, j)))
      report.fail("counit", a.name(j), "eps(S(a)) != eps(a)");
  return report;
}

}  // namespace gabikit
