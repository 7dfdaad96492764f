#include "gabikit/algebra.hpp"

#include <numeric>
#include <sstream>

namespace gabikit {

namespace {

std::string pair_witness(const FinAlgebra& a, std::size_t i, std::size_t j) {
  return "(" + a.name(i) + ", " + a.name(j) + ")";
}

std::string triple_witness(const FinAlgebra& a, std::size_t i, std::size_t j, std::size_t l) {
  return "(" + a.name(i) + ", " + a.name(j) + ", " + a.name(l) + ")";
}

}  // namespace

void FinAlgebra::validate_shape() const {
  if (basis_names.size() != dim)
    throw input_error("algebra has " + std::to_string(basis_names.size()) + " basis names for dimension " +
                      std::to_string(dim));
  if (unit.size() != dim) throw input_error("unit vector length does not match dimension");
  if (mul.size() != dim) throw input_error("multiplication table has wrong row count");
  for (std::size_t i = 0; i < dim; ++i) {
    if (mul[i].size() != dim)
      throw input_error("multiplication table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < dim; ++j)
      if (mul[i][j].size() != dim)
        throw input_error("product entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") has wrong coefficient count");
  }
  for (const auto& s : unit)
    if (!(s.field() == field)) throw input_error("unit coefficients use the wrong field");
}

LinMapA::LinMapA(std::vector<std::size_t> src, std::vector<std::size_t> tgt, Matrix m)
    : source_dims(std::move(src)), target_dims(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target_dim() || matrix.cols() != source_dim())
    throw input_error("linear map matrix is " + std::to_string(matrix.rows()) + "x" +
                      std::to_string(matrix.cols()) + " but declared dims need " +
                      std::to_string(target_dim()) + "x" + std::to_string(source_dim()));
}

std::size_t LinMapA::source_dim() const {
  return std::accumulate(source_dims.begin(), source_dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::size_t LinMapA::target_dim() const {
  return std::accumulate(target_dims.begin(), target_dims.end(), std::size_t{1},
                         std::multiplies<>());
}

Report check_algebra(const FinAlgebra& a) {
  a.validate_shape();
  Report report;
  // Unitality: 1 * e_i = e_i = e_i * 1.
  for (std::size_t i = 0; i < a.dim; ++i) {
    std::vector<Scalar> basis(a.dim, Scalar::zero(a.field));
    basis[i] = Scalar::one(a.field);
    if (multiply(a, a.unit, basis) != basis)
      report.fail("unitality", "1 * " + a.name(i),
                  "got " + format_element(a, multiply(a, a.unit, basis)));
    if (multiply(a, basis, a.unit) != basis)
      report.fail("unitality", a.name(i) + " * 1",
                  "got " + format_element(a, multiply(a, basis, a.unit)));
  }
  // Associativity on all basis triples.
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t l = 0; l < a.dim; ++l) {
        std::vector<Scalar> el(a.dim, Scalar::zero(a.field));
        el[l] = Scalar::one(a.field);
        auto lhs = multiply(a, a.mul[i][j], el);
        std::vector<Scalar> ei(a.dim, Scalar::zero(a.field));
        ei[i] = Scalar::one(a.field);
        auto rhs = multiply(a, ei, a.mul[j][l]);
        if (lhs != rhs)
          report.fail("associativity", triple_witness(a, i, j, l),
                      format_element(a, lhs) + " != " + format_element(a, rhs));
      }
  return report;
}

std::vector<Scalar> multiply(const FinAlgebra& a, const std::vector<Scalar>& u,
                             const std::vector<Scalar>& v) {
  if (u.size() != a.dim || v.size() != a.dim)
    throw input_error("multiply: vector length does not match algebra dimension");
  std::vector<Scalar> out(a.dim, Scalar::zero(a.field));
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (v[j].is_zero()) continue;
      auto coeff = u[i] * v[j];
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (a.mul[i][j][k].is_zero()) continue;
        out[k] += coeff * a.mul[i][j][k];
      }
    }
  }
  return out;
}

FinAlgebra opposite(const FinAlgebra& a) {
  FinAlgebra op = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) op.mul[i][j] = a.mul[j][i];
  return op;
}

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  if (!(a.field == b.field))
    throw input_error("tensor_algebra: fields differ (" + a.field.to_string() + " vs " +
                      b.field.to_string() + ")");
  FinAlgebra t{a.field, a.dim * b.dim, {}, {}, {}};
  t.basis_names.reserve(t.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      t.basis_names.push_back(a.name(i) + "(x)" + b.name(j));
  t.unit.assign(t.dim, Scalar::zero(t.field));
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (a.unit[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.dim; ++j) {
      if (b.unit[j].is_zero()) continue;
      t.unit[i * b.dim + j] = a.unit[i] * b.unit[j];
    }
  }
  t.mul.assign(t.dim, std::vector<std::vector<Scalar>>(
                          t.dim, std::vector<Scalar>(t.dim, Scalar::zero(t.field))));
  for (std::size_t i1 = 0; i1 < a.dim; ++i1)
    for (std::size_t j1 = 0; j1 < b.dim; ++j1)
      for (std::size_t i2 = 0; i2 < a.dim; ++i2)
        for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
          auto& entry = t.mul[i1 * b.dim + j1][i2 * b.dim + j2];
          for (std::size_t k1 = 0; k1 < a.dim; ++k1) {
            if (a.mul[i1][i2][k1].is_zero()) continue;
            for (std::size_t k2 = 0; k2 < b.dim; ++k2) {
              if (b.mul[j1][j2][k2].is_zero()) continue;
              entry[k1 * b.dim + k2] = a.mul[i1][i2][k1] * b.mul[j1][j2][k2];
            }
          }
        }
  return t;
}

Report is_algebra_map(const LinMapA& f, const FinAlgebra& a, const FinAlgebra& b) {
  if (f.matrix.rows() != b.dim || f.matrix.cols() != a.dim)
    throw input_error("is_algebra_map: matrix is " + std::to_string(f.matrix.rows()) + "x" +
                      std::to_string(f.matrix.cols()) + ", expected " + std::to_string(b.dim) +
                      "x" + std::to_string(a.dim));
  Report report;
  if (f.matrix.apply(a.unit) != b.unit)
    report.fail("unit", "f(1)",
                "got " + format_element(b, f.matrix.apply(a.unit)) + ", expected " +
                    format_element(b, b.unit));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      auto lhs = f.matrix.apply(a.mul[i][j]);
      auto rhs = multiply(b, f.matrix.col(i), f.matrix.col(j));
      if (lhs != rhs)
        report.fail("multiplicativity", pair_witness(a, i, j),
                    "f(xy) = " + format_element(b, lhs) + " but f(x)f(y) = " +
                        format_element(b, rhs));
    }
  return report;
}

Report is_augmentation(const LinMapA& eps, const FinAlgebra& a) {
  return is_algebra_map(eps, a, field_algebra(a.field));
}

FinAlgebra field_algebra(const FieldSpec& field) {
  FinAlgebra k{field, 1, {"1"}, {}, {Scalar::one(field)}};
  k.mul = {{{Scalar::one(field)}}};
  return k;
}

Matrix mul_matrix(const FinAlgebra& a) {
  Matrix m(a.field, a.dim, a.dim * a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) m.set_col(i * a.dim + j, a.mul[i][j]);
  return m;
}

Matrix left_mul(const FinAlgebra& a, const std::vector<Scalar>& x) {
  Matrix m(a.field, a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    std::vector<Scalar> col(a.dim, Scalar::zero(a.field));
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (a.mul[i][j][k].is_zero()) continue;
        col[k] += x[i] * a.mul[i][j][k];
      }
    }
    m.set_col(j, col);
  }
  return m;
}

Matrix right_mul(const FinAlgebra& a, const std::vector<Scalar>& x) {
  Matrix m(a.field, a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    std::vector<Scalar> col(a.dim, Scalar::zero(a.field));
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (a.mul[j][i][k].is_zero()) continue;
        col[k] += x[i] * a.mul[j][i][k];
      }
    }
    m.set_col(j, col);
  }
  return m;
}

Matrix unit_matrix(const FinAlgebra& a) {
  Matrix m(a.field, a.dim, 1);
  m.set_col(0, a.unit);
  return m;
}

bool same_table(const FinAlgebra& a, const FinAlgebra& b) {
  return a.field == b.field && a.dim == b.dim && a.mul == b.mul && a.unit == b.unit;
}

std::string format_element(const FinAlgebra& a, const std::vector<Scalar>& coords) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coords.size() && i < a.dim; ++i) {
    if (coords[i].is_zero()) continue;
    if (!first) out << " + ";
    if (coords[i].is_one())
      out << a.name(i);
    else
      out << coords[i].to_string() << "*" << a.name(i);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace gabikit
