#include <doctest.h>

#include <random>

#include "gabikit/matrix.hpp"
#include "gabikit/report.hpp"
#include "test_util.hpp"

using gabikit::Matrix;
using gabikit::input_error;
using gabikit::Scalar;
using gabitest::F;
using gabitest::mat;
using gabitest::matq;
using gabitest::Q;
using gabitest::random_matrix;
using gabitest::sc;
using gabitest::vec;

TEST_SUITE_BEGIN("matrix");

TEST_CASE("rref of a rank-one square matrix") {
  auto r = gabikit::rref(mat(Q(), {{1, 1}, {1, 1}}));
  CHECK(r.rank == 1);
  CHECK(r.matrix == mat(Q(), {{1, 1}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref scales pivot rows") {
  auto r = gabikit::rref(mat(Q(), {{2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.matrix == mat(Q(), {{1, 2}}));
}

TEST_CASE("rref of identity is identity") {
  auto id = Matrix::identity(Q(), 3);
  auto r = gabikit::rref(id);
  CHECK(r.rank == 3);
  CHECK(r.matrix == id);
}

TEST_CASE("rref eliminates above and below pivots") {
  auto r = gabikit::rref(mat(Q(), {{0, 2, 1}, {1, 1, 1}, {2, 0, 1}}));
  CHECK(r.rank == 2);
  CHECK(r.matrix == matq({{"1", "0", "1/2"}, {"0", "1", "1/2"}, {"0", "0", "0"}}));
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    auto field = trial % 2 == 0 ? Q() : F(5);
    auto m = random_matrix(field, 4, 6, rng);
    auto r1 = gabikit::rref(m);
    auto r2 = gabikit::rref(r1.matrix);
    CHECK(r1.matrix == r2.matrix);
    CHECK(r1.rank == r2.rank);
  }
}

TEST_CASE("invert identity and a 2x2 example") {
  CHECK(*gabikit::invert(Matrix::identity(F(7), 4)) == Matrix::identity(F(7), 4));
  auto m = mat(Q(), {{1, 2}, {3, 4}});
  auto inv = gabikit::invert(m);
  REQUIRE(inv.has_value());
  CHECK(*inv == matq({{"-2", "1"}, {"3/2", "-1/2"}}));
  CHECK(m * *inv == Matrix::identity(Q(), 2));
}

TEST_CASE("invert reports singular matrices") {
  CHECK_FALSE(gabikit::invert(mat(Q(), {{1, 1}, {1, 1}})).has_value());
  CHECK_FALSE(gabikit::invert(mat(F(2), {{1, 1}, {1, 1}})).has_value());
  CHECK_FALSE(gabikit::is_invertible(mat(Q(), {{0}})));
  CHECK(gabikit::is_invertible(mat(Q(), {{5}})));
}

TEST_CASE("invert rejects non-square input") {
  CHECK_THROWS_AS((void)gabikit::invert(mat(Q(), {{1, 2}})), input_error);
}

TEST_CASE("random invertible matrices invert exactly") {
  std::mt19937_64 rng(99);
  int found = 0;
  while (found < 10) {
    auto field = found % 2 == 0 ? Q() : F(13);
    auto m = random_matrix(field, 4, 4, rng);
    auto inv = gabikit::invert(m);
    if (!inv) continue;
    ++found;
    CHECK(m * *inv == Matrix::identity(field, 4));
    CHECK(*inv * m == Matrix::identity(field, 4));
  }
}

TEST_CASE("kernel of [[1,1]] over F2") {
  auto basis = gabikit::kernel_basis(mat(F(2), {{1, 1}}));
  REQUIRE(basis.rows() == 1);
  CHECK(basis.row(0) == vec(F(2), {1, 1}));
}

TEST_CASE("kernel of identity is empty; kernel of zero map is everything") {
  CHECK(gabikit::kernel_basis(Matrix::identity(Q(), 3)).rows() == 0);
  auto basis = gabikit::kernel_basis(Matrix(Q(), 2, 3));
  REQUIRE(basis.rows() == 3);
  CHECK(basis == Matrix::identity(Q(), 3));
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto field = trial % 2 == 0 ? Q() : F(3);
    auto m = random_matrix(field, 3, 5, rng);
    auto r = gabikit::rref(m);
    auto basis = gabikit::kernel_basis(m);
    CHECK(r.rank + basis.rows() == 5);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      auto image = m.apply(basis.row(i));
      for (const auto& e : image) CHECK(e.is_zero());
    }
  }
}

TEST_CASE("kronecker products") {
  CHECK(gabikit::kronecker(Matrix::identity(Q(), 2), Matrix::identity(Q(), 3)) ==
        Matrix::identity(Q(), 6));
  CHECK(gabikit::kronecker(mat(Q(), {{2}}), mat(Q(), {{3}})) == mat(Q(), {{6}}));
  auto a = mat(Q(), {{1, 2}, {3, 4}});
  auto b = mat(Q(), {{0, 1}, {1, 0}});
  auto k = gabikit::kronecker(a, b);
  CHECK(k == mat(Q(), {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
}

TEST_CASE("kronecker respects composition") {
  std::mt19937_64 rng(7);
  auto a = random_matrix(Q(), 2, 3, rng);
  auto b = random_matrix(Q(), 3, 2, rng);
  auto c = random_matrix(Q(), 2, 2, rng);
  auto d = random_matrix(Q(), 2, 3, rng);
  // (a*b) (x) (c*d) == (a (x) c) * (b (x) d)
  CHECK(gabikit::kronecker(a * b, c * d) ==
        gabikit::kronecker(a, c) * gabikit::kronecker(b, d));
}

TEST_CASE("kronecker matches the tensor basis convention") {
  // With e_i (x) e_j |-> i*dimSecond + j, applying f (x) g to e_1 (x) e_0
  // must give f(e_1) (x) g(e_0).
  auto f = mat(Q(), {{1, 2}, {3, 4}});
  auto g = mat(Q(), {{5, 6}, {7, 8}});
  auto k = gabikit::kronecker(f, g);
  auto out = k.apply(vec(Q(), {0, 0, 1, 0}));  // e_1 (x) e_0 at index 1*2+0
  // f(e_1) = (2,4), g(e_0) = (5,7); tensor = (10,14,20,28)
  CHECK(out == vec(Q(), {10, 14, 20, 28}));
}

TEST_CASE("tensor leg permutation swaps factors") {
  // swap: V (x) W -> W (x) V with dims {2,3}; target position 0 carries source leg 1.
  auto p = gabikit::tensor_leg_permutation(Q(), {2, 3}, {1, 0});
  // e_1 (x) e_2 (index 1*3+2=5) |-> e_2 (x) e_1 (index 2*2+1=5 in W (x) V)
  auto out = p.apply(vec(Q(), {0, 0, 0, 0, 0, 1}));
  CHECK(out[5].is_one());
  // e_0 (x) e_2 (index 2) |-> e_2 (x) e_0 (index 4)
  auto out2 = p.apply(vec(Q(), {0, 0, 1, 0, 0, 0}));
  CHECK(out2[4].is_one());
  // Permutation matrices of mutually inverse permutations compose to identity.
  auto q = gabikit::tensor_leg_permutation(Q(), {3, 2}, {1, 0});
  CHECK(q * p == Matrix::identity(Q(), 6));
}

TEST_CASE("three-leg permutation") {
  // Cycle legs of V0 (x) V1 (x) V2 (dims 2,3,4) so position t carries leg perm[t]={2,0,1}.
  auto p = gabikit::tensor_leg_permutation(Q(), {2, 3, 4}, {2, 0, 1});
  // e_1 (x) e_2 (x) e_3 has index 1*12 + 2*4 + 3 = 23.
  std::vector<Scalar> e(24, Scalar::zero(Q()));
  e[23] = Scalar::one(Q());
  auto out = p.apply(e);
  // Output lives in V2 (x) V0 (x) V1 (dims 4,2,3): e_3 (x) e_1 (x) e_2 at 3*6 + 1*3 + 2 = 23.
  CHECK(out[23].is_one());
  // A second probe: e_0 (x) e_1 (x) e_2 (index 0*12+1*4+2=6) -> e_2 (x) e_0 (x) e_1 (index 2*6+0+1=13).
  std::vector<Scalar> e2(24, Scalar::zero(Q()));
  e2[6] = Scalar::one(Q());
  CHECK(p.apply(e2)[13].is_one());
}

TEST_CASE("quotient by a single relation identifies basis vectors") {
  // V = Q^2, relation e_0 - e_1: quotient is 1-dimensional and both images agree.
  auto q = gabikit::quotient_by_rows(2, mat(Q(), {{1, -1}}));
  CHECK(q.dim() == 1);
  auto r0 = q.reduce.apply(vec(Q(), {1, 0}));
  auto r1 = q.reduce.apply(vec(Q(), {0, 1}));
  CHECK(r0 == r1);
}

TEST_CASE("quotient with no relations is the identity") {
  auto q = gabikit::quotient_by_rows(3, Matrix(Q(), 0, 3));
  CHECK(q.dim() == 3);
  CHECK(q.reduce == Matrix::identity(Q(), 3));
  CHECK(q.section == Matrix::identity(Q(), 3));
}

TEST_CASE("quotient kills the relation span exactly") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    auto field = trial % 2 == 0 ? Q() : F(5);
    auto rel = random_matrix(field, 3, 5, rng);
    auto q = gabikit::quotient_by_rows(5, rel);
    auto r = gabikit::rref(rel);
    CHECK(q.dim() == 5 - r.rank);
    // Every relation row maps to zero in the quotient.
    for (std::size_t i = 0; i < rel.rows(); ++i) {
      auto image = q.reduce.apply(rel.row(i));
      for (const auto& e : image) CHECK(e.is_zero());
    }
    // section is a right inverse of reduce: reduce . section = id on the quotient.
    CHECK(q.reduce * q.section == Matrix::identity(field, q.dim()));
  }
}

TEST_CASE("matrix arithmetic basics") {
  auto a = mat(Q(), {{1, 2}, {3, 4}});
  auto b = mat(Q(), {{5, 6}, {7, 8}});
  CHECK(a + b == mat(Q(), {{6, 8}, {10, 12}}));
  CHECK(b - a == mat(Q(), {{4, 4}, {4, 4}}));
  CHECK(a * b == mat(Q(), {{19, 22}, {43, 50}}));
  CHECK(a * sc(Q(), 2) == mat(Q(), {{2, 4}, {6, 8}}));
  CHECK(-a == mat(Q(), {{-1, -2}, {-3, -4}}));
  CHECK(a.transpose() == mat(Q(), {{1, 3}, {2, 4}}));
  CHECK_THROWS_AS((void)(a * mat(Q(), {{1, 2}})), input_error);
  CHECK_THROWS_AS((void)(a + mat(F(5), {{1, 2}, {3, 4}})), input_error);
  CHECK(a.apply(vec(Q(), {1, 1})) == vec(Q(), {3, 7}));
}

TEST_CASE("incremental row span matches batch reduction") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    auto field = trial % 2 == 0 ? Q() : F(5);
    auto rows = random_matrix(field, 6, 4, rng);
    gabikit::RowSpan span(field, 4);
    for (std::size_t i = 0; i < rows.rows(); ++i) span.insert(rows.row(i));
    auto batch = gabikit::rref(rows);
    CHECK(span.rank() == batch.rank);
    // The echelon basis spans the same row space as the batch reduction.
    auto basis = span.basis_rows();
    REQUIRE(basis.rows() == batch.rank);
    auto normalized = gabikit::rref(basis);
    REQUIRE(normalized.rank == batch.rank);
    for (std::size_t i = 0; i < batch.rank; ++i)
      CHECK(normalized.matrix.row(i) == batch.matrix.row(i));
    // Membership: every original row lies in the span; a random independent one may not.
    for (std::size_t i = 0; i < rows.rows(); ++i) CHECK(span.contains(rows.row(i)));
  }
}

TEST_CASE("row span rank is stable under dependent inserts") {
  gabikit::RowSpan span(Q(), 3);
  span.insert(vec(Q(), {1, 2, 3}));
  span.insert(vec(Q(), {0, 1, 1}));
  CHECK(span.rank() == 2);
  span.insert(vec(Q(), {2, 5, 7}));  // = 2*first + second
  CHECK(span.rank() == 2);
  span.insert(vec(Q(), {0, 0, 0}));
  CHECK(span.rank() == 2);
  CHECK(span.contains(vec(Q(), {3, 7, 10})));
  CHECK_FALSE(span.contains(vec(Q(), {0, 0, 1})));
  span.insert(vec(Q(), {0, 0, 1}));
  CHECK(span.rank() == 3);
  CHECK(span.contains(vec(Q(), {0, 0, 1})));
  CHECK_THROWS_AS(span.insert(vec(Q(), {1, 2})), input_error);
  CHECK_THROWS_AS(span.insert(vec(F(5), {1, 2, 3})), input_error);
}

TEST_SUITE_END();
