#include <doctest.h>

#include <vector>

#include "gabikit/module.hpp"
#include "test_algebras.hpp"
#include "test_util.hpp"

using namespace gabikit;
using namespace gabitest;

namespace {

GabiStructure c2_gabi(const FieldSpec& field) {
  return GabiStructure{cyclic_group_algebra(field, 2), cyclic_delta(field, 2),
                       ones_row(field, 2), GabiSide::Left};
}

GabiStructure h4_gabi(const FieldSpec& field) {
  return GabiStructure{sweedler_algebra(field), h4_delta(field), h4_counit(field),
                       GabiSide::Left};
}

GabiStructure dim1_gabi(const FieldSpec& field) {
  return GabiStructure{field_algebra(field), mat(field, {{1}}), mat(field, {{1}}),
                       GabiSide::Left};
}

/// x primitive on F_2[x]/(x^2).
GabiStructure f2_primitive_gabi() {
  return GabiStructure{dual_numbers(F(2)),
                       sparse_cols(F(2), 4, 2, {{{0, 1}}, {{1, 1}, {2, 1}}}),
                       sparse_cols(F(2), 1, 2, {{{0, 1}}, {}}), GabiSide::Left};
}

/// The algebra as a bimodule over itself by left and right multiplication.
ABimodule regular_bimodule(const FinAlgebra& a) {
  ABimodule b{a, a.dim, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    b.left_action.push_back(left_mul(a, basis_vec(a, i)));
    b.right_action.push_back(right_mul(a, basis_vec(a, i)));
  }
  return b;
}

/// The canonical map M -> P (x)_A M, m -> class of 1 (x) m.
Matrix unit_tensor_map(const TensorOverA& t) {
  const FinAlgebra& a = t.source.algebra;
  Matrix out(a.field, t.dim(), t.factor.dim);
  for (std::size_t j = 0; j < t.factor.dim; ++j) {
    std::vector<Scalar> amb(t.source.dim * t.factor.dim, Scalar::zero(a.field));
    for (std::size_t b = 0; b < a.dim; ++b) {
      if (!a.unit[b].is_zero()) amb[b * t.factor.dim + j] = a.unit[b];
    }
    const std::vector<Scalar> red = t.quotient.reduce.apply(amb);
    for (std::size_t r = 0; r < t.dim(); ++r) out(r, j) = red[r];
  }
  return out;
}

bool has_finding(const Report& r, const std::string& axiom) {
  for (const auto& f : r.findings()) {
    if (f.axiom == axiom) return true;
  }
  return false;
}

bool has_note(const Report& r, const std::string& text) {
  for (const auto& n : r.notes()) {
    if (n == text) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("module");

TEST_CASE("regular and trivial modules satisfy the module axioms") {
  for (const auto& g : {c2_gabi(Q()), h4_gabi(Q()), f2_primitive_gabi(), dim1_gabi(Q())}) {
    CHECK(check_module(regular_module(g.algebra)).passed());
    CHECK(check_module(trivial_module(g)).passed());
    CHECK(check_module(zero_module(g.algebra)).passed());
  }
}

TEST_CASE("a non-action is rejected with a witness") {
  const FinAlgebra a = cyclic_group_algebra(Q(), 2);
  AModule m{a, 2, {Matrix::identity(Q(), 2), mat(Q(), {{0, 1}, {1, 1}})}};
  const Report r = check_module(m);
  CHECK_FALSE(r.passed());
  bool found = false;
  for (const auto& f : r.findings()) {
    if (f.axiom == "multiplicativity" && f.witness == "(g, g)") found = true;
  }
  CHECK(found);

  AModule bad_unit{a, 2, {mat(Q(), {{2, 0}, {0, 1}}), mat(Q(), {{0, 1}, {1, 0}})}};
  const Report r2 = check_module(bad_unit);
  CHECK(has_finding(r2, "unit"));
}

TEST_CASE("module shape validation rejects malformed data") {
  const FinAlgebra a = cyclic_group_algebra(Q(), 2);
  CHECK_THROWS_AS((void)check_module(AModule{a, 2, {Matrix::identity(Q(), 2)}}), input_error);
  CHECK_THROWS_AS(
      (void)check_module(AModule{a, 2, {Matrix::identity(Q(), 2), Matrix::identity(Q(), 3)}}),
      input_error);
  CHECK_THROWS_AS(
      (void)check_module(AModule{a, 2, {Matrix::identity(F(5), 2), Matrix::identity(F(5), 2)}}),
      input_error);
}

TEST_CASE("module_action extends bilinearly and module maps are recognized") {
  const FinAlgebra a = cyclic_group_algebra(Q(), 2);
  const AModule reg = regular_module(a);
  CHECK(module_action(reg, basis_vec(a, 1)) == left_mul(a, basis_vec(a, 1)));
  CHECK(module_action(reg, vec(Q(), {3, -2})) == mat(Q(), {{3, -2}, {-2, 3}}));

  const GabiStructure g = c2_gabi(Q());
  const AModule triv = trivial_module(g);
  // The counit row is a module map onto the trivial module; a projection is not.
  CHECK(is_module_map(mat(Q(), {{1, 1}}), reg, triv));
  CHECK_FALSE(is_module_map(mat(Q(), {{1, 0}}), reg, triv));
  CHECK_THROWS_AS((void)is_module_map(mat(Q(), {{1, 0, 0}}), reg, triv), input_error);
}

TEST_CASE("hom modules realize the lifted action") {
  const GabiStructure g = c2_gabi(Q());
  const AModule reg = regular_module(g.algebra);
  const AModule triv = trivial_module(g);

  // On Hom(regular, trivial) = (f(1), f(g)), g swaps the coordinates.
  const AModule swap = hom_module(g, reg, triv);
  CHECK(swap.dim == 2);
  CHECK(swap.action[1] == mat(Q(), {{0, 1}, {1, 0}}));
  CHECK(check_module(swap).passed());

  // Trivial source and target: the action factors through the counit.
  const AModule tt = hom_module(g, triv, triv);
  CHECK(tt.action[1] == mat(Q(), {{1}}));

  // Trivial source, regular target: the action is plain left multiplication.
  const AModule tr = hom_module(g, triv, reg);
  CHECK(tr.action[1] == left_mul(g.algebra, basis_vec(g.algebra, 1)));

  CHECK(check_module(hom_module(g, reg, reg)).passed());
}

TEST_CASE("hom modules pass the module axioms across fixtures") {
  for (const auto& g : {h4_gabi(Q()), h4_gabi(F(5)), f2_primitive_gabi()}) {
    const AModule reg = regular_module(g.algebra);
    const AModule triv = trivial_module(g);
    CHECK(check_module(hom_module(g, reg, triv)).passed());
    CHECK(check_module(hom_module(g, triv, reg)).passed());
    CHECK(check_module(hom_module(g, reg, reg)).passed());
  }
}

TEST_CASE("post-composition with a module map is a module map") {
  const GabiStructure g = c2_gabi(Q());
  const AModule reg = regular_module(g.algebra);
  const AModule triv = trivial_module(g);
  const Matrix h = mat(Q(), {{1, 1}});  // counit: regular -> trivial
  // Hom(reg, reg) -> Hom(reg, triv), f -> h . f.
  CHECK(is_module_map(kronecker(h, Matrix::identity(Q(), 2)), hom_module(g, reg, reg),
                      hom_module(g, reg, triv)));
}

TEST_CASE("closed-structure maps are equivariant for passing structures") {
  CHECK(closed_maps_check(c2_gabi(Q()), regular_module(cyclic_group_algebra(Q(), 2))).passed());
  CHECK(closed_maps_check(c2_gabi(F(7)), trivial_module(c2_gabi(F(7)))).passed());
  CHECK(closed_maps_check(dim1_gabi(Q()), regular_module(field_algebra(Q()))).passed());
  CHECK(closed_maps_check(h4_gabi(Q()), trivial_module(h4_gabi(Q()))).passed());
}

TEST_CASE("a defective comultiplication breaks the unit map's equivariance") {
  GabiStructure bad = c2_gabi(Q());
  bad.delta = sparse_cols(Q(), 4, 2, {{{0, 1}}, {{2, 1}}});  // delta(g) = g (x) 1
  const Report r = closed_maps_check(bad, regular_module(bad.algebra));
  CHECK_FALSE(r.passed());
  bool witness = false;
  for (const auto& f : r.findings()) {
    if (f.axiom == "j-equivariance" && f.witness == "g") witness = true;
  }
  CHECK(witness);
}

TEST_CASE("odot yields commuting actions with the expected right action") {
  const GabiStructure g = c2_gabi(Q());
  const AModule reg = regular_module(g.algebra);
  const ABimodule b = odot(g, reg);
  CHECK(b.dim == 4);
  CHECK(check_bimodule(b).passed());
  // (1 (x) 1) . g = g (x) g, index 3 in the a-major flattening.
  const std::vector<Scalar> image = b.right_action[1].col(0);
  CHECK(image == vec(Q(), {0, 0, 0, 1}));
  // Right action by 1 is the identity.
  CHECK(b.right_action[0] == Matrix::identity(Q(), 4));

  for (const auto& gh : {h4_gabi(Q()), f2_primitive_gabi()}) {
    CHECK(check_bimodule(odot(gh, regular_module(gh.algebra))).passed());
    CHECK(check_bimodule(odot(gh, trivial_module(gh))).passed());
  }
}

TEST_CASE("odot on the trivial module collapses to right multiplication") {
  const GabiStructure g = h4_gabi(Q());
  const ABimodule b = odot(g, trivial_module(g));
  for (std::size_t t = 0; t < g.algebra.dim; ++t) {
    CHECK(b.right_action[t] == right_mul(g.algebra, basis_vec(g.algebra, t)));
    CHECK(b.left_action[t] == left_mul(g.algebra, basis_vec(g.algebra, t)));
  }
}

TEST_CASE("corrupting a bimodule action is detected") {
  const GabiStructure g = c2_gabi(Q());
  ABimodule b = odot(g, regular_module(g.algebra));
  b.right_action[1](0, 0) += sc(Q(), 1);
  CHECK_FALSE(check_bimodule(b).passed());
}

TEST_CASE("tensoring with the regular bimodule is the identity functor") {
  for (const auto& g : {c2_gabi(Q()), h4_gabi(Q())}) {
    const ABimodule rb = regular_bimodule(g.algebra);
    for (const AModule& m : {regular_module(g.algebra), trivial_module(g)}) {
      const TensorOverA t = tensor_over_A(rb, m);
      CHECK(t.dim() == m.dim);
      CHECK(check_module(t.as_module()).passed());
      const Matrix canon = unit_tensor_map(t);
      CHECK(is_module_map(canon, m, t.as_module()));
      CHECK(is_invertible(canon));
    }
  }
}

TEST_CASE("tensor quotients have the expected dimensions") {
  const GabiStructure g = c2_gabi(Q());
  // (A (.) k) (x)_A regular has dimension 2.
  const TensorOverA t = tensor_over_A(odot(g, trivial_module(g)), regular_module(g.algebra));
  CHECK(t.dim() == 2);
  CHECK(check_module(t.as_module()).passed());
  // Zero factor gives the zero quotient.
  const TensorOverA z = tensor_over_A(odot(g, trivial_module(g)), zero_module(g.algebra));
  CHECK(z.dim() == 0);
  // boxtimes of regulars over C_2 has dimension 4.
  const TensorOverA bx = boxtimes(g, regular_module(g.algebra), regular_module(g.algebra));
  CHECK(bx.dim() == 4);
  CHECK(check_module(bx.as_module()).passed());
}

TEST_CASE("tensor_over_A rejects mismatched algebras") {
  const GabiStructure g = c2_gabi(Q());
  CHECK_THROWS_AS(
      (void)tensor_over_A(regular_bimodule(g.algebra), regular_module(sweedler_algebra(Q()))),
      input_error);
}

TEST_CASE("adjunction triangles hold exactly on the effective test set") {
  CHECK(adjunction_check(c2_gabi(Q()), regular_module(cyclic_group_algebra(Q(), 2))).passed());
  CHECK(adjunction_check(c2_gabi(Q()), trivial_module(c2_gabi(Q()))).passed());
  CHECK(adjunction_check(c2_gabi(F(7)), regular_module(cyclic_group_algebra(F(7), 2))).passed());
  CHECK(adjunction_check(h4_gabi(Q()), trivial_module(h4_gabi(Q()))).passed());
}

TEST_CASE("a corrupted counit violates a triangle identity") {
  const GabiStructure g = c2_gabi(Q());
  const AModule reg = regular_module(g.algebra);
  const AModule triv = trivial_module(g);
  const AdjunctionComponent adj = materialize_adjunction(g, reg, triv);
  const AdjunctionComponent at_gn = materialize_adjunction(g, reg, adj.gn);
  const Matrix eye = Matrix::identity(Q(), reg.dim);
  // Hom(M, ev_N) . coev_{GN} = id with the genuine counit, not a corrupted one.
  CHECK(kronecker(adj.ev, eye) * at_gn.coev == Matrix::identity(Q(), adj.gn.dim));
  CHECK(kronecker(-adj.ev, eye) * at_gn.coev != Matrix::identity(Q(), adj.gn.dim));
}

TEST_CASE("materializing the adjunction requires a passing structure") {
  GabiStructure bad = c2_gabi(Q());
  bad.delta = sparse_cols(Q(), 4, 2, {{{0, 1}}, {{2, 1}}});
  CHECK_THROWS_AS(
      (void)materialize_adjunction(bad, regular_module(bad.algebra), trivial_module(bad)),
      input_error);
}

TEST_CASE("unitors and associator on trivial inputs are scalar isomorphisms") {
  const GabiStructure g = c2_gabi(Q());
  const AModule k = trivial_module(g);
  const BoxtimesConstraints bc = boxtimes_constraints(g, k, k, k);
  CHECK(bc.lambda.rows() == 1);
  CHECK(bc.rho.rows() == 1);
  CHECK(bc.alpha.rows() == 1);
  CHECK(is_invertible(bc.lambda));
  CHECK(is_invertible(bc.rho));
  CHECK(is_invertible(bc.alpha));
}

TEST_CASE("unitors and associator are invertible for the group structure") {
  const GabiStructure g = c2_gabi(Q());
  const AModule reg = regular_module(g.algebra);
  const BoxtimesConstraints bc = boxtimes_constraints(g, reg, reg, reg);
  CHECK(bc.m_box_n.dim() == 4);
  CHECK(bc.lm_box_n.dim() == 8);
  CHECK(bc.l_box_mn.dim() == 8);
  CHECK(is_invertible(bc.lambda));
  CHECK(is_invertible(bc.rho));
  CHECK(is_invertible(bc.alpha));

  const GabiStructure h = h4_gabi(Q());
  const BoxtimesConstraints bh =
      boxtimes_constraints(h, trivial_module(h), regular_module(h.algebra), trivial_module(h));
  CHECK(is_invertible(bh.lambda));
  CHECK(is_invertible(bh.rho));
  CHECK(is_invertible(bh.alpha));
}

TEST_CASE("normality diagnostics report invertibility and derive a Hopf structure") {
  const Report r = normality_check(c2_gabi(Q()));
  CHECK(r.passed());
  CHECK(has_note(r, "beta: invertible"));
  CHECK(has_note(r, "derive_hopf(beta-inverse): success"));
  CHECK(has_note(r, "lambda(regular): invertible"));
  CHECK(has_note(r, "alpha(regular, regular, regular): invertible"));

  CHECK(normality_check(dim1_gabi(Q())).passed());
}

TEST_CASE("normality holds for the four-dimensional structure") {
  const Report r = normality_check(h4_gabi(Q()));
  CHECK(r.passed());
  CHECK(has_note(r, "beta: invertible"));
  CHECK(has_note(r, "derive_hopf(beta-inverse): success"));
}

TEST_SUITE_END();
