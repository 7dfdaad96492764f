#include <doctest.h>

#include "gabikit/gabi.hpp"
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

GabiStructure h4_gabi_prime(const FieldSpec& field) {
  return GabiStructure{sweedler_algebra(field), h4_delta_prime(field), h4_counit(field),
                       GabiSide::Left};
}

BialgebraData h4_bialgebra(const FieldSpec& field) {
  return BialgebraData{sweedler_algebra(field),
                       CoalgebraData{field, 4, h4_comul(field), h4_counit(field)}};
}

}  // namespace

TEST_SUITE_BEGIN("gabi");

TEST_CASE("group-inverse structure on C_n passes the axioms") {
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    auto g = GabiStructure{cyclic_group_algebra(Q(), n), cyclic_delta(Q(), n), ones_row(Q(), n),
                           GabiSide::Left};
    CHECK(check_gabi(g).passed());
  }
  CHECK(check_gabi(c2_gabi(F(2))).passed());
}

TEST_CASE("both structures on the four-dimensional example pass") {
  for (auto field : {Q(), F(5)}) {
    CHECK(check_gabi(h4_gabi(field)).passed());
    CHECK(check_gabi(h4_gabi_prime(field)).passed());
  }
}

TEST_CASE("delta(g) = g (x) 1 fails GA2") {
  auto g = c2_gabi(Q());
  g.delta = sparse_cols(Q(), 4, 2, {{{0, 1}}, {{2, 1}}});  // delta(g) = g (x) 1
  auto report = check_gabi(g);
  CHECK_FALSE(report.passed());
  bool ga2 = false;
  for (const auto& f : report.findings())
    if (f.axiom == "GA2" && f.witness == "g") ga2 = true;
  CHECK(ga2);
}

TEST_CASE("right-side structures check the primed axioms via the reduction") {
  // If (A, delta, eps) is a Left structure then (A^op, twist.delta, eps) is a
  // Right structure.
  auto left = h4_gabi(Q());
  auto twist = tensor_leg_permutation(Q(), {4, 4}, {1, 0});
  GabiStructure right{opposite(left.algebra), twist * left.delta, left.eps, GabiSide::Right};
  CHECK(check_gabi(right).passed());

  // Corrupting delta surfaces primed axiom labels.
  right.delta = sparse_cols(Q(), 16, 4, {{{0, 1}}, {{1, 1}}, {{2, 1}}, {{3, 1}}});
  auto report = check_gabi(right);
  CHECK_FALSE(report.passed());
  bool primed = false;
  for (const auto& f : report.findings())
    if (f.axiom.size() > 3 && f.axiom.substr(0, 2) == "GA" && f.axiom.back() == '\'')
      primed = true;
  CHECK(primed);
}

TEST_CASE("antipode values") {
  CHECK(antipode(c2_gabi(Q())) == Matrix::identity(Q(), 2));
  for (auto field : {Q(), F(5)}) CHECK(antipode(h4_gabi(field)) == h4_antipode(field));
  // sigma of the companion structure is the inverse antipode.
  CHECK(antipode(h4_gabi_prime(Q())) == *invert(h4_antipode(Q())));
  // Dimension one: sigma is the identity.
  GabiStructure one{field_algebra(Q()), Matrix::identity(Q(), 1), Matrix::identity(Q(), 1),
                    GabiSide::Left};
  CHECK(antipode(one) == Matrix::identity(Q(), 1));
}

TEST_CASE("antipode rejects structures violating the axioms") {
  auto g = c2_gabi(Q());
  // delta(g) = g (x) g + 1 (x) 1 makes sigma(g) = g + 1, which squares to
  // 2 + 2g != sigma(g^2) = 1: the multiplicativity assertion fires.
  g.delta = sparse_cols(Q(), 4, 2, {{{0, 1}}, {{3, 1}, {0, 1}}});
  CHECK_THROWS_AS((void)antipode(g), input_error);
}

TEST_CASE("antipode is anti-multiplicative with eps . sigma = eps") {
  for (auto g : {c2_gabi(Q()), h4_gabi(Q()), h4_gabi_prime(Q())}) {
    auto sigma = antipode(g);
    const auto& a = g.algebra;
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        CHECK(sigma.apply(a.mul[i][j]) == multiply(a, sigma.col(j), sigma.col(i)));
    CHECK(sigma.apply(a.unit) == a.unit);
    CHECK(g.eps * sigma == g.eps);
  }
}

TEST_CASE("canonical map beta") {
  auto g = c2_gabi(Q());
  auto beta = canonical_beta(g);
  // beta(g (x) 1) = g (x) g: column 2 |-> e_3; beta(g (x) g) = g (x) 1.
  CHECK(beta.col(2) == vec(Q(), {0, 0, 0, 1}));
  CHECK(beta.col(3) == vec(Q(), {0, 0, 1, 0}));
  // beta(1 (x) b) = 1 (x) b.
  CHECK(beta.col(0) == vec(Q(), {1, 0, 0, 0}));
  CHECK(beta.col(1) == vec(Q(), {0, 1, 0, 0}));

  auto h4 = h4_gabi(Q());
  auto beta4 = canonical_beta(h4);
  // beta(x (x) 1) = delta(x) = x (x) 1 - g (x) gx.
  std::vector<Scalar> expected(16, Scalar::zero(Q()));
  expected[8] = Scalar::one(Q());
  expected[7] = -Scalar::one(Q());
  CHECK(beta4.col(8) == expected);

  // beta restricted along b = 1 recovers delta exactly.
  for (auto g2 : {c2_gabi(Q()), h4_gabi(Q()), h4_gabi_prime(Q())}) {
    auto b = canonical_beta(g2);
    auto n = g2.algebra.dim;
    CHECK(b * kronecker(Matrix::identity(Q(), n), unit_matrix(g2.algebra)) == g2.delta);
  }

  GabiStructure right = c2_gabi(Q());
  right.side = GabiSide::Right;
  CHECK_THROWS_AS((void)canonical_beta(right), input_error);
}

TEST_CASE("hopf derivation on the C2 group algebra") {
  for (auto strategy : {HopfStrategy::BetaInverse, HopfStrategy::Commutative}) {
    auto outcome = derive_hopf(c2_gabi(Q()), strategy);
    REQUIRE(std::holds_alternative<HopfResult>(outcome));
    const auto& hopf = std::get<HopfResult>(outcome);
    CHECK(hopf.bialgebra.coalgebra.comul == grouplike_comul(Q(), 2));
    CHECK(hopf.antipode == Matrix::identity(Q(), 2));
    CHECK(hopf.provenance == strategy);
  }
}

TEST_CASE("hopf derivation recovers the standard four-dimensional structure") {
  for (auto strategy : {HopfStrategy::BetaInverse, HopfStrategy::InvertibleAntipode}) {
    auto outcome = derive_hopf(h4_gabi(Q()), strategy);
    REQUIRE(std::holds_alternative<HopfResult>(outcome));
    const auto& hopf = std::get<HopfResult>(outcome);
    CHECK(hopf.bialgebra.coalgebra.comul == h4_comul(Q()));
    CHECK(hopf.antipode == h4_antipode(Q()));
  }
}

TEST_CASE("hopf derivation gates") {
  auto outcome = derive_hopf(h4_gabi(Q()), HopfStrategy::Commutative);
  REQUIRE(std::holds_alternative<NotApplicable>(outcome));
  CHECK(std::get<NotApplicable>(outcome).reason == "algebra is not commutative");

  auto bad = c2_gabi(Q());
  bad.delta = sparse_cols(Q(), 4, 2, {{{0, 1}}, {{2, 1}}});
  CHECK_THROWS_AS((void)derive_hopf(bad, HopfStrategy::BetaInverse), input_error);
}

TEST_CASE("commutative structures have involutive antipode") {
  for (std::size_t n : {2u, 3u, 4u}) {
    auto g = GabiStructure{cyclic_group_algebra(Q(), n), cyclic_delta(Q(), n), ones_row(Q(), n),
                           GabiSide::Left};
    auto sigma = antipode(g);
    CHECK(sigma * sigma == Matrix::identity(Q(), n));
    CHECK(std::holds_alternative<HopfResult>(derive_hopf(g, HopfStrategy::Commutative)));
  }
}

TEST_CASE("tricocycloid values and laws") {
  auto t = tricocycloid(c2_gabi(Q()));
  // v(1 (x) g) = g (x) g; v(a (x) 1) = 1 (x) a.
  CHECK(t.v.col(1) == vec(Q(), {0, 0, 0, 1}));
  CHECK(t.v.col(2) == vec(Q(), {0, 1, 0, 0}));
  auto report = check_tricocycloid(t);
  CHECK(report.passed());
  REQUIRE(!report.notes().empty());
  CHECK(report.notes()[0].find("full augmentation holds") != std::string::npos);

  auto t4 = tricocycloid(h4_gabi(Q()));
  // v(1 (x) x) = delta(x) = x (x) 1 - g (x) gx.
  std::vector<Scalar> expected(16, Scalar::zero(Q()));
  expected[8] = Scalar::one(Q());
  expected[7] = -Scalar::one(Q());
  CHECK(t4.v.col(2) == expected);
  CHECK(check_tricocycloid(t4).passed());
}

TEST_CASE("identity map fails the unit law (and the braid equation) in dim 2") {
  // With v = id the left side of the braid-type equation collapses to
  // A (x) twist while the right side is the identity, so it fails for
  // dim >= 2; the unit law v.(A (x) eta) = eta (x) A fails as well.
  TricocycloidData t{Q(), 2, Matrix::identity(Q(), 4), cyclic_group_algebra(Q(), 2).unit,
                     ones_row(Q(), 2)};
  auto report = check_tricocycloid(t);
  CHECK_FALSE(report.passed());
  bool braid_failed = false, unit_failed = false;
  for (const auto& f : report.findings()) {
    if (f.axiom == "braid-equation") braid_failed = true;
    if (f.axiom == "unit-law") unit_failed = true;
  }
  CHECK(braid_failed);
  CHECK(unit_failed);

  // In dimension 1 the identity data passes everything.
  TricocycloidData one{Q(), 1, Matrix::identity(Q(), 1), field_algebra(Q()).unit,
                       ones_row(Q(), 1)};
  CHECK(check_tricocycloid(one).passed());
}

TEST_CASE("double-structure check") {
  // C2: delta = delta' = group inverse.
  CHECK(check_double(c2_gabi(Q()), c2_gabi(Q())).passed());

  // The four-dimensional pair (delta, delta').
  auto report = check_double(h4_gabi(Q()), h4_gabi_prime(Q()));
  CHECK(report.passed());
  bool inverse_note = false;
  for (const auto& n : report.notes())
    if (n.find("sigma_2 = sigma_1^{-1}") != std::string::npos) inverse_note = true;
  CHECK(inverse_note);

  // Using the same structure twice fails: sigma^2 != id.
  auto bad = check_double(h4_gabi(Q()), h4_gabi(Q()));
  CHECK_FALSE(bad.passed());
  bool mixed1 = false;
  for (const auto& f : bad.findings())
    if (f.axiom == "mixed-identity-1" && f.witness == "x") mixed1 = true;
  CHECK(mixed1);
}

TEST_CASE("double-structure check validates its inputs") {
  auto g1 = c2_gabi(Q());
  auto g2 = c2_gabi(Q());
  g2.eps = mat(Q(), {{1, -1}});
  CHECK_THROWS_AS((void)check_double(g1, g2), input_error);
  auto g3 = h4_gabi(Q());
  CHECK_THROWS_AS((void)check_double(g1, g3), input_error);
}

TEST_CASE("search over F2 on the C2 group algebra finds both structures") {
  auto a = cyclic_group_algebra(F(2), 2);
  auto results = search_gabi(a, SearchAll{});
  REQUIRE(results.size() == 2);
  // Census, in enumeration order (delta digits row-major, last fastest):
  // first the group-inverse structure, then the wide structure
  // delta(g) = 1(x)1 + 1(x)g + g(x)1.
  CHECK(results[0].eps == ones_row(F(2), 2));
  CHECK(results[0].delta == cyclic_delta(F(2), 2));
  CHECK(results[1].eps == ones_row(F(2), 2));
  CHECK(results[1].delta == mat(F(2), {{1, 1}, {0, 1}, {0, 1}, {0, 0}}));
}

TEST_CASE("search with a fixed augmentation") {
  auto a = cyclic_group_algebra(F(2), 2);
  CHECK(search_gabi(a, EpsChoice{ones_row(F(2), 2)}).size() == 2);
  // eps(g) = 0 is not an augmentation on a group algebra: no structures.
  CHECK(search_gabi(a, EpsChoice{mat(F(2), {{1, 0}})}).empty());
}

TEST_CASE("search census on the idempotent monoid algebra over F2") {
  // The algebra F2[{1,e}] is isomorphic to F2 x F2, the function algebra on
  // C2, which is a commutative Hopf algebra: the census is non-empty.
  auto a = idempotent_monoid_algebra(F(2));
  auto results = search_gabi(a, SearchAll{});
  REQUIRE(results.size() == 2);
  CHECK(results[0].eps == mat(F(2), {{1, 0}}));
  CHECK(results[0].delta == mat(F(2), {{1, 0}, {0, 1}, {0, 1}, {0, 0}}));
  CHECK(results[1].eps == mat(F(2), {{1, 1}}));
  CHECK(results[1].delta == mat(F(2), {{1, 1}, {0, 1}, {0, 1}, {0, 0}}));
  for (const auto& g : results) CHECK(check_gabi(g).passed());
}

TEST_CASE("search on the one-dimensional algebra") {
  auto results = search_gabi(field_algebra(F(2)), SearchAll{});
  REQUIRE(results.size() == 1);
  CHECK(results[0].delta == Matrix::identity(F(2), 1));
  CHECK(results[0].eps == Matrix::identity(F(2), 1));
}

TEST_CASE("search refusals") {
  CHECK_THROWS_AS((void)search_gabi(cyclic_group_algebra(Q(), 2), SearchAll{}), input_error);
  try {
    (void)search_gabi(cyclic_group_algebra(F(2), 2), SearchAll{}, 10);
    FAIL("cap refusal expected");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("1024") != std::string::npos);
  }
}

TEST_CASE("construction from a one-sided Hopf algebra") {
  // C2 group bialgebra with its (identity) antipode.
  auto c2 = cyclic_group_algebra(Q(), 2);
  BialgebraData b{c2, CoalgebraData{Q(), 2, grouplike_comul(Q(), 2), ones_row(Q(), 2)}};
  auto s = solve_antipode(b, AntipodeSide::Right);
  REQUIRE(s.has_value());
  auto g = gabi_from_one_sided_hopf(b, *s);
  CHECK(g.delta == cyclic_delta(Q(), 2));
  CHECK(check_gabi(g).passed());

  // The four-dimensional example reproduces the frozen delta.
  auto b4 = h4_bialgebra(Q());
  auto s4 = solve_antipode(b4, AntipodeSide::TwoSided);
  REQUIRE(s4.has_value());
  auto g4 = gabi_from_one_sided_hopf(b4, *s4);
  CHECK(g4.delta == h4_delta(Q()));
  CHECK(check_gabi(g4).passed());

  // Primitive x over F2: delta(x) = x (x) 1 + 1 (x) x.
  auto dn = dual_numbers(F(2));
  auto comul = sparse_cols(F(2), 4, 2, {{{0, 1}}, {{2, 1}, {1, 1}}});
  BialgebraData bp{dn, CoalgebraData{F(2), 2, comul, mat(F(2), {{1, 0}})}};
  CHECK(check_bialgebra(bp).passed());
  auto sp = solve_antipode(bp, AntipodeSide::Right);
  REQUIRE(sp.has_value());
  auto gp = gabi_from_one_sided_hopf(bp, *sp);
  CHECK(gp.delta == mat(F(2), {{1, 0}, {0, 1}, {0, 1}, {0, 0}}));
  CHECK(check_gabi(gp).passed());
}

TEST_CASE("construction preconditions are enforced") {
  auto b4 = h4_bialgebra(Q());
  // The identity is not an anti-bialgebra map here.
  CHECK_THROWS_AS(
      (void)gabi_from_one_sided_hopf(b4, AntipodeCandidate{Matrix::identity(Q(), 4),
                                                           AntipodeSide::TwoSided}),
      input_error);
  // A Left-only candidate is refused.
  auto s = solve_antipode(b4, AntipodeSide::Left);
  REQUIRE(s.has_value());
  CHECK_THROWS_AS((void)gabi_from_one_sided_hopf(b4, *s), input_error);
}

TEST_CASE("every constructed structure appears in the search census") {
  // Superset property over F2 on the C2 group algebra.
  auto c2 = cyclic_group_algebra(F(2), 2);
  BialgebraData b{c2, CoalgebraData{F(2), 2, grouplike_comul(F(2), 2), ones_row(F(2), 2)}};
  auto s = solve_antipode(b, AntipodeSide::Right);
  REQUIRE(s.has_value());
  auto constructed = gabi_from_one_sided_hopf(b, *s);
  auto census = search_gabi(c2, SearchAll{});
  bool found = false;
  for (const auto& g : census)
    if (g.delta == constructed.delta && g.eps == constructed.eps) found = true;
  CHECK(found);
}

TEST_CASE("round trip: from Hopf to structure and back") {
  auto b4 = h4_bialgebra(Q());
  auto s4 = solve_antipode(b4, AntipodeSide::TwoSided);
  REQUIRE(s4.has_value());
  auto g4 = gabi_from_one_sided_hopf(b4, *s4);
  auto outcome = derive_hopf(g4, HopfStrategy::BetaInverse);
  REQUIRE(std::holds_alternative<HopfResult>(outcome));
  const auto& hopf = std::get<HopfResult>(outcome);
  CHECK(hopf.bialgebra.coalgebra.comul == b4.coalgebra.comul);
  CHECK(hopf.antipode == s4->S);
}

TEST_CASE("braid equation holds for every census structure") {
  for (auto algebra : {cyclic_group_algebra(F(2), 2), idempotent_monoid_algebra(F(2))}) {
    for (const auto& g : search_gabi(algebra, SearchAll{})) {
      auto report = check_tricocycloid(tricocycloid(g));
      bool braid_failed = false;
      for (const auto& f : report.findings())
        if (f.axiom == "braid-equation") braid_failed = true;
      CHECK_FALSE(braid_failed);
    }
  }
}

TEST_SUITE_END();
