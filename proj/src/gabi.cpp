#include "gabikit/gabi.hpp"

#include <gmpxx.h>

namespace gabikit {

namespace {

Matrix twist_matrix(const FieldSpec& field, std::size_t n) {
  return tensor_leg_permutation(field, {n, n}, {1, 0});
}

// Right structures are checked through the equivalent Left structure on the
// opposite algebra with the tensor legs of delta swapped.
GabiStructure reduce_to_left(const GabiStructure& g) {
  return GabiStructure{opposite(g.algebra),
                       twist_matrix(g.algebra.field, g.algebra.dim) * g.delta, g.eps,
                       GabiSide::Left};
}

// The three structural axioms of a Left structure; labels get the given
// suffix ("'" when reporting a Right structure through the reduction).
Report check_gabi_left(const GabiStructure& g, const std::string& suffix) {
  const auto& a = g.algebra;
  const std::size_t n = a.dim;
  const auto id = Matrix::identity(a.field, n);
  Report report;

  report.merge(is_augmentation(LinMapA({n}, {1}, g.eps), a), "eps");
  report.merge(
      is_algebra_map(LinMapA({n}, {n, n}, g.delta), a, tensor_algebra(a, opposite(a))),
      "delta");

  // GA1: (id (x) eps) . delta = id.
  auto ga1 = kronecker(id, g.eps) * g.delta;
  for (std::size_t j = 0; j < n; ++j)
    if (ga1.col(j) != id.col(j))
      report.fail("GA1" + suffix, a.name(j),
                  "a_plus eps(a_minus) = " + format_element(a, ga1.col(j)));

  // GA2: m . delta = unit . eps.
  auto ga2 = mul_matrix(a) * g.delta;
  auto ga2_rhs = unit_matrix(a) * g.eps;
  for (std::size_t j = 0; j < n; ++j)
    if (ga2.col(j) != ga2_rhs.col(j))
      report.fail("GA2" + suffix, a.name(j),
                  "a_plus a_minus = " + format_element(a, ga2.col(j)) + ", expected " +
                      format_element(a, ga2_rhs.col(j)));

  // GA3: apply delta to both legs of delta(a), reorder the four legs to
  // (a_{++}, a_{-+}, a_{--}, a_{+-}), multiply the last two, and compare
  // with delta(a) (x) 1.
  auto four_legs = kronecker(g.delta, g.delta) * g.delta;  // a_{++} a_{+-} a_{-+} a_{--}
  auto reorder = tensor_leg_permutation(a.field, {n, n, n, n}, {0, 2, 3, 1});
  auto lhs = kronecker(Matrix::identity(a.field, n * n), mul_matrix(a)) * (reorder * four_legs);
  auto rhs = kronecker(Matrix::identity(a.field, n * n), unit_matrix(a)) * g.delta;
  for (std::size_t j = 0; j < n; ++j)
    if (lhs.col(j) != rhs.col(j))
      report.fail("GA3" + suffix, a.name(j),
                  "a_{++} (x) a_{-+} (x) a_{--}a_{+-} differs from delta(a) (x) 1");

  return report;
}

}  // namespace

std::string to_string(GabiSide side) { return side == GabiSide::Left ? "Left" : "Right"; }

std::string to_string(HopfStrategy strategy) {
  switch (strategy) {
    case HopfStrategy::BetaInverse: return "BetaInverse";
    case HopfStrategy::Commutative: return "Commutative";
    default: return "InvertibleAntipode";
  }
}

void GabiStructure::validate_shape() const {
  algebra.validate_shape();
  const std::size_t n = algebra.dim;
  if (delta.rows() != n * n || delta.cols() != n)
    throw input_error("delta matrix must be " + std::to_string(n * n) + "x" + std::to_string(n) +
                      ", got " + std::to_string(delta.rows()) + "x" + std::to_string(delta.cols()));
  if (eps.rows() != 1 || eps.cols() != n)
    throw input_error("eps matrix must be 1x" + std::to_string(n));
  if (!(delta.field() == algebra.field) || !(eps.field() == algebra.field))
    throw input_error("structure matrices use the wrong field");
}

Report check_gabi(const GabiStructure& g) {
  g.validate_shape();
  if (g.side == GabiSide::Right) return check_gabi_left(reduce_to_left(g), "'");
  return check_gabi_left(g, "");
}

Matrix antipode(const GabiStructure& g) {
  g.validate_shape();
  const GabiStructure left = g.side == GabiSide::Left ? g : reduce_to_left(g);
  const auto& a = left.algebra;
  auto sigma = kronecker(left.eps, Matrix::identity(a.field, a.dim)) * left.delta;
  // A verified structure makes sigma an algebra map A -> A^op with
  // eps . sigma = eps; anything else means the input was not checked.
  if (!is_algebra_map(LinMapA({a.dim}, {a.dim}, sigma), a, opposite(a)).passed())
    throw input_error("antipode: sigma is not an algebra map into the opposite; "
                      "the structure does not satisfy the axioms");
  if (left.eps * sigma != left.eps)
    throw input_error("antipode: eps . sigma != eps; the structure does not satisfy the axioms");
  return sigma;
}

Matrix canonical_beta(const GabiStructure& g) {
  g.validate_shape();
  if (g.side != GabiSide::Left)
    throw input_error("canonical_beta expects a Left structure");
  const std::size_t n = g.algebra.dim;
  const auto id = Matrix::identity(g.algebra.field, n);
  return kronecker(id, mul_matrix(g.algebra)) * kronecker(g.delta, id);
}

namespace {

// Bialgebra axioms plus S being a two-sided convolution inverse of id.
Report verify_hopf_suite(const BialgebraData& b, const Matrix& S) {
  Report report = check_bialgebra(b);
  const std::size_t n = b.algebra.dim;
  const auto id = Matrix::identity(b.algebra.field, n);
  auto target = unit_matrix(b.algebra) * b.coalgebra.counit;
  if (convolution(id, S, b) != target)
    report.fail("antipode", "right law", "m.(id (x) S).Delta differs from unit.eps");
  if (convolution(S, id, b) != target)
    report.fail("antipode", "left law", "m.(S (x) id).Delta differs from unit.eps");
  return report;
}

std::string first_finding(const Report& r) {
  if (r.findings().empty()) return "";
  const auto& f = r.findings().front();
  return f.axiom + " at " + f.witness;
}

bool is_commutative(const FinAlgebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (a.mul[i][j] != a.mul[j][i]) return false;
  return true;
}

}  // namespace

HopfOutcome derive_hopf(const GabiStructure& g, HopfStrategy strategy) {
  auto base = check_gabi(g);
  if (!base.passed())
    throw input_error("derive_hopf requires a structure passing the axiom check; first failure: " +
                      first_finding(base));
  if (g.side != GabiSide::Left)
    throw input_error("derive_hopf expects a Left structure");

  const auto& a = g.algebra;
  const std::size_t n = a.dim;
  const auto id = Matrix::identity(a.field, n);

  Matrix comul(a.field, n * n, n);
  switch (strategy) {
    case HopfStrategy::BetaInverse: {
      auto beta_inv = invert(canonical_beta(g));
      if (!beta_inv) return NotApplicable{"beta is singular"};
      // Delta(a) = beta^{-1}(a (x) 1).
      comul = *beta_inv * kronecker(id, unit_matrix(a));
      if (kronecker(g.eps, id) * comul != id)
        return NotApplicable{"derived comultiplication is not left counital"};
      break;
    }
    case HopfStrategy::Commutative: {
      if (!is_commutative(a)) return NotApplicable{"algebra is not commutative"};
      comul = kronecker(id, antipode(g)) * g.delta;  // Delta(a) = a_plus (x) sigma(a_minus)
      break;
    }
    case HopfStrategy::InvertibleAntipode: {
      auto sigma_inv = invert(antipode(g));
      if (!sigma_inv) return NotApplicable{"antipode is singular"};
      comul = kronecker(id, *sigma_inv) * g.delta;  // Delta(a) = a_plus (x) sigma^{-1}(a_minus)
      break;
    }
  }

  BialgebraData bialgebra{a, CoalgebraData{a.field, n, comul, g.eps}};
  auto sigma = antipode(g);
  auto suite = verify_hopf_suite(bialgebra, sigma);
  if (!suite.passed())
    return NotApplicable{"derived structure failed Hopf verification: " + first_finding(suite)};
  return HopfResult{std::move(bialgebra), std::move(sigma), strategy};
}

TricocycloidData tricocycloid(const GabiStructure& g) {
  g.validate_shape();
  auto v = canonical_beta(g) * twist_matrix(g.algebra.field, g.algebra.dim);
  return TricocycloidData{g.algebra.field, g.algebra.dim, std::move(v), g.algebra.unit, g.eps};
}

Report check_tricocycloid(const TricocycloidData& t) {
  const std::size_t n = t.dim;
  if (t.v.rows() != n * n || t.v.cols() != n * n)
    throw input_error("v must be an n^2 x n^2 matrix");
  if (t.eta.size() != n || t.eps.rows() != 1 || t.eps.cols() != n)
    throw input_error("eta must have length n and eps shape 1 x n");

  Report report;
  const auto id = Matrix::identity(t.field, n);
  Matrix eta(t.field, n, 1);
  eta.set_col(0, t.eta);

  // Braid-type equation on A (x) A (x) A.
  auto v01 = kronecker(t.v, id);
  auto v12 = kronecker(id, t.v);
  auto mid_twist = tensor_leg_permutation(t.field, {n, n, n}, {0, 2, 1});
  auto lhs = v01 * mid_twist * v01;
  auto rhs = v12 * v01 * v12;
  for (std::size_t j = 0; j < lhs.cols(); ++j)
    if (lhs.col(j) != rhs.col(j)) {
      report.fail("braid-equation", "basis index " + std::to_string(j),
                  "(v (x) A)(A (x) twist)(v (x) A) differs from (A (x) v)(v (x) A)(A (x) v)");
      break;  // one witness suffices for a matrix-level law
    }

  // (A (x) eps) . v = eps (x) A.
  auto counit_lhs = kronecker(id, t.eps) * t.v;
  auto counit_rhs = kronecker(t.eps, id);
  for (std::size_t j = 0; j < counit_lhs.cols(); ++j)
    if (counit_lhs.col(j) != counit_rhs.col(j)) {
      report.fail("counit-law", "basis index " + std::to_string(j),
                  "(A (x) eps).v differs from eps (x) A");
      break;
    }

  // v . (A (x) eta) = eta (x) A.
  auto unit_lhs = t.v * kronecker(id, eta);
  auto unit_rhs = kronecker(eta, id);
  for (std::size_t j = 0; j < unit_lhs.cols(); ++j)
    if (unit_lhs.col(j) != unit_rhs.col(j)) {
      report.fail("unit-law", "basis index " + std::to_string(j),
                  "v.(A (x) eta) differs from eta (x) A");
      break;
    }

  // eps . eta = 1.
  auto norm = t.eps * eta;
  if (!norm(0, 0).is_one())
    report.fail("normalization", "eps(eta)", "eps(eta) = " + norm(0, 0).to_string());

  // Full augmentation: v invertible and (A (x) eps).v^{-1}.(A (x) eta) = id.
  // Reported as a note because it encodes a two-sided antipode, which the
  // one-sided theory does not promise.
  if (auto v_inv = invert(t.v)) {
    if (kronecker(id, t.eps) * *v_inv * kronecker(id, eta) == id)
      report.note("full augmentation holds: (A (x) eps).v^{-1}.(A (x) eta) = id");
    else
      report.note("full augmentation fails: (A (x) eps).v^{-1}.(A (x) eta) != id");
  } else {
    report.note("full augmentation fails: v is singular");
  }
  return report;
}

Report check_double(const GabiStructure& g1, const GabiStructure& g2) {
  g1.validate_shape();
  g2.validate_shape();
  if (!same_table(g1.algebra, g2.algebra))
    throw input_error("check_double: the two structures live on different algebras");
  if (g1.eps != g2.eps)
    throw input_error("check_double: the two structures have different augmentations");
  if (g1.side != GabiSide::Left || g2.side != GabiSide::Left)
    throw input_error("check_double expects two Left structures");

  Report report;
  auto r1 = check_gabi(g1);
  auto r2 = check_gabi(g2);
  report.merge(r1, "structure1");
  report.merge(r2, "structure2");
  if (!report.passed()) return report;

  const auto& a = g1.algebra;
  const std::size_t n = a.dim;
  const auto id = Matrix::identity(a.field, n);
  auto rhs = kronecker(unit_matrix(a), id);  // a |-> 1 (x) a

  // a_{+'} a_{-'+} (x) a_{-'-} = 1 (x) a  (outer delta', inner delta).
  auto mixed1 = kronecker(mul_matrix(a), id) * kronecker(id, g1.delta) * g2.delta;
  for (std::size_t j = 0; j < n; ++j)
    if (mixed1.col(j) != rhs.col(j))
      report.fail("mixed-identity-1", a.name(j),
                  "a_{+'} a_{-'+} (x) a_{-'-} differs from 1 (x) a");

  // a_{+} a_{-+'} (x) a_{--'} = 1 (x) a  (outer delta, inner delta').
  auto mixed2 = kronecker(mul_matrix(a), id) * kronecker(id, g2.delta) * g1.delta;
  for (std::size_t j = 0; j < n; ++j)
    if (mixed2.col(j) != rhs.col(j))
      report.fail("mixed-identity-2", a.name(j),
                  "a_{+} a_{-+'} (x) a_{--'} differs from 1 (x) a");

  if (!report.passed()) return report;

  auto sigma1 = antipode(g1);
  auto sigma2 = antipode(g2);
  if (sigma2 * sigma1 != id || sigma1 * sigma2 != id)
    report.fail("antipode-inverse", "sigma_2 . sigma_1",
                "the two antipodes are not mutually inverse");
  else
    report.note("sigma_2 = sigma_1^{-1}: the antipode is invertible");

  auto hopf = derive_hopf(g1, HopfStrategy::InvertibleAntipode);
  if (std::holds_alternative<HopfResult>(hopf))
    report.note("full Hopf structure derived via InvertibleAntipode");
  else
    report.fail("hopf-derivation", "InvertibleAntipode",
                std::get<NotApplicable>(hopf).reason);
  return report;
}

namespace {

// Row-major odometer over F_p entries: lexicographic successor, last entry
// fastest. Returns false after the last tuple wraps to all zeros.
bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

Matrix matrix_from_digits(const FieldSpec& field, std::size_t rows, std::size_t cols,
                          const std::vector<std::uint32_t>& digits) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Scalar::of_int(field, digits[i * cols + j]);
  return m;
}

}  // namespace

std::vector<GabiStructure> search_gabi(const FinAlgebra& a, const EpsChoice& eps,
                                       std::uint64_t cap) {
  a.validate_shape();
  if (a.field.kind != FieldKind::PrimeField)
    throw input_error("search requires a prime field (the rational search space is infinite)");
  const std::size_t n = a.dim;
  const std::uint32_t p = a.field.p;
  const bool search_all = std::holds_alternative<SearchAll>(eps);

  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), p, static_cast<unsigned long>(n) * n * n);
  if (search_all) {
    mpz_class eps_count;
    mpz_ui_pow_ui(eps_count.get_mpz_t(), p, static_cast<unsigned long>(n));
    total *= eps_count;
  }
  if (total > mpz_class(static_cast<unsigned long>(cap)))
    throw input_error("search space has " + total.get_str() +
                      " candidates, which exceeds the cap of " + std::to_string(cap) +
                      "; rerun with a cap of at least " + total.get_str());

  // Collect the augmentations to pair with the delta enumeration.
  std::vector<Matrix> eps_candidates;
  if (search_all) {
    std::vector<std::uint32_t> digits(n, 0);
    do {
      auto candidate = matrix_from_digits(a.field, 1, n, digits);
      if (is_augmentation(LinMapA({n}, {1}, candidate), a).passed())
        eps_candidates.push_back(candidate);
    } while (next_tuple(digits, p));
  } else {
    const auto& given = std::get<Matrix>(eps);
    if (given.rows() != 1 || given.cols() != n)
      throw input_error("eps matrix must be 1x" + std::to_string(n));
    if (!(given.field() == a.field)) throw input_error("eps matrix uses the wrong field");
    if (is_augmentation(LinMapA({n}, {1}, given), a).passed()) eps_candidates.push_back(given);
    // A non-augmentation eps admits no structures; the list stays empty.
  }

  std::vector<GabiStructure> found;
  for (const auto& e : eps_candidates) {
    std::vector<std::uint32_t> digits(n * n * n, 0);
    do {
      GabiStructure candidate{a, matrix_from_digits(a.field, n * n, n, digits), e,
                              GabiSide::Left};
      if (check_gabi(candidate).passed()) found.push_back(std::move(candidate));
    } while (next_tuple(digits, p));
  }
  return found;
}

GabiStructure gabi_from_one_sided_hopf(const BialgebraData& b, const AntipodeCandidate& S) {
  b.validate_shape();
  const std::size_t n = b.algebra.dim;
  if (S.S.rows() != n || S.S.cols() != n)
    throw input_error("antipode matrix must be n x n");
  if (S.side == AntipodeSide::Left)
    throw input_error("construction requires a Right or TwoSided antipode");
  const auto id = Matrix::identity(b.algebra.field, n);
  if (convolution(id, S.S, b) != unit_matrix(b.algebra) * b.coalgebra.counit)
    throw input_error("S is not a right convolution inverse of the identity");
  auto gate = check_anti_bialgebra_map(S.S, b);
  if (!gate.passed())
    throw input_error("antipode is not an anti-bialgebra map; first failure: " +
                      first_finding(gate));
  return GabiStructure{b.algebra, kronecker(id, S.S) * b.coalgebra.comul, b.coalgebra.counit,
                       GabiSide::Left};
}

}  // namespace gabikit
