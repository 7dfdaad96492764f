// The core structure: an augmentation eps and a comultiplication-like map
// delta into A (x) A^op, its antipode and canonical map, derivation of full
// Hopf structures, the induced tricocycloid, double-structure checks, and
// exhaustive search over small prime fields.
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "gabikit/coalgebra.hpp"

namespace gabikit {

enum class GabiSide { Left, Right };

[[nodiscard]] std::string to_string(GabiSide side);

/// The pair (delta, eps) on an algebra. For side Left, delta: A -> A (x) A^op
/// (output left-factor-major) with a |-> a_plus (x) a_minus; for side Right,
/// delta: A -> A^op (x) A. eps is a 1 x n augmentation.
struct GabiStructure {
  FinAlgebra algebra;
  Matrix delta;  ///< n^2 x n
  Matrix eps;    ///< 1 x n
  GabiSide side = GabiSide::Left;

  void validate_shape() const;
};

enum class HopfStrategy { BetaInverse, Commutative, InvertibleAntipode };

[[nodiscard]] std::string to_string(HopfStrategy strategy);

/// A fully verified Hopf structure derived from a gabi structure: the
/// bialgebra data, the antipode, and which derivation route produced it.
struct HopfResult {
  BialgebraData bialgebra;
  Matrix antipode;
  HopfStrategy provenance;
};

/// Returned when a derivation strategy's gate fails (singular beta,
/// non-commutative algebra, singular antipode, counit failure).
struct NotApplicable {
  std::string reason;
};

using HopfOutcome = std::variant<HopfResult, NotApplicable>;

/// The induced Yang-Baxter-type operator v = beta . twist on A (x) A,
/// with the unit eta and augmentation eps it interacts with.
struct TricocycloidData {
  FieldSpec field;
  std::size_t dim = 0;
  Matrix v;                  ///< n^2 x n^2
  std::vector<Scalar> eta;   ///< coordinates of the unit
  Matrix eps;                ///< 1 x n
};

/// Marker selecting enumeration of every augmentation in search_gabi.
struct SearchAll {};
using EpsChoice = std::variant<Matrix, SearchAll>;

inline constexpr std::uint64_t kDefaultSearchCap = std::uint64_t{1} << 24;

/// Verify the full axiom set: eps is an augmentation, delta an algebra map
/// into A (x) A^op (A^op (x) A for side Right), and
///   GA1: (id (x) eps) . delta = id
///   GA2: m . delta = unit . eps
///   GA3: a_{++} (x) a_{-+} (x) a_{--} a_{+-} = delta(a) (x) 1.
/// Side Right checks the primed axioms via the opposite-algebra reduction
/// and labels findings GA1'..GA3'.
[[nodiscard]] Report check_gabi(const GabiStructure& g);

/// sigma = (eps (x) id) . delta. Requires a structure passing check_gabi;
/// throws input_error when the derived map fails to be an algebra map
/// A -> A^op with eps . sigma = eps (which a verified structure guarantees).
[[nodiscard]] Matrix antipode(const GabiStructure& g);

/// beta: A (x) A -> A (x) A, a (x) b |-> a_plus (x) a_minus b, as an
/// n^2 x n^2 matrix. Left structures only.
[[nodiscard]] Matrix canonical_beta(const GabiStructure& g);

/// Derive a full Hopf structure:
///   BetaInverse: Delta(a) = beta^{-1}(a (x) 1) when beta is invertible and
///     the result is left counital;
///   Commutative: Delta(a) = a_plus (x) sigma(a_minus) on commutative algebras;
///   InvertibleAntipode: Delta(a) = a_plus (x) sigma^{-1}(a_minus).
/// Every route re-verifies the complete Hopf axiom suite before returning.
[[nodiscard]] HopfOutcome derive_hopf(const GabiStructure& g, HopfStrategy strategy);

/// v = beta . twist, i.e. v(a (x) b) = b_plus (x) b_minus a, with eta = unit.
[[nodiscard]] TricocycloidData tricocycloid(const GabiStructure& g);

/// Check the braid-type equation
///   (v (x) A) . (A (x) twist) . (v (x) A) = (A (x) v) . (v (x) A) . (A (x) v)
/// and the one-sided laws (A (x) eps) . v = eps (x) A, v . (A (x) eta) =
/// eta (x) A, eps . eta = 1. The full augmentation law — v invertible and
/// (A (x) eps) . v^{-1} . (A (x) eta) = id — is reported as a note, not a
/// finding, since it encodes the antipode being two-sided.
[[nodiscard]] Report check_tricocycloid(const TricocycloidData& t);

/// For two Left structures sharing one algebra and augmentation, verify the
/// mixed identities
///   a_{+'} a_{-'+} (x) a_{-'-} = 1 (x) a   and
///   a_{+} a_{-+'} (x) a_{--'} = 1 (x) a;
/// when they hold, additionally assert sigma_2 = sigma_1^{-1} and that
/// derive_hopf(g1, InvertibleAntipode) succeeds.
[[nodiscard]] Report check_double(const GabiStructure& g1, const GabiStructure& g2);

/// Exhaustively enumerate delta candidates (and augmentations, when eps is
/// SearchAll) over a prime field, in lexicographic entry order, returning
/// every structure that passes check_gabi in enumeration order. Refuses with
/// input_error when the candidate count exceeds cap.
[[nodiscard]] std::vector<GabiStructure> search_gabi(const FinAlgebra& a, const EpsChoice& eps,
                                                     std::uint64_t cap = kDefaultSearchCap);

/// From a bialgebra with a right (or two-sided) antipode S that is an
/// anti-bialgebra map, build the structure delta = (id (x) S) . Delta with
/// the bialgebra's counit as eps. Preconditions are re-verified; violations
/// throw input_error.
[[nodiscard]] GabiStructure gabi_from_one_sided_hopf(const BialgebraData& b,
                                                     const AntipodeCandidate& S);

}  // namespace gabikit
