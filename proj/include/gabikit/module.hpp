#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gabikit/algebra.hpp"
#include "gabikit/gabi.hpp"
#include "gabikit/matrix.hpp"
#include "gabikit/report.hpp"

namespace gabikit {

/// Finite-dimensional left module over a structure-constant algebra: one
/// action matrix per algebra basis element, extended bilinearly. rho(e_i) is
/// action[i], a dim x dim matrix over the algebra's field.
struct AModule {
  FinAlgebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  void validate_shape() const;
};

/// Commuting left and right actions on one space. right_action[i] is the
/// operator m -> m . e_i, so composition reverses: R(e_i) R(e_j) = R(e_j e_i).
struct ABimodule {
  FinAlgebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> left_action;
  std::vector<Matrix> right_action;

  void validate_shape() const;
};

/// The tensor product P (x)_A M presented as an explicit quotient of P (x) M
/// (ambient index p * dim(M) + m) by the relation span
/// {p.e_i (x) m - p (x) e_i.m}, with the left action induced from P's and
/// verified to annihilate the relations.
struct TensorOverA {
  ABimodule source;
  AModule factor;
  QuotientSpace quotient;
  std::vector<Matrix> induced;

  [[nodiscard]] std::size_t dim() const { return quotient.dim(); }
  /// The quotient as a plain module under the induced action.
  [[nodiscard]] AModule as_module() const;
};

/// The dim-1 module on which every element acts by its counit value.
[[nodiscard]] AModule trivial_module(const GabiStructure& g);
/// The algebra acting on itself by left multiplication.
[[nodiscard]] AModule regular_module(const FinAlgebra& a);
/// The dim-0 module.
[[nodiscard]] AModule zero_module(const FinAlgebra& a);
/// Action matrix of an arbitrary element (bilinear extension).
[[nodiscard]] Matrix module_action(const AModule& m, const std::vector<Scalar>& x);

/// Unit and multiplicativity of the action: rho(1) = id and
/// rho(e_i) rho(e_j) = rho(e_i e_j).
[[nodiscard]] Report check_module(const AModule& m);
/// Left and right module axioms plus commutation of the two actions.
[[nodiscard]] Report check_bimodule(const ABimodule& b);
/// True iff f (a target-dim x source-dim matrix) intertwines the actions.
[[nodiscard]] bool is_module_map(const Matrix& f, const AModule& source, const AModule& target);

/// Hom(M, N) as a module: (a.f) = rho_N(a_+) . f . rho_M(a_-) summed over
/// the legs of delta. Hom(M, N) is flattened row-major, f[i][j] -> i*dim(M)+j
/// with i indexing N. The module axioms for the result are guaranteed when
/// the structure passes check_gabi; the construction itself only requires
/// matching shapes, so defective structures can be diagnosed downstream.
[[nodiscard]] AModule hom_module(const GabiStructure& g, const AModule& m, const AModule& n);

/// Equivariance of the closed-structure data at the distinguished module m:
/// evaluation i: Hom(k, m) -> m, f -> f(1); the unit j: k -> Hom(m, m),
/// 1 -> id; and post-composition Gamma: Hom(N, P) ->
/// Hom(Hom(m, N), Hom(m, P)), f -> (h -> f . h), for every pair (N, P) from
/// the effective test set {trivial, regular} + test_modules. All three are
/// A-linear whenever the structure passes check_gabi; failures carry the
/// failing component and witnessing basis element.
[[nodiscard]] Report closed_maps_check(const GabiStructure& g, const AModule& m,
                                       const std::vector<AModule>& test_modules = {});

/// The bimodule A (.) M on A (x) M (ambient index a * dim(M) + m):
/// a.(b (x) m) = ab (x) m and (b (x) m).c = b c_+ (x) c_- m. Bimodule axioms
/// hold whenever the structure passes check_gabi.
[[nodiscard]] ABimodule odot(const GabiStructure& g, const AModule& m);

/// P (x)_A M as an explicit quotient. Throws input_error when the induced
/// action fails to annihilate the relation span (possible only for data
/// violating the bimodule invariants).
[[nodiscard]] TensorOverA tensor_over_A(const ABimodule& p, const AModule& m);

/// The skew product M boxtimes N = (A (.) N) (x)_A M.
[[nodiscard]] TensorOverA boxtimes(const GabiStructure& g, const AModule& m, const AModule& n);

/// The materialized unit and counit of ((A (.) m) (x)_A -) -| Hom(m, -)
/// at a module N.
struct AdjunctionComponent {
  TensorOverA fn;   ///< (A (.) m) (x)_A N
  AModule gn;       ///< Hom(m, N)
  TensorOverA fgn;  ///< (A (.) m) (x)_A Hom(m, N)
  Matrix ev;        ///< counit: fgn -> N, (a (.) x) (x)_A f -> a.f(x)
  Matrix coev;      ///< unit: N -> Hom(m, fn), n -> (x -> (1 (.) x) (x)_A n)
};

/// Builds the unit/counit pair at N, verifying that ev is well-defined on
/// the quotient. Requires a structure passing check_gabi and valid modules.
[[nodiscard]] AdjunctionComponent materialize_adjunction(const GabiStructure& g, const AModule& m,
                                                         const AModule& n);

/// A-linearity of ev and coev plus both triangle identities of the
/// adjunction, exactly, for every N in the effective test set
/// {trivial, regular} + test_modules.
[[nodiscard]] Report adjunction_check(const GabiStructure& g, const AModule& m,
                                      const std::vector<AModule>& test_modules = {});

/// The unitors and associator of boxtimes at (L, M, N), as matrices between
/// quotient coordinates. All three maps are verified well-defined on
/// relation spans and A-linear, and rho is verified invertible; violations
/// throw input_error.
struct BoxtimesConstraints {
  TensorOverA k_box_n;   ///< k boxtimes N
  TensorOverA m_box_k;   ///< M boxtimes k
  TensorOverA l_box_m;   ///< L boxtimes M
  TensorOverA lm_box_n;  ///< (L boxtimes M) boxtimes N
  TensorOverA m_box_n;   ///< M boxtimes N
  TensorOverA l_box_mn;  ///< L boxtimes (M boxtimes N)
  Matrix lambda;         ///< k boxtimes N -> N, (a (.) n) (x)_A 1 -> a.n
  Matrix rho;            ///< M -> M boxtimes k, m -> (1 (.) 1) (x)_A m
  Matrix alpha;          ///< (L boxtimes M) boxtimes N -> L boxtimes (M boxtimes N)
};

[[nodiscard]] BoxtimesConstraints boxtimes_constraints(const GabiStructure& g, const AModule& l,
                                                       const AModule& m, const AModule& n);

/// Sampled normality: invertibility of the fusion map beta, of every
/// associator component over triples from the effective test set, and of
/// every left unitor component; success of derive_hopf(BetaInverse); and
/// FAULT findings whenever a sampled implication predicted by the general
/// theory fails (beta invertible but an associator singular; Hopf derived
/// but a left unitor singular). Statuses go to notes; only FAULTs fail.
[[nodiscard]] Report normality_check(const GabiStructure& g,
                                     const std::vector<AModule>& test_modules = {});

}  // namespace gabikit
