// Coalgebras, bialgebras, the convolution product, and antipode solving.
#pragma once

#include <optional>

#include "gabikit/algebra.hpp"
#include "gabikit/matrix.hpp"
#include "gabikit/report.hpp"

namespace gabikit {

/// Comultiplication and counit on an n-dimensional space: comul is the
/// n^2 x n matrix of Delta (output indexed left-factor-major), counit the
/// 1 x n matrix of eps.
struct CoalgebraData {
  FieldSpec field;
  std::size_t dim = 0;
  Matrix comul;
  Matrix counit;

  void validate_shape() const;
};

/// An algebra and a coalgebra on the same underlying space; the bialgebra
/// compatibility (Delta, eps multiplicative and unital) is what
/// check_bialgebra verifies.
struct BialgebraData {
  FinAlgebra algebra;
  CoalgebraData coalgebra;

  void validate_shape() const;
};

enum class AntipodeSide { Left, Right, TwoSided };

[[nodiscard]] std::string to_string(AntipodeSide side);

/// A candidate antipode matrix together with which convolution-inverse law
/// it is claimed (or was solved) to satisfy.
struct AntipodeCandidate {
  Matrix S;
  AntipodeSide side = AntipodeSide::TwoSided;
};

/// Coassociativity and both counit laws, checked exactly; one finding per
/// violated basis element.
[[nodiscard]] Report check_coalgebra(const CoalgebraData& c);

/// Algebra axioms, coalgebra axioms, and the compatibility: Delta is an
/// algebra map into A (x) A (componentwise product) and eps an augmentation.
[[nodiscard]] Report check_bialgebra(const BialgebraData& b);

/// Convolution product m . (f (x) g) . Delta on n x n matrices.
[[nodiscard]] Matrix convolution(const Matrix& f, const Matrix& g, const BialgebraData& b);

/// Solve the linear system making S a one-sided (or two-sided) convolution
/// inverse of the identity: Right means m.(id (x) S).Delta = unit.eps, Left
/// means m.(S (x) id).Delta = unit.eps. Returns the canonical solution
/// (free variables zero) or nullopt when the system is inconsistent.
[[nodiscard]] std::optional<AntipodeCandidate> solve_antipode(const BialgebraData& b,
                                                              AntipodeSide side);

/// Verify S(uv) = S(v)S(u) on basis pairs, S(1) = 1,
/// (S (x) S) . Delta = twist . Delta . S, and eps . S = eps.
[[nodiscard]] Report check_anti_bialgebra_map(const Matrix& S, const BialgebraData& b);

}  // namespace gabikit
