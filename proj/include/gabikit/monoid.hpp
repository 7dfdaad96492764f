// The set-theoretic counterpart of the linear theory: finite monoids given by
// Cayley tables, carrying a comultiplication delta: M -> M x M^op written
// m |-> (m+, m-). At level HomLift delta must be a monoid map; at level
// FullLift the extra laws m+ = m, m+ m- = 1 and the double-split law hold,
// which forces M to be a group with m- = m^{-1}.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gabikit/report.hpp"

namespace gabikit {

/// A finite monoid: table[i][j] is the index of the product of elements i
/// and j. Invariants: table is size x size with entries below size, the
/// identity row/column act trivially, and multiplication is associative.
struct FiniteMonoid {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
};

/// Comultiplication data on a monoid: delta[m] = (m+, m-).
struct MonoidGabi {
  FiniteMonoid monoid;
  std::vector<std::pair<std::size_t, std::size_t>> delta;
};

/// How much of the lifted closed structure a candidate delta must support.
enum class MonoidLiftLevel {
  HomLift,   ///< delta is a monoid map M -> M x M^op.
  FullLift,  ///< additionally m+ = m, m+ m- = 1, and the double-split law.
};

/// Throws input_error unless the table shape, the identity laws, and
/// associativity all hold (the offending entry or triple is named).
void validate_monoid(const FiniteMonoid& m);

/// The table of two-sided inverses when every element has one; nullopt
/// otherwise. Throws input_error on an invalid monoid.
[[nodiscard]] std::optional<std::vector<std::size_t>> is_group(const FiniteMonoid& m);

/// Verify the monoid-map laws for delta on all pairs:
///   delta(1) = (1,1),  (mn)+ = m+ n+,  (mn)- = n- m-
/// and at FullLift additionally, for every element m:
///   m+ = m,  m+ m- = 1,  (m++, m-+, m-- m+-) = (m+, m-, 1).
/// Failures are reported with the witnessing element or pair; malformed
/// shapes throw input_error.
[[nodiscard]] Report check_monoid_gabi(const MonoidGabi& s, MonoidLiftLevel level);

inline constexpr std::uint64_t kDefaultMonoidSearchCap = std::uint64_t{1} << 24;

/// Every delta table passing check_monoid_gabi at the given level, ordered
/// lexicographically on the flattened sequence delta(0)+, delta(0)-,
/// delta(1)+, ... The raw candidate count (size^2)^size must not exceed cap;
/// otherwise input_error names the count and the cap to rerun with.
[[nodiscard]] std::vector<MonoidGabi> search_monoid_gabi(
    const FiniteMonoid& m, MonoidLiftLevel level,
    std::uint64_t cap = kDefaultMonoidSearchCap);

/// delta(m) = (m, m^{-1}) when the monoid is a group; nullopt otherwise.
[[nodiscard]] std::optional<MonoidGabi> group_gabi(const FiniteMonoid& m);

}  // namespace gabikit
