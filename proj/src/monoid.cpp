#include "gabikit/monoid.hpp"

#include <gmpxx.h>

#include <functional>
#include <string>

namespace gabikit {

namespace {

std::string el(std::size_t i) { return std::to_string(i); }

std::string pair_witness(std::size_t i, std::size_t j) {
  return "(" + el(i) + ", " + el(j) + ")";
}

}  // namespace

void validate_monoid(const FiniteMonoid& m) {
  if (m.size == 0) throw input_error("a monoid has at least an identity element");
  if (m.table.size() != m.size)
    throw input_error("monoid table has " + std::to_string(m.table.size()) +
                      " rows, expected " + std::to_string(m.size));
  for (std::size_t i = 0; i < m.size; ++i) {
    if (m.table[i].size() != m.size)
      throw input_error("monoid table row " + el(i) + " has " +
                        std::to_string(m.table[i].size()) + " entries, expected " +
                        std::to_string(m.size));
    for (std::size_t j = 0; j < m.size; ++j)
      if (m.table[i][j] >= m.size)
        throw input_error("monoid table entry at " + pair_witness(i, j) +
                          " is out of range");
  }
  if (m.identity >= m.size) throw input_error("monoid identity index is out of range");
  for (std::size_t j = 0; j < m.size; ++j) {
    if (m.table[m.identity][j] != j || m.table[j][m.identity] != j)
      throw input_error("monoid identity law fails at element " + el(j));
  }
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j < m.size; ++j)
      for (std::size_t k = 0; k < m.size; ++k)
        if (m.table[m.table[i][j]][k] != m.table[i][m.table[j][k]])
          throw input_error("monoid table is not associative at (" + el(i) + ", " +
                            el(j) + ", " + el(k) + ")");
}

std::optional<std::vector<std::size_t>> is_group(const FiniteMonoid& m) {
  validate_monoid(m);
  std::vector<std::size_t> inverse(m.size);
  for (std::size_t i = 0; i < m.size; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < m.size; ++j) {
      if (m.table[i][j] == m.identity && m.table[j][i] == m.identity) {
        inverse[i] = j;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return inverse;
}

Report check_monoid_gabi(const MonoidGabi& s, MonoidLiftLevel level) {
  validate_monoid(s.monoid);
  const FiniteMonoid& m = s.monoid;
  if (s.delta.size() != m.size)
    throw input_error("delta table has " + std::to_string(s.delta.size()) +
                      " entries, expected " + std::to_string(m.size));
  for (std::size_t i = 0; i < m.size; ++i)
    if (s.delta[i].first >= m.size || s.delta[i].second >= m.size)
      throw input_error("delta(" + el(i) + ") is out of range");

  Report r;
  const std::size_t one = m.identity;
  if (s.delta[one] != std::pair{one, one})
    r.fail("delta(1) = (1, 1)", el(one),
           "delta(1) = " + pair_witness(s.delta[one].first, s.delta[one].second));
  for (std::size_t a = 0; a < m.size; ++a) {
    for (std::size_t b = 0; b < m.size; ++b) {
      const std::size_t p = m.table[a][b];
      const std::size_t plus = m.table[s.delta[a].first][s.delta[b].first];
      if (s.delta[p].first != plus)
        r.fail("(mn)+ = m+ n+", pair_witness(a, b),
               "(mn)+ = " + el(s.delta[p].first) + " but m+ n+ = " + el(plus));
      const std::size_t minus = m.table[s.delta[b].second][s.delta[a].second];
      if (s.delta[p].second != minus)
        r.fail("(mn)- = n- m-", pair_witness(a, b),
               "(mn)- = " + el(s.delta[p].second) + " but n- m- = " + el(minus));
    }
  }
  if (level == MonoidLiftLevel::FullLift) {
    for (std::size_t a = 0; a < m.size; ++a) {
      const auto [ap, am] = s.delta[a];
      if (ap != a)
        r.fail("m+ = m", el(a), "m+ = " + el(ap) + " but m = " + el(a));
      if (m.table[ap][am] != one)
        r.fail("m+ m- = 1", el(a), "m+ m- = " + el(m.table[ap][am]));
      // Double-split law (m++, m-+, m-- m+-) = (m+, m-, 1).
      if (s.delta[ap].first != ap)
        r.fail("m++ = m+", el(a), "m++ = " + el(s.delta[ap].first));
      if (s.delta[am].first != am)
        r.fail("m-+ = m-", el(a), "m-+ = " + el(s.delta[am].first));
      const std::size_t tail = m.table[s.delta[am].second][s.delta[ap].second];
      if (tail != one) r.fail("m-- m+- = 1", el(a), "m-- m+- = " + el(tail));
    }
  }
  return r;
}

std::vector<MonoidGabi> search_monoid_gabi(const FiniteMonoid& m, MonoidLiftLevel level,
                                           std::uint64_t cap) {
  validate_monoid(m);
  const std::size_t n = m.size;
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(n * n),
                static_cast<unsigned long>(n));
  if (total > mpz_class(static_cast<unsigned long>(cap)))
    throw input_error("search space has " + total.get_str() +
                      " candidates, which exceeds the cap of " + std::to_string(cap) +
                      "; rerun with a cap of at least " + total.get_str());

  const bool full = level == MonoidLiftLevel::FullLift;
  std::vector<std::pair<std::size_t, std::size_t>> delta(n);

  // True iff some law whose operands are all assigned (indices <= t) and which
  // involves the element t fails. Each law is tested exactly once along an
  // enumeration path, at the step where its last operand gets a value, so a
  // prefix is cut only when every completion of it would fail the final
  // check: the pruned enumeration yields the naive lexicographic result list.
  const auto violates = [&](std::size_t t) -> bool {
    if (t == m.identity && delta[t] != std::pair{m.identity, m.identity}) return true;
    if (full) {
      if (delta[t].first != t) return true;
      if (m.table[delta[t].first][delta[t].second] != m.identity) return true;
    }
    for (std::size_t a = 0; a <= t; ++a) {
      for (std::size_t b = 0; b <= t; ++b) {
        const std::size_t p = m.table[a][b];
        if (p > t) continue;
        if (a != t && b != t && p != t) continue;
        if (delta[p].first != m.table[delta[a].first][delta[b].first]) return true;
        if (delta[p].second != m.table[delta[b].second][delta[a].second]) return true;
      }
    }
    if (full) {
      for (std::size_t a = 0; a <= t; ++a) {
        const auto [ap, am] = delta[a];
        if (ap > t || am > t) continue;
        if (a != t && ap != t && am != t) continue;
        if (delta[ap].first != ap) return true;
        if (delta[am].first != am) return true;
        if (m.table[delta[am].second][delta[ap].second] != m.identity) return true;
      }
    }
    return false;
  };

  std::vector<MonoidGabi> out;
  const std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (t == n) {
      out.push_back(MonoidGabi{m, delta});
      return;
    }
    for (std::size_t code = 0; code < n * n; ++code) {
      delta[t] = {code / n, code % n};
      if (!violates(t)) assign(t + 1);
    }
  };
  assign(0);
  return out;
}

std::optional<MonoidGabi> group_gabi(const FiniteMonoid& m) {
  const auto inverse = is_group(m);
  if (!inverse) return std::nullopt;
  MonoidGabi s{m, {}};
  s.delta.reserve(m.size);
  for (std::size_t i = 0; i < m.size; ++i) s.delta.emplace_back(i, (*inverse)[i]);
  return s;
}

}  // namespace gabikit
