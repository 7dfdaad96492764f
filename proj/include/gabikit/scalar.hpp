#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gabikit/report.hpp"

namespace gabikit {

enum class FieldKind { Rationals, PrimeField };

/// The base field of a computation: the rationals, or a prime field F_p
/// with 2 <= p < 2^31 (so residue products fit in 64 bits).
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  /// Validates primality and the modulus range.
  static FieldSpec prime(std::uint32_t p);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  [[nodiscard]] std::string to_string() const;
};

/// An exact element of a FieldSpec's field: a reduced fraction over the
/// rationals, or a canonical residue 0 <= r < p. Canonical forms are unique,
/// so equality is plain value equality. Mixed-field arithmetic throws.
class Scalar {
 public:
  Scalar() = delete;

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long long value);
  /// Parses "a", "-a", or "a/b" (rationals); a decimal integer (prime
  /// fields, reduced mod p). Throws input_error on malformed text.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws input_error on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  [[nodiscard]] Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  [[nodiscard]] std::string to_string() const;

  /// Canonical residue; only meaningful for prime fields.
  [[nodiscard]] std::uint32_t residue() const { return static_cast<std::uint32_t>(res_); }
  /// Reduced fraction; only meaningful for rationals.
  [[nodiscard]] const mpq_class& rational() const { return rat_; }

 private:
  explicit Scalar(const FieldSpec& f) : field_(f), res_(0) {}

  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class rat_;
  std::uint64_t res_;
};

}  // namespace gabikit
