#include "gabikit/scalar.hpp"

#include <charconv>

namespace gabikit {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Modular inverse by extended Euclid; pre: 0 < a < p, p prime.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw input_error("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f); }

Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long value) {
  Scalar s(f);
  if (f.kind == FieldKind::Rationals) {
    s.rat_ = mpq_class(static_cast<long>(value));
  } else {
    long long r = value % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    s.res_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  if (text.empty()) throw input_error("empty scalar literal");
  if (f.kind == FieldKind::Rationals) {
    Scalar s(f);
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, std::string(text).c_str(), 10) != 0) {
      mpq_clear(q);
      throw input_error("malformed rational literal '" + std::string(text) + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
      mpq_clear(q);
      throw input_error("zero denominator in '" + std::string(text) + "'");
    }
    mpq_canonicalize(q);
    s.rat_ = mpq_class(q);
    mpq_clear(q);
    return s;
  }
  long long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw input_error("malformed residue literal '" + std::string(text) + "'");
  }
  return of_int(f, v);
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::Rationals ? rat_.get_num() == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw input_error("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind == FieldKind::Rationals) {
    s.rat_ = -rat_;
  } else {
    s.res_ = res_ == 0 ? 0 : field_.p - res_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s(*this);
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s(*this);
  s -= o;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s(*this);
  s *= o;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind == FieldKind::Rationals) {
    rat_ += o.rat_;
  } else {
    res_ = (res_ + o.res_) % field_.p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind == FieldKind::Rationals) {
    rat_ -= o.rat_;
  } else {
    res_ = (res_ + field_.p - o.res_) % field_.p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.kind == FieldKind::Rationals) {
    rat_ *= o.rat_;
  } else {
    res_ = (res_ * o.res_) % field_.p;
  }
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw input_error("division by zero");
  Scalar s(field_);
  if (field_.kind == FieldKind::Rationals) {
    s.rat_ = 1 / rat_;
  } else {
    s.res_ = mod_inverse(res_, field_.p);
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.kind == FieldKind::Rationals ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string Scalar::to_string() const {
  return field_.kind == FieldKind::Rationals ? rat_.get_str() : std::to_string(res_);
}

}  // namespace gabikit
