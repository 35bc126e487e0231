#pragma once

// Exact coefficient fields: the rationals and prime fields GF(p).

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace closure {

/// Residue class modulo a prime. `value` is always in [0, modulus).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;

  friend bool operator==(const Residue&, const Residue&) = default;
};

class Field;

/// An element of QQ or of some GF(p), always kept in canonical form:
/// rationals are reduced with a positive denominator, residues lie in [0, p).
class FieldElement {
 public:
  using Value = std::variant<mpq_class, Residue>;

  /// The rational zero.
  FieldElement() : value_(mpq_class(0)) {}
  explicit FieldElement(mpq_class q);
  explicit FieldElement(Residue r);

  const Value& value() const { return value_; }
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }

  /// 0 for QQ, p for GF(p).
  std::uint64_t characteristic() const;
  Field field() const;

  bool is_zero() const;
  bool is_one() const;
  /// Sign used when printing: residues are never negative.
  bool is_negative() const;

  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  Value value_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);

/// Descriptor of a coefficient field. Characteristic 0 means QQ.
class Field {
 public:
  /// QQ.
  Field() = default;
  static Field rationals() { return Field(); }
  /// GF(p); throws NonPrimeModulus unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const mpz_class& n) const;
  FieldElement from_integer(long n) const { return from_integer(mpz_class(n)); }

  /// "QQ" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : characteristic_(p) {}
  std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace closure
