#include "closure/coeffs.hpp"

#include <cassert>

#include "closure/error.hpp"

namespace closure {
namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

const Residue& same_field(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus)
    throw FieldMismatch("GF(" + std::to_string(a.modulus) + ") vs GF(" +
                        std::to_string(b.modulus) + ")");
  return a;
}

[[noreturn]] void mixed_fields() {
  throw FieldMismatch("cannot combine rational and modular coefficients");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

#ifndef NDEBUG
bool canonical(const mpq_class& q) {
  return q.get_den() >= 1 && gcd(q.get_num(), q.get_den()) == 1;
}
#endif

template <typename RationalOp, typename ResidueOp>
FieldElement combine(const FieldElement& a, const FieldElement& b, RationalOp rop, ResidueOp mop) {
  const auto* qa = std::get_if<mpq_class>(&a.value());
  const auto* qb = std::get_if<mpq_class>(&b.value());
  if (qa && qb) {
    mpq_class r = rop(*qa, *qb);
    assert(canonical(r));
    return FieldElement(std::move(r));
  }
  if (qa || qb) mixed_fields();
  const Residue& ra = a.residue();
  const Residue& rb = b.residue();
  same_field(ra, rb);
  return FieldElement(Residue{mop(ra.value, rb.value, ra.modulus), ra.modulus});
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldElement::FieldElement(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

FieldElement::FieldElement(Residue r) : value_(r) {
  assert(r.modulus != 0 && r.value < r.modulus);
}

std::uint64_t FieldElement::characteristic() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->modulus;
  return 0;
}

Field FieldElement::field() const {
  const std::uint64_t p = characteristic();
  return p == 0 ? Field::rationals() : Field::prime(p);
}

bool FieldElement::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return residue().value == 0;
}

bool FieldElement::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return residue().value == 1;
}

bool FieldElement::is_negative() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
  return false;
}

FieldElement FieldElement::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return FieldElement(mpq_class(-*q));
  const Residue& r = residue();
  return FieldElement(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return combine(
      a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); },
      [](std::uint64_t x, std::uint64_t y, std::uint64_t p) { return (x + y) % p; });
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return combine(
      a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); },
      [](std::uint64_t x, std::uint64_t y, std::uint64_t p) { return (x + p - y) % p; });
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return combine(
      a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x * y); },
      [](std::uint64_t x, std::uint64_t y, std::uint64_t p) { return x * y % p; });
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * field_inv(b); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  const auto* qa = std::get_if<mpq_class>(&a.value_);
  const auto* qb = std::get_if<mpq_class>(&b.value_);
  if (qa && qb) return *qa == *qb;
  if (qa || qb) return false;
  return a.residue() == b.residue();
}

std::string FieldElement::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(residue().value);
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement field_inv(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&a.value())) {
    mpq_class inv = 1 / *q;
    return FieldElement(std::move(inv));
  }
  const Residue& r = a.residue();
  // Fermat: a^(p-2) = a^-1.
  return FieldElement(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus) throw NonPrimeModulus("modulus " + std::to_string(p) + " exceeds 2^32");
  if (!is_prime(p)) throw NonPrimeModulus(std::to_string(p) + " is not prime");
  return Field(p);
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(const mpz_class& n) const {
  if (characteristic_ == 0) return FieldElement(mpq_class(n));
  mpz_class r = n % mpz_class(static_cast<unsigned long>(characteristic_));
  if (r < 0) r += static_cast<unsigned long>(characteristic_);
  return FieldElement(Residue{r.get_ui(), characteristic_});
}

std::string Field::to_string() const {
  if (characteristic_ == 0) return "QQ";
  return "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace closure
