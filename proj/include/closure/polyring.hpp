#pragma once

// Sparse multivariate polynomials over an exact field.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "closure/coeffs.hpp"

namespace closure {

/// Exponent vector; its length is the variable count of the owning ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// A monomial order: lex or degree-reverse-lex over all variables in index
/// order, or a block order built from such pieces on a partition of the
/// variables (earlier blocks dominate).
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  struct Block {
    std::vector<std::size_t> variables;
    Kind kind;  // Lex or DegRevLex

    friend bool operator==(const Block&, const Block&) = default;
  };

  MonomialOrder() = default;
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
  static MonomialOrder block(std::vector<Block> blocks);

  Kind kind() const { return kind_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// Throws InvalidOrder unless the blocks partition {0..nvars-1}.
  void validate(std::size_t nvars) const;

  /// The same order expressed as explicit blocks over nvars variables.
  std::vector<Block> as_blocks(std::size_t nvars) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<Block> blocks) : kind_(kind), blocks_(std::move(blocks)) {}

  Kind kind_ = Kind::DegRevLex;
  std::vector<Block> blocks_;
};

enum class Comparison { LT, EQ, GT };

Comparison compare_monomials(const MonomialOrder& order, const Monomial& m1, const Monomial& m2);

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// k[x1..xn] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> variables, MonomialOrder order);

  static RingPtr make(Field field, std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::degrevlex());

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require_index(std::string_view name) const;

  /// Same variables and field under another order.
  RingPtr with_order(MonomialOrder order) const;

  /// `names` appended after the existing variables. A whole-ring lex or
  /// degrevlex order is extended over the new variables; a block order gets
  /// an extra degrevlex block.
  RingPtr with_variables_appended(const std::vector<std::string>& names) const;

  /// `names` placed in front, in their own block of the given kind which
  /// dominates the current order (elimination / module position order).
  RingPtr with_variables_prepended(const std::vector<std::string>& names,
                                   MonomialOrder::Kind kind) const;

  /// A variable name not present in this ring, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws RingMismatch.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  FieldElement coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms sorted strictly descending in the ring order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, Monomial m, FieldElement c);
  /// Any term list: sorted, merged and stripped of zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const FieldElement& leading_coeff() const { return terms_.front().coeff; }

  bool is_constant() const;
  bool is_one() const;
  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  /// The polynomial without its leading term.
  Polynomial tail() const;

  Polynomial monic() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned n) const;

  /// this - c*m*g, computed in one merge pass.
  Polynomial minus_scaled(const FieldElement& c, const Monomial& m, const Polynomial& g) const;

  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Throws UnknownVariable if a variable in use is missing from `target`.
  Polynomial in_ring(const RingPtr& target) const;

  /// Canonical text, e.g. `x^2 + y^2 - 1`.
  std::string to_string() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  /// Same ring and same terms.
  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class PolyOpKind { Add, Sub, Mul };
Polynomial poly_op(PolyOpKind kind, const Polynomial& p, const Polynomial& q);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: p = sum q_i d_i + r, with no term of r divisible by
/// any LT(d_i). Divisors are tried in list order. Uses the ring's order.
DivisionResult divide_with_remainder(const Polynomial& p, std::span<const Polynomial> divisors);
/// Same, under an explicit order; results are returned in p's ring.
DivisionResult divide_with_remainder(const Polynomial& p, std::span<const Polynomial> divisors,
                                     const MonomialOrder& order);

/// Exact quotient p / d; throws NotAMember when d does not divide p.
Polynomial exact_quotient(const Polynomial& p, const Polynomial& d);

Polynomial derivative(const Polynomial& p, std::size_t var);

/// Integer-coefficient multiple of p with coprime coefficients and a positive
/// leading coefficient (QQ only; GF(p) input is returned monic).
Polynomial primitive_part(const Polynomial& p);

/// Least common multiple of the coefficient denominators (1 over GF(p)).
mpz_class denominator_lcm(const Polynomial& p);

}  // namespace closure
