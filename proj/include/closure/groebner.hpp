#pragma once

// Buchberger's algorithm and the ideal-level machinery built directly on it:
// normal forms, membership, syzygies and lifts, elimination, dimension.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "closure/polyring.hpp"

namespace closure {

/// An ideal given by generators, with reduced Gröbner bases memoized per
/// monomial order. Copies share the memo; the memo is internally locked, so a
/// shared Ideal may be read from several threads.
class Ideal {
 public:
  /// Zero generators are dropped. All generators must live in `ring`.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced Gröbner basis under the ring's own order, sorted by descending
  /// leading monomial.
  const std::vector<Polynomial>& basis() const;
  /// Reduced basis under `order`; the polynomials live in
  /// ring()->with_order(order).
  std::vector<Polynomial> basis(const MonomialOrder& order) const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  /// Same ideal (two-way containment).
  bool equals(const Ideal& other) const;

  /// The same ideal moved to another ring (variables matched by name).
  Ideal in_ring(const RingPtr& target) const;

  /// Ideal generated by the reduced basis.
  Ideal reduced() const { return Ideal(ring_, basis()); }

  friend Ideal operator+(const Ideal& a, const Ideal& b);
  friend Ideal operator*(const Ideal& a, const Ideal& b);

  /// `(g1, g2, ...)` using the generator list.
  std::string to_string() const;

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Memo> memo_;
};

namespace detail {

/// Decides whether the S-pair of two leading monomials is worth forming.
using PairFilter = std::function<bool(const Monomial&, const Monomial&)>;

/// Reduced Gröbner basis of `gens` under their ring's order. Buchberger with
/// the Gebauer-Möller criteria and normal pair selection. Pairs rejected by
/// `filter` are never formed (used for module bases).
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const PairFilter& filter = {});

/// Full reduction of p by a basis (any order of divisors).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis);

}  // namespace detail

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
/// The returned Ideal lives in gens' ring re-ordered by `order` and has its
/// reduced basis as generator list.
Ideal buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& p, const Ideal& ideal);
bool ideal_member(const Polynomial& p, const Ideal& ideal);

/// Relation vectors (alpha_0..alpha_t) with sum alpha_j g_j in the ambient
/// ideal, entries reduced modulo it; vectors vanishing modulo it are omitted.
struct SyzygyModule {
  std::size_t generator_count = 0;
  std::vector<std::vector<Polynomial>> relations;
};

/// A module Gröbner basis of {(g_j, e_j)} together with {(d, 0) : d in
/// ambient}, under a position-over-term order with the value slot first.
/// Elements whose value slot vanishes generate the syzygies; reducing
/// (p, 0) expresses p through the g_j.
class TrackedBasis {
 public:
  TrackedBasis(std::vector<Polynomial> gens, Ideal ambient);

  std::size_t generator_count() const { return count_; }

  /// Coefficients c with p - sum c_j g_j in the ambient ideal, or nullopt
  /// when p is not in (gens) + ambient.
  std::optional<std::vector<Polynomial>> try_lift(const Polynomial& p) const;
  /// Throws NotAMember.
  std::vector<Polynomial> lift(const Polynomial& p) const;

  SyzygyModule syzygies() const;

 private:
  std::optional<std::size_t> slot_of(const Monomial& m) const;

  RingPtr base_;
  RingPtr module_ring_;
  std::size_t count_;
  Ideal ambient_;
  std::vector<Polynomial> basis_;
};

SyzygyModule syzygies(const std::vector<Polynomial>& gens, const Ideal& ambient);
std::vector<Polynomial> lift(const Polynomial& p, const std::vector<Polynomial>& gens, const Ideal& ambient);

/// Generators of I ∩ k[remaining variables], as an ideal of I's ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop);

/// Krull dimension of ring/I; -1 for the unit ideal.
int dimension(const Ideal& ideal);

/// A maximal-size set of variable indices independent modulo the leading
/// term ideal (empty for the unit ideal).
std::vector<std::size_t> max_independent_set(const Ideal& ideal);

}  // namespace closure
