#pragma once

// Ideal operations in a quotient ring k[x]/D: quotients, annihilators,
// saturation, intersection, radicals and the Jacobian test ideal.

#include <cstddef>

#include "closure/groebner.hpp"

namespace closure {

/// The ring R = k[x]/D.
struct QuotientRingContext {
  RingPtr ring;
  Ideal defining;

  explicit QuotientRingContext(Ideal d) : ring(d.ring()), defining(std::move(d)) {}

  /// Canonical representative of p modulo D.
  Polynomial reduce(const Polynomial& p) const { return normal_form(p, defining); }
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }
};

/// Generators of {h : hJ ⊆ I + D}, reduced modulo D (zeros dropped).
Ideal ideal_quotient(const Ideal& I, const Ideal& J, const QuotientRingContext& ctx);

/// (0 : f) in R, reduced modulo D; the zero ideal has no generators.
Ideal annihilator(const Polynomial& f, const QuotientRingContext& ctx);

/// I : f^∞. Throws ZeroPolynomial for f = 0.
Ideal saturation(const Ideal& I, const Polynomial& f);

Ideal intersect(const Ideal& I, const Ideal& J);

/// f ∈ √I, decided by 1 ∈ I + (1 - t f).
bool radical_membership(const Polynomial& f, const Ideal& I);

enum class RadicalStrategy { Auto, ZeroDim, General };

struct RadicalOptions {
  RadicalStrategy strategy = RadicalStrategy::Auto;
  int max_depth = 16;
};

/// √I as the ideal generated by its reduced basis.
///
/// A maximal independent set u turns I into a zero-dimensional ideal over
/// k(u). There every variable's eliminant is replaced by its squarefree part
/// (Seidenberg), the result is contracted back by saturating with the product
/// of leading coefficients, and the part of V(I) where that product vanishes
/// is handled recursively. Throws UnsupportedCharacteristic over GF(p) when p
/// does not exceed an eliminant degree, and StrategyFailed when the recursion
/// is deeper than `max_depth` or `ZeroDim` meets a positive-dimensional ideal.
Ideal radical(const Ideal& I, const RadicalOptions& options = {});

/// True iff I ⊆ R and every generator of R lies in √I.
bool certify_radical(const Ideal& I, const Ideal& R);

/// D + (c×c minors of the Jacobian of D's generators), c = nvars - dim(D).
Ideal jacobian_test_ideal(const QuotientRingContext& ctx);

/// Greatest common divisor up to a unit, normalized monic.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, ∂p/∂x_var).
Polynomial squarefree_part(const Polynomial& p, std::size_t var);

}  // namespace closure
