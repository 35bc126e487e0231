#pragma once

// Test helpers: parsing shorthands, seeded random polynomials, substitution
// and rank oracles that do not go through the Gröbner engine.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "closure/document.hpp"

namespace support {

using namespace closure;

inline RingPtr ring(const std::vector<std::string>& vars, MonomialOrder order = MonomialOrder::degrevlex(),
                    Field field = Field::rationals()) {
  return PolyRing::make(field, vars, order);
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

inline Ideal I(const RingPtr& r, const std::vector<std::string>& texts) { return Ideal(r, Ps(r, texts)); }

inline AffinePresentation presentation(const std::string& document) {
  return AffinePresentation::from_ideal(parse_input(document).ideal());
}

/// p(images) in the images' ring, computed term by term.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  const RingPtr& target = images.front().ring();
  Polynomial out(target);
  for (const auto& t : p.terms()) {
    Polynomial m = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i]) m *= images[i].pow(t.monomial[i]);
    }
    out += m;
  }
  return out;
}

/// Images of p's ring variables by name; unnamed variables map to themselves.
inline Polynomial substitute(const Polynomial& p, const RingPtr& target,
                             const std::map<std::string, std::string>& images) {
  std::vector<Polynomial> imgs;
  for (const auto& v : p.ring()->variables()) {
    auto it = images.find(v);
    imgs.push_back(P(target, it == images.end() ? v : it->second));
  }
  return substitute(p, imgs);
}

class Random {
 public:
  explicit Random(std::uint32_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint32_t>(hi - lo + 1)); }

  FieldElement coefficient(const Field& field) {
    long n = integer(-5, 5);
    if (n == 0) n = 1;
    if (field.is_rational() && integer(0, 3) == 0) {
      return field.from_integer(n) / field.from_integer(integer(1, 4));
    }
    return field.from_integer(n);
  }

  Monomial monomial(std::size_t nvars, int max_degree) {
    Monomial m(nvars);
    int budget = static_cast<int>(integer(0, max_degree));
    for (int k = 0; k < budget; ++k) m[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))] += 1;
    return m;
  }

  Polynomial polynomial(const RingPtr& ring, int max_terms, int max_degree) {
    std::vector<Term> terms;
    long n = integer(1, max_terms);
    for (long k = 0; k < n; ++k) {
      terms.push_back({monomial(ring->nvars(), max_degree), coefficient(ring->field())});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  Polynomial nonzero_polynomial(const RingPtr& ring, int max_terms, int max_degree) {
    for (;;) {
      Polynomial p = polynomial(ring, max_terms, max_degree);
      if (!p.is_zero()) return p;
    }
  }

  std::vector<Polynomial> polynomials(const RingPtr& ring, int count, int max_terms, int max_degree) {
    std::vector<Polynomial> out;
    for (int k = 0; k < count; ++k) out.push_back(nonzero_polynomial(ring, max_terms, max_degree));
    return out;
  }

 private:
  std::mt19937 rng_;
};

/// Rank of a rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// All monomials in `nvars` variables of total degree at most `degree`.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out{Monomial(nvars)};
  for (unsigned d = 1; d <= degree; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      if (m.degree() != d - 1) continue;
      std::size_t last = 0;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (m[i]) last = i;
      }
      for (std::size_t i = m.is_one() ? 0 : last; i < nvars; ++i) {
        Monomial n = m;
        n[i] += 1;
        next.push_back(n);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
  }
  return out;
}

}  // namespace support
