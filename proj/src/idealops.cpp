#include "closure/idealops.hpp"

#include <algorithm>

#include "closure/error.hpp"

namespace closure {
namespace {

// Ring with one extra variable placed in a dominating lex block.
struct Extended {
  RingPtr ring;
  Polynomial t;
};

Extended with_fresh_variable(const RingPtr& ring, const std::string& stem) {
  RingPtr ext = ring->with_variables_prepended({ring->fresh_name(stem)}, MonomialOrder::Kind::Lex);
  return {ext, Polynomial::variable(ext, 0)};
}

// Reduced basis elements free of the leading (eliminated) variable, moved back.
Ideal drop_first_variable(const std::vector<Polynomial>& basis, const RingPtr& target) {
  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis)
    if (!g.involves(0)) kept.push_back(g.in_ring(target));
  return Ideal(target, std::move(kept));
}

Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

// K : h for a single polynomial h, via K ∩ (h) = h·(K : h).
Ideal quotient_by_element(const Ideal& K, const Polynomial& h) {
  if (h.is_zero() || K.contains(h)) return Ideal::unit(K.ring());
  const Ideal meet = intersect(K, principal(h));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : meet.generators()) gens.push_back(exact_quotient(g, h));
  return Ideal(K.ring(), std::move(gens)).reduced();
}

std::vector<Polynomial> reduce_modulo(const std::vector<Polynomial>& gens, const QuotientRingContext& ctx) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    Polynomial r = ctx.reduce(g);
    if (!r.is_zero() && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  const RingPtr ring = m[0][0].ring();
  Polynomial det(ring);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(std::move(minor));
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool univariate_in(const Polynomial& p, std::size_t var) {
  for (const Term& t : p.terms())
    for (std::size_t v = 0; v < t.monomial.size(); ++v)
      if (v != var && t.monomial[v] != 0) return false;
  return true;
}

Polynomial euclid_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    const Polynomial divisors[] = {b};
    Polynomial r = divide_with_remainder(a, divisors).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Product of the distinct leading coefficients in k[u] of I's basis under a
// block order with the `main` variables dominating.
Polynomial leading_coefficient_product(const Ideal& I, const std::vector<std::size_t>& main,
                                       const std::vector<std::size_t>& params) {
  const RingPtr& ring = I.ring();
  std::vector<MonomialOrder::Block> blocks{{main, MonomialOrder::Kind::DegRevLex}};
  if (!params.empty()) blocks.push_back({params, MonomialOrder::Kind::DegRevLex});
  const MonomialOrder order = MonomialOrder::block(std::move(blocks));
  std::vector<Polynomial> distinct;
  for (const Polynomial& g : I.basis(order)) {
    const Monomial& lm = g.leading_monomial();
    std::vector<Term> coeff;
    for (const Term& t : g.terms()) {
      const bool same_main = std::all_of(main.begin(), main.end(), [&](std::size_t v) { return t.monomial[v] == lm[v]; });
      if (!same_main) continue;
      Monomial m = t.monomial;
      for (std::size_t v : main) m[v] = 0;
      coeff.push_back({std::move(m), t.coeff});
    }
    Polynomial c = Polynomial::from_terms(ring, std::move(coeff)).monic();
    if (!c.is_constant() && std::find(distinct.begin(), distinct.end(), c) == distinct.end())
      distinct.push_back(std::move(c));
  }
  Polynomial s = Polynomial::constant(ring, 1);
  for (const Polynomial& c : distinct) s *= c;
  return s;
}

// Generator of (I ∩ k[u, x_var]) k(u)[x_var] of least positive x_var-degree.
Polynomial eliminant(const Ideal& I, std::size_t var, const std::vector<std::size_t>& main,
                     const std::vector<std::size_t>& params) {
  std::vector<std::size_t> others;
  for (std::size_t v : main)
    if (v != var) others.push_back(v);
  std::vector<MonomialOrder::Block> blocks;
  if (!others.empty()) blocks.push_back({others, MonomialOrder::Kind::DegRevLex});
  blocks.push_back({{var}, MonomialOrder::Kind::Lex});
  if (!params.empty()) blocks.push_back({params, MonomialOrder::Kind::DegRevLex});
  const auto basis = I.basis(MonomialOrder::block(std::move(blocks)));
  const Polynomial* best = nullptr;
  for (const Polynomial& g : basis) {
    if (std::any_of(others.begin(), others.end(), [&](std::size_t v) { return g.involves(v); })) continue;
    const auto d = g.degree_in(var);
    if (d > 0 && (!best || d < best->degree_in(var))) best = &g;
  }
  if (!best) throw StrategyFailed("no eliminant for " + I.ring()->variables()[var] + " in " + I.to_string());
  return best->in_ring(I.ring());
}

Ideal radical_recursive(const Ideal& I, const RadicalOptions& options, int depth) {
  if (depth > options.max_depth)
    throw StrategyFailed("radical recursion exceeded depth " + std::to_string(options.max_depth));
  const RingPtr& ring = I.ring();
  if (I.is_zero()) return I;
  if (I.is_unit()) return Ideal::unit(ring);

  const std::vector<std::size_t> params = max_independent_set(I);
  if (!params.empty() && options.strategy == RadicalStrategy::ZeroDim)
    throw StrategyFailed("zerodim strategy on an ideal of dimension " + std::to_string(params.size()));
  std::vector<std::size_t> main;
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    if (std::find(params.begin(), params.end(), v) == params.end()) main.push_back(v);

  std::vector<Polynomial> gens = I.generators();
  for (std::size_t v : main) gens.push_back(squarefree_part(eliminant(I, v, main, params), v));
  const Ideal J(ring, std::move(gens));

  const Polynomial sJ = leading_coefficient_product(J, main, params);
  Ideal generic = sJ.is_constant() ? J.reduced() : saturation(J, sJ);
  const Polynomial sI = leading_coefficient_product(I, main, params);
  if (sI.is_constant()) return generic;
  const Ideal special = radical_recursive(I + principal(sI), options, depth + 1);
  return intersect(generic, special);
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const QuotientRingContext& ctx) {
  require_same_ring(I.ring(), ctx.ring);
  require_same_ring(J.ring(), ctx.ring);
  const Ideal K = I + ctx.defining;
  Ideal result = Ideal::unit(ctx.ring);
  for (const Polynomial& h : J.generators()) {
    Ideal q = quotient_by_element(K, h);
    result = result.is_unit() ? q : intersect(result, q);
  }
  return Ideal(ctx.ring, reduce_modulo(result.basis(), ctx));
}

Ideal annihilator(const Polynomial& f, const QuotientRingContext& ctx) {
  require_same_ring(f.ring(), ctx.ring);
  return ideal_quotient(Ideal::zero(ctx.ring), principal(f), ctx);
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw ZeroPolynomial("saturation by zero");
  if (f.is_constant() || I.is_zero()) return I.reduced();
  auto [ring, t] = with_fresh_variable(I.ring(), "@t");
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(g.in_ring(ring));
  gens.push_back(Polynomial::constant(ring, 1) - t * f.in_ring(ring));
  return drop_first_variable(Ideal(ring, std::move(gens)).basis(), I.ring());
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  if (I.is_unit()) return J.reduced();
  if (J.is_unit()) return I.reduced();
  auto [ring, t] = with_fresh_variable(I.ring(), "@t");
  const Polynomial one_minus_t = Polynomial::constant(ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(t * g.in_ring(ring));
  for (const Polynomial& g : J.generators()) gens.push_back(one_minus_t * g.in_ring(ring));
  return drop_first_variable(Ideal(ring, std::move(gens)).basis(), I.ring());
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  auto [ring, t] = with_fresh_variable(I.ring(), "@t");
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(g.in_ring(ring));
  gens.push_back(Polynomial::constant(ring, 1) - t * f.in_ring(ring));
  return Ideal(ring, std::move(gens)).is_unit();
}

Ideal radical(const Ideal& I, const RadicalOptions& options) {
  return radical_recursive(I, options, 0).reduced();
}

bool certify_radical(const Ideal& I, const Ideal& R) {
  if (!R.contains(I)) return false;
  return std::all_of(R.generators().begin(), R.generators().end(),
                     [&](const Polynomial& g) { return radical_membership(g, I); });
}

Ideal jacobian_test_ideal(const QuotientRingContext& ctx) {
  const Ideal& D = ctx.defining;
  const RingPtr& ring = ctx.ring;
  if (D.is_unit()) return Ideal::unit(ring);
  const std::size_t n = ring->nvars();
  const int dim = dimension(D);
  const std::size_t c = n - static_cast<std::size_t>(dim);
  const std::vector<Polynomial>& gens = D.basis();
  if (c == 0) return Ideal::unit(ring);

  std::vector<std::vector<Polynomial>> jac;
  for (const Polynomial& f : gens) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < n; ++v) row.push_back(derivative(f, v));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> out = gens;
  std::vector<Polynomial> seen;
  for (const auto& rows : subsets(gens.size(), c))
    for (const auto& cols : subsets(n, c)) {
      std::vector<std::vector<Polynomial>> m;
      for (std::size_t r : rows) {
        std::vector<Polynomial> row;
        for (std::size_t col : cols) row.push_back(jac[r][col]);
        m.push_back(std::move(row));
      }
      Polynomial det = determinant(std::move(m));
      if (det.is_zero()) continue;
      Polynomial key = det.monic();
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(std::move(key));
      out.push_back(std::move(det));
    }
  return Ideal(ring, std::move(out));
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.ring(), 1);
  for (std::size_t v = 0; v < a.ring()->nvars(); ++v)
    if (univariate_in(a, v) && univariate_in(b, v)) return euclid_gcd(a, b);
  const Ideal meet = intersect(principal(a), principal(b));
  if (meet.generators().size() != 1) throw StrategyFailed("intersection of principal ideals is not principal");
  return exact_quotient(a * b, meet.generators().front()).monic();
}

Polynomial squarefree_part(const Polynomial& p, std::size_t var) {
  if (p.is_constant()) return p.monic();
  const std::uint64_t ch = p.ring()->field().characteristic();
  if (ch != 0 && ch <= p.degree_in(var))
    throw UnsupportedCharacteristic("GF(" + std::to_string(ch) + ") is too small for a squarefree part of degree " +
                                    std::to_string(p.degree_in(var)));
  const Polynomial g = polynomial_gcd(p, derivative(p, var));
  return exact_quotient(p, g).monic();
}

}  // namespace closure
