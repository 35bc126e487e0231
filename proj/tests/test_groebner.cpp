#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace closure;
using support::I;
using support::P;
using support::Ps;

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(l.quotient(f.leading_monomial()), field_inv(f.leading_coeff()));
  Polynomial b = g.times_term(l.quotient(g.leading_monomial()), field_inv(g.leading_coeff()));
  return a - b;
}

/// Buchberger's criterion checked with plain division, plus reducedness.
void check_reduced_groebner(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(basis[i].leading_coeff().is_one());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms()) CHECK_FALSE(basis[j].leading_monomial().divides(t.monomial));
    }
    if (i > 0) {
      CHECK(compare_monomials(basis[i].ring()->order(), basis[i - 1].leading_monomial(),
                              basis[i].leading_monomial()) == Comparison::GT);
    }
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      CHECK(divide_with_remainder(s_polynomial(basis[i], basis[j]), basis).remainder.is_zero());
    }
  }
}

std::uint64_t weighted_degree(const Monomial& m, const std::vector<unsigned>& w) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * w[i];
  return d;
}

/// Degree-by-degree linear algebra: in every weighted degree up to `top`,
/// the k-span of monomial multiples of the returned syzygies must equal the
/// full kernel of alpha -> NF(sum alpha_j g_j). All inputs weighted-homogeneous.
void check_syzygy_completeness(const std::vector<Polynomial>& gens, const Ideal& ambient,
                               const SyzygyModule& module, const std::vector<unsigned>& w, unsigned top) {
  const RingPtr& ring = gens.front().ring();
  const auto& dbasis = ambient.basis();
  auto standard = [&](const Monomial& m) {
    return std::none_of(dbasis.begin(), dbasis.end(),
                        [&](const Polynomial& d) { return d.leading_monomial().divides(m); });
  };
  std::vector<std::uint64_t> gdeg;
  for (const auto& g : gens) gdeg.push_back(weighted_degree(g.leading_monomial(), w));
  auto all = support::monomials_up_to(ring->nvars(), top);

  // Homogeneous pieces of each syzygy, with their shifted degree.
  std::vector<std::pair<std::uint64_t, std::vector<Polynomial>>> pieces;
  for (const auto& rel : module.relations) {
    std::map<std::uint64_t, std::vector<std::vector<Term>>> by_degree;
    for (std::size_t j = 0; j < rel.size(); ++j) {
      for (const auto& t : rel[j].terms()) {
        auto& slot = by_degree[weighted_degree(t.monomial, w) + gdeg[j]];
        slot.resize(rel.size());
        slot[j].push_back(t);
      }
    }
    for (auto& [deg, slots] : by_degree) {
      std::vector<Polynomial> v;
      for (auto& s : slots) v.push_back(Polynomial::from_terms(ring, s));
      pieces.push_back({deg, v});
    }
  }

  for (unsigned d = 0; d <= top; ++d) {
    std::map<std::pair<std::size_t, std::vector<std::uint32_t>>, std::size_t> column;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (const auto& m : all) {
        if (weighted_degree(m, w) + gdeg[j] == d && standard(m)) {
          std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
          column.emplace(std::make_pair(j, e), column.size());
        }
      }
    }
    if (column.empty()) continue;

    std::map<std::vector<std::uint32_t>, std::size_t> image_index;
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> images;
    for (const auto& [key, col] : column) {
      (void)col;
      Polynomial img = normal_form(Polynomial::term(ring, Monomial(key.second), ring->field().one()) * gens[key.first],
                                   ambient);
      std::vector<std::pair<std::size_t, mpq_class>> entries;
      for (const auto& t : img.terms()) {
        std::vector<std::uint32_t> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
        auto it = image_index.emplace(e, image_index.size()).first;
        entries.push_back({it->second, t.coeff.rational()});
      }
      images.push_back(entries);
    }
    std::vector<std::vector<mpq_class>> map_rows(images.size(), std::vector<mpq_class>(image_index.size()));
    for (std::size_t r = 0; r < images.size(); ++r) {
      for (const auto& [c, v] : images[r]) map_rows[r][c] = v;
    }
    std::size_t kernel = column.size() - support::rank(map_rows);

    std::vector<std::vector<mpq_class>> span;
    for (const auto& [deg, v] : pieces) {
      if (deg > d) continue;
      for (const auto& m : all) {
        if (weighted_degree(m, w) != d - deg) continue;
        std::vector<mpq_class> row(column.size());
        Polynomial check(ring);
        for (std::size_t j = 0; j < v.size(); ++j) {
          Polynomial entry = normal_form(v[j].times_term(m, ring->field().one()), ambient);
          check += entry * gens[j];
          for (const auto& t : entry.terms()) {
            std::vector<std::uint32_t> e(t.monomial.exponents().begin(), t.monomial.exponents().end());
            row[column.at({j, e})] = t.coeff.rational();
          }
        }
        CHECK(ideal_member(check, ambient));
        span.push_back(row);
      }
    }
    CHECK_MESSAGE(support::rank(span) == kernel, "weighted degree " << d);
  }
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto r = support::ring({"x", "y"});
  auto single = buchberger({P(r, "x")}, r->order());
  CHECK(single.generators() == Ps(single.ring(), {"x"}));

  auto lex = support::ring({"x", "y"}, MonomialOrder::lex());
  auto b = buchberger(Ps(lex, {"x*y - 1", "y^2 - 1"}), MonomialOrder::lex());
  CHECK(b.generators() == Ps(b.ring(), {"x - y", "y^2 - 1"}));

  auto c = buchberger(Ps(r, {"y^2 - x^3", "3*x^2", "2*y"}), MonomialOrder::degrevlex());
  CHECK(c.generators() == Ps(c.ring(), {"x^2", "y"}));
  CHECK_FALSE(ideal_member(P(c.ring(), "x"), c));

  CHECK_THROWS_AS(buchberger({}, r->order()), EmptyIdeal);
  CHECK(buchberger(Ps(r, {"x", "x + 1"}), r->order()).is_unit());
}

TEST_CASE("normal form and membership") {
  auto lex = support::ring({"y", "x"}, MonomialOrder::lex());
  CHECK(normal_form(P(lex, "y^2"), I(lex, {"y^2 - x^3"})) == P(lex, "x^3"));
  auto r = support::ring({"x", "y"});
  CHECK(normal_form(P(r, "x^3 + y"), I(r, {"x^3 + y"})).is_zero());
  CHECK(normal_form(P(r, "1"), I(r, {"x", "y"})) == P(r, "1"));
  CHECK_FALSE(ideal_member(P(r, "x"), I(r, {"x^2", "x*y", "y^2 - x^3"})));
  CHECK(ideal_member(P(r, "x - y"), I(r, {"x*y - 1", "y^2 - 1"})));
  auto other = support::ring({"x", "z"});
  CHECK_THROWS_AS(normal_form(P(other, "x"), I(r, {"x"})), RingMismatch);
}

TEST_CASE("syzygy examples") {
  auto r = support::ring({"x", "y"});
  auto koszul = syzygies(Ps(r, {"x", "y"}), Ideal::zero(r));
  REQUIRE(koszul.relations.size() == 1);
  CHECK((koszul.relations[0] == Ps(r, {"y", "-x"}) || koszul.relations[0] == Ps(r, {"-y", "x"})));
  check_syzygy_completeness(Ps(r, {"x", "y"}), Ideal::zero(r), koszul, {1, 1}, 6);

  Ideal cusp = I(r, {"y^2 - x^3"});
  auto module = syzygies(Ps(r, {"x", "y"}), cusp);
  CHECK(module.relations.size() == 2);
  for (const auto& rel : module.relations) CHECK(cusp.contains(rel[0] * P(r, "x") + rel[1] * P(r, "y")));
  check_syzygy_completeness(Ps(r, {"x", "y"}), cusp, module, {2, 3}, 14);

  CHECK(syzygies(Ps(r, {"x^2 + y"}), Ideal::zero(r)).relations.empty());

  auto three = Ps(r, {"x^2", "x*y", "y^2"});
  auto m3 = syzygies(three, Ideal::zero(r));
  check_syzygy_completeness(three, Ideal::zero(r), m3, {1, 1}, 6);
}

TEST_CASE("lift examples") {
  auto lex = support::ring({"x", "y"}, MonomialOrder::lex());
  auto gens = Ps(lex, {"x*y - 1", "y^2 - 1"});
  auto c = lift(P(lex, "x - y"), gens, Ideal::zero(lex));
  CHECK(c[0] * gens[0] + c[1] * gens[1] == P(lex, "x - y"));

  auto r = support::ring({"x", "y"});
  CHECK(lift(P(r, "x^2 + y"), Ps(r, {"x^2 + y"}), Ideal::zero(r)) == Ps(r, {"1"}));
  CHECK(lift(P(r, "x^3"), Ps(r, {"y^2"}), I(r, {"y^2 - x^3"})) == Ps(r, {"1"}));
  CHECK_THROWS_AS(lift(P(r, "x"), Ps(r, {"y"}), Ideal::zero(r)), NotAMember);
}

TEST_CASE("elimination") {
  auto r = support::ring({"x", "y", "t"});
  Ideal e = eliminate(I(r, {"x - t", "y - t^2"}), std::vector<std::string>{"t"});
  CHECK(e.equals(I(r, {"y - x^2"})));
  Ideal same = I(r, {"x*y"});
  CHECK(eliminate(same, std::vector<std::string>{}).equals(same));

  auto c = support::ring({"x", "y", "T"});
  Ideal cusp = eliminate(I(c, {"y^2 - x^3", "x*T - y", "y*T - x^2", "T^2 - x"}), std::vector<std::string>{"T"});
  CHECK(cusp.equals(I(c, {"y^2 - x^3"})));
  CHECK_THROWS_AS(eliminate(same, std::vector<std::string>{"w"}), UnknownVariable);
}

TEST_CASE("dimension") {
  auto r = support::ring({"x", "y"});
  CHECK(dimension(I(r, {"y^2 - x^3"})) == 1);
  CHECK(dimension(I(r, {"x", "y"})) == 0);
  CHECK(dimension(Ideal::zero(r)) == 2);
  CHECK(dimension(I(r, {"x", "x - 1"})) == -1);
  auto r3 = support::ring({"x", "y", "z"});
  CHECK(dimension(I(r3, {"x^2 - y^2*z"})) == 2);
  CHECK(dimension(I(r3, {"x", "y*z"})) == 1);
}

TEST_CASE("Gröbner properties on random ideals") {
  support::Random rnd(17);
  for (int k = 0; k < 40; ++k) {
    auto r = support::ring({"x", "y", "z"}, k % 2 ? MonomialOrder::lex() : MonomialOrder::degrevlex(),
                           k % 4 == 3 ? Field::prime(32003) : Field::rationals());
    auto gens = rnd.polynomials(r, static_cast<int>(rnd.integer(1, 3)), 3, 3);
    Ideal ideal(r, gens);
    const auto& basis = ideal.basis();
    check_reduced_groebner(basis);
    for (const auto& g : gens) CHECK(ideal_member(g, ideal));
    CHECK(buchberger(basis, r->order()).generators() == basis);

    auto other = r->order().kind() == MonomialOrder::Kind::Lex ? MonomialOrder::degrevlex() : MonomialOrder::lex();
    Ideal moved = ideal.in_ring(r->with_order(other));
    for (int j = 0; j < 4; ++j) {
      Polynomial p = rnd.polynomial(r, 3, 3) * gens[0] + rnd.polynomial(r, 2, 2);
      CHECK(ideal_member(p, ideal) == ideal_member(p.in_ring(moved.ring()), moved));
    }

    Ideal e = eliminate(ideal, std::vector<std::string>{"x"});
    for (const auto& g : e.generators()) {
      CHECK(ideal_member(g, ideal));
      CHECK_FALSE(g.involves(0));
    }
    CHECK(dimension(ideal) <= dimension(Ideal(r, {gens[0]})));
  }
}

TEST_CASE("memoized bases are stable and shared across copies") {
  auto r = support::ring({"x", "y"});
  Ideal a = I(r, {"x^2 - y", "x*y - 1"});
  Ideal b = a;
  CHECK(&a.basis() == &b.basis());
  CHECK(a.basis(MonomialOrder::lex()) == b.basis(MonomialOrder::lex()));
}
