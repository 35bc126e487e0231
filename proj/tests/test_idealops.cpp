#include <doctest.h>

#include "support.hpp"

using namespace closure;
using support::I;
using support::P;
using support::Ps;

namespace {

QuotientRingContext ctx_of(const RingPtr& r, const std::vector<std::string>& d) {
  return QuotientRingContext(d.empty() ? Ideal::zero(r) : I(r, d));
}

}  // namespace

TEST_CASE("ideal quotient examples") {
  auto r = support::ring({"x", "y"});
  auto plain = ctx_of(r, {});
  CHECK(ideal_quotient(I(r, {"x^2", "x*y"}), I(r, {"x", "y"}), plain).equals(I(r, {"x"})));
  Ideal some = I(r, {"x^2 + y", "x*y"});
  CHECK(ideal_quotient(some, I(r, {"1"}), plain).equals(some));

  auto cusp = ctx_of(r, {"y^2 - x^3"});
  Ideal N = ideal_quotient(I(r, {"x^2", "x*y"}), I(r, {"x", "y"}), cusp);
  CHECK((N + cusp.defining).equals(I(r, {"x", "y"})));
}

TEST_CASE("annihilator examples") {
  auto r = support::ring({"x", "y"});
  CHECK(annihilator(P(r, "x"), ctx_of(r, {"x*y"})).equals(I(r, {"y"})));
  CHECK(annihilator(P(r, "1"), ctx_of(r, {"x*y"})).is_zero());
  CHECK(annihilator(P(r, "x"), ctx_of(r, {"y^2 - x^3"})).is_zero());
  CHECK(annihilator(P(r, "x + y"), ctx_of(r, {"x*y"})).is_zero());
  CHECK(annihilator(P(r, "x - y"), ctx_of(r, {"y^2 - x^2"})).equals(I(r, {"x + y"})));
}

TEST_CASE("saturation examples") {
  auto r = support::ring({"x", "y"});
  CHECK(saturation(I(r, {"x^2*y"}), P(r, "x")).equals(I(r, {"y"})));
  Ideal some = I(r, {"x^2 - y", "y^3"});
  CHECK(saturation(some, P(r, "1")).equals(some));
  CHECK_THROWS_AS(saturation(some, Polynomial(r)), ZeroPolynomial);

  auto r3 = support::ring({"x", "y", "z"});
  CHECK(saturation(I(r3, {"x", "y*z", "y^2", "x^2 - y^2*z"}), P(r3, "z")).equals(I(r3, {"x", "y"})));
}

TEST_CASE("intersection examples") {
  auto r = support::ring({"x", "y"});
  CHECK(intersect(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
  Ideal a = I(r, {"x^2 - y", "x*y^2"});
  CHECK(intersect(a, a).equals(a));
  CHECK(intersect(I(r, {"x", "y"}), I(r, {"1"})).equals(I(r, {"x", "y"})));
}

TEST_CASE("radical membership examples") {
  auto r = support::ring({"x", "y"});
  CHECK(radical_membership(P(r, "x"), I(r, {"x^2"})));
  CHECK_FALSE(radical_membership(P(r, "y"), I(r, {"x^2"})));
  CHECK(radical_membership(P(r, "x + y"), I(r, {"x^2", "y^2"})));
  CHECK(radical_membership(P(r, "0"), Ideal::zero(r)));
}

TEST_CASE("radical examples") {
  auto r = support::ring({"x", "y"});
  CHECK(radical(I(r, {"x^2"})).equals(I(r, {"x"})));
  CHECK(radical(I(r, {"x^2", "y^3"})).equals(I(r, {"x", "y"})));
  CHECK(radical(I(r, {"x^2", "y^3"}), {RadicalStrategy::ZeroDim}).equals(I(r, {"x", "y"})));
  CHECK(radical(Ideal::zero(r)).is_zero());
  CHECK(radical(I(r, {"x", "1 - x"})).is_unit());
  CHECK(radical(I(r, {"x^2*y^3 - x^2*y^2"})).equals(I(r, {"x*y^2 - x*y"})));
  CHECK_THROWS_AS(radical(I(r, {"x^2*y"}), {RadicalStrategy::ZeroDim}), StrategyFailed);

  auto r3 = support::ring({"x", "y", "z"});
  Ideal whitney = I(r3, {"x", "y*z", "y^2", "x^2 - y^2*z"});
  Ideal rad = radical(whitney, {RadicalStrategy::General});
  CHECK(rad.equals(I(r3, {"x", "y"})));
  CHECK(certify_radical(whitney, rad));

  auto small = support::ring({"x"}, MonomialOrder::degrevlex(), Field::prime(3));
  CHECK_THROWS_AS(radical(I(small, {"x^3 - x^4"})), UnsupportedCharacteristic);
  auto large = support::ring({"x", "y"}, MonomialOrder::degrevlex(), Field::prime(32003));
  CHECK(radical(I(large, {"x^2", "y^2*x - y^3"})).equals(I(large, {"x", "y"})));
}

TEST_CASE("jacobian test ideal examples") {
  auto r = support::ring({"x", "y"});
  Ideal cusp = jacobian_test_ideal(ctx_of(r, {"y^2 - x^3"}));
  CHECK(cusp.equals(I(r, {"y^2 - x^3", "-3*x^2", "2*y"})));
  CHECK(cusp.basis() == Ps(r, {"x^2", "y"}));
  CHECK(jacobian_test_ideal(ctx_of(r, {"x^2 + y^2 - 1"})).is_unit());

  auto r3 = support::ring({"x", "y", "z"});
  CHECK(jacobian_test_ideal(ctx_of(r3, {"x^2 - y^2*z"})).equals(I(r3, {"x^2 - y^2*z", "2*x", "-2*y*z", "-y^2"})));

  // A space curve: c = 2, so the 2x2 minors enter.
  Ideal twisted = jacobian_test_ideal(ctx_of(r3, {"y - x^2", "z - x^3"}));
  CHECK(twisted.is_unit());
  CHECK(jacobian_test_ideal(ctx_of(r, {})).is_unit());
}

TEST_CASE("gcd and squarefree parts") {
  auto r = support::ring({"x", "y"});
  CHECK(polynomial_gcd(P(r, "x^2 - 1"), P(r, "x^2 + 2*x + 1")) == P(r, "x + 1"));
  CHECK(polynomial_gcd(P(r, "x*y + y^2"), P(r, "x^2 - y^2")) == P(r, "x + y"));
  CHECK(squarefree_part(P(r, "x^3 - x^2"), 0) == P(r, "x^2 - x"));
  CHECK(squarefree_part(P(r, "x - y").pow(2) * P(r, "x + y"), 0) == P(r, "x^2 - y^2"));
}

TEST_CASE("quotient, annihilator and radical laws on random instances") {
  support::Random rnd(23);
  auto r = support::ring({"x", "y", "z"});
  for (int k = 0; k < 25; ++k) {
    Ideal D(r, {rnd.nonzero_polynomial(r, 2, 2) * rnd.nonzero_polynomial(r, 2, 2)});
    QuotientRingContext ctx(D);
    Ideal A(r, rnd.polynomials(r, 2, 2, 2));
    Ideal B(r, rnd.polynomials(r, 1, 2, 2));
    Ideal Q = ideal_quotient(A, B, ctx);
    CHECK((Q + D).contains(A));
    for (const auto& q : Q.generators()) {
      for (const auto& b : B.generators()) CHECK((A + D).contains(q * b));
    }

    Polynomial f = rnd.nonzero_polynomial(r, 2, 2);
    Ideal ann = annihilator(f, ctx);
    for (const auto& a : ann.generators()) CHECK(D.contains(a * f));

    Ideal meet = intersect(A, B);
    CHECK(A.contains(meet));
    CHECK(B.contains(meet));
    CHECK(meet.contains(A * B));

    Ideal rad = radical(A);
    CHECK(rad.contains(A));
    for (const auto& g : rad.generators()) CHECK(radical_membership(g, A));
    CHECK(radical(rad).equals(rad));
  }
}
