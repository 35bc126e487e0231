#include "closure/normalize.hpp"

#include <algorithm>
#include <optional>

namespace closure {

namespace {

std::vector<std::string> adjoined_names(const AffinePresentation& R, int min_level) {
  std::vector<std::string> names;
  for (const auto& a : R.adjoined) {
    if (a.level >= min_level) names.push_back(a.name);
  }
  return names;
}

/// The variables of `ring` other than `drop`, under the same whole-ring order
/// kind (block orders fall back to degrevlex).
RingPtr subring(const RingPtr& ring, const std::vector<std::string>& drop) {
  std::vector<std::string> keep;
  for (const auto& v : ring->variables()) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  }
  MonomialOrder order =
      ring->order().kind() == MonomialOrder::Kind::Lex ? MonomialOrder::lex() : MonomialOrder::degrevlex();
  return PolyRing::make(ring->field(), keep, order);
}

Ideal eliminated_to(const Ideal& D, const std::vector<std::string>& drop, const RingPtr& target) {
  Ideal E = eliminate(D, drop);
  std::vector<Polynomial> gens;
  for (const auto& g : E.generators()) gens.push_back(g.in_ring(target));
  return Ideal(target, gens);
}

VerificationCheck check_fixed_point(std::size_t id, const AffinePresentation& R, const NormalizeOptions& options) {
  TestIdealSteps steps = test_ideal_steps(R, options.radical);
  if (steps.test.is_unit()) return {id, "fixed-point", true, "unit test ideal"};
  for (const auto& f : denominator_candidates(steps.test, R.ctx)) {
    if (!annihilator(f, R.ctx).is_zero()) continue;
    EndoPresentation endo = endomorphism_ring(R, steps.test, f);
    if (is_fixed_point(endo)) return {id, "fixed-point", true, "Hom(I,I) = R with f = " + f.to_string()};
    return {id, "fixed-point", false, "Hom(I,I) has t = " + std::to_string(endo.t()) + " with f = " + f.to_string()};
  }
  return {id, "fixed-point", false, "no nonzerodivisor among test ideal candidates"};
}

VerificationCheck check_integrality(std::size_t id, const AffinePresentation& R) {
  for (const auto& a : R.adjoined) {
    Polynomial q = a.integral_relation.in_ring(R.ring());
    std::size_t var = R.ring()->require_index(a.name);
    std::vector<Term> top;
    for (const auto& t : q.terms()) {
      if (t.monomial[var] > 2) return {id, "integrality", false, a.name + " relation has degree above 2"};
      if (t.monomial[var] == 2) top.push_back(t);
    }
    Monomial square(R.ring()->nvars());
    square[var] = 2;
    if (top.size() != 1 || !(top[0].monomial == square) || !top[0].coeff.is_one()) {
      return {id, "integrality", false, a.name + " relation " + q.to_string() + " is not monic quadratic"};
    }
    for (const auto& b : R.adjoined) {
      if (b.level >= a.level && b.name != a.name && q.involves(R.ring()->require_index(b.name))) {
        return {id, "integrality", false, a.name + " relation involves " + b.name};
      }
    }
    if (!R.ctx.is_zero(q)) {
      return {id, "integrality", false, a.name + " relation " + q.to_string() + " not in the defining ideal"};
    }
  }
  return {id, "integrality", true, std::to_string(R.adjoined.size()) + " adjoined variables"};
}

VerificationCheck check_denominators(std::size_t id, const AffinePresentation& R) {
  for (const auto& a : R.adjoined) {
    std::vector<std::string> drop = adjoined_names(R, a.level);
    RingPtr lower = subring(R.ring(), drop);
    Ideal D = eliminated_to(R.defining(), drop, lower);
    QuotientRingContext ctx(D);
    Polynomial f = a.denominator.in_ring(lower);
    if (ctx.is_zero(f) || !annihilator(f, ctx).is_zero()) {
      return {id, "denominators", false, a.denominator.to_string() + " is a zerodivisor below level " +
                                             std::to_string(a.level)};
    }
  }
  return {id, "denominators", true, "all tower denominators are nonzerodivisors"};
}

}  // namespace

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const VerificationCheck* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerificationReport verify_result(const AffinePresentation& R0, const NormalizationResult& result,
                                 const NormalizeOptions& options) {
  VerificationReport report;
  const RingPtr& base = R0.ring();
  std::optional<Ideal> meet;
  for (const auto& c : result.components) {
    const AffinePresentation& R = c.presentation;
    report.checks.push_back(check_fixed_point(c.id, R, options));

    Ideal E = eliminated_to(R.defining(), adjoined_names(R, 0), base);
    bool contained = true;
    for (const auto& g : R0.defining().generators()) {
      if (!radical_membership(g, E)) {
        contained = false;
        break;
      }
    }
    report.checks.push_back({c.id, "injectivity", contained,
                             contained ? "original relations vanish on the component"
                                       : "an original relation does not vanish on the component"});
    meet = meet ? intersect(*meet, E) : E;

    report.checks.push_back(check_integrality(c.id, R));
    report.checks.push_back(check_denominators(c.id, R));
  }

  if (meet) {
    bool covered = true;
    for (const auto& g : meet->basis()) {
      if (!radical_membership(g, R0.defining())) {
        covered = false;
        break;
      }
    }
    report.checks.push_back({0, "injectivity", covered,
                             covered ? "components cover the original ring" : "kernel to the product is nonzero"});
  } else {
    report.checks.push_back({0, "injectivity", false, "no components"});
  }
  return report;
}

void require_verified(const VerificationReport& report) {
  if (const auto* f = report.first_failure()) {
    throw VerificationFailed("component c" + std::to_string(f->component) + " " + f->name + ": " + f->detail);
  }
}

}  // namespace closure
