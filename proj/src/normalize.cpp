#include "closure/normalize.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace closure {

namespace {

std::vector<Polynomial> reduce_all(const std::vector<Polynomial>& gens, const QuotientRingContext& ctx) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial r = ctx.reduce(g);
    if (r.is_zero()) continue;
    r = primitive_part(r);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string s = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s + "]";
}

const char* kind_name(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::TestIdeal: return "TestIdeal";
    case TraceEvent::Kind::Radical: return "Radical";
    case TraceEvent::Kind::Split: return "Split";
    case TraceEvent::Kind::HomStep: return "HomStep";
    case TraceEvent::Kind::FixedPoint: return "FixedPoint";
  }
  return "?";
}

AffinePresentation with_defining(const AffinePresentation& R, const Ideal& extra) {
  AffinePresentation out = R;
  out.ctx = QuotientRingContext((R.defining() + extra).reduced());
  return out;
}

}  // namespace

std::string TraceEvent::to_string() const {
  std::ostringstream os;
  os << "[c" << component << "] level " << level << ' ' << kind_name(kind) << ": " << detail;
  return os.str();
}

int NormalizationResult::productive_steps() const {
  int n = 0;
  for (const auto& c : components) n += c.iterations;
  return n;
}

int NormalizationResult::count(TraceEvent::Kind kind) const {
  return static_cast<int>(std::count_if(trace.begin(), trace.end(),
                                        [&](const TraceEvent& e) { return e.kind == kind; }));
}

AffinePresentation AffinePresentation::from_ideal(const Ideal& defining) {
  return AffinePresentation{QuotientRingContext(defining.reduced()), 0, {}};
}

TestIdealSteps test_ideal_steps(const AffinePresentation& R, const RadicalOptions& options) {
  Ideal jacobian = jacobian_test_ideal(R.ctx);
  Ideal rad = radical(jacobian, options);
  if (rad.is_unit()) return {jacobian, rad, Ideal::unit(R.ring())};
  return {jacobian, rad, Ideal(R.ring(), reduce_all(rad.basis(), R.ctx))};
}

Ideal choose_test_ideal(const AffinePresentation& R, const RadicalOptions& options) {
  return test_ideal_steps(R, options).test;
}

std::vector<Polynomial> denominator_candidates(const Ideal& I, const QuotientRingContext& ctx) {
  std::vector<Polynomial> gens = reduce_all(I.generators(), ctx);
  std::vector<Polynomial> out = gens;
  if (gens.size() < 2) return out;

  std::mt19937 rng(0x5eed);
  const RingPtr& ring = ctx.ring;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Polynomial c(ring);
    int nonzero = 0;
    for (const auto& g : gens) {
      long coeff = static_cast<long>(rng() % 3) - 1;
      if (coeff == 0) continue;
      ++nonzero;
      c += g * Polynomial::constant(ring, coeff);
    }
    if (nonzero < 2) continue;
    c = ctx.reduce(c);
    if (c.is_zero()) continue;
    c = primitive_part(c);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

SplitDecision pick_nzd_or_split(const AffinePresentation& R, const Ideal& I) {
  std::vector<Polynomial> candidates = denominator_candidates(I, R.ctx);
  if (candidates.empty()) throw EmptyIdeal("test ideal is zero in " + R.defining().to_string());
  for (const auto& f : candidates) {
    Ideal ann = annihilator(f, R.ctx);
    if (!ann.is_zero()) return Split{f, ann};
  }
  return NonZeroDivisor{candidates.front()};
}

EndoPresentation endomorphism_ring(const AffinePresentation& R, const Ideal& I, const Polynomial& f) {
  const QuotientRingContext& ctx = R.ctx;
  const RingPtr& ring = R.ring();
  if (!annihilator(f, ctx).is_zero()) throw NotNonZeroDivisor(f.to_string());

  std::vector<Polynomial> scaled;
  for (const auto& g : I.generators()) scaled.push_back(f * g);
  Ideal N = ideal_quotient(Ideal(ring, scaled), I, ctx);

  EndoPresentation endo{f, {f}, {}, {}};
  std::vector<Polynomial> span = R.defining().basis();
  span.push_back(f);
  for (const auto& g : N.generators()) {
    Polynomial r = normal_form(g, Ideal(ring, span));
    if (r.is_zero()) continue;
    r = primitive_part(r);
    endo.numerators.push_back(r);
    span.push_back(r);
  }

  endo.linear = syzygies(endo.numerators, R.defining()).relations;

  std::vector<Polynomial> cleared;
  for (const auto& a : endo.numerators) cleared.push_back(f * a);
  TrackedBasis tracked(cleared, R.defining());
  for (std::size_t i = 1; i <= endo.t(); ++i) {
    for (std::size_t j = i; j <= endo.t(); ++j) {
      auto beta = tracked.try_lift(endo.numerators[i] * endo.numerators[j]);
      if (!beta) {
        throw LiftFailed("a_" + std::to_string(i) + " a_" + std::to_string(j) + " not in f*N + D");
      }
      endo.quadratic.push_back({i, j, std::move(*beta)});
    }
  }
  return endo;
}

bool is_fixed_point(const EndoPresentation& endo) { return endo.t() == 0; }

bool presentation_holds(const EndoPresentation& endo, const QuotientRingContext& ctx) {
  const auto& a = endo.numerators;
  for (const auto& rel : endo.linear) {
    if (rel.size() != a.size()) return false;
    Polynomial s(ctx.ring);
    for (std::size_t k = 0; k < a.size(); ++k) s += rel[k] * a[k];
    if (!ctx.is_zero(s)) return false;
  }
  for (const auto& q : endo.quadratic) {
    if (q.beta.size() != a.size()) return false;
    Polynomial s = a[q.i] * a[q.j];
    for (std::size_t k = 0; k < a.size(); ++k) s -= endo.denominator * q.beta[k] * a[k];
    if (!ctx.is_zero(s)) return false;
  }
  return true;
}

AffinePresentation extend_ring(const AffinePresentation& R, const EndoPresentation& endo) {
  const int level = R.level + 1;
  std::vector<std::string> names;
  RingPtr probe = R.ring();
  for (std::size_t i = 1; i <= endo.t(); ++i) {
    names.push_back(probe->fresh_name("T" + std::to_string(level) + "_" + std::to_string(i)));
    probe = probe->with_variables_appended({names.back()});
  }
  RingPtr ring = R.ring()->with_variables_appended(names);

  std::vector<Polynomial> X{Polynomial::constant(ring, 1)};
  for (const auto& n : names) X.push_back(Polynomial::variable(ring, n));

  std::vector<Polynomial> gens;
  for (const auto& d : R.defining().basis()) gens.push_back(d.in_ring(ring));
  for (const auto& rel : endo.linear) {
    Polynomial s(ring);
    for (std::size_t k = 0; k < rel.size(); ++k) s += rel[k].in_ring(ring) * X[k];
    gens.push_back(s);
  }

  AffinePresentation out{QuotientRingContext(Ideal::zero(ring)), level, R.adjoined};
  std::vector<Polynomial> squares(endo.t() + 1, Polynomial(ring));
  for (const auto& q : endo.quadratic) {
    Polynomial s = X[q.i] * X[q.j];
    for (std::size_t k = 0; k < q.beta.size(); ++k) s -= q.beta[k].in_ring(ring) * X[k];
    gens.push_back(s);
    if (q.i == q.j) squares[q.i] = s;
  }
  for (std::size_t i = 1; i <= endo.t(); ++i) {
    out.adjoined.push_back({names[i - 1], level, endo.numerators[i], endo.denominator, squares[i]});
  }
  out.ctx = QuotientRingContext(Ideal(ring, gens).reduced());
  return out;
}

std::pair<AffinePresentation, AffinePresentation> split_ring(const AffinePresentation& R, const Split& split) {
  Ideal ann_ann = ideal_quotient(Ideal::zero(R.ring()), split.annihilator, R.ctx);
  AffinePresentation left = with_defining(R, ann_ann);
  AffinePresentation right = with_defining(R, split.annihilator);
  if (left.defining().is_unit() || right.defining().is_unit()) {
    throw StrategyFailed("split on " + split.f.to_string() + " produced a trivial factor");
  }
  return {std::move(left), std::move(right)};
}

NormalizationResult normalize(const AffinePresentation& R0, const NormalizeOptions& options) {
  NormalizationResult result;
  std::vector<Component> stack{Component{0, R0, 0, 0}};
  std::size_t next_id = 1;

  auto emit = [&](TraceEvent::Kind kind, const Component& c, std::string detail) {
    result.trace.push_back({kind, c.id, c.presentation.level, std::move(detail)});
  };

  while (!stack.empty()) {
    Component c = std::move(stack.back());
    stack.pop_back();
    for (;;) {
      const AffinePresentation& R = c.presentation;
      TestIdealSteps steps = test_ideal_steps(R, options.radical);
      emit(TraceEvent::Kind::TestIdeal, c, steps.jacobian.reduced().to_string());
      emit(TraceEvent::Kind::Radical, c, steps.test.to_string());
      if (steps.test.is_unit()) {
        emit(TraceEvent::Kind::FixedPoint, c, "unit test ideal");
        result.components.push_back(std::move(c));
        break;
      }

      SplitDecision decision = pick_nzd_or_split(R, steps.test);
      if (auto* split = std::get_if<Split>(&decision)) {
        auto [left, right] = split_ring(R, *split);
        emit(TraceEvent::Kind::Split, c,
             "f = " + split->f.to_string() + ", ann = " + split->annihilator.to_string() +
                 " -> c" + std::to_string(next_id) + ", c" + std::to_string(next_id + 1));
        Component l{next_id++, std::move(left), c.iterations, c.hom_evaluations};
        Component r{next_id++, std::move(right), c.iterations, c.hom_evaluations};
        stack.push_back(std::move(r));
        stack.push_back(std::move(l));
        break;
      }

      const Polynomial& f = std::get<NonZeroDivisor>(decision).f;
      EndoPresentation endo = endomorphism_ring(R, steps.test, f);
      ++c.hom_evaluations;
      emit(TraceEvent::Kind::HomStep, c,
           "f = " + f.to_string() + ", numerators " + join(endo.numerators) + ", t = " +
               std::to_string(endo.t()));
      if (is_fixed_point(endo)) {
        emit(TraceEvent::Kind::FixedPoint, c, "Hom(I,I) = R");
        result.components.push_back(std::move(c));
        break;
      }
      if (c.iterations >= options.max_iterations) {
        throw IterationLimitExceeded("component c" + std::to_string(c.id) + " still not normal after " +
                                         std::to_string(c.iterations) + " extensions",
                                     result.trace);
      }
      c.presentation = extend_ring(R, endo);
      ++c.iterations;
    }
  }
  return result;
}

bool is_reduced(const Ideal& defining, const RadicalOptions& options) {
  return defining.contains(radical(defining, options));
}

}  // namespace closure
