#pragma once

// The normalization loop: test ideal, nonzerodivisor or splitting, the
// endomorphism ring Hom_R(I,I) with an explicit presentation, ring extension.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "closure/error.hpp"
#include "closure/idealops.hpp"

namespace closure {

/// A variable T adjoined at some level, standing for numerator/denominator
/// over the ring of the previous level.
struct AdjoinedVariable {
  std::string name;
  int level = 0;
  Polynomial numerator;
  Polynomial denominator;
  /// T^2 - sum beta_k X_k, the monic relation witnessing integrality.
  Polynomial integral_relation;
};

/// R = k[x]/D plus the tower of fractions that produced it.
struct AffinePresentation {
  QuotientRingContext ctx;
  int level = 0;
  std::vector<AdjoinedVariable> adjoined;

  /// Level-0 presentation; D is replaced by its reduced basis.
  static AffinePresentation from_ideal(const Ideal& defining);

  const RingPtr& ring() const { return ctx.ring; }
  const Ideal& defining() const { return ctx.defining; }
};

/// Hom_R(I,I) = (1/f)(a_0, .., a_t) with a_0 = f, and its presentation
/// R[X_1..X_t]/(linear relations, quadratic relations), X_0 = 1.
struct EndoPresentation {
  struct Quadratic {
    std::size_t i;
    std::size_t j;
    std::vector<Polynomial> beta;  // beta_ij0 .. beta_ijt
  };

  Polynomial denominator;
  std::vector<Polynomial> numerators;
  std::vector<std::vector<Polynomial>> linear;
  std::vector<Quadratic> quadratic;  // 1 <= i <= j <= t

  std::size_t t() const { return numerators.size() - 1; }
};

struct NonZeroDivisor {
  Polynomial f;
};

struct Split {
  Polynomial f;
  Ideal annihilator;
};

using SplitDecision = std::variant<NonZeroDivisor, Split>;

struct TraceEvent {
  enum class Kind { TestIdeal, Radical, Split, HomStep, FixedPoint };

  Kind kind;
  std::size_t component;
  int level;
  std::string detail;

  std::string to_string() const;
};

struct NormalizeOptions {
  int max_iterations = 32;
  RadicalOptions radical;
};

struct Component {
  std::size_t id = 0;
  AffinePresentation presentation;
  /// Productive Hom steps along this component's history.
  int iterations = 0;
  int hom_evaluations = 0;
};

struct NormalizationResult {
  std::vector<Component> components;
  std::vector<TraceEvent> trace;

  int productive_steps() const;
  int count(TraceEvent::Kind kind) const;
};

class IterationLimitExceeded : public Error {
 public:
  IterationLimitExceeded(const std::string& what, std::vector<TraceEvent> trace)
      : Error("IterationLimitExceeded", what), trace_(std::move(trace)) {}

  const std::vector<TraceEvent>& trace() const { return trace_; }

 private:
  std::vector<TraceEvent> trace_;
};

/// The Jacobian ideal, its radical, and the radical reduced modulo D.
struct TestIdealSteps {
  Ideal jacobian;
  Ideal radical;
  /// Unit ideal when R is regular; otherwise generators reduced modulo D.
  Ideal test;
};

TestIdealSteps test_ideal_steps(const AffinePresentation& R, const RadicalOptions& options = {});

/// √(Jacobian ideal), generators reduced modulo D; the unit ideal means R is
/// regular and hence normal.
Ideal choose_test_ideal(const AffinePresentation& R, const RadicalOptions& options = {});

/// Elements of I tried as denominators: the generators, then up to eight
/// fixed-seed combinations of them with coefficients in {-1, 0, 1}.
std::vector<Polynomial> denominator_candidates(const Ideal& I, const QuotientRingContext& ctx);

/// Splits on the first zero-divisor candidate; if every candidate is a
/// nonzerodivisor, returns the first generator. Throws EmptyIdeal for I = 0.
SplitDecision pick_nzd_or_split(const AffinePresentation& R, const Ideal& I);

/// Throws NotNonZeroDivisor if Ann(f) != 0, LiftFailed if some product
/// a_i a_j cannot be expressed over f·(a_0..a_t).
EndoPresentation endomorphism_ring(const AffinePresentation& R, const Ideal& I, const Polynomial& f);

/// t = 0, i.e. Hom_R(I,I) = R.
bool is_fixed_point(const EndoPresentation& endo);

/// Exact check of the linear and cleared quadratic identities modulo D.
bool presentation_holds(const EndoPresentation& endo, const QuotientRingContext& ctx);

AffinePresentation extend_ring(const AffinePresentation& R, const EndoPresentation& endo);

/// The two factors R/Ann(Ann f) and R/Ann f of a split.
std::pair<AffinePresentation, AffinePresentation> split_ring(const AffinePresentation& R, const Split& split);

NormalizationResult normalize(const AffinePresentation& R0, const NormalizeOptions& options = {});

// ------------------------------------------------------------- verification

struct VerificationCheck {
  std::size_t component;
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const;
  const VerificationCheck* first_failure() const;
};

/// Independent certification of a result:
///  (a) fixed point recomputed from scratch,
///  (b) injectivity of R0 into the product of the components,
///  (c) every adjoined variable satisfies its monic quadratic,
///  (d) every tower denominator is a nonzerodivisor at its level.
VerificationReport verify_result(const AffinePresentation& R0, const NormalizationResult& result,
                                 const NormalizeOptions& options = {});

/// Throws VerificationFailed naming the first failing check.
void require_verified(const VerificationReport& report);

/// True iff the defining ideal equals its radical.
bool is_reduced(const Ideal& defining, const RadicalOptions& options = {});

}  // namespace closure
