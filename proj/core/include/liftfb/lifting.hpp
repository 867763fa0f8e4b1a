#pragma once

#include <vector>

#include "liftfb/polymatrix.hpp"

namespace liftfb {

enum class StepKind { Upper, Lower, Scale };

// One cascade factor: an upper/lower lifting matrix or a gain-scaling matrix.
struct LiftingStep {
  StepKind kind = StepKind::Upper;
  LaurentPoly filter;     // lifting filter, Upper/Lower only
  Rational scale_k = 1;   // scaling factor, Scale only

  static LiftingStep upper(LaurentPoly s);
  static LiftingStep lower(LaurentPoly s);
  static LiftingStep scaling(const Rational& k);  // DomainError on K == 0

  // update characteristic m: 0 for a lowpass (upper) update, 1 for highpass
  int update_characteristic() const;

  PolyMatrix matrix() const;
  LiftingStep inverse() const;
  bool is_identity() const;

  friend bool operator==(const LiftingStep& a, const LiftingStep& b) {
    return a.kind == b.kind && a.filter == b.filter && a.scale_k == b.scale_k;
  }
  friend bool operator!=(const LiftingStep& a, const LiftingStep& b) { return !(a == b); }
};

// Inner automorphism by D_K on a step: Upper(S) -> Upper(S/K^2),
// Lower(S) -> Lower(K^2 S), Scale unchanged. DomainError on K == 0.
LiftingStep gamma_conj(const Rational& k, const LiftingStep& s);

// Which group lifting structure a cascade is drawn from: lifting-filter
// class constraints per side, the allowed scale group, and the base set.
struct LiftingGroupSpec {
  ClassConstraint upper_class = ClassConstraint::Unrestricted;
  ClassConstraint lower_class = ClassConstraint::Unrestricted;
  enum class ScaleGroup { NonzeroRationals, PositiveRationals };
  ScaleGroup scale_group = ScaleGroup::NonzeroRationals;
  enum class BaseSet { IdentityOnly, HsEqualOrder };
  BaseSet base_set = BaseSet::IdentityOnly;

  static LiftingGroupSpec ws();          // (P0, P1), base I
  static LiftingGroupSpec hs();          // (Pa, Pa), equal-order HS bases
  static LiftingGroupSpec hs_cascade();  // (Pa, Pa), base I: the HS cascade/scaled groups
  static LiftingGroupSpec unrestricted();  // no constraints, base I

  bool admits_upper(const LaurentPoly& s) const { return in_class(s, upper_class); }
  bool admits_lower(const LaurentPoly& s) const { return in_class(s, lower_class); }
  bool admits_scale(const Rational& k) const;
  ClassConstraint side_class(StepKind kind) const;
};

// Class-checked step constructors; throw ClassViolation.
LiftingStep make_upper(const LaurentPoly& s, const LiftingGroupSpec& spec);
LiftingStep make_lower(const LaurentPoly& s, const LiftingGroupSpec& spec);

// Ordered product D_K * steps[0] * steps[1] * ... * steps[N-1] * base.
// steps[0] is the leftmost lifting matrix (the last one applied when the
// cascade acts on a signal); steps contain no Scale entries.
struct Cascade {
  Rational scale = 1;
  std::vector<LiftingStep> steps;
  PolyMatrix base = PolyMatrix::identity();

  friend bool operator==(const Cascade& a, const Cascade& b) {
    return a.scale == b.scale && a.steps == b.steps && a.base == b.base;
  }
  friend bool operator!=(const Cascade& a, const Cascade& b) { return !(a == b); }
};

// Strict constructor honoring the no-Scale-steps invariant (DomainError).
Cascade make_cascade(Rational k, std::vector<LiftingStep> steps, PolyMatrix base);

// Moves any Scale steps into the front gain via gamma-conjugation of the
// steps they cross, preserving evaluation; no merging or dropping.
Cascade hoist_scales(const Rational& k, std::vector<LiftingStep> raw_steps, PolyMatrix base);

PolyMatrix cascade_eval(const Cascade& c);

// Hoists Scale steps to the left through gamma-conjugation, merges adjacent
// same-characteristic steps by filter addition, and drops identity steps.
// The result is irreducible and evaluates to the same matrix.
Cascade cascade_reduce(const Rational& k, std::vector<LiftingStep> raw_steps,
                       PolyMatrix base, const LiftingGroupSpec& spec);
Cascade cascade_reduce(const Cascade& c, const LiftingGroupSpec& spec);

// No identity steps and strictly alternating update characteristics.
bool is_irreducible(const Cascade& c);

// True iff the orders of the partial products steps[N-1]...steps[j]*base
// strictly increase as factors accumulate. Throws NotIrreducible.
bool is_order_increasing(const Cascade& c);

struct EquivalenceReport {
  enum class Kind { Equal, EqualModRescaling, NotEquivalent };
  Kind kind = Kind::NotEquivalent;
  Rational alpha = 1;  // meaningful for EqualModRescaling (and Equal: 1)
};

// Structural comparison of two irreducible cascades under gain rescaling:
// c2 matches c1 when c2.base == D_alpha c1.base and each step of c2 is the
// gamma_alpha image of c1's, with alpha = c1.scale / c2.scale.
// Throws NotIrreducible if either input is reducible.
EquivalenceReport cascades_equal_mod_rescaling(const Cascade& c1, const Cascade& c2);

}  // namespace liftfb
