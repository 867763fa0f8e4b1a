#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "liftfb/words.hpp"

namespace liftfb {

// Element of the external semidirect product of the reduced-word group by
// the gain-scaling group: a pair (K, word) realizing D_K * rho^-1(word).
struct ScaledElement {
  Rational gain = 1;  // K != 0
  GroupWord word;

  friend bool operator==(const ScaledElement& a, const ScaledElement& b) {
    return a.gain == b.gain && a.word == b.word;
  }
  friend bool operator!=(const ScaledElement& a, const ScaledElement& b) { return !(a == b); }
};

// Token-wise gamma action of D_K on a word: U(S) -> U(S/K^2), L(S) -> L(K^2 S).
// Preserves reducedness and symmetry classes. DomainError on K == 0.
GroupWord theta_apply(const Rational& k, const GroupWord& w);

// Twisted multiplication (q0 k0)(q1 k1) = q0 q1 (gamma_{q1^-1} k0) k1.
ScaledElement semidirect_mul(const ScaledElement& g0, const ScaledElement& g1);

// (q k)^-1 = q^-1 gamma_q k^-1.
ScaledElement semidirect_inv(const ScaledElement& g);

PolyMatrix scaled_to_matrix(const ScaledElement& g);

// The unique (K, word) with scaled_to_matrix == e over the structure of
// `spec`; throws NotInScaledGroup.
ScaledElement matrix_to_scaled(const PolyMatrix& e, const LiftingGroupSpec& spec);

// Equal-order HS base: is_hs and the two filters have equal support width.
bool hs_base_membership(const PolyMatrix& b);

// Rescales an equal-order HS base so the lowpass filter evaluates to 1 at
// z == 1. Throws DomainError if b is not a base, DegenerateBase if B0(1)==0.
PolyMatrix hs_base_normalize(const PolyMatrix& b);

enum class CosetScheme { C, S };

// Canonical right-coset data for an HS matrix: under the C scheme every H
// is E*B for a unique equal-order base B (the gain absorbed into the base);
// under the S scheme the base is additionally normalized to B0(1) == 1.
// Two HS matrices lie in the same right coset iff their bases agree under
// the scheme; the word is the cascade part of the canonical factorization,
// not part of the coset identity.
struct HSCosetId {
  CosetScheme scheme = CosetScheme::C;
  PolyMatrix base;
  GroupWord word;
};

bool same_id(const HSCosetId& a, const HSCosetId& b);

// Throws NotHS; stalled factorizations surface as FactorizationFailed.
HSCosetId hs_coset_id(const PolyMatrix& h, CosetScheme scheme);

// Coset equality via id comparison, cross-checked against quotient
// membership H1*H2^-1 in the cascade (C) or scaled (S) group; throws
// PropertyViolation if the two procedures ever disagree.
bool same_right_coset(const PolyMatrix& h1, const PolyMatrix& h2, CosetScheme scheme);

struct LeftCosetWitness {
  bool found = false;
  PolyMatrix h;         // HS matrix in the right coset of the base
  GroupWord lift;       // the WA cascade used to build h
  std::string certificate;
};

// Searches for H in the right coset of `base` that is not in base * S_H
// (certified by B^-1 H failing scaled-group membership). Budgeted random
// search; NotFound (found == false) after `samples` attempts is a reported
// outcome, not an error.
LeftCosetWitness left_coset_counterexample(const PolyMatrix& base, int samples,
                                           std::uint64_t seed);

}  // namespace liftfb
