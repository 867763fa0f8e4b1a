#pragma once

#include <cstdint>
#include <random>

#include "liftfb/scaled.hpp"
#include "liftfb/signal.hpp"

namespace liftfb {

// Seeded generators of random exact instances for property checks, plus the
// small fixed objects the tests keep reaching for. Deterministic for a
// given seed.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  // nonzero unless zero_ok; numerators/denominators stay single digit
  Rational rational(bool zero_ok = false);

  // random member of the class with max exponent parameter <= max_k
  // (support width <= 2*max_k+1); nonzero unless zero_ok
  LaurentPoly class_filter(ClassConstraint cls, int max_k, bool zero_ok = false);

  // irreducible cascade over the spec: alternating nonzero steps, random
  // scale from the spec's scale group, given base
  Cascade cascade(const LiftingGroupSpec& spec, int max_steps, int max_k,
                  PolyMatrix base = PolyMatrix::identity());

  // nonempty reduced word with filters drawn from the spec's classes
  GroupWord word(const LiftingGroupSpec& spec, int max_len, int max_k);

  ScaledElement scaled_element(const LiftingGroupSpec& spec, int max_len, int max_k);

  // random equal-order HS base: a random gain times one of the base fixtures
  PolyMatrix hs_base();

  Signal signal(int max_len);

  int uniform(int lo, int hi);

 private:
  std::mt19937_64 rng_;
};

namespace fixtures {

// H0(z) = (z + 1)/2, H1(z) = -z + 1
FilterPair haar_filters();
// [[1/2, 1/2], [1, -1]]
PolyMatrix haar_polyphase();

// [[1/2, 1/2], [-1, 1]]: the unimodular equal-order HS base with
// B0(1) == 1 (the Haar lowpass with the highpass sign flipped)
PolyMatrix hs_base_haar();

// a non-constant equal-order HS base with width-3 filters, not a rescaling
// of hs_base_haar
PolyMatrix hs_base_wide();

// two-step WS cascade [Upper((1+1/z)/4), Lower(-(1+z)/2)], gain 1
Cascade ws_53_cascade();

// torsion generator pair: upper a*z^-d, lower -z^d/a
GroupWord torsion_pair(const Rational& a, Exp d);

}  // namespace fixtures

}  // namespace liftfb
