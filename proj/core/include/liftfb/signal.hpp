#pragma once

#include <utility>
#include <vector>

#include "liftfb/polymatrix.hpp"

namespace liftfb {

// Finitely supported rational sequence; samples[i] sits at index origin + i.
struct Signal {
  Exp origin = 0;
  std::vector<Rational> samples;

  friend bool operator==(const Signal& a, const Signal& b) {
    return a.origin == b.origin && a.samples == b.samples;
  }
  friend bool operator!=(const Signal& a, const Signal& b) { return !(a == b); }
};

LaurentPoly signal_to_poly(const Signal& x);

// Canonical signal of a polynomial: origin at the minimum exponent, interior
// zeros kept, no leading/trailing zero samples. Zero polynomial gives an
// empty signal at origin 0.
Signal poly_to_signal(const LaurentPoly& p);

// Trims leading/trailing zero samples; equal canonical forms mean equal
// sequences on the integers.
Signal canonical(const Signal& x);

// Polyphase analysis: splits x into even/odd phases (odd phase advanced) and
// applies h exactly. Outputs grow by the filter support; no boundary
// handling. Throws DomainError when h is not FIR-PR.
std::pair<Signal, Signal> analyze(const Signal& x, const PolyMatrix& h);

// Exact inverse of analyze: applies pm_inverse(h) to the subband pair and
// re-interleaves the phases. synthesize(analyze(x)) == x exactly.
Signal synthesize(const Signal& y0, const Signal& y1, const PolyMatrix& h);

}  // namespace liftfb
