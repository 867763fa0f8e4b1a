#pragma once

#include <optional>
#include <string>

#include "liftfb/lifting.hpp"

namespace liftfb {

// Outcome of peeling a matrix into an irreducible group lifting cascade.
// On success cascade_eval(cascade) equals the input exactly (re-checked by
// the factoring routines themselves; a mismatch is reported as a stall, not
// returned as a bogus success). On failure `residual` holds the matrix at
// which peeling stalled.
struct FactorizationResult {
  bool ok = false;
  Cascade cascade;
  LiftingGroupSpec spec;
  std::optional<PolyMatrix> residual;
  std::string note;
};

// Peels E into D_K * steps with base I over the classes of `spec` by greedy
// order reduction: the outermost lifting step of an order-increasing cascade
// is order-determining, so repeatedly removing the class-constrained quotient
// that shrinks the dominant row inverts the cascade. Stops at a constant
// gain matrix.
FactorizationResult factor_in_group(const PolyMatrix& e, const LiftingGroupSpec& spec);

// Unique irreducible factorization of a WS matrix (throws NotWS).
FactorizationResult factor_ws(const PolyMatrix& e);

// Factorization of an HS matrix into WA lifting steps over an equal-order
// HS base, unique modulo rescaling; the gain is absorbed into the base, so
// the returned cascade always has scale 1 (throws NotHS).
FactorizationResult factor_hs(const PolyMatrix& h);

// True iff r is a verified exact factorization of e: evaluation equality,
// irreducibility, class constraints, admissible scale and base.
// Throws DomainError when r is not a success.
bool verify_factorization(const PolyMatrix& e, const FactorizationResult& r);

}  // namespace liftfb
