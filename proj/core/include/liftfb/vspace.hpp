#pragma once

#include <string>
#include <vector>

#include "liftfb/words.hpp"

namespace liftfb {

// Ordered, linearly independent set of lifting filters drawn from a single
// symmetry class; the rational span is the parameter space for one side of
// a group lifting structure.
struct FilterBasis {
  SymmetryClass cls = SymmetryClass::P0;
  std::vector<LaurentPoly> elements;

  std::size_t dimension() const noexcept { return elements.size(); }
};

// Validates class membership of every element and exact linear independence
// (Gaussian elimination over the rationals); throws DomainError.
FilterBasis make_basis(SymmetryClass cls, std::vector<LaurentPoly> elements);

// Monomial-pair bases: P0 spans {z^k + z^-k-1}, P1 spans {z^k+1 + z^-k},
// Pa spans {z^k+1 - z^-k-1}, k = 0..dimension-1.
FilterBasis default_basis(SymmetryClass cls, int dimension);

struct Expansion {
  std::vector<Rational> coeffs;
  FilterBasis basis;
};

// Unique exact coordinates of S in the basis span; throws NotInSpan.
Expansion basis_expand(const LaurentPoly& s, const FilterBasis& basis);

LaurentPoly expansion_combine(const Expansion& e);  // sum a_i * S_i

// Per-factor bookkeeping for the gamma form of one commuting factor
// upsilon(a_i S_i) == gamma_{kappa_i}^{-1} S_i^{sigma_i}: the conjugation
// depends only on kappa^2 == |a_i|, so everything stays rational.
struct GammaFormFactor {
  Rational kappa_sq;
  int sigma = 1;
  LaurentPoly element;
};

struct ExpansionCascade {
  Cascade cascade;  // commuting steps upsilon(a_i S_i) / lambda(a_i T_i)
  std::vector<GammaFormFactor> factors;
};

// Transforms a basis expansion into the corresponding factorization of one
// lifting matrix. Side U pairs with P0 (or Pa), side L with P1 (or Pa);
// throws ClassMismatch otherwise.
ExpansionCascade expansion_to_cascade(const Expansion& e, Side side);

struct ScalingAxiomReport {
  long automorphism_checked = 0;  // gamma_K(EF) == (gamma_K E)(gamma_K F)
  long action_checked = 0;        // gamma_K'(gamma_K E) == gamma_K'K E
  long identity_checked = 0;      // gamma_1 E == E
  bool ok = true;
  std::string witness;
};

// Exact verification of the three scaling axioms on every (sample, scale)
// and (sample, scale, scale) combination.
ScalingAxiomReport check_scaling_axioms(const std::vector<PolyMatrix>& samples,
                                        const std::vector<Rational>& scales);

// Witness that squaring is not multiplicative on the scaled lifting group:
// concrete E, F with (EF)^2 != E^2 F^2, which rules out any automorphic
// scaling that distributes over scalar addition.
struct NoncommutingWitness {
  PolyMatrix e, f;
  PolyMatrix ef_sq;    // (EF)^2
  PolyMatrix e2f2;     // E^2 F^2
};

// Searches small class-constrained generator pairs; throws AbelianSpec if
// every candidate pair commutes (does not happen for WS/HS).
NoncommutingWitness additivity_counterexample(const LiftingGroupSpec& spec);

}  // namespace liftfb
