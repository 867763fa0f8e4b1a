#include "liftfb/scaled.hpp"

#include <random>
#include <utility>

#include "liftfb/errors.hpp"
#include "liftfb/factor.hpp"

namespace liftfb {

GroupWord theta_apply(const Rational& k, const GroupWord& w) {
  if (k.is_zero()) throw DomainError("theta requires K != 0");
  const Rational k2 = k * k;
  const Rational k2inv = k2.inverse();
  GroupWord out;
  out.tokens.reserve(w.tokens.size());
  for (const auto& t : w.tokens) {
    out.tokens.push_back(Token{
        t.side, t.side == Side::U ? t.filter.scaled(k2inv) : t.filter.scaled(k2)});
  }
  return out;
}

ScaledElement semidirect_mul(const ScaledElement& g0, const ScaledElement& g1) {
  if (g0.gain.is_zero() || g1.gain.is_zero()) throw DomainError("scaled element with K == 0");
  ScaledElement out;
  out.gain = g0.gain * g1.gain;
  out.word = word_mul(theta_apply(g1.gain.inverse(), g0.word), g1.word);
  return out;
}

ScaledElement semidirect_inv(const ScaledElement& g) {
  if (g.gain.is_zero()) throw DomainError("scaled element with K == 0");
  ScaledElement out;
  out.gain = g.gain.inverse();
  out.word = theta_apply(g.gain, word_inv(g.word));
  return out;
}

PolyMatrix scaled_to_matrix(const ScaledElement& g) {
  return PolyMatrix::gain(g.gain) * word_to_matrix(g.word);
}

ScaledElement matrix_to_scaled(const PolyMatrix& e, const LiftingGroupSpec& spec) {
  FactorizationResult fr = factor_in_group(e, spec);
  if (!fr.ok) {
    throw NotInScaledGroup("matrix does not factor over the scaled lifting group");
  }
  ScaledElement g;
  g.gain = fr.cascade.scale;
  g.word = cascade_word(fr.cascade);
  return g;
}

bool hs_base_membership(const PolyMatrix& b) {
  if (!is_hs(b)) return false;
  const FilterPair fp = polyphase_to_filters(b);
  return fp.lowpass.order() == fp.highpass.order();
}

PolyMatrix hs_base_normalize(const PolyMatrix& b) {
  if (!hs_base_membership(b)) {
    throw DomainError("normalization requires an equal-order HS base");
  }
  const Rational v = polyphase_to_filters(b).lowpass.eval_one();
  if (v.is_zero()) {
    throw DegenerateBase("lowpass filter vanishes at z == 1; cannot normalize");
  }
  // D_v scales the lowpass row by 1/v, forcing B0(1) == 1.
  return PolyMatrix::gain(v) * b;
}

bool same_id(const HSCosetId& a, const HSCosetId& b) {
  return a.scheme == b.scheme && a.base == b.base;
}

HSCosetId hs_coset_id(const PolyMatrix& h, CosetScheme scheme) {
  if (!is_hs(h)) throw NotHS("coset ids are defined for HS matrices");
  FactorizationResult fr = factor_hs(h);
  if (!fr.ok) {
    throw FactorizationFailed("HS factorization stalled: " + fr.note);
  }
  HSCosetId id;
  id.scheme = scheme;
  if (scheme == CosetScheme::C) {
    id.base = fr.cascade.base;
    id.word = cascade_word(fr.cascade);
    return id;
  }
  // S scheme: rescale the base to B0(1) == 1 and push the gain through the
  // cascade: E * B == D_{1/v} * (gamma_v E) * (D_v B).
  const Rational v = polyphase_to_filters(fr.cascade.base).lowpass.eval_one();
  if (v.is_zero()) {
    throw DegenerateBase("coset base cannot be normalized: B0(1) == 0");
  }
  id.base = PolyMatrix::gain(v) * fr.cascade.base;
  id.word = theta_apply(v, cascade_word(fr.cascade));
  return id;
}

namespace {

// Membership of q in the HS lifting cascade group (scaled == false) or the
// HS scaled lifting group (scaled == true).
bool hs_group_member(const PolyMatrix& q, bool scaled) {
  if (!is_hs_lifter(q)) return false;
  FactorizationResult fr = factor_in_group(q, LiftingGroupSpec::hs_cascade());
  if (!fr.ok) return false;
  return scaled || fr.cascade.scale.is_one();
}

}  // namespace

bool same_right_coset(const PolyMatrix& h1, const PolyMatrix& h2, CosetScheme scheme) {
  if (!is_hs(h1) || !is_hs(h2)) throw NotHS("coset comparison requires HS matrices");
  const bool by_id = same_id(hs_coset_id(h1, scheme), hs_coset_id(h2, scheme));
  const PolyMatrix q = h1 * pm_inverse(h2);
  const bool by_quotient = hs_group_member(q, scheme == CosetScheme::S);
  if (by_id != by_quotient) {
    throw PropertyViolation("coset id comparison and quotient membership disagree");
  }
  return by_id;
}

LeftCosetWitness left_coset_counterexample(const PolyMatrix& base, int samples,
                                           std::uint64_t seed) {
  if (!hs_base_membership(base)) {
    throw DomainError("left-coset search requires an equal-order HS base");
  }
  LeftCosetWitness w;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> halfw(1, 2);
  std::uniform_int_distribution<int> len(1, 3);
  const PolyMatrix base_inv = pm_inverse(base);
  for (int it = 0; it < samples; ++it) {
    // random nonempty WA cascade E, alternating sides
    std::vector<Token> tokens;
    const int n = len(rng);
    Side side = (it % 2 == 0) ? Side::U : Side::L;
    for (int i = 0; i < n; ++i) {
      LaurentPoly f;
      while (f.is_zero()) {
        const Exp k = halfw(rng);
        const Rational c(num(rng), den(rng));
        f = LaurentPoly::monomial(c, k) - LaurentPoly::monomial(c, -k);
      }
      tokens.push_back(Token{side, f});
      side = side == Side::U ? Side::L : Side::U;
    }
    const GroupWord word = word_simplify(tokens);
    if (word.is_identity()) continue;
    const PolyMatrix h = word_to_matrix(word) * base;
    // h == E*base lies in the right coset of base; test left-coset
    // membership h in base * S_H, i.e. base^-1 h in S_H.
    if (!hs_group_member(base_inv * h, /*scaled=*/true)) {
      w.found = true;
      w.h = h;
      w.lift = word;
      w.certificate = "base^-1 * H is not in the HS scaled lifting group";
      return w;
    }
  }
  return w;
}

}  // namespace liftfb
