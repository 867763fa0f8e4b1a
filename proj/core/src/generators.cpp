#include "liftfb/generators.hpp"

#include "liftfb/errors.hpp"

namespace liftfb {

int InstanceGen::uniform(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng_);
}

Rational InstanceGen::rational(bool zero_ok) {
  while (true) {
    const int n = uniform(-9, 9);
    if (n == 0 && !zero_ok) continue;
    return Rational(n, uniform(1, 9));
  }
}

LaurentPoly InstanceGen::class_filter(ClassConstraint cls, int max_k, bool zero_ok) {
  while (true) {
    LaurentPoly f;
    switch (cls) {
      case ClassConstraint::P0:
        for (int k = 0; k <= max_k; ++k) {
          const Rational c = rational(true);
          f += (LaurentPoly::monomial(1, k) + LaurentPoly::monomial(1, -k - 1)).scaled(c);
        }
        break;
      case ClassConstraint::P1:
        for (int k = 0; k <= max_k; ++k) {
          const Rational c = rational(true);
          f += (LaurentPoly::monomial(1, k + 1) + LaurentPoly::monomial(1, -k)).scaled(c);
        }
        break;
      case ClassConstraint::Pa:
        for (int k = 1; k <= max_k + 1; ++k) {
          const Rational c = rational(true);
          f += (LaurentPoly::monomial(1, k) - LaurentPoly::monomial(1, -k)).scaled(c);
        }
        break;
      case ClassConstraint::Unrestricted:
        for (int k = -max_k; k <= max_k; ++k) {
          f += LaurentPoly::monomial(rational(true), k);
        }
        break;
    }
    if (zero_ok || !f.is_zero()) return f;
  }
}

Cascade InstanceGen::cascade(const LiftingGroupSpec& spec, int max_steps, int max_k,
                             PolyMatrix base) {
  const int n = uniform(0, max_steps);
  std::vector<LiftingStep> steps;
  steps.reserve(static_cast<std::size_t>(n));
  bool upper = uniform(0, 1) == 0;
  for (int i = 0; i < n; ++i) {
    const ClassConstraint cls = upper ? spec.upper_class : spec.lower_class;
    const LaurentPoly f = class_filter(cls, uniform(0, max_k));
    steps.push_back(upper ? LiftingStep::upper(f) : LiftingStep::lower(f));
    upper = !upper;
  }
  Rational k = rational();
  if (!spec.admits_scale(k)) k = k.abs();
  return make_cascade(k, std::move(steps), std::move(base));
}

GroupWord InstanceGen::word(const LiftingGroupSpec& spec, int max_len, int max_k) {
  while (true) {
    Cascade c = cascade(spec, max_len, max_k);
    if (!c.steps.empty()) return cascade_word(c);
  }
}

ScaledElement InstanceGen::scaled_element(const LiftingGroupSpec& spec, int max_len,
                                          int max_k) {
  ScaledElement g;
  Rational k = rational();
  if (!spec.admits_scale(k)) k = k.abs();
  g.gain = k;
  if (uniform(0, 5) > 0) g.word = word(spec, max_len, max_k);
  return g;
}

PolyMatrix InstanceGen::hs_base() {
  const PolyMatrix b =
      uniform(0, 3) == 0 ? fixtures::hs_base_wide() : fixtures::hs_base_haar();
  return PolyMatrix::gain(rational()) * b;
}

Signal InstanceGen::signal(int max_len) {
  Signal s;
  s.origin = uniform(-8, 8);
  const int n = uniform(1, max_len);
  s.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.samples.push_back(rational(true));
  return s;
}

namespace fixtures {

FilterPair haar_filters() {
  FilterPair fp;
  fp.lowpass = LaurentPoly::from_terms({{1, Rational(1, 2)}, {0, Rational(1, 2)}});
  fp.highpass = LaurentPoly::from_terms({{1, Rational(-1)}, {0, Rational(1)}});
  return fp;
}

PolyMatrix haar_polyphase() { return filters_to_polyphase(haar_filters()); }

PolyMatrix hs_base_haar() {
  return PolyMatrix(LaurentPoly::constant(Rational(1, 2)),
                    LaurentPoly::constant(Rational(1, 2)),
                    LaurentPoly::constant(Rational(-1)), LaurentPoly::constant(Rational(1)));
}

PolyMatrix hs_base_wide() {
  // filters F0 = z^-1 + 2 + 2z + z^2, F1 = (-z^-1 - 2 + 2z + z^2)/6;
  // symmetric/antisymmetric about 1/2 with equal width and unit determinant
  FilterPair fp;
  fp.lowpass = LaurentPoly::from_terms(
      {{-1, Rational(1)}, {0, Rational(2)}, {1, Rational(2)}, {2, Rational(1)}});
  fp.highpass = LaurentPoly::from_terms({{-1, Rational(-1, 6)},
                                         {0, Rational(-1, 3)},
                                         {1, Rational(1, 3)},
                                         {2, Rational(1, 6)}});
  return filters_to_polyphase(fp);
}

Cascade ws_53_cascade() {
  const LaurentPoly s =
      LaurentPoly::from_terms({{0, Rational(1, 4)}, {-1, Rational(1, 4)}});
  const LaurentPoly t =
      LaurentPoly::from_terms({{0, Rational(-1, 2)}, {1, Rational(-1, 2)}});
  return make_cascade(1, {LiftingStep::upper(s), LiftingStep::lower(t)},
                      PolyMatrix::identity());
}

GroupWord torsion_pair(const Rational& a, Exp d) {
  GroupWord w;
  w.tokens.push_back(Token::u(LaurentPoly::monomial(a, -d)));
  w.tokens.push_back(Token::l(LaurentPoly::monomial(-a.inverse(), d)));
  return w;
}

}  // namespace fixtures

}  // namespace liftfb
