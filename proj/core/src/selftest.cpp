#include "liftfb/selftest.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>

#include "liftfb/errors.hpp"
#include "liftfb/factor.hpp"
#include "liftfb/generators.hpp"
#include "liftfb/textio.hpp"
#include "liftfb/vspace.hpp"

namespace liftfb {

namespace {

class Runner {
 public:
  explicit Runner(std::uint64_t seed) : seed_(seed) {}

  template <class Fn>
  void family(const std::string& name, long cases, Fn&& body) {
    PropertyResult r;
    r.family = name;
    r.cases = cases;
    InstanceGen gen(seed_ ^ std::hash<std::string>{}(name));
    for (long i = 0; i < cases; ++i) {
      std::string witness;
      bool ok = true;
      try {
        ok = body(gen, &witness);
      } catch (const std::exception& e) {
        ok = false;
        witness = std::string("exception: ") + e.what();
      }
      if (!ok) {
        ++r.failures;
        if (r.witness.empty()) r.witness = witness;
      }
    }
    results_.push_back(std::move(r));
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::uint64_t seed_;
  std::vector<PropertyResult> results_;
};

LaurentPoly rand_poly(InstanceGen& g, int max_k) {
  return g.class_filter(ClassConstraint::Unrestricted, max_k, true);
}

mpq_class to_mpq(const Rational& r) {
  return mpq_class(r.numerator_str()) / mpq_class(r.denominator_str());
}

PolyMatrix rand_ws_matrix(InstanceGen& g) {
  return cascade_eval(g.cascade(LiftingGroupSpec::ws(), 3, 1));
}

}  // namespace

std::vector<PropertyResult> run_selftest(std::uint64_t seed) {
  Runner run(seed);

  run.family("rational-arithmetic-vs-gmp", 200, [](InstanceGen& g, std::string* w) {
    Rational a = g.rational(true);
    Rational b = g.rational(true);
    // push some values far beyond int64 to exercise the promoted path
    if (g.uniform(0, 3) == 0) a = a.pow(40);
    if (g.uniform(0, 3) == 0) b = b.pow(37);
    const mpq_class qa = to_mpq(a), qb = to_mpq(b);
    if (to_mpq(a + b) != qa + qb) return *w = "add mismatch", false;
    if (to_mpq(a - b) != qa - qb) return *w = "sub mismatch", false;
    if (to_mpq(a * b) != qa * qb) return *w = "mul mismatch", false;
    if (!b.is_zero() && to_mpq(a / b) != qa / qb) return *w = "div mismatch", false;
    if ((a < b) != (qa < qb)) return *w = "cmp mismatch", false;
    return true;
  });

  run.family("laurent-ring-axioms", 120, [](InstanceGen& g, std::string* w) {
    const LaurentPoly p = rand_poly(g, 3), q = rand_poly(g, 3), r = rand_poly(g, 3);
    if (p + q != q + p) return *w = "commutativity", false;
    if ((p + q) + r != p + (q + r)) return *w = "associativity", false;
    if (p * (q + r) != p * q + p * r) return *w = "distributivity", false;
    if ((p * q) * r != p * (q * r)) return *w = "mul associativity", false;
    return true;
  });

  run.family("involute-homomorphism", 120, [](InstanceGen& g, std::string* w) {
    const LaurentPoly p = rand_poly(g, 3), q = rand_poly(g, 3);
    if ((p + q).involute() != p.involute() + q.involute()) return *w = "additive", false;
    if ((p * q).involute() != p.involute() * q.involute()) return *w = "multiplicative", false;
    if (p.involute().involute() != p) return *w = "involution", false;
    return true;
  });

  run.family("symmetry-class-closure", 120, [](InstanceGen& g, std::string* w) {
    for (const ClassConstraint c :
         {ClassConstraint::P0, ClassConstraint::P1, ClassConstraint::Pa}) {
      const LaurentPoly p = g.class_filter(c, 2, true);
      const LaurentPoly q = g.class_filter(c, 2, true);
      if (!in_class(p + q, c)) return *w = "closure under addition", false;
      if (!in_class(p.scaled(g.rational()), c)) return *w = "closure under scaling", false;
    }
    // the three identities pin distinct tags on nonzero representatives
    if (symmetry_class(LaurentPoly::from_terms({{0, 1}, {-1, 1}})) != SymmetryClass::P0) {
      return *w = "P0 tag", false;
    }
    if (symmetry_class(LaurentPoly::from_terms({{1, 1}, {0, 1}})) != SymmetryClass::P1) {
      return *w = "P1 tag", false;
    }
    if (symmetry_class(LaurentPoly::from_terms({{1, 1}, {-1, -1}})) != SymmetryClass::Pa) {
      return *w = "Pa tag", false;
    }
    if (symmetry_class(LaurentPoly()) != SymmetryClass::AllZero) return *w = "zero tag", false;
    return true;
  });

  run.family("order-multiplicative", 120, [](InstanceGen& g, std::string* w) {
    LaurentPoly p = rand_poly(g, 4), q = rand_poly(g, 4);
    if (p.is_zero() || q.is_zero()) return true;  // -inf absorbs; nothing to add
    if ((p * q).order() != *p.order() + *q.order()) {
      return *w = format_poly(p) + " times " + format_poly(q), false;
    }
    return true;
  });

  run.family("pr-certificate-multiplicative", 80, [](InstanceGen& g, std::string* w) {
    auto rand_fir_pr = [&g]() {
      PolyMatrix m = rand_ws_matrix(g);
      // shear by a monomial diagonal to leave the unimodular group
      const PolyMatrix d(LaurentPoly::monomial(g.rational(), g.uniform(-2, 2)), LaurentPoly(),
                         LaurentPoly(), LaurentPoly::monomial(g.rational(), g.uniform(-2, 2)));
      return m * d;
    };
    const PolyMatrix a = rand_fir_pr(), b = rand_fir_pr();
    const auto ca = classify_pr(a), cb = classify_pr(b), cab = classify_pr(a * b);
    if (!ca || !cb || !cab) return *w = "certificate missing", false;
    if (cab->scale != ca->scale * cb->scale || cab->delay != ca->delay + cb->delay) {
      return *w = "certificate not multiplicative", false;
    }
    return true;
  });

  run.family("ws-group-closure", 80, [](InstanceGen& g, std::string* w) {
    const PolyMatrix a = rand_ws_matrix(g), b = rand_ws_matrix(g);
    if (!is_ws(a) || !is_ws(b)) return *w = "generator not WS", false;
    if (!is_ws(a * b)) return *w = "product leaves the WS group", false;
    if (!is_ws(pm_inverse(a))) return *w = "inverse leaves the WS group", false;
    const auto cert = classify_pr(a);
    if (!cert || !cert->scale.is_one() || cert->delay != 0) {
      return *w = "WS matrix without unimodular certificate", false;
    }
    return true;
  });

  run.family("hs-class-not-closed", 40, [](InstanceGen& g, std::string* w) {
    const PolyMatrix b = fixtures::hs_base_haar();
    if (!is_hs(b)) return *w = "fixture base not HS", false;
    if (is_hs(b * b)) return *w = "expected product outside HS", false;
    // random HS pairs built from WA lifts of scaled bases
    const PolyMatrix h1 = cascade_eval(g.cascade(LiftingGroupSpec::hs(), 2, 1, g.hs_base()));
    if (!is_hs(h1)) return *w = "lifted bank not HS", false;
    return true;
  });

  run.family("cascade-reduce-preserves-eval", 80, [](InstanceGen& g, std::string* w) {
    // raw list with identity steps, same-side repeats, and scale steps
    std::vector<LiftingStep> raw;
    const int n = g.uniform(0, 6);
    for (int i = 0; i < n; ++i) {
      switch (g.uniform(0, 3)) {
        case 0:
          raw.push_back(LiftingStep::upper(g.class_filter(ClassConstraint::P0, 1, true)));
          break;
        case 1:
          raw.push_back(LiftingStep::lower(g.class_filter(ClassConstraint::P1, 1, true)));
          break;
        case 2:
          raw.push_back(LiftingStep::scaling(g.rational()));
          break;
        default:
          raw.push_back(LiftingStep::upper(LaurentPoly()));
          break;
      }
    }
    const Rational k = g.rational();
    const PolyMatrix reference = cascade_eval(hoist_scales(k, raw, PolyMatrix::identity()));
    const Cascade red = cascade_reduce(k, raw, PolyMatrix::identity(), LiftingGroupSpec::ws());
    if (cascade_eval(red) != reference) return *w = "evaluation changed", false;
    if (!is_irreducible(red)) return *w = "result not irreducible", false;
    if (cascade_reduce(red, LiftingGroupSpec::ws()) != red) return *w = "not idempotent", false;
    return true;
  });

  run.family("gamma-group-action", 120, [](InstanceGen& g, std::string* w) {
    const Rational k = g.rational(), k2 = g.rational();
    LiftingStep s = g.uniform(0, 1) == 0
                        ? LiftingStep::upper(g.class_filter(ClassConstraint::P0, 2))
                        : LiftingStep::lower(g.class_filter(ClassConstraint::P1, 2));
    if (gamma_conj(1, s) != s) return *w = "gamma_1 not identity", false;
    if (gamma_conj(k2, gamma_conj(k, s)) != gamma_conj(k2 * k, s)) {
      return *w = "gamma not a group action", false;
    }
    if (gamma_conj(-k, s) != gamma_conj(k, s)) return *w = "gamma depends on sign of K", false;
    const PolyMatrix lhs = gamma_conj(k, s).matrix();
    const PolyMatrix rhs = PolyMatrix::gain(k) * s.matrix() * PolyMatrix::gain(k.inverse());
    if (lhs != rhs) return *w = "step gamma disagrees with matrix conjugation", false;
    if (pm_gamma(k, s.matrix()) != rhs) return *w = "pm_gamma disagrees", false;
    return true;
  });

  run.family("ws-order-increasing", 80, [](InstanceGen& g, std::string* w) {
    Cascade c = g.cascade(LiftingGroupSpec::ws(), 5, 1);
    c.scale = 1;
    if (!is_order_increasing(c)) return *w = format_cascade(c), false;
    return true;
  });

  run.family("ws-uniqueness-enumerated", 1, [](InstanceGen&, std::string* w) {
    // distinct small irreducible WS cascades evaluate to distinct matrices
    const Rational coeffs[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)};
    std::vector<LaurentPoly> ups, los;
    for (const auto& c : coeffs) {
      ups.push_back(LaurentPoly::from_terms({{0, c}, {-1, c}}));
      los.push_back(LaurentPoly::from_terms({{1, c}, {0, c}}));
    }
    std::map<std::string, std::string> seen;
    long collisions = 0;
    std::vector<Cascade> stack;
    // enumerate alternating cascades of length <= 3 starting on each side
    auto push = [&](const Cascade& c) {
      const std::string key = format_matrix(cascade_eval(c));
      const std::string who = format_cascade(c);
      auto [it, inserted] = seen.emplace(key, who);
      if (!inserted && it->second != who) ++collisions;
    };
    for (int start = 0; start < 2; ++start) {
      for (std::size_t i = 0; i < ups.size(); ++i) {
        for (std::size_t j = 0; j < los.size(); ++j) {
          for (std::size_t k3 = 0; k3 < ups.size(); ++k3) {
            const bool up_first = start == 0;
            std::vector<LiftingStep> steps;
            steps.push_back(up_first ? LiftingStep::upper(ups[i]) : LiftingStep::lower(los[i]));
            push(make_cascade(1, steps, PolyMatrix::identity()));
            steps.push_back(up_first ? LiftingStep::lower(los[j]) : LiftingStep::upper(ups[j]));
            push(make_cascade(1, steps, PolyMatrix::identity()));
            steps.push_back(up_first ? LiftingStep::upper(ups[k3]) : LiftingStep::lower(los[k3]));
            push(make_cascade(1, steps, PolyMatrix::identity()));
          }
        }
      }
    }
    if (collisions != 0) return *w = "distinct cascades collided", false;
    return true;
  });

  run.family("word-group-axioms", 120, [](InstanceGen& g, std::string* w) {
    const LiftingGroupSpec spec = LiftingGroupSpec::ws();
    const GroupWord a = g.word(spec, 3, 1), b = g.word(spec, 3, 1), c = g.word(spec, 3, 1);
    if (word_mul(word_mul(a, b), c) != word_mul(a, word_mul(b, c))) {
      return *w = "associativity", false;
    }
    const GroupWord e;
    if (word_mul(a, e) != a || word_mul(e, a) != a) return *w = "identity", false;
    if (!word_mul(a, word_inv(a)).is_identity()) return *w = "inverse", false;
    if (!is_reduced(word_mul(a, b).tokens)) return *w = "product not reduced", false;
    return true;
  });

  run.family("word-matrix-homomorphism", 120, [](InstanceGen& g, std::string* w) {
    const LiftingGroupSpec spec =
        g.uniform(0, 1) == 0 ? LiftingGroupSpec::ws() : LiftingGroupSpec::hs_cascade();
    const GroupWord a = g.word(spec, 3, 1), b = g.word(spec, 3, 1);
    if (word_to_matrix(word_mul(a, b)) != word_to_matrix(a) * word_to_matrix(b)) {
      return *w = format_word(a) + " | " + format_word(b), false;
    }
    return true;
  });

  run.family("torsion-relation", 9, [](InstanceGen& g, std::string* w) {
    const Rational a(g.uniform(1, 3), g.uniform(1, 2));
    const Exp d = g.uniform(-2, 2);
    const GroupWord gen = fixtures::torsion_pair(a, d);
    const PolyMatrix m = word_to_matrix(gen);
    PolyMatrix p = PolyMatrix::identity();
    for (int i = 1; i <= 6; ++i) {
      p = p * m;
      if (i < 6 && p == PolyMatrix::identity()) return *w = "order smaller than 6", false;
    }
    if (p != PolyMatrix::identity()) return *w = "sixth power not identity", false;
    return true;
  });

  run.family("semidirect-psi-homomorphism", 120, [](InstanceGen& g, std::string* w) {
    const LiftingGroupSpec spec = LiftingGroupSpec::ws();
    const ScaledElement g0 = g.scaled_element(spec, 3, 1);
    const ScaledElement g1 = g.scaled_element(spec, 3, 1);
    if (scaled_to_matrix(semidirect_mul(g0, g1)) != scaled_to_matrix(g0) * scaled_to_matrix(g1)) {
      return *w = format_scaled(g0) + " | " + format_scaled(g1), false;
    }
    const ScaledElement gi = semidirect_inv(g0);
    if (semidirect_mul(g0, gi) != ScaledElement{}) return *w = "inverse failed", false;
    return true;
  });

  run.family("scaled-roundtrip", 100, [](InstanceGen& g, std::string* w) {
    const LiftingGroupSpec spec =
        g.uniform(0, 1) == 0 ? LiftingGroupSpec::ws() : LiftingGroupSpec::hs_cascade();
    const ScaledElement g0 = g.scaled_element(spec, 3, 1);
    const ScaledElement back = matrix_to_scaled(scaled_to_matrix(g0), spec);
    if (back != g0) return *w = format_scaled(g0), false;
    return true;
  });

  run.family("cascade-intersect-gain-trivial", 100, [](InstanceGen& g, std::string* w) {
    const LiftingGroupSpec spec =
        g.uniform(0, 1) == 0 ? LiftingGroupSpec::ws() : LiftingGroupSpec::hs_cascade();
    const GroupWord word = g.word(spec, 3, 1);
    Rational k = g.rational();
    if (k.is_one()) k = Rational(2);
    const auto word_order = pm_order(word_to_matrix(word));
    if (!word_order || *word_order < 1) return *w = format_word(word), false;
    if (pm_order(PolyMatrix::gain(k)) != std::optional<Exp>(0)) return *w = "gain order", false;
    return true;
  });

  run.family("theta-preserves-side-and-class", 100, [](InstanceGen& g, std::string* w) {
    const LiftingGroupSpec spec =
        g.uniform(0, 1) == 0 ? LiftingGroupSpec::ws() : LiftingGroupSpec::hs_cascade();
    const GroupWord word = g.word(spec, 3, 1);
    const GroupWord im = theta_apply(g.rational(), word);
    if (im.length() != word.length()) return *w = "length changed", false;
    for (std::size_t i = 0; i < im.tokens.size(); ++i) {
      if (im.tokens[i].side != word.tokens[i].side) return *w = "side changed", false;
      const ClassConstraint cls =
          im.tokens[i].side == Side::U ? spec.upper_class : spec.lower_class;
      if (!in_class(im.tokens[i].filter, cls)) return *w = "class left", false;
    }
    return true;
  });

  run.family("hs-coset-id-stable", 40, [](InstanceGen& g, std::string* w) {
    const PolyMatrix base = g.hs_base();
    const PolyMatrix h = cascade_eval(g.cascade(LiftingGroupSpec::hs(), 2, 1, base));
    const PolyMatrix lifter = word_to_matrix(g.word(LiftingGroupSpec::hs_cascade(), 2, 1));
    const HSCosetId id_c = hs_coset_id(h, CosetScheme::C);
    if (!same_id(id_c, hs_coset_id(lifter * h, CosetScheme::C))) {
      return *w = "C-scheme id moved under cascade lift", false;
    }
    const PolyMatrix scaled_lift = PolyMatrix::gain(g.rational()) * lifter * h;
    const HSCosetId id_s = hs_coset_id(h, CosetScheme::S);
    if (!same_id(id_s, hs_coset_id(scaled_lift, CosetScheme::S))) {
      return *w = "S-scheme id moved under scaled lift", false;
    }
    return true;
  });

  run.family("scaling-axioms", 10, [](InstanceGen& g, std::string* w) {
    std::vector<PolyMatrix> samples;
    for (int i = 0; i < 4; ++i) samples.push_back(rand_ws_matrix(g));
    std::vector<Rational> scales;
    for (int i = 0; i < 3; ++i) scales.push_back(g.rational());
    const ScalingAxiomReport rep = check_scaling_axioms(samples, scales);
    if (!rep.ok) return *w = rep.witness, false;
    return true;
  });

  run.family("squaring-not-multiplicative", 2, [](InstanceGen& g, std::string* w) {
    const LiftingGroupSpec spec =
        g.uniform(0, 1) == 0 ? LiftingGroupSpec::unrestricted() : LiftingGroupSpec::ws();
    const NoncommutingWitness nw = additivity_counterexample(spec);
    if (nw.ef_sq == nw.e2f2) return *w = "witness is not a witness", false;
    return true;
  });

  run.family("basis-expansion-roundtrip", 80, [](InstanceGen& g, std::string* w) {
    const SymmetryClass cls = g.uniform(0, 1) == 0 ? SymmetryClass::P0 : SymmetryClass::P1;
    const FilterBasis basis = default_basis(cls, 3);
    Expansion e;
    e.basis = basis;
    for (int i = 0; i < 3; ++i) e.coeffs.push_back(g.rational(true));
    const Expansion back = basis_expand(expansion_combine(e), basis);
    if (back.coeffs != e.coeffs) return *w = "coordinates changed", false;
    // commuting factors: reversed step order evaluates identically
    const Side side = cls == SymmetryClass::P0 ? Side::U : Side::L;
    const ExpansionCascade ec = expansion_to_cascade(e, side);
    Cascade rev = ec.cascade;
    std::reverse(rev.steps.begin(), rev.steps.end());
    if (cascade_eval(rev) != cascade_eval(ec.cascade)) return *w = "factors do not commute", false;
    // gamma form: kappa^2 == |a|, sigma == sgn(a) reproduces each factor
    for (std::size_t i = 0, f = 0; i < e.coeffs.size(); ++i) {
      if (e.coeffs[i].is_zero()) continue;
      const GammaFormFactor& gf = ec.factors[f++];
      if (gf.kappa_sq != e.coeffs[i].abs() || gf.sigma != e.coeffs[i].sign()) {
        return *w = "gamma bookkeeping wrong", false;
      }
      const LaurentPoly expected = gf.element.scaled(Rational(gf.sigma) * gf.kappa_sq);
      if (expected != e.basis.elements[i].scaled(e.coeffs[i])) {
        return *w = "gamma form does not reproduce the factor", false;
      }
    }
    return true;
  });

  run.family("factor-ws-roundtrip", 60, [](InstanceGen& g, std::string* w) {
    const Cascade c = g.cascade(LiftingGroupSpec::ws(), 4, 1);
    const PolyMatrix e = cascade_eval(c);
    const FactorizationResult r = factor_ws(e);
    if (!r.ok) return *w = "factorization stalled: " + r.note, false;
    if (!verify_factorization(e, r)) return *w = "verification failed", false;
    if (r.cascade != cascade_reduce(c, LiftingGroupSpec::ws())) {
      return *w = "did not recover the generating cascade", false;
    }
    if (!is_order_increasing(r.cascade)) return *w = "not order-increasing", false;
    return true;
  });

  run.family("factor-hs-roundtrip-mod-rescaling", 60, [](InstanceGen& g, std::string* w) {
    const Cascade c = g.cascade(LiftingGroupSpec::hs(), 4, 1, g.hs_base());
    const PolyMatrix h = cascade_eval(c);
    const FactorizationResult r = factor_hs(h);
    if (!r.ok) return *w = "factorization stalled: " + r.note, false;
    if (!verify_factorization(h, r)) return *w = "verification failed", false;
    const EquivalenceReport rep =
        cascades_equal_mod_rescaling(cascade_reduce(c, LiftingGroupSpec::hs()), r.cascade);
    if (rep.kind == EquivalenceReport::Kind::NotEquivalent) {
      return *w = "not equivalent modulo rescaling", false;
    }
    if (rep.alpha != c.scale / r.cascade.scale) return *w = "wrong rescaling factor", false;
    return true;
  });

  run.family("perfect-reconstruction", 60, [](InstanceGen& g, std::string* w) {
    const Signal x = g.signal(24);
    PolyMatrix bank;
    switch (g.uniform(0, 2)) {
      case 0:
        bank = fixtures::haar_polyphase();
        break;
      case 1:
        bank = rand_ws_matrix(g);
        break;
      default:
        bank = cascade_eval(g.cascade(LiftingGroupSpec::hs(), 2, 1, g.hs_base()));
        break;
    }
    const auto [y0, y1] = analyze(x, bank);
    if (synthesize(y0, y1, bank) != canonical(x)) return *w = "round trip failed", false;
    // linearity in the input
    const Signal x2 = g.signal(24);
    const Rational a = g.rational(), b = g.rational();
    const LaurentPoly mix = signal_to_poly(x).scaled(a) + signal_to_poly(x2).scaled(b);
    const auto [m0, m1] = analyze(poly_to_signal(mix), bank);
    const auto [u0, u1] = analyze(x, bank);
    const auto [v0, v1] = analyze(x2, bank);
    const LaurentPoly want0 = signal_to_poly(u0).scaled(a) + signal_to_poly(v0).scaled(b);
    const LaurentPoly want1 = signal_to_poly(u1).scaled(a) + signal_to_poly(v1).scaled(b);
    if (signal_to_poly(m0) != want0 || signal_to_poly(m1) != want1) {
      return *w = "analysis not linear", false;
    }
    return true;
  });

  run.family("text-roundtrip", 80, [](InstanceGen& g, std::string* w) {
    const LaurentPoly p = rand_poly(g, 3);
    if (parse_poly(format_poly(p)) != p) return *w = "poly", false;
    const PolyMatrix m = rand_ws_matrix(g);
    if (parse_matrix(format_matrix(m)) != m) return *w = "matrix", false;
    const Cascade c = g.cascade(LiftingGroupSpec::ws(), 3, 1);
    const RawCascade rc = parse_cascade(format_cascade(c));
    if (rc.hoisted() != c) return *w = "cascade", false;
    const GroupWord word = g.word(LiftingGroupSpec::ws(), 3, 1);
    if (parse_word(format_word(word)) != word) return *w = "word", false;
    const ScaledElement s = g.scaled_element(LiftingGroupSpec::ws(), 3, 1);
    if (parse_scaled(format_scaled(s)) != s) return *w = "scaled", false;
    return true;
  });

  return run.take();
}

}  // namespace liftfb
