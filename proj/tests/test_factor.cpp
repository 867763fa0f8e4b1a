#include "doctest.h"
#include "liftfb/factor.hpp"
#include "liftfb/generators.hpp"
#include "liftfb/scaled.hpp"

using namespace liftfb;

TEST_CASE("factor_ws on gain matrices") {
  const FactorizationResult ri = factor_ws(PolyMatrix::identity());
  REQUIRE(ri.ok);
  CHECK(ri.cascade.steps.empty());
  CHECK(ri.cascade.scale.is_one());
  CHECK(verify_factorization(PolyMatrix::identity(), ri));

  const PolyMatrix d3 = PolyMatrix::gain(3);
  const FactorizationResult rd = factor_ws(d3);
  REQUIRE(rd.ok);
  CHECK(rd.cascade.steps.empty());
  CHECK(rd.cascade.scale == Rational(3));
  CHECK(verify_factorization(d3, rd));
}

TEST_CASE("factor_ws recovers the 5/3-style cascade exactly") {
  const Cascade c = fixtures::ws_53_cascade();
  const PolyMatrix e = cascade_eval(c);
  const FactorizationResult r = factor_ws(e);
  REQUIRE(r.ok);
  CHECK(r.cascade == c);
  CHECK(verify_factorization(e, r));
  CHECK(is_order_increasing(r.cascade));
}

TEST_CASE("factor_ws rejects non-WS input") {
  CHECK_THROWS_AS(factor_ws(fixtures::haar_polyphase()), NotWS);
  CHECK_THROWS_AS(factor_ws(fixtures::hs_base_haar()), NotWS);
}

TEST_CASE("factor_ws round-trips random cascades with nontrivial gain") {
  InstanceGen gen(421);
  for (int i = 0; i < 40; ++i) {
    const Cascade c = gen.cascade(LiftingGroupSpec::ws(), 5, 1);
    const PolyMatrix e = cascade_eval(c);
    const FactorizationResult r = factor_ws(e);
    REQUIRE(r.ok);
    CHECK(r.cascade == cascade_reduce(c, LiftingGroupSpec::ws()));
    CHECK(verify_factorization(e, r));
  }
}

TEST_CASE("verify_factorization rejects corrupted cascades") {
  const Cascade c = fixtures::ws_53_cascade();
  const PolyMatrix e = cascade_eval(c);
  FactorizationResult r = factor_ws(e);
  REQUIRE(r.ok);
  // perturb one lifting-filter coefficient
  r.cascade.steps[0].filter += LaurentPoly::from_terms({{0, Rational(1, 7)}, {-1, Rational(1, 7)}});
  CHECK_FALSE(verify_factorization(e, r));
  FactorizationResult failed;
  CHECK_THROWS_AS(verify_factorization(e, failed), DomainError);
}

TEST_CASE("factor_hs on bases and lifts") {
  // an equal-order base factors as itself with no steps
  const PolyMatrix b = fixtures::hs_base_haar();
  const FactorizationResult rb = factor_hs(b);
  REQUIRE(rb.ok);
  CHECK(rb.cascade.steps.empty());
  CHECK(rb.cascade.scale.is_one());
  CHECK(rb.cascade.base == b);
  CHECK(verify_factorization(b, rb));

  // a single WA lower lift is recovered
  const LaurentPoly wa = LaurentPoly::from_terms({{1, 1}, {-1, -1}});
  const Cascade c = make_cascade(1, {LiftingStep::lower(wa)}, b);
  const PolyMatrix h = cascade_eval(c);
  const FactorizationResult r = factor_hs(h);
  REQUIRE(r.ok);
  CHECK(r.cascade == c);
  CHECK(verify_factorization(h, r));

  CHECK_THROWS_AS(factor_hs(PolyMatrix::identity()), NotHS);
}

TEST_CASE("factor_hs absorbs the gain into the base") {
  const PolyMatrix b = fixtures::hs_base_haar();
  const LaurentPoly wa = LaurentPoly::from_terms({{1, Rational(1, 3)}, {-1, Rational(-1, 3)}});
  const Cascade c = make_cascade(2, {LiftingStep::upper(wa)}, b);
  const PolyMatrix h = cascade_eval(c);
  const FactorizationResult r = factor_hs(h);
  REQUIRE(r.ok);
  CHECK(r.cascade.scale.is_one());
  CHECK(verify_factorization(h, r));
  const EquivalenceReport rep = cascades_equal_mod_rescaling(c, r.cascade);
  CHECK(rep.kind == EquivalenceReport::Kind::EqualModRescaling);
  CHECK(rep.alpha == Rational(2));  // alpha == K/K' with K' == 1
}

TEST_CASE("factor_hs round-trips random cascades modulo rescaling") {
  InstanceGen gen(57);
  for (int i = 0; i < 30; ++i) {
    const Cascade c = gen.cascade(LiftingGroupSpec::hs(), 4, 1, gen.hs_base());
    const PolyMatrix h = cascade_eval(c);
    const FactorizationResult r = factor_hs(h);
    REQUIRE(r.ok);
    CHECK(verify_factorization(h, r));
    const EquivalenceReport rep =
        cascades_equal_mod_rescaling(cascade_reduce(c, LiftingGroupSpec::hs()), r.cascade);
    CHECK(rep.kind != EquivalenceReport::Kind::NotEquivalent);
    CHECK(rep.alpha == c.scale);
  }
}

TEST_CASE("factor_in_group handles constant triangular matrices") {
  // [[1/2, 1/2], [0, 2]] == D_2 * upsilon(1)
  const PolyMatrix m(LaurentPoly::constant(Rational(1, 2)),
                     LaurentPoly::constant(Rational(1, 2)), LaurentPoly(),
                     LaurentPoly::constant(2));
  const FactorizationResult r = factor_in_group(m, LiftingGroupSpec::unrestricted());
  REQUIRE(r.ok);
  CHECK(r.cascade.scale == Rational(2));
  REQUIRE(r.cascade.steps.size() == 1);
  CHECK(r.cascade.steps[0] == LiftingStep::upper(LaurentPoly::constant(1)));
}

TEST_CASE("factor_in_group reports stalls honestly") {
  // [[0,1],[-1,0]] is unimodular but peels to no triangular form
  const PolyMatrix rot(LaurentPoly(), LaurentPoly::constant(1), LaurentPoly::constant(-1),
                       LaurentPoly());
  const FactorizationResult r = factor_in_group(rot, LiftingGroupSpec::unrestricted());
  CHECK_FALSE(r.ok);
  REQUIRE(r.residual.has_value());
  CHECK_FALSE(r.note.empty());
}
