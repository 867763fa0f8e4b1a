#include "doctest.h"
#include "liftfb/generators.hpp"
#include "liftfb/polymatrix.hpp"

using namespace liftfb;

namespace {

LaurentPoly lp(std::vector<LaurentPoly::Term> t) { return LaurentPoly::from_terms(std::move(t)); }

}  // namespace

TEST_CASE("matrix product") {
  const PolyMatrix haar = fixtures::haar_polyphase();
  CHECK(haar * PolyMatrix::identity() == haar);
  // upsilon(1) * lambda(-1) == [[0,1],[-1,1]]
  const PolyMatrix u(LaurentPoly::constant(1), LaurentPoly::constant(1), LaurentPoly(),
                     LaurentPoly::constant(1));
  const PolyMatrix l(LaurentPoly::constant(1), LaurentPoly(), LaurentPoly::constant(-1),
                     LaurentPoly::constant(1));
  CHECK(u * l == PolyMatrix(LaurentPoly(), LaurentPoly::constant(1),
                            LaurentPoly::constant(-1), LaurentPoly::constant(1)));
  CHECK(PolyMatrix::gain(2) * PolyMatrix::gain(Rational(1, 2)) == PolyMatrix::identity());
}

TEST_CASE("determinant and PR certificate") {
  CHECK(pm_det(PolyMatrix::identity()) == LaurentPoly::constant(1));
  CHECK(pm_det(fixtures::haar_polyphase()) == LaurentPoly::constant(-1));

  const auto cert = classify_pr(fixtures::haar_polyphase());
  REQUIRE(cert.has_value());
  CHECK(cert->scale == Rational(-1));
  CHECK(cert->delay == 0);

  // singular: [[1, z],[0, 0]]
  const PolyMatrix sing(LaurentPoly::constant(1), lp({{1, 1}}), LaurentPoly(), LaurentPoly());
  CHECK_FALSE(classify_pr(sing).has_value());

  const auto dk = classify_pr(PolyMatrix::gain(Rational(-7, 3)));
  REQUIRE(dk.has_value());
  CHECK(dk->scale == Rational(1));
  CHECK(dk->delay == 0);
  CHECK(is_unimodular(PolyMatrix::gain(5)));

  // a delayed monomial determinant
  const PolyMatrix shift(lp({{-2, 3}}), LaurentPoly(), LaurentPoly(), LaurentPoly::constant(1));
  const auto cs = classify_pr(shift);
  REQUIRE(cs.has_value());
  CHECK(cs->scale == Rational(3));
  CHECK(cs->delay == 2);
}

TEST_CASE("exact inverse") {
  CHECK(pm_inverse(PolyMatrix::identity()) == PolyMatrix::identity());
  // upsilon(S)^-1 == upsilon(-S)
  const LaurentPoly s = lp({{0, Rational(1, 4)}, {-1, Rational(1, 4)}});
  const PolyMatrix us(LaurentPoly::constant(1), s, LaurentPoly(), LaurentPoly::constant(1));
  CHECK(pm_inverse(us) ==
        PolyMatrix(LaurentPoly::constant(1), -s, LaurentPoly(), LaurentPoly::constant(1)));
  const PolyMatrix haar = fixtures::haar_polyphase();
  CHECK(haar * pm_inverse(haar) == PolyMatrix::identity());
  CHECK(pm_inverse(haar) * haar == PolyMatrix::identity());

  // mismatched certificate is rejected
  CHECK_THROWS_AS(pm_inverse(haar, PRCertificate{Rational(1), 0}), DomainError);
  CHECK_THROWS_AS(pm_inverse(PolyMatrix()), DomainError);
}

TEST_CASE("polyphase split and merge") {
  CHECK(fixtures::haar_polyphase() ==
        PolyMatrix(LaurentPoly::constant(Rational(1, 2)), LaurentPoly::constant(Rational(1, 2)),
                   LaurentPoly::constant(1), LaurentPoly::constant(-1)));
  // lazy filter bank H0 = 1, H1 = z
  FilterPair lazy;
  lazy.lowpass = LaurentPoly::constant(1);
  lazy.highpass = lp({{1, 1}});
  CHECK(filters_to_polyphase(lazy) == PolyMatrix::identity());
  const FilterPair back = polyphase_to_filters(PolyMatrix::identity());
  CHECK(back.lowpass == lazy.lowpass);
  CHECK(back.highpass == lazy.highpass);

  const FilterPair haar = fixtures::haar_filters();
  const FilterPair rt = polyphase_to_filters(filters_to_polyphase(haar));
  CHECK(rt.lowpass == haar.lowpass);
  CHECK(rt.highpass == haar.highpass);
}

TEST_CASE("WS membership") {
  CHECK(is_ws(PolyMatrix::identity()));
  // upsilon(S) with S in P0
  const LaurentPoly s = lp({{0, Rational(1, 4)}, {-1, Rational(1, 4)}});
  CHECK(is_ws(PolyMatrix(LaurentPoly::constant(1), s, LaurentPoly(), LaurentPoly::constant(1))));
  // z^2 is not in P0
  CHECK_FALSE(is_ws(
      PolyMatrix(LaurentPoly::constant(1), lp({{2, 1}}), LaurentPoly(), LaurentPoly::constant(1))));
  // WS implies the unimodular certificate (1, 0)
  const auto cert = classify_pr(PolyMatrix::identity());
  CHECK(cert->scale.is_one());
  CHECK(cert->delay == 0);
}

TEST_CASE("HS membership") {
  CHECK(is_hs(fixtures::hs_base_haar()));
  CHECK_FALSE(is_hs(PolyMatrix::identity()));
  const LaurentPoly s = lp({{0, Rational(1, 4)}, {-1, Rational(1, 4)}});
  CHECK_FALSE(is_hs(PolyMatrix(LaurentPoly::constant(1), s, LaurentPoly(),
                               LaurentPoly::constant(1))));
  // Haar itself has determinant -1, so it is FIR-PR but not in the HS class
  CHECK_FALSE(is_hs(fixtures::haar_polyphase()));

  // the wide fixture really is a nonconstant equal-order HS base
  const PolyMatrix wide = fixtures::hs_base_wide();
  CHECK(is_hs(wide));
  CHECK(is_unimodular(wide));
  const FilterPair fp = polyphase_to_filters(wide);
  CHECK(fp.lowpass.order() == fp.highpass.order());
  CHECK(*fp.lowpass.order() == 3);
}

TEST_CASE("HS lifters") {
  // WA lifting steps preserve the HS class under left multiplication
  const LaurentPoly wa = lp({{1, 1}, {-1, -1}});
  const PolyMatrix upper_wa(LaurentPoly::constant(1), wa, LaurentPoly(),
                            LaurentPoly::constant(1));
  CHECK(is_hs_lifter(upper_wa));
  CHECK(is_hs_lifter(PolyMatrix::gain(Rational(3, 2))));
  CHECK(is_hs(upper_wa * fixtures::hs_base_haar()));
  // a P0 lifting step is not an HS lifter
  const LaurentPoly p0 = lp({{0, Rational(1, 4)}, {-1, Rational(1, 4)}});
  CHECK_FALSE(is_hs_lifter(
      PolyMatrix(LaurentPoly::constant(1), p0, LaurentPoly(), LaurentPoly::constant(1))));
}

TEST_CASE("matrix order and gamma") {
  CHECK(pm_order(PolyMatrix::identity()) == std::optional<Exp>(0));
  const LaurentPoly s = lp({{1, Rational(1, 2)}, {0, Rational(1, 2)}});
  CHECK(pm_order(PolyMatrix(LaurentPoly::constant(1), s, LaurentPoly(),
                            LaurentPoly::constant(1))) == std::optional<Exp>(1));
  CHECK(pm_order(PolyMatrix()) == std::nullopt);

  const PolyMatrix m = fixtures::haar_polyphase();
  const Rational k(3, 2);
  CHECK(pm_gamma(k, m) == PolyMatrix::gain(k) * m * PolyMatrix::gain(k.inverse()));
  CHECK(pm_gamma(1, m) == m);
  CHECK_THROWS_AS(pm_gamma(0, m), DomainError);
}
