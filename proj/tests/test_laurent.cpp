#include "doctest.h"
#include "liftfb/laurent.hpp"

using namespace liftfb;

namespace {

LaurentPoly lp(std::vector<LaurentPoly::Term> t) { return LaurentPoly::from_terms(std::move(t)); }

}  // namespace

TEST_CASE("addition") {
  // (z + 1) + (-z + 1) == 2
  CHECK(lp({{1, 1}, {0, 1}}) + lp({{1, -1}, {0, 1}}) == LaurentPoly::constant(2));
  const LaurentPoly p = lp({{3, Rational(2, 5)}, {-2, 7}});
  CHECK(LaurentPoly() + p == p);
  // (z/2 + 1/2) + (1/(2z) + 1/2) == z/2 + 1 + 1/(2z)
  CHECK(lp({{1, Rational(1, 2)}, {0, Rational(1, 2)}}) +
            lp({{-1, Rational(1, 2)}, {0, Rational(1, 2)}}) ==
        lp({{1, Rational(1, 2)}, {0, 1}, {-1, Rational(1, 2)}}));
}

TEST_CASE("multiplication") {
  // (z+1)(z-1) == z^2 - 1
  CHECK(lp({{1, 1}, {0, 1}}) * lp({{1, 1}, {0, -1}}) == lp({{2, 1}, {0, -1}}));
  CHECK(lp({{5, 3}, {-1, 2}}) * LaurentPoly() == LaurentPoly());
  // (z/2 + 1/2)(-z + 1) == -z^2/2 + 1/2
  CHECK(lp({{1, Rational(1, 2)}, {0, Rational(1, 2)}}) * lp({{1, -1}, {0, 1}}) ==
        lp({{2, Rational(-1, 2)}, {0, Rational(1, 2)}}));
}

TEST_CASE("involution") {
  CHECK(lp({{1, 1}, {0, 2}}).involute() == lp({{-1, 1}, {0, 2}}));
  const LaurentPoly p = lp({{2, Rational(1, 3)}, {0, 5}, {-4, Rational(-2, 7)}});
  CHECK(p.involute().involute() == p);
  // (1 + z)/2 satisfies S(1/z) == S(z)/z, the P1 identity
  const LaurentPoly s = lp({{1, Rational(1, 2)}, {0, Rational(1, 2)}});
  CHECK(s.involute() == lp({{-1, Rational(1, 2)}, {0, Rational(1, 2)}}));
  CHECK(s.involute().shifted(1) == s);
}

TEST_CASE("order is support width") {
  CHECK(lp({{2, 1}, {-1, 1}}).order() == std::optional<Exp>(3));
  CHECK(LaurentPoly::constant(5).order() == std::optional<Exp>(0));
  CHECK(LaurentPoly().order() == std::nullopt);
  // minus infinity is absorbing under the optional ordering
  CHECK(std::nullopt < LaurentPoly::constant(5).order());
}

TEST_CASE("symmetry classes") {
  // (1 + 1/z)/4: S(1/z) == z S(z)
  const LaurentPoly p0 = lp({{0, Rational(1, 4)}, {-1, Rational(1, 4)}});
  CHECK(symmetry_class(p0) == SymmetryClass::P0);
  CHECK(p0.involute() == p0.shifted(1));
  // -(1 + z)/2: S(1/z) == S(z)/z
  const LaurentPoly p1 = lp({{0, Rational(-1, 2)}, {1, Rational(-1, 2)}});
  CHECK(symmetry_class(p1) == SymmetryClass::P1);
  // z - 1/z: antisymmetric
  CHECK(symmetry_class(lp({{1, 1}, {-1, -1}})) == SymmetryClass::Pa);
  CHECK(symmetry_class(lp({{2, 1}})) == SymmetryClass::None);
  CHECK(symmetry_class(LaurentPoly()) == SymmetryClass::AllZero);

  // zero is in every class; nonzero classes are mutually exclusive
  for (auto c : {ClassConstraint::P0, ClassConstraint::P1, ClassConstraint::Pa}) {
    CHECK(in_class(LaurentPoly(), c));
  }
  CHECK(in_class(p0, ClassConstraint::P0));
  CHECK_FALSE(in_class(p0, ClassConstraint::P1));
  CHECK_FALSE(in_class(p0, ClassConstraint::Pa));
  CHECK(in_class(p0, ClassConstraint::Unrestricted));
}

TEST_CASE("coefficient access") {
  const LaurentPoly p = lp({{4, Rational(1, 2)}, {-3, 5}});
  CHECK(p.coeff(4) == Rational(1, 2));
  CHECK(p.coeff(0) == Rational(0));
  CHECK(p.min_exp() == -3);
  CHECK(p.max_exp() == 4);
  CHECK(p.leading_coeff() == Rational(1, 2));
  CHECK(p.trailing_coeff() == Rational(5));
  CHECK(p.eval_one() == Rational(11, 2));
  CHECK(p.scaled(Rational(2)) == lp({{4, 1}, {-3, 10}}));
  CHECK(p.shifted(-1) == lp({{3, Rational(1, 2)}, {-4, 5}}));
}
