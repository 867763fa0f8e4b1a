#include "doctest.h"
#include "liftfb/rational.hpp"

#include <limits>

using liftfb::DomainError;
using liftfb::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).str() == "2/1");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("field arithmetic") {
  const Rational a(3, 4), b(-5, 6);
  CHECK(a + b == Rational(-1, 12));
  CHECK(a - b == Rational(19, 12));
  CHECK(a * b == Rational(-5, 8));
  CHECK(a / b == Rational(-9, 10));
  CHECK(-a == Rational(-3, 4));
  CHECK(a.inverse() == Rational(4, 3));
  CHECK(a.abs() == a);
  CHECK(b.abs() == Rational(5, 6));
  CHECK(b.sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK_THROWS_AS(a / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7) > Rational(13, 2));
}

TEST_CASE("powers and big values") {
  CHECK(Rational(1, 2).pow(3) == Rational(1, 8));
  CHECK(Rational(2).pow(-2) == Rational(1, 4));
  CHECK(Rational(-2, 3).pow(0) == Rational(1));

  // far beyond int64: 10^30
  const Rational big = Rational(10).pow(30);
  CHECK(big.str() == "1000000000000000000000000000000/1");
  CHECK(big * big.inverse() == Rational(1));
  CHECK(big + (-big) == Rational(0));
  CHECK(big - Rational(1) < big);
  // demotion back to the small representation after cancelling
  const Rational r = (big + Rational(1, 3)) - big;
  CHECK(r == Rational(1, 3));
}

TEST_CASE("int64 boundary values promote safely") {
  const long long min_ll = std::numeric_limits<long long>::min();
  const Rational m(min_ll, 2);
  CHECK(m == Rational(min_ll / 2, 1));
  const Rational n(min_ll, 1);
  CHECK(n + n == Rational(min_ll, 1) * Rational(2));
  CHECK((n / n).is_one());
}

TEST_CASE("parse and format") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("4/-6") == Rational(-2, 3));
  CHECK(Rational::parse("123456789012345678901234567890").str() ==
        "123456789012345678901234567890/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
  CHECK_THROWS_AS(Rational::parse("a/b"), DomainError);
}
