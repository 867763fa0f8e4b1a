#include "doctest.h"
#include "liftfb/generators.hpp"
#include "liftfb/textio.hpp"

using namespace liftfb;

TEST_CASE("polynomial text form") {
  const LaurentPoly p = parse_poly("1:1/2, 0:1/2");
  CHECK(p == LaurentPoly::from_terms({{1, Rational(1, 2)}, {0, Rational(1, 2)}}));
  CHECK(format_poly(p) == "1:1/2,0:1/2");
  CHECK(parse_poly("") == LaurentPoly());
  CHECK(format_poly(LaurentPoly()) == "");
  CHECK(parse_poly("-3:2") == LaurentPoly::monomial(2, -3));
  CHECK(parse_poly("0:1,0:-1") == LaurentPoly());
  CHECK_THROWS_AS(parse_poly("1:1/2,oops"), ParseError);
  CHECK_THROWS_AS(parse_poly("x:1"), ParseError);
  CHECK_THROWS_AS(parse_poly("1:1/0"), ParseError);
}

TEST_CASE("matrix text form") {
  CHECK(parse_matrix("I") == PolyMatrix::identity());
  const PolyMatrix haar = fixtures::haar_polyphase();
  CHECK(parse_matrix(format_matrix(haar)) == haar);
  CHECK(format_matrix(haar) == "0:1/2; 0:1/2; 0:1/1; 0:-1/1");
  CHECK_THROWS_AS(parse_matrix("0:1; 0:1"), ParseError);
}

TEST_CASE("cascade text form hoists scale entries") {
  const RawCascade rc = parse_cascade("K=1/1; steps=[U:0:1/1,S:2/1,L:0:1/1]; base=I");
  REQUIRE(rc.steps.size() == 3);
  const Cascade c = rc.hoisted();
  CHECK(c.scale == Rational(2));
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0] == LiftingStep::upper(LaurentPoly::constant(4)));

  const Cascade fixture = fixtures::ws_53_cascade();
  CHECK(parse_cascade(format_cascade(fixture)).hoisted() == fixture);
  CHECK(format_cascade(fixture) ==
        "K=1/1; steps=[U:0:1/4,-1:1/4,L:1:-1/2,0:-1/2]; base=I");
  CHECK_THROWS_AS(parse_cascade("steps=[]"), ParseError);
  CHECK_THROWS_AS(parse_cascade("K=1; steps=[U:0:1"), ParseError);
}

TEST_CASE("word and scaled text forms") {
  const GroupWord w = parse_word("U:0:1/4,-1:1/4,L:1:-1/2,0:-1/2");
  CHECK(w.length() == 2);
  CHECK(parse_word(format_word(w)) == w);
  CHECK(parse_word("").is_identity());
  // parsing canonicalizes: adjacent same-side tokens merge
  CHECK(parse_word("U:0:1/1,U:0:-1/1").is_identity());
  CHECK_THROWS_AS(parse_word("U:0:1/1,S:2/1"), ParseError);

  const ScaledElement g{Rational(-3, 2), w};
  CHECK(parse_scaled(format_scaled(g)) == g);
  CHECK_THROWS_AS(parse_scaled("K=0/1; word="), ParseError);
  CHECK_THROWS_AS(parse_scaled("word="), ParseError);
}

TEST_CASE("spec files carry their kind") {
  const SpecFile filters = parse_spec_file("kind=filters\nh0=1:1/2,0:1/2\nh1=1:-1/1,0:1/1\n");
  CHECK(filters.kind == SpecKind::Filters);
  CHECK(filters.filters.lowpass == fixtures::haar_filters().lowpass);

  const SpecFile mat = parse_spec_file("kind=matrix\nm=I\n");
  CHECK(mat.matrix == PolyMatrix::identity());

  const SpecFile casc = parse_spec_file("kind=cascade\nK=1/1; steps=[]; base=I\n");
  CHECK(casc.cascade.hoisted() == Cascade{});

  const SpecFile word = parse_spec_file("kind=word\nw=U:0:2/1\n");
  CHECK(word.word.length() == 1);

  const SpecFile scaled = parse_spec_file("kind=scaled\nK=2/1; word=U:0:1/1\n");
  CHECK(scaled.scaled.gain == Rational(2));

  const SpecFile sigf = parse_spec_file("kind=signal\norigin=-1\n1/2\n-3\n");
  CHECK(sigf.signal.origin == -1);
  REQUIRE(sigf.signal.samples.size() == 2);
  CHECK(sigf.signal.samples[1] == Rational(-3));

  const SpecFile basis = parse_spec_file("kind=basis\nclass=P0\n0:1,-1:1\n1:1,-2:1\n");
  CHECK(basis.basis.dimension() == 2);
  CHECK(basis.basis.cls == SymmetryClass::P0);
}

TEST_CASE("parse errors carry locations") {
  try {
    parse_spec_file("kind=signal\norigin=0\nnot-a-number\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_spec_file(""), ParseError);
  CHECK_THROWS_AS(parse_spec_file("kind=nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_spec_file("m=I\n"), ParseError);
  // comments and blank lines are skipped
  const SpecFile ok = parse_spec_file("# comment\n\nkind=matrix\n# another\nm=I\n");
  CHECK(ok.matrix == PolyMatrix::identity());
}

TEST_CASE("coset id serialization") {
  HSCosetId id;
  id.scheme = CosetScheme::S;
  id.base = fixtures::hs_base_haar();
  const std::string text = format_coset_id(id);
  CHECK(text.find("scheme=S") != std::string::npos);
  CHECK(text.find("base=") == 0);
}
