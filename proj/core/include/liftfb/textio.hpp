#pragma once

#include <string>
#include <vector>

#include "liftfb/scaled.hpp"
#include "liftfb/signal.hpp"
#include "liftfb/vspace.hpp"

namespace liftfb {

// Text forms used by files and the CLI. Grammar summary:
//   rational   -3/2 | 7
//   poly       comma list of exp:rational, e.g. "1:1/2,0:1/2"; empty is zero
//   matrix     "I" or four polys row-major, separated by ';'
//   step       U:<poly> | L:<poly> | S:<rational>
//   cascade    K=<rational>; steps=[<step>,...]; base=<matrix|I>
//   word       comma list of U:<poly> / L:<poly>; empty is the identity
//   scaled     K=<rational>; word=<word>
//   coset id   base=<matrix>; word=<word>; scheme=<C|S>
// Emission is canonical: descending exponents, rationals always "num/den".

std::string format_rational(const Rational& r);
std::string format_poly(const LaurentPoly& p);
std::string format_matrix(const PolyMatrix& m);
std::string format_step(const LiftingStep& s);
std::string format_cascade(const Cascade& c);
std::string format_token(const Token& t);
std::string format_word(const GroupWord& w);
std::string format_scaled(const ScaledElement& g);
std::string format_coset_id(const HSCosetId& id);
std::string format_signal(const Signal& x);  // multi-line

Rational parse_rational(const std::string& text);
LaurentPoly parse_poly(const std::string& text);
PolyMatrix parse_matrix(const std::string& text);
// May contain S: steps; hoisted into the front gain on conversion.
struct RawCascade {
  Rational scale = 1;
  std::vector<LiftingStep> steps;  // may include Scale entries
  PolyMatrix base = PolyMatrix::identity();

  Cascade hoisted() const { return hoist_scales(scale, steps, base); }
};
RawCascade parse_cascade(const std::string& text);
GroupWord parse_word(const std::string& text);
ScaledElement parse_scaled(const std::string& text);

// A typed input file: "kind=<kind>" on the first nonblank line, then the
// payload in the kind's grammar. Parse errors carry 1-based line/column.
enum class SpecKind { Filters, Matrix, Cascade, Word, Scaled, SignalData, Basis };

struct SpecFile {
  SpecKind kind = SpecKind::Matrix;
  FilterPair filters;    // Filters
  PolyMatrix matrix;     // Matrix
  RawCascade cascade;    // Cascade
  GroupWord word;        // Word
  ScaledElement scaled;  // Scaled
  Signal signal;         // SignalData
  FilterBasis basis;     // Basis
};

SpecFile parse_spec_file(const std::string& content);
const char* to_string(SpecKind k);

}  // namespace liftfb
