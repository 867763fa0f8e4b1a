#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "liftfb/rational.hpp"

namespace liftfb {

using Exp = std::int64_t;

// Laurent polynomial over Rational: a finite set of (exponent, coefficient)
// terms, kept sorted by exponent with no zero coefficients. The empty term
// list is the zero polynomial. Equality is term-list equality.
class LaurentPoly {
 public:
  using Term = std::pair<Exp, Rational>;

  LaurentPoly() = default;  // zero

  static LaurentPoly constant(Rational c);
  static LaurentPoly monomial(Rational c, Exp e);
  // Accepts terms in any order, merges duplicates, purges zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  // pre: strictly ascending exponents, no zero coefficients
  static LaurentPoly from_sorted_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // Extreme exponents / coefficients; only valid on nonzero polynomials.
  Exp min_exp() const;
  Exp max_exp() const;
  const Rational& leading_coeff() const;   // coefficient at max_exp
  const Rational& trailing_coeff() const;  // coefficient at min_exp
  Rational coeff(Exp e) const;             // zero when absent

  // Support width max_exp - min_exp; nullopt is the zero polynomial's
  // "minus infinity" (std::optional ordering makes it absorbing).
  std::optional<Exp> order() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  // *this += a * b without intermediate allocations
  void add_mul(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Rational& c) const;  // c * p
  LaurentPoly shifted(Exp k) const;             // z^k * p
  LaurentPoly involute() const;                 // p(z^-1)

  Rational eval_one() const;  // p(1), the coefficient sum

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

// Lifting-filter symmetry classes. For nonzero polynomials the three
// defining identities are mutually exclusive; the zero polynomial satisfies
// all of them and reports AllZero.
//   P0: S(1/z) ==  z   * S(z)
//   P1: S(1/z) == (1/z)* S(z)
//   Pa: S(1/z) == -S(z)
enum class SymmetryClass { P0, P1, Pa, None, AllZero };

SymmetryClass symmetry_class(const LaurentPoly& p);

enum class ClassConstraint { P0, P1, Pa, Unrestricted };

// Zero belongs to every class; Unrestricted admits everything.
bool in_class(const LaurentPoly& p, ClassConstraint c);

const char* to_string(SymmetryClass c);
const char* to_string(ClassConstraint c);

}  // namespace liftfb
