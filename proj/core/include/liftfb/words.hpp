#pragma once

#include <vector>

#include "liftfb/lifting.hpp"

namespace liftfb {

enum class Side { U, L };

// One letter of a reduced word: a nonidentity element of the upper or lower
// lifting matrix group, carried as its lifting filter.
struct Token {
  Side side = Side::U;
  LaurentPoly filter;

  static Token u(LaurentPoly f) { return Token{Side::U, std::move(f)}; }
  static Token l(LaurentPoly f) { return Token{Side::L, std::move(f)}; }

  friend bool operator==(const Token& a, const Token& b) {
    return a.side == b.side && a.filter == b.filter;
  }
  friend bool operator!=(const Token& a, const Token& b) { return !(a == b); }
};

// Reduced word over the disjoint union of the upper and lower groups:
// adjacent tokens never share a side and no token is an identity element.
// The empty word is the group identity. All operations keep words reduced.
struct GroupWord {
  std::vector<Token> tokens;

  bool is_identity() const noexcept { return tokens.empty(); }
  std::size_t length() const noexcept { return tokens.size(); }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.tokens == b.tokens;
  }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }
};

bool is_reduced(const std::vector<Token>& tokens);

// Multiplies adjacent same-side tokens (filter addition), deletes identity
// elements, and repeats to a fixed point.
GroupWord word_simplify(std::vector<Token> raw);

GroupWord word_mul(const GroupWord& v, const GroupWord& w);
GroupWord word_inv(const GroupWord& w);

PolyMatrix token_matrix(const Token& t);
PolyMatrix word_to_matrix(const GroupWord& w);

LiftingStep token_step(const Token& t);
Token step_token(const LiftingStep& s);  // DomainError on Scale steps

// Tokens of a cascade's lifting steps, in cascade (left-to-right) order.
GroupWord cascade_word(const Cascade& c);

// Inverse of word_to_matrix on the lifting cascade group of `spec`:
// factors E with base I and requires gain exactly 1.
// Throws NotInCascadeGroup when E is not a pure lifting cascade.
GroupWord matrix_to_word(const PolyMatrix& e, const LiftingGroupSpec& spec);

// Exhaustive bounded search for nonempty reduced words evaluating to the
// identity matrix. Words are drawn from the cyclic subgroups generated by
// `gens`: each letter is gen^n for a nonzero exponent |n| <= max_exp.
// This is a bounded oracle over those subgroups, not a completeness claim.
std::vector<GroupWord> relation_search(const std::vector<Token>& gens, int max_len,
                                       int max_exp = 1);

}  // namespace liftfb
