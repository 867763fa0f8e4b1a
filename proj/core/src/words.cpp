#include "liftfb/words.hpp"

#include <utility>

#include "liftfb/errors.hpp"
#include "liftfb/factor.hpp"

namespace liftfb {

bool is_reduced(const std::vector<Token>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].filter.is_zero()) return false;
    if (i > 0 && tokens[i].side == tokens[i - 1].side) return false;
  }
  return true;
}

GroupWord word_simplify(std::vector<Token> raw) {
  GroupWord w;
  w.tokens.reserve(raw.size());
  for (auto& t : raw) {
    if (t.filter.is_zero()) continue;
    if (!w.tokens.empty() && w.tokens.back().side == t.side) {
      w.tokens.back().filter += t.filter;
      if (w.tokens.back().filter.is_zero()) w.tokens.pop_back();
    } else {
      w.tokens.push_back(std::move(t));
    }
  }
  return w;
}

GroupWord word_mul(const GroupWord& v, const GroupWord& w) {
  GroupWord out = v;
  for (const auto& t : w.tokens) {
    if (!out.tokens.empty() && out.tokens.back().side == t.side) {
      out.tokens.back().filter += t.filter;
      if (out.tokens.back().filter.is_zero()) out.tokens.pop_back();
    } else {
      out.tokens.push_back(t);
    }
  }
  return out;
}

GroupWord word_inv(const GroupWord& w) {
  GroupWord out;
  out.tokens.reserve(w.tokens.size());
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
    out.tokens.push_back(Token{it->side, -it->filter});
  }
  return out;
}

PolyMatrix token_matrix(const Token& t) {
  return token_step(t).matrix();
}

PolyMatrix word_to_matrix(const GroupWord& w) {
  PolyMatrix acc = PolyMatrix::identity();
  for (const auto& t : w.tokens) acc = acc * token_matrix(t);
  return acc;
}

LiftingStep token_step(const Token& t) {
  return t.side == Side::U ? LiftingStep::upper(t.filter) : LiftingStep::lower(t.filter);
}

Token step_token(const LiftingStep& s) {
  switch (s.kind) {
    case StepKind::Upper:
      return Token::u(s.filter);
    case StepKind::Lower:
      return Token::l(s.filter);
    default:
      throw DomainError("scaling steps have no token");
  }
}

GroupWord cascade_word(const Cascade& c) {
  GroupWord w;
  w.tokens.reserve(c.steps.size());
  for (const auto& s : c.steps) w.tokens.push_back(step_token(s));
  if (!is_reduced(w.tokens)) return word_simplify(std::move(w.tokens));
  return w;
}

GroupWord matrix_to_word(const PolyMatrix& e, const LiftingGroupSpec& spec) {
  FactorizationResult fr = factor_in_group(e, spec);
  if (!fr.ok) {
    throw NotInCascadeGroup("matrix does not factor over the lifting cascade group");
  }
  if (!fr.cascade.scale.is_one()) {
    throw NotInCascadeGroup("matrix carries a nontrivial gain factor (in S, not C)");
  }
  return cascade_word(fr.cascade);
}

namespace {

void search_rec(const std::vector<Token>& gens, int max_len, int max_exp,
                std::vector<Token>& word, const PolyMatrix& acc, std::size_t last_gen,
                bool has_last, std::vector<GroupWord>& found) {
  if (!word.empty() && acc == PolyMatrix::identity()) {
    found.push_back(GroupWord{word});
    // identity prefixes still extend to longer relations; keep searching
  }
  if (static_cast<int>(word.size()) == max_len) return;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    // Adjacent letters from the same cyclic factor would not be reduced.
    if (has_last && gens[g].side == gens[last_gen].side) continue;
    for (int n = -max_exp; n <= max_exp; ++n) {
      if (n == 0) continue;
      Token t{gens[g].side, gens[g].filter.scaled(Rational(n))};
      if (t.filter.is_zero()) continue;
      word.push_back(t);
      search_rec(gens, max_len, max_exp, word, acc * token_matrix(t), g, true, found);
      word.pop_back();
    }
  }
}

}  // namespace

std::vector<GroupWord> relation_search(const std::vector<Token>& gens, int max_len,
                                       int max_exp) {
  std::vector<GroupWord> found;
  if (max_len < 1 || max_exp < 1) return found;
  std::vector<Token> word;
  search_rec(gens, max_len, max_exp, word, PolyMatrix::identity(), 0, false, found);
  return found;
}

}  // namespace liftfb
