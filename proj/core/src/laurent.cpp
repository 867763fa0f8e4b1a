#include "liftfb/laurent.hpp"

#include <algorithm>

#include "liftfb/errors.hpp"

namespace liftfb {

LaurentPoly LaurentPoly::constant(Rational c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Rational c, Exp e) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.emplace_back(std::move(t));
    }
  }
  return p;
}

Exp LaurentPoly::min_exp() const {
  if (is_zero()) throw DomainError("min_exp of zero polynomial");
  return terms_.front().first;
}

Exp LaurentPoly::max_exp() const {
  if (is_zero()) throw DomainError("max_exp of zero polynomial");
  return terms_.back().first;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw DomainError("leading_coeff of zero polynomial");
  return terms_.back().second;
}

const Rational& LaurentPoly::trailing_coeff() const {
  if (is_zero()) throw DomainError("trailing_coeff of zero polynomial");
  return terms_.front().second;
}

Rational LaurentPoly::coeff(Exp e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exp v) { return t.first < v; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Rational();
}

std::optional<Exp> LaurentPoly::order() const {
  if (is_zero()) return std::nullopt;
  return terms_.back().first - terms_.front().first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.emplace_back(t.first, -t.second);
  return p;
}

namespace {

// Merge two sorted term lists with coefficient combination.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
      ++j;
    } else {
      Rational c = a[i].second;
      if (negate_b) {
        c -= b[j].second;
      } else {
        c += b[j].second;
      }
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.terms_ = merge_terms(a.terms_, b.terms_, false);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.terms_ = merge_terms(a.terms_, b.terms_, true);
  return p;
}

namespace {

// p * (c * z^k), c != 0: terms stay sorted and nonzero
LaurentPoly scaled_shifted(const LaurentPoly& p, const Rational& c, Exp k) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) terms.emplace_back(t.first + k, t.second * c);
  return LaurentPoly::from_sorted_terms(std::move(terms));
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  if (a.terms_.size() == 1) {
    return scaled_shifted(b, a.terms_[0].second, a.terms_[0].first);
  }
  if (b.terms_.size() == 1) {
    return scaled_shifted(a, b.terms_[0].second, b.terms_[0].first);
  }
  const Exp lo = a.terms_.front().first + b.terms_.front().first;
  const Exp hi = a.terms_.back().first + b.terms_.back().first;
  if (hi - lo < 4096) {
    // accumulate densely over the product's exponent span; the scratch
    // buffer is reused across calls
    static thread_local std::vector<Rational> acc;
    acc.assign(static_cast<std::size_t>(hi - lo + 1), Rational());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        acc[static_cast<std::size_t>(ta.first + tb.first - lo)] += ta.second * tb.second;
      }
    }
    p.terms_.reserve(acc.size());
    for (Exp e = lo; e <= hi; ++e) {
      Rational& c = acc[static_cast<std::size_t>(e - lo)];
      if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
    }
    return p;
  }
  // sparse supports with a wide span: merge partial products instead
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      terms.emplace_back(ta.first + tb.first, ta.second * tb.second);
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

void LaurentPoly::add_mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  Exp lo = a.terms_.front().first + b.terms_.front().first;
  Exp hi = a.terms_.back().first + b.terms_.back().first;
  if (!terms_.empty()) {
    lo = std::min(lo, terms_.front().first);
    hi = std::max(hi, terms_.back().first);
  }
  if (hi - lo >= 4096) {
    *this += a * b;
    return;
  }
  static thread_local std::vector<Rational> acc;
  acc.assign(static_cast<std::size_t>(hi - lo + 1), Rational());
  for (auto& t : terms_) {
    acc[static_cast<std::size_t>(t.first - lo)] = std::move(t.second);
  }
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      acc[static_cast<std::size_t>(ta.first + tb.first - lo)] += ta.second * tb.second;
    }
  }
  terms_.clear();
  for (Exp e = lo; e <= hi; ++e) {
    Rational& c = acc[static_cast<std::size_t>(e - lo)];
    if (!c.is_zero()) terms_.emplace_back(e, std::move(c));
  }
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly p;
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.emplace_back(t.first, t.second * c);
  return p;
}

LaurentPoly LaurentPoly::shifted(Exp k) const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.emplace_back(t.first + k, t.second);
  return p;
}

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    p.terms_.emplace_back(-it->first, it->second);
  }
  return p;
}

Rational LaurentPoly::eval_one() const {
  Rational s;
  for (const auto& t : terms_) s += t.second;
  return s;
}

SymmetryClass symmetry_class(const LaurentPoly& p) {
  if (p.is_zero()) return SymmetryClass::AllZero;
  const LaurentPoly inv = p.involute();
  if (inv == p.shifted(1)) return SymmetryClass::P0;
  if (inv == p.shifted(-1)) return SymmetryClass::P1;
  if (inv == -p) return SymmetryClass::Pa;
  return SymmetryClass::None;
}

bool in_class(const LaurentPoly& p, ClassConstraint c) {
  if (c == ClassConstraint::Unrestricted) return true;
  if (p.is_zero()) return true;
  const LaurentPoly inv = p.involute();
  switch (c) {
    case ClassConstraint::P0:
      return inv == p.shifted(1);
    case ClassConstraint::P1:
      return inv == p.shifted(-1);
    case ClassConstraint::Pa:
      return inv == -p;
    default:
      return true;
  }
}

const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::P0:
      return "P0";
    case SymmetryClass::P1:
      return "P1";
    case SymmetryClass::Pa:
      return "Pa";
    case SymmetryClass::None:
      return "None";
    case SymmetryClass::AllZero:
      return "AllZero";
  }
  return "?";
}

const char* to_string(ClassConstraint c) {
  switch (c) {
    case ClassConstraint::P0:
      return "P0";
    case ClassConstraint::P1:
      return "P1";
    case ClassConstraint::Pa:
      return "Pa";
    case ClassConstraint::Unrestricted:
      return "Unrestricted";
  }
  return "?";
}

}  // namespace liftfb
