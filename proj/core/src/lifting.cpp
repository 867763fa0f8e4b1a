#include "liftfb/lifting.hpp"

#include <utility>

#include "liftfb/errors.hpp"

namespace liftfb {

LiftingStep LiftingStep::upper(LaurentPoly s) {
  LiftingStep st;
  st.kind = StepKind::Upper;
  st.filter = std::move(s);
  return st;
}

LiftingStep LiftingStep::lower(LaurentPoly s) {
  LiftingStep st;
  st.kind = StepKind::Lower;
  st.filter = std::move(s);
  return st;
}

LiftingStep LiftingStep::scaling(const Rational& k) {
  if (k.is_zero()) throw DomainError("scaling step requires K != 0");
  LiftingStep st;
  st.kind = StepKind::Scale;
  st.scale_k = k;
  return st;
}

int LiftingStep::update_characteristic() const {
  switch (kind) {
    case StepKind::Upper:
      return 0;
    case StepKind::Lower:
      return 1;
    default:
      throw DomainError("update characteristic is defined for lifting steps only");
  }
}

PolyMatrix LiftingStep::matrix() const {
  switch (kind) {
    case StepKind::Upper:
      return PolyMatrix(LaurentPoly::constant(1), filter, LaurentPoly(),
                        LaurentPoly::constant(1));
    case StepKind::Lower:
      return PolyMatrix(LaurentPoly::constant(1), LaurentPoly(), filter,
                        LaurentPoly::constant(1));
    case StepKind::Scale:
      return PolyMatrix::gain(scale_k);
  }
  return PolyMatrix::identity();
}

LiftingStep LiftingStep::inverse() const {
  switch (kind) {
    case StepKind::Upper:
      return upper(-filter);
    case StepKind::Lower:
      return lower(-filter);
    case StepKind::Scale:
      return scaling(scale_k.inverse());
  }
  return *this;
}

bool LiftingStep::is_identity() const {
  switch (kind) {
    case StepKind::Upper:
    case StepKind::Lower:
      return filter.is_zero();
    case StepKind::Scale:
      return scale_k.is_one();
  }
  return false;
}

LiftingStep gamma_conj(const Rational& k, const LiftingStep& s) {
  if (k.is_zero()) throw DomainError("gamma conjugation requires K != 0");
  const Rational k2 = k * k;
  switch (s.kind) {
    case StepKind::Upper:
      return LiftingStep::upper(s.filter.scaled(k2.inverse()));
    case StepKind::Lower:
      return LiftingStep::lower(s.filter.scaled(k2));
    case StepKind::Scale:
      return s;  // the scaling group is abelian
  }
  return s;
}

LiftingGroupSpec LiftingGroupSpec::ws() {
  LiftingGroupSpec s;
  s.upper_class = ClassConstraint::P0;
  s.lower_class = ClassConstraint::P1;
  s.base_set = BaseSet::IdentityOnly;
  return s;
}

LiftingGroupSpec LiftingGroupSpec::hs() {
  LiftingGroupSpec s;
  s.upper_class = ClassConstraint::Pa;
  s.lower_class = ClassConstraint::Pa;
  s.base_set = BaseSet::HsEqualOrder;
  return s;
}

LiftingGroupSpec LiftingGroupSpec::hs_cascade() {
  LiftingGroupSpec s = hs();
  s.base_set = BaseSet::IdentityOnly;
  return s;
}

LiftingGroupSpec LiftingGroupSpec::unrestricted() { return LiftingGroupSpec{}; }

bool LiftingGroupSpec::admits_scale(const Rational& k) const {
  if (k.is_zero()) return false;
  if (scale_group == ScaleGroup::PositiveRationals) return k.sign() > 0;
  return true;
}

ClassConstraint LiftingGroupSpec::side_class(StepKind kind) const {
  switch (kind) {
    case StepKind::Upper:
      return upper_class;
    case StepKind::Lower:
      return lower_class;
    default:
      throw DomainError("no filter class for scaling steps");
  }
}

LiftingStep make_upper(const LaurentPoly& s, const LiftingGroupSpec& spec) {
  if (!spec.admits_upper(s)) {
    throw ClassViolation("upper lifting filter outside class " +
                         std::string(to_string(spec.upper_class)));
  }
  return LiftingStep::upper(s);
}

LiftingStep make_lower(const LaurentPoly& s, const LiftingGroupSpec& spec) {
  if (!spec.admits_lower(s)) {
    throw ClassViolation("lower lifting filter outside class " +
                         std::string(to_string(spec.lower_class)));
  }
  return LiftingStep::lower(s);
}

Cascade make_cascade(Rational k, std::vector<LiftingStep> steps, PolyMatrix base) {
  if (k.is_zero()) throw DomainError("cascade scale must be nonzero");
  for (const auto& s : steps) {
    if (s.kind == StepKind::Scale) {
      throw DomainError("cascade steps must not contain scaling steps; hoist them first");
    }
  }
  Cascade c;
  c.scale = std::move(k);
  c.steps = std::move(steps);
  c.base = std::move(base);
  return c;
}

PolyMatrix cascade_eval(const Cascade& c) {
  PolyMatrix acc = PolyMatrix::gain(c.scale);
  for (const auto& s : c.steps) acc = acc * s.matrix();
  return acc * c.base;
}

Cascade hoist_scales(const Rational& k, std::vector<LiftingStep> raw_steps,
                     PolyMatrix base) {
  if (k.is_zero()) throw DomainError("cascade scale must be nonzero");
  // Moving D_K left past a step t turns t into its gamma_{1/K} image
  // (t * D_K == D_K * gamma_{1/K} t), so steps already emitted to the left
  // of the scale get conjugated.
  Rational front = k;
  std::vector<LiftingStep> lifts;
  lifts.reserve(raw_steps.size());
  for (auto& s : raw_steps) {
    if (s.kind == StepKind::Scale) {
      if (s.scale_k.is_zero()) throw DomainError("scaling step requires K != 0");
      const Rational inv = s.scale_k.inverse();
      for (auto& t : lifts) t = gamma_conj(inv, t);
      front *= s.scale_k;
    } else {
      lifts.push_back(std::move(s));
    }
  }
  return make_cascade(front, std::move(lifts), std::move(base));
}

Cascade cascade_reduce(const Rational& k, std::vector<LiftingStep> raw_steps,
                       PolyMatrix base, const LiftingGroupSpec& spec) {
  Cascade hoisted = hoist_scales(k, std::move(raw_steps), std::move(base));
  for (const auto& s : hoisted.steps) {
    const ClassConstraint cls = spec.side_class(s.kind);
    if (!in_class(s.filter, cls)) {
      throw ClassViolation("lifting filter outside class " + std::string(to_string(cls)));
    }
  }
  // Stack reduction: merge same-characteristic neighbors, drop identities.
  std::vector<LiftingStep> out;
  out.reserve(hoisted.steps.size());
  for (auto& s : hoisted.steps) {
    if (s.is_identity()) continue;
    if (!out.empty() && out.back().kind == s.kind) {
      out.back().filter += s.filter;
      if (out.back().filter.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(s));
    }
  }
  return make_cascade(hoisted.scale, std::move(out), std::move(hoisted.base));
}

Cascade cascade_reduce(const Cascade& c, const LiftingGroupSpec& spec) {
  return cascade_reduce(c.scale, c.steps, c.base, spec);
}

bool is_irreducible(const Cascade& c) {
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (c.steps[i].kind == StepKind::Scale) return false;
    if (c.steps[i].is_identity()) return false;
    if (i > 0 && c.steps[i].kind == c.steps[i - 1].kind) return false;
  }
  return true;
}

bool is_order_increasing(const Cascade& c) {
  if (!is_irreducible(c)) throw NotIrreducible("order-increasing test requires an irreducible cascade");
  PolyMatrix partial = c.base;
  std::optional<Exp> prev = pm_order(partial);
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    partial = it->matrix() * partial;
    const std::optional<Exp> cur = pm_order(partial);
    if (!(prev < cur)) return false;
    prev = cur;
  }
  return true;
}

EquivalenceReport cascades_equal_mod_rescaling(const Cascade& c1, const Cascade& c2) {
  if (!is_irreducible(c1) || !is_irreducible(c2)) {
    throw NotIrreducible("equivalence test requires irreducible cascades");
  }
  EquivalenceReport rep;
  if (c1.steps.size() != c2.steps.size()) return rep;
  const Rational alpha = c1.scale / c2.scale;
  if (c2.base != PolyMatrix::gain(alpha) * c1.base) return rep;
  for (std::size_t i = 0; i < c1.steps.size(); ++i) {
    if (c2.steps[i] != gamma_conj(alpha, c1.steps[i])) return rep;
  }
  rep.kind = alpha.is_one() ? EquivalenceReport::Kind::Equal
                            : EquivalenceReport::Kind::EqualModRescaling;
  rep.alpha = alpha;
  return rep;
}

}  // namespace liftfb
