#include "liftfb/factor.hpp"

#include <algorithm>
#include <utility>

#include "liftfb/errors.hpp"
#include "liftfb/scaled.hpp"

namespace liftfb {

namespace {

// Class-closed monomial through the exponent e: the smallest element of the
// class whose support includes e with coefficient c.
std::optional<LaurentPoly> class_closure(const Rational& c, Exp e, ClassConstraint cls) {
  switch (cls) {
    case ClassConstraint::P0:
      return LaurentPoly::monomial(c, e) + LaurentPoly::monomial(c, -e - 1);
    case ClassConstraint::P1:
      return LaurentPoly::monomial(c, e) + LaurentPoly::monomial(c, -e + 1);
    case ClassConstraint::Pa:
      if (e == 0) return std::nullopt;
      return LaurentPoly::monomial(c, e) - LaurentPoly::monomial(c, -e);
    case ClassConstraint::Unrestricted:
      return LaurentPoly::monomial(c, e);
  }
  return std::nullopt;
}

std::optional<Exp> row_order(const LaurentPoly& a, const LaurentPoly& b) {
  return std::max(a.order(), b.order());
}

// Extracts the quotient S in `cls` such that (a0 - S*b0, a1 - S*b1) has row
// order no larger than (b0, b1)'s. Returns nullopt on a stall.
std::optional<LaurentPoly> extract_row_quotient(LaurentPoly a0, LaurentPoly a1,
                                                const LaurentPoly& b0, const LaurentPoly& b1,
                                                ClassConstraint cls) {
  const std::optional<Exp> target = row_order(b0, b1);
  LaurentPoly s;
  int guard = 0;
  while (row_order(a0, a1) > target) {
    if (++guard > 512) return std::nullopt;
    // drive from the wider remainder column whose divisor is nonzero
    int j;
    if (b0.is_zero()) {
      j = 1;
    } else if (b1.is_zero()) {
      j = 0;
    } else {
      j = (a0.order() >= a1.order()) ? 0 : 1;
    }
    const LaurentPoly& aj = (j == 0) ? a0 : a1;
    const LaurentPoly& bj = (j == 0) ? b0 : b1;
    if (aj.is_zero() || bj.is_zero()) return std::nullopt;
    const Exp prev_hi = aj.max_exp();
    const Exp e = aj.max_exp() - bj.max_exp();
    const Rational c = aj.leading_coeff() / bj.leading_coeff();
    const auto sigma = class_closure(c, e, cls);
    if (!sigma) return std::nullopt;
    a0 -= *sigma * b0;
    a1 -= *sigma * b1;
    s += *sigma;
    const LaurentPoly& aj_now = (j == 0) ? a0 : a1;
    if (!aj_now.is_zero() && aj_now.max_exp() >= prev_hi) return std::nullopt;
  }
  if (s.is_zero() || !in_class(s, cls)) return std::nullopt;
  return s;
}

FactorizationResult stall(const PolyMatrix& residual, const LiftingGroupSpec& spec,
                          std::string note) {
  FactorizationResult r;
  r.ok = false;
  r.spec = spec;
  r.residual = residual;
  r.note = std::move(note);
  return r;
}

Rational constant_of(const LaurentPoly& p) {
  // pre: p constant (possibly zero)
  return p.is_zero() ? Rational(0) : p.leading_coeff();
}

}  // namespace

FactorizationResult factor_in_group(const PolyMatrix& e, const LiftingGroupSpec& spec) {
  PolyMatrix m = e;
  std::vector<LiftingStep> peeled;
  int guard = 0;
  while (true) {
    if (++guard > 4096) return stall(m, spec, "peeling did not terminate");
    if (m.is_constant()) {
      const bool upper_zero = m.e[0][1].is_zero();
      const bool lower_zero = m.e[1][0].is_zero();
      if (upper_zero && lower_zero) {
        const Rational k = constant_of(m.e[1][1]);
        if (k.is_zero() || !(constant_of(m.e[0][0]) * k).is_one()) {
          return stall(m, spec, "terminal constant is not a gain matrix");
        }
        if (!spec.admits_scale(k)) {
          return stall(m, spec, "terminal gain outside the scale group");
        }
        // m == D_k; rebuild the front form E = D_k * gamma_{1/k}(peeled...)
        const Rational kinv = k.inverse();
        std::vector<LiftingStep> steps;
        steps.reserve(peeled.size());
        for (const auto& t : peeled) steps.push_back(gamma_conj(kinv, t));
        FactorizationResult r;
        r.spec = spec;
        r.cascade = make_cascade(k, std::move(steps), PolyMatrix::identity());
        if (cascade_eval(r.cascade) != e) {
          return stall(m, spec, "internal check failed: peeled cascade does not re-evaluate");
        }
        if (!is_irreducible(r.cascade)) {
          return stall(m, spec, "peeled cascade is not irreducible");
        }
        r.ok = true;
        return r;
      }
      // constant triangular: exact one-step division (needs a class that
      // admits constant filters, i.e. Unrestricted)
      if (!upper_zero && lower_zero) {
        const Rational k = constant_of(m.e[1][1]);
        if (k.is_zero()) return stall(m, spec, "singular constant matrix");
        const LaurentPoly s = m.e[0][1].scaled(k.inverse());
        if (!in_class(s, spec.upper_class)) {
          return stall(m, spec, "constant upper quotient outside class");
        }
        peeled.push_back(LiftingStep::upper(s));
        m.e[0][0] -= s * m.e[1][0];
        m.e[0][1] -= s * m.e[1][1];
        continue;
      }
      if (upper_zero && !lower_zero) {
        const Rational k = constant_of(m.e[0][0]);
        if (k.is_zero()) return stall(m, spec, "singular constant matrix");
        const LaurentPoly s = m.e[1][0].scaled(k.inverse());
        if (!in_class(s, spec.lower_class)) {
          return stall(m, spec, "constant lower quotient outside class");
        }
        peeled.push_back(LiftingStep::lower(s));
        m.e[1][0] -= s * m.e[0][0];
        m.e[1][1] -= s * m.e[0][1];
        continue;
      }
      return stall(m, spec, "constant matrix with two nonzero off-diagonal entries");
    }
    const auto w_top = row_order(m.e[0][0], m.e[0][1]);
    const auto w_bot = row_order(m.e[1][0], m.e[1][1]);
    if (w_top > w_bot) {
      const auto s =
          extract_row_quotient(m.e[0][0], m.e[0][1], m.e[1][0], m.e[1][1], spec.upper_class);
      if (!s) return stall(m, spec, "no class-constrained upper quotient reduces the order");
      peeled.push_back(LiftingStep::upper(*s));
      m.e[0][0] -= *s * m.e[1][0];
      m.e[0][1] -= *s * m.e[1][1];
    } else if (w_bot > w_top) {
      const auto s =
          extract_row_quotient(m.e[1][0], m.e[1][1], m.e[0][0], m.e[0][1], spec.lower_class);
      if (!s) return stall(m, spec, "no class-constrained lower quotient reduces the order");
      peeled.push_back(LiftingStep::lower(*s));
      m.e[1][0] -= *s * m.e[0][0];
      m.e[1][1] -= *s * m.e[0][1];
    } else {
      return stall(m, spec, "rows tie in order; no side is order-determining");
    }
  }
}

FactorizationResult factor_ws(const PolyMatrix& e) {
  if (!is_ws(e)) throw NotWS("factor_ws requires a whole-sample symmetric matrix");
  return factor_in_group(e, LiftingGroupSpec::ws());
}

FactorizationResult factor_hs(const PolyMatrix& h) {
  if (!is_hs(h)) throw NotHS("factor_hs requires a half-sample symmetric matrix");
  const LiftingGroupSpec spec = LiftingGroupSpec::hs();
  FilterPair fp = polyphase_to_filters(h);
  LaurentPoly f0 = std::move(fp.lowpass);
  LaurentPoly f1 = std::move(fp.highpass);
  if (f0.is_zero() || f1.is_zero()) {
    return stall(h, spec, "degenerate filter pair");  // unreachable for unimodular input
  }
  std::vector<LiftingStep> peeled;
  int guard = 0;
  while (f0.order() != f1.order()) {
    if (++guard > 4096) return stall(filters_to_polyphase({f0, f1}), spec, "peeling did not terminate");
    const bool upper = f0.order() > f1.order();
    LaurentPoly& num = upper ? f0 : f1;
    const LaurentPoly& den = upper ? f1 : f0;
    // extract the WA quotient acting through S(z^2)
    LaurentPoly s;
    int inner = 0;
    while (num.order() > den.order()) {
      if (++inner > 512) return stall(filters_to_polyphase({f0, f1}), spec, "quotient extraction stalled");
      const Exp e2 = num.max_exp() - den.max_exp();
      if (e2 <= 0 || (e2 % 2) != 0) {
        return stall(filters_to_polyphase({f0, f1}), spec, "filter order gap is not a WA lift");
      }
      const Exp prev_hi = num.max_exp();
      const Rational c = num.leading_coeff() / den.leading_coeff();
      const Exp k = e2 / 2;
      const LaurentPoly sigma =
          LaurentPoly::monomial(c, k) - LaurentPoly::monomial(c, -k);
      const LaurentPoly sigma_z2 =
          LaurentPoly::monomial(c, 2 * k) - LaurentPoly::monomial(c, -2 * k);
      num -= sigma_z2 * den;
      s += sigma;
      if (num.is_zero() || num.max_exp() >= prev_hi) {
        return stall(filters_to_polyphase({f0, f1}), spec, "quotient did not reduce the order");
      }
    }
    if (s.is_zero() || !in_class(s, ClassConstraint::Pa)) {
      return stall(filters_to_polyphase({f0, f1}), spec, "no WA quotient reduces the order");
    }
    peeled.push_back(upper ? LiftingStep::upper(s) : LiftingStep::lower(s));
  }
  PolyMatrix base = filters_to_polyphase({f0, f1});
  if (!hs_base_membership(base)) {
    return stall(base, spec, "terminal matrix is not an equal-order HS base");
  }
  FactorizationResult r;
  r.spec = spec;
  r.cascade = make_cascade(1, std::move(peeled), std::move(base));
  if (!is_irreducible(r.cascade)) {
    return stall(r.cascade.base, spec, "peeled cascade is not irreducible");
  }
  if (cascade_eval(r.cascade) != h) {
    return stall(r.cascade.base, spec, "internal check failed: peeled cascade does not re-evaluate");
  }
  r.ok = true;
  return r;
}

bool verify_factorization(const PolyMatrix& e, const FactorizationResult& r) {
  if (!r.ok) throw DomainError("verify_factorization requires a successful result");
  if (cascade_eval(r.cascade) != e) return false;
  if (!is_irreducible(r.cascade)) return false;
  for (const auto& s : r.cascade.steps) {
    if (!in_class(s.filter, r.spec.side_class(s.kind))) return false;
  }
  if (!r.spec.admits_scale(r.cascade.scale)) return false;
  switch (r.spec.base_set) {
    case LiftingGroupSpec::BaseSet::IdentityOnly:
      if (r.cascade.base != PolyMatrix::identity()) return false;
      break;
    case LiftingGroupSpec::BaseSet::HsEqualOrder:
      if (!hs_base_membership(r.cascade.base)) return false;
      break;
  }
  return true;
}

}  // namespace liftfb
