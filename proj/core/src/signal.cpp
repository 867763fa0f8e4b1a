#include "liftfb/signal.hpp"

#include "liftfb/errors.hpp"

namespace liftfb {

LaurentPoly signal_to_poly(const Signal& x) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(x.samples.size());
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    if (!x.samples[i].is_zero()) {
      terms.emplace_back(x.origin + static_cast<Exp>(i), x.samples[i]);
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Signal poly_to_signal(const LaurentPoly& p) {
  Signal s;
  if (p.is_zero()) return s;
  s.origin = p.min_exp();
  s.samples.assign(static_cast<std::size_t>(p.max_exp() - p.min_exp() + 1), Rational(0));
  for (const auto& t : p.terms()) {
    s.samples[static_cast<std::size_t>(t.first - s.origin)] = t.second;
  }
  return s;
}

Signal canonical(const Signal& x) { return poly_to_signal(signal_to_poly(x)); }

namespace {

// even/odd phase split in exponent space: p(z) = p0(z^2) + z * p1(z^2)
std::pair<LaurentPoly, LaurentPoly> phase_split(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> even, odd;
  for (const auto& t : p.terms()) {
    Exp q = t.first >= 0 ? t.first / 2 : -((-t.first + 1) / 2);
    if (t.first - 2 * q == 0) {
      even.emplace_back(q, t.second);
    } else {
      odd.emplace_back(q, t.second);
    }
  }
  return {LaurentPoly::from_terms(std::move(even)), LaurentPoly::from_terms(std::move(odd))};
}

LaurentPoly phase_merge(const LaurentPoly& p0, const LaurentPoly& p1) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p0.term_count() + p1.term_count());
  for (const auto& t : p0.terms()) terms.emplace_back(2 * t.first, t.second);
  for (const auto& t : p1.terms()) terms.emplace_back(2 * t.first + 1, t.second);
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

std::pair<Signal, Signal> analyze(const Signal& x, const PolyMatrix& h) {
  if (!classify_pr(h)) throw DomainError("analysis bank is not FIR-PR");
  const auto [x0, x1] = phase_split(signal_to_poly(x));
  const LaurentPoly y0 = h.e[0][0] * x0 + h.e[0][1] * x1;
  const LaurentPoly y1 = h.e[1][0] * x0 + h.e[1][1] * x1;
  return {poly_to_signal(y0), poly_to_signal(y1)};
}

Signal synthesize(const Signal& y0, const Signal& y1, const PolyMatrix& h) {
  const auto cert = classify_pr(h);
  if (!cert) throw DomainError("synthesis bank is not FIR-PR");
  const PolyMatrix g = pm_inverse(h, *cert);
  const LaurentPoly s0 = signal_to_poly(y0);
  const LaurentPoly s1 = signal_to_poly(y1);
  const LaurentPoly x0 = g.e[0][0] * s0 + g.e[0][1] * s1;
  const LaurentPoly x1 = g.e[1][0] * s0 + g.e[1][1] * s1;
  return poly_to_signal(phase_merge(x0, x1));
}

}  // namespace liftfb
