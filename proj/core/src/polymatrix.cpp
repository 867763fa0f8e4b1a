#include "liftfb/polymatrix.hpp"

#include <algorithm>

#include "liftfb/errors.hpp"

namespace liftfb {

PolyMatrix::PolyMatrix(LaurentPoly a00, LaurentPoly a01, LaurentPoly a10, LaurentPoly a11) {
  e[0][0] = std::move(a00);
  e[0][1] = std::move(a01);
  e[1][0] = std::move(a10);
  e[1][1] = std::move(a11);
}

PolyMatrix PolyMatrix::identity() {
  return PolyMatrix(LaurentPoly::constant(1), LaurentPoly(), LaurentPoly(),
                    LaurentPoly::constant(1));
}

PolyMatrix PolyMatrix::gain(const Rational& k) {
  if (k.is_zero()) throw DomainError("gain matrix requires K != 0");
  return PolyMatrix(LaurentPoly::constant(k.inverse()), LaurentPoly(), LaurentPoly(),
                    LaurentPoly::constant(k));
}

PolyMatrix PolyMatrix::lambda_of_z() {
  return PolyMatrix(LaurentPoly::constant(1), LaurentPoly(), LaurentPoly(),
                    LaurentPoly::monomial(1, -1));
}

PolyMatrix PolyMatrix::lambda_of_z_inv() {
  return PolyMatrix(LaurentPoly::constant(1), LaurentPoly(), LaurentPoly(),
                    LaurentPoly::monomial(1, 1));
}

PolyMatrix PolyMatrix::swap_j() {
  return PolyMatrix(LaurentPoly(), LaurentPoly::constant(1), LaurentPoly::constant(1),
                    LaurentPoly());
}

PolyMatrix PolyMatrix::sign_l() {
  return PolyMatrix(LaurentPoly::constant(1), LaurentPoly(), LaurentPoly(),
                    LaurentPoly::constant(-1));
}

bool PolyMatrix::is_constant() const {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const auto& p = e[r][c];
      if (!p.is_zero() && (p.term_count() != 1 || p.min_exp() != 0)) return false;
    }
  }
  return true;
}

bool PolyMatrix::is_zero() const {
  return e[0][0].is_zero() && e[0][1].is_zero() && e[1][0].is_zero() && e[1][1].is_zero();
}

PolyMatrix PolyMatrix::involute() const {
  return PolyMatrix(e[0][0].involute(), e[0][1].involute(), e[1][0].involute(),
                    e[1][1].involute());
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.e[r][c].add_mul(a.e[r][0], b.e[0][c]);
      out.e[r][c].add_mul(a.e[r][1], b.e[1][c]);
    }
  }
  return out;
}

LaurentPoly pm_det(const PolyMatrix& m) {
  return m.e[0][0] * m.e[1][1] - m.e[0][1] * m.e[1][0];
}

std::optional<Exp> pm_order(const PolyMatrix& m) {
  std::optional<Exp> best;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      best = std::max(best, m.e[r][c].order());
    }
  }
  return best;
}

std::optional<PRCertificate> classify_pr(const PolyMatrix& m) {
  const LaurentPoly d = pm_det(m);
  if (d.term_count() != 1) return std::nullopt;
  return PRCertificate{d.leading_coeff(), -d.max_exp()};
}

bool is_unimodular(const PolyMatrix& m) {
  return pm_det(m) == LaurentPoly::constant(1);
}

PolyMatrix pm_inverse(const PolyMatrix& m, const PRCertificate& cert) {
  if (cert.scale.is_zero()) throw DomainError("PR certificate with zero scale");
  const LaurentPoly d = pm_det(m);
  if (d != LaurentPoly::monomial(cert.scale, -cert.delay)) {
    throw DomainError("PR certificate does not match determinant");
  }
  // adjugate divided by the monomial determinant
  const Rational inv_scale = cert.scale.inverse();
  PolyMatrix out(m.e[1][1], -m.e[0][1], -m.e[1][0], m.e[0][0]);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.e[r][c] = out.e[r][c].scaled(inv_scale).shifted(cert.delay);
    }
  }
  return out;
}

PolyMatrix pm_inverse(const PolyMatrix& m) {
  const auto cert = classify_pr(m);
  if (!cert) throw DomainError("matrix is not FIR-PR (determinant is not a monomial)");
  return pm_inverse(m, *cert);
}

PolyMatrix pm_gamma(const Rational& k, const PolyMatrix& m) {
  if (k.is_zero()) throw DomainError("gamma conjugation requires K != 0");
  const Rational k2 = k * k;
  return PolyMatrix(m.e[0][0], m.e[0][1].scaled(k2.inverse()), m.e[1][0].scaled(k2),
                    m.e[1][1]);
}

PolyMatrix filters_to_polyphase(const FilterPair& fp) {
  PolyMatrix out;
  const LaurentPoly* filt[2] = {&fp.lowpass, &fp.highpass};
  for (int i = 0; i < 2; ++i) {
    std::vector<LaurentPoly::Term> even, odd;
    for (const auto& t : filt[i]->terms()) {
      // floor division keeps negative exponents on the right phase
      Exp q = t.first >= 0 ? t.first / 2 : -((-t.first + 1) / 2);
      if (t.first - 2 * q == 0) {
        even.emplace_back(q, t.second);
      } else {
        odd.emplace_back(q, t.second);
      }
    }
    out.e[i][0] = LaurentPoly::from_terms(std::move(even));
    out.e[i][1] = LaurentPoly::from_terms(std::move(odd));
  }
  return out;
}

FilterPair polyphase_to_filters(const PolyMatrix& m) {
  FilterPair fp;
  LaurentPoly* filt[2] = {&fp.lowpass, &fp.highpass};
  for (int i = 0; i < 2; ++i) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : m.e[i][0].terms()) terms.emplace_back(2 * t.first, t.second);
    for (const auto& t : m.e[i][1].terms()) terms.emplace_back(2 * t.first + 1, t.second);
    *filt[i] = LaurentPoly::from_terms(std::move(terms));
  }
  return fp;
}

bool is_ws(const PolyMatrix& m) {
  if (!is_unimodular(m)) return false;
  return m.involute() == PolyMatrix::lambda_of_z() * m * PolyMatrix::lambda_of_z_inv();
}

bool is_hs(const PolyMatrix& m) {
  if (!is_unimodular(m)) return false;
  return m.involute() == PolyMatrix::sign_l() * m * PolyMatrix::swap_j();
}

bool is_hs_lifter(const PolyMatrix& m) {
  if (!is_unimodular(m)) return false;
  return m.involute() == PolyMatrix::sign_l() * m * PolyMatrix::sign_l();
}

}  // namespace liftfb
