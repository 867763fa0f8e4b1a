#include "liftfb/vspace.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "liftfb/errors.hpp"

namespace liftfb {

namespace {

bool element_in_class(const LaurentPoly& p, SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::P0:
      return in_class(p, ClassConstraint::P0);
    case SymmetryClass::P1:
      return in_class(p, ClassConstraint::P1);
    case SymmetryClass::Pa:
      return in_class(p, ClassConstraint::Pa);
    default:
      return false;
  }
}

// Coefficient matrix of the polynomials over the union of their supports,
// one row per polynomial.
std::pair<std::vector<std::vector<Rational>>, std::vector<Exp>> coefficient_rows(
    const std::vector<LaurentPoly>& polys) {
  std::map<Exp, std::size_t> col_of;
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) col_of.emplace(t.first, 0);
  }
  std::vector<Exp> exps;
  exps.reserve(col_of.size());
  for (auto& [e, idx] : col_of) {
    idx = exps.size();
    exps.push_back(e);
  }
  std::vector<std::vector<Rational>> rows(polys.size(),
                                          std::vector<Rational>(exps.size()));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& t : polys[i].terms()) rows[i][col_of[t.first]] = t.second;
  }
  return {std::move(rows), std::move(exps)};
}

std::size_t rank_of(std::vector<std::vector<Rational>> m) {
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[rank]);
    const Rational inv = m[rank][col].inverse();
    for (std::size_t c = col; c < ncols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FilterBasis make_basis(SymmetryClass cls, std::vector<LaurentPoly> elements) {
  if (cls != SymmetryClass::P0 && cls != SymmetryClass::P1 && cls != SymmetryClass::Pa) {
    throw DomainError("filter basis class must be P0, P1, or Pa");
  }
  for (const auto& p : elements) {
    if (p.is_zero() || !element_in_class(p, cls)) {
      throw DomainError("basis element outside the declared symmetry class");
    }
  }
  auto [rows, exps] = coefficient_rows(elements);
  (void)exps;
  if (rank_of(rows) != elements.size()) {
    throw DomainError("basis elements are linearly dependent");
  }
  FilterBasis b;
  b.cls = cls;
  b.elements = std::move(elements);
  return b;
}

FilterBasis default_basis(SymmetryClass cls, int dimension) {
  std::vector<LaurentPoly> elems;
  elems.reserve(static_cast<std::size_t>(dimension));
  for (int k = 0; k < dimension; ++k) {
    switch (cls) {
      case SymmetryClass::P0:
        elems.push_back(LaurentPoly::monomial(1, k) + LaurentPoly::monomial(1, -k - 1));
        break;
      case SymmetryClass::P1:
        elems.push_back(LaurentPoly::monomial(1, k + 1) + LaurentPoly::monomial(1, -k));
        break;
      case SymmetryClass::Pa:
        elems.push_back(LaurentPoly::monomial(1, k + 1) - LaurentPoly::monomial(1, -k - 1));
        break;
      default:
        throw DomainError("filter basis class must be P0, P1, or Pa");
    }
  }
  return make_basis(cls, std::move(elems));
}

Expansion basis_expand(const LaurentPoly& s, const FilterBasis& basis) {
  const std::size_t n = basis.dimension();
  std::vector<LaurentPoly> all = basis.elements;
  all.push_back(s);
  auto [rows, exps] = coefficient_rows(all);
  const std::size_t ncols = exps.size();
  // Solve sum_i a_i * rows[i] == rows[n] by eliminating over exponents.
  // aug[c] = (coefficients of each basis element at exponent c | s at c)
  std::vector<std::vector<Rational>> aug(ncols, std::vector<Rational>(n + 1));
  for (std::size_t c = 0; c < ncols; ++c) {
    for (std::size_t i = 0; i < n; ++i) aug[c][i] = rows[i][c];
    aug[c][n] = rows[n][c];
  }
  std::vector<std::size_t> pivot_row(n, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < ncols; ++col) {
    std::size_t p = rank;
    while (p < ncols && aug[p][col].is_zero()) ++p;
    if (p == ncols) continue;
    std::swap(aug[p], aug[rank]);
    const Rational inv = aug[rank][col].inverse();
    for (std::size_t c = col; c <= n; ++c) aug[rank][c] *= inv;
    for (std::size_t r = 0; r < ncols; ++r) {
      if (r == rank || aug[r][col].is_zero()) continue;
      const Rational f = aug[r][col];
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[rank][c];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  Expansion e;
  e.basis = basis;
  e.coeffs.assign(n, Rational(0));
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row[col] == SIZE_MAX) continue;  // free variable: coefficient 0
    e.coeffs[col] = aug[pivot_row[col]][n];
  }
  // inconsistent rows mean s is outside the span
  for (std::size_t r = rank; r < ncols; ++r) {
    if (!aug[r][n].is_zero()) throw NotInSpan("filter is not in the basis span");
  }
  if (expansion_combine(e) != s) throw NotInSpan("filter is not in the basis span");
  return e;
}

LaurentPoly expansion_combine(const Expansion& e) {
  LaurentPoly s;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    s += e.basis.elements[i].scaled(e.coeffs[i]);
  }
  return s;
}

ExpansionCascade expansion_to_cascade(const Expansion& e, Side side) {
  const bool ok_side = (side == Side::U &&
                        (e.basis.cls == SymmetryClass::P0 || e.basis.cls == SymmetryClass::Pa)) ||
                       (side == Side::L &&
                        (e.basis.cls == SymmetryClass::P1 || e.basis.cls == SymmetryClass::Pa));
  if (!ok_side) {
    throw ClassMismatch("basis class is incompatible with the requested lifting side");
  }
  ExpansionCascade out;
  std::vector<LiftingStep> steps;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    const Rational& a = e.coeffs[i];
    if (a.is_zero()) continue;
    const LaurentPoly f = e.basis.elements[i].scaled(a);
    steps.push_back(side == Side::U ? LiftingStep::upper(f) : LiftingStep::lower(f));
    GammaFormFactor gf;
    gf.kappa_sq = a.abs();
    gf.sigma = a.sign();
    gf.element = e.basis.elements[i];
    out.factors.push_back(std::move(gf));
  }
  out.cascade = make_cascade(1, std::move(steps), PolyMatrix::identity());
  return out;
}

ScalingAxiomReport check_scaling_axioms(const std::vector<PolyMatrix>& samples,
                                        const std::vector<Rational>& scales) {
  ScalingAxiomReport rep;
  auto fail = [&rep](const std::string& what) {
    if (rep.ok) {
      rep.ok = false;
      rep.witness = what;
    }
  };
  for (const auto& m : samples) {
    ++rep.identity_checked;
    if (pm_gamma(1, m) != m) fail("gamma_1 E != E");
  }
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      for (const auto& k : scales) {
        ++rep.automorphism_checked;
        if (pm_gamma(k, a * b) != pm_gamma(k, a) * pm_gamma(k, b)) {
          fail("gamma_K(EF) != (gamma_K E)(gamma_K F) for K = " + k.str());
        }
      }
    }
  }
  for (const auto& m : samples) {
    for (const auto& k : scales) {
      for (const auto& k2 : scales) {
        ++rep.action_checked;
        if (pm_gamma(k2, pm_gamma(k, m)) != pm_gamma(k2 * k, m)) {
          fail("gamma_K'(gamma_K E) != gamma_K'K E");
        }
      }
    }
  }
  return rep;
}

NoncommutingWitness additivity_counterexample(const LiftingGroupSpec& spec) {
  auto upper_candidates = [&]() {
    std::vector<LaurentPoly> v;
    switch (spec.upper_class) {
      case ClassConstraint::P0:
        v.push_back(LaurentPoly::monomial(1, 0) + LaurentPoly::monomial(1, -1));
        v.push_back(LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -2));
        break;
      case ClassConstraint::P1:
        v.push_back(LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, 0));
        break;
      case ClassConstraint::Pa:
        v.push_back(LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1));
        v.push_back(LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2));
        break;
      case ClassConstraint::Unrestricted:
        v.push_back(LaurentPoly::constant(1));
        v.push_back(LaurentPoly::monomial(1, 1));
        break;
    }
    return v;
  }();
  auto lower_candidates = [&]() {
    std::vector<LaurentPoly> v;
    switch (spec.lower_class) {
      case ClassConstraint::P0:
        v.push_back(LaurentPoly::monomial(1, 0) + LaurentPoly::monomial(1, -1));
        break;
      case ClassConstraint::P1:
        v.push_back(LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, 0));
        v.push_back(LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, -1));
        break;
      case ClassConstraint::Pa:
        v.push_back(LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1));
        v.push_back(LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2));
        break;
      case ClassConstraint::Unrestricted:
        v.push_back(LaurentPoly::constant(1));
        v.push_back(LaurentPoly::monomial(1, 1));
        break;
    }
    return v;
  }();
  for (const auto& s : upper_candidates) {
    for (const auto& t : lower_candidates) {
      const PolyMatrix e = LiftingStep::upper(s).matrix();
      const PolyMatrix f = LiftingStep::lower(t).matrix();
      const PolyMatrix ef = e * f;
      NoncommutingWitness w{e, f, ef * ef, (e * e) * (f * f)};
      if (w.ef_sq != w.e2f2) return w;
    }
  }
  throw AbelianSpec("all candidate generator pairs commute");
}

}  // namespace liftfb
