#pragma once

#include <array>
#include <optional>

#include "liftfb/laurent.hpp"

namespace liftfb {

// 2x2 Laurent-polynomial matrix: the polyphase-with-advance transfer matrix
// of a two-channel filter bank. Row 0 is the lowpass channel.
struct PolyMatrix {
  std::array<std::array<LaurentPoly, 2>, 2> e;

  PolyMatrix() = default;
  PolyMatrix(LaurentPoly a00, LaurentPoly a01, LaurentPoly a10, LaurentPoly a11);

  static PolyMatrix identity();
  // gain-scaling matrix diag(1/K, K); throws DomainError on K == 0
  static PolyMatrix gain(const Rational& k);
  static PolyMatrix lambda_of_z();      // diag(1, 1/z)
  static PolyMatrix lambda_of_z_inv();  // diag(1, z)
  static PolyMatrix swap_j();           // [[0,1],[1,0]]
  static PolyMatrix sign_l();           // [[1,0],[0,-1]]

  const LaurentPoly& at(int r, int c) const { return e[r][c]; }
  LaurentPoly& at(int r, int c) { return e[r][c]; }

  bool is_constant() const;  // every entry constant or zero
  bool is_zero() const;

  PolyMatrix involute() const;  // entrywise z -> 1/z

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.e == b.e; }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }
};

LaurentPoly pm_det(const PolyMatrix& m);

// max of the four entry orders; nullopt for the zero matrix
std::optional<Exp> pm_order(const PolyMatrix& m);

// Witness that det(m) is the monomial scale * z^(-delay), scale != 0:
// the FIR perfect-reconstruction certificate.
struct PRCertificate {
  Rational scale;
  Exp delay = 0;
};

// nullopt when det is zero or has two or more terms (not FIR-PR)
std::optional<PRCertificate> classify_pr(const PolyMatrix& m);

bool is_unimodular(const PolyMatrix& m);  // det identically 1

// Exact inverse via adjugate over the monomial determinant.
// Throws DomainError if cert does not match pm_det(m).
PolyMatrix pm_inverse(const PolyMatrix& m, const PRCertificate& cert);
PolyMatrix pm_inverse(const PolyMatrix& m);  // classifies first; DomainError if not FIR-PR

// gamma-conjugation D_K m D_K^-1; scales e01 by 1/K^2 and e10 by K^2.
PolyMatrix pm_gamma(const Rational& k, const PolyMatrix& m);

struct FilterPair {
  LaurentPoly lowpass;   // H0
  LaurentPoly highpass;  // H1
};

// Polyphase split under the advance convention
// H_i(z) = H_i0(z^2) + z * H_i1(z^2).
PolyMatrix filters_to_polyphase(const FilterPair& fp);
FilterPair polyphase_to_filters(const PolyMatrix& m);

// Whole-sample symmetric group membership: unimodular and
// m(1/z) == Lambda(z) m(z) Lambda(1/z).
bool is_ws(const PolyMatrix& m);

// Half-sample symmetric class membership: unimodular and
// m(1/z) == L m(z) J. Not closed under multiplication.
bool is_hs(const PolyMatrix& m);

// Matrices satisfying m(1/z) == L m(z) L (unimodular): left-multiplying an
// HS bank by such a matrix yields another HS bank. Products of WA lifting
// steps and gain matrices live here.
bool is_hs_lifter(const PolyMatrix& m);

}  // namespace liftfb
