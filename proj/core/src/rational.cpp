#include "liftfb/rational.hpp"

#include <gmp.h>

#include <cstdlib>
#include <functional>
#include <utility>

namespace liftfb {

using detail::kMinLL;

struct Rational::Big {
  mpq_t q;
  Big() { mpq_init(q); }
  ~Big() { mpq_clear(q); }
  Big(const Big&) = delete;
  Big& operator=(const Big&) = delete;
};

void Rational::BigDeleter::operator()(Big* q) const noexcept { delete q; }

Rational::BigPtr Rational::new_big() { return BigPtr(new Big); }

Rational::Rational(BigPtr big) : num_(0), den_(1), big_(std::move(big)) {
  demote_if_possible();
}

Rational::Rational(long long n, long long d) : num_(0), den_(1) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (n == kMinLL || d == kMinLL) {
    BigPtr q = new_big();
    mpq_set_si(q->q, n, 1);
    mpz_set_si(mpq_denref(q->q), d);
    mpq_canonicalize(q->q);
    big_ = std::move(q);
    demote_if_possible();
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = detail::gcd_ll(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

void Rational::clone_from(const Rational& other) {
  BigPtr q = new_big();
  mpq_set(q->q, other.big_->q);
  big_ = std::move(q);
}

void Rational::assign_big_slow(const Rational& other) {
  if (other.big_) {
    if (!big_) big_ = new_big();
    mpq_set(big_->q, other.big_->q);
  } else {
    big_.reset();
  }
}

bool Rational::is_integer() const {
  if (small()) return den_ == 1;
  return mpz_cmp_ui(mpq_denref(big_->q), 1) == 0;
}

int Rational::sign_big() const { return mpq_sgn(big_->q); }

void Rational::promote() {
  if (big_) return;
  BigPtr q = new_big();
  mpz_set_si(mpq_numref(q->q), num_);
  mpz_set_si(mpq_denref(q->q), den_);
  big_ = std::move(q);
}

void Rational::demote_if_possible() {
  if (!big_) return;
  if (mpz_fits_slong_p(mpq_numref(big_->q)) && mpz_fits_slong_p(mpq_denref(big_->q))) {
    const long long n = mpz_get_si(mpq_numref(big_->q));
    const long long d = mpz_get_si(mpq_denref(big_->q));
    if (n != kMinLL && d != kMinLL) {
      num_ = n;
      den_ = d;
      big_.reset();
    }
  }
}

namespace {

void load_mpq(mpq_t q, long long num, long long den) {
  mpz_set_si(mpq_numref(q), num);
  mpz_set_si(mpq_denref(q), den);
}

}  // namespace

Rational& Rational::add_big_assign(const Rational& rhs, bool negate_rhs) {
  BigPtr qa = new_big();
  BigPtr qb = new_big();
  if (small()) {
    load_mpq(qa->q, num_, den_);
  } else {
    mpq_set(qa->q, big_->q);
  }
  if (rhs.small()) {
    load_mpq(qb->q, rhs.num_, rhs.den_);
  } else {
    mpq_set(qb->q, rhs.big_->q);
  }
  if (negate_rhs) {
    mpq_sub(qa->q, qa->q, qb->q);
  } else {
    mpq_add(qa->q, qa->q, qb->q);
  }
  big_ = std::move(qa);
  demote_if_possible();
  return *this;
}

Rational& Rational::mul_big_assign(const Rational& rhs, bool invert_rhs) {
  BigPtr qa = new_big();
  BigPtr qb = new_big();
  if (small()) {
    load_mpq(qa->q, num_, den_);
  } else {
    mpq_set(qa->q, big_->q);
  }
  if (rhs.small()) {
    load_mpq(qb->q, rhs.num_, rhs.den_);
  } else {
    mpq_set(qb->q, rhs.big_->q);
  }
  if (invert_rhs) {
    if (mpq_sgn(qb->q) == 0) throw DomainError("division by zero rational");
    mpq_div(qa->q, qa->q, qb->q);
  } else {
    mpq_mul(qa->q, qa->q, qb->q);
  }
  big_ = std::move(qa);
  demote_if_possible();
  return *this;
}

Rational Rational::negate_slow() const {
  Rational r(*this);
  r.promote();
  mpq_neg(r.big_->q, r.big_->q);
  r.demote_if_possible();
  return r;
}

bool Rational::eq_big(const Rational& a, const Rational& b) {
  return mpq_equal(a.big_->q, b.big_->q) != 0;
}

bool Rational::lt_big(const Rational& a, const Rational& b) {
  Rational ap(a), bp(b);
  ap.promote();
  bp.promote();
  return mpq_cmp(ap.big_->q, bp.big_->q) < 0;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational");
  Rational r(1);
  r /= *this;
  return r;
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? inverse() : *this;
  unsigned long long n =
      e < 0 ? (unsigned long long)(-(e + 1)) + 1ull : (unsigned long long)e;
  Rational acc(1);
  while (n > 0) {
    if (n & 1ull) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string Rational::numerator_str() const {
  if (small()) return std::to_string(num_);
  char* s = mpz_get_str(nullptr, 10, mpq_numref(big_->q));
  std::string out(s);
  std::free(s);
  return out;
}

std::string Rational::denominator_str() const {
  if (small()) return std::to_string(den_);
  char* s = mpz_get_str(nullptr, 10, mpq_denref(big_->q));
  std::string out(s);
  std::free(s);
  return out;
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  BigPtr q = new_big();
  if (mpq_set_str(q->q, text.c_str(), 10) != 0) {
    throw DomainError("bad rational literal: " + text);
  }
  if (mpz_sgn(mpq_denref(q->q)) == 0) {
    throw DomainError("rational with zero denominator: " + text);
  }
  mpq_canonicalize(q->q);
  return Rational(std::move(q));
}

size_t Rational::hash() const noexcept {
  if (small()) {
    size_t h = std::hash<long long>{}(num_);
    h ^= std::hash<long long>{}(den_) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
  size_t h = std::hash<std::string>{}(numerator_str());
  h ^= std::hash<std::string>{}(denominator_str()) + 0x9e3779b97f4a7c15ull + (h << 6) +
       (h >> 2);
  return h;
}

}  // namespace liftfb
