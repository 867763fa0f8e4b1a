#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>

#include "liftfb/errors.hpp"

namespace liftfb {

namespace detail {

using Int128 = __int128;
using UInt128 = unsigned __int128;

constexpr long long kMinLL = std::numeric_limits<long long>::min();

inline UInt128 uabs128(Int128 v) { return v < 0 ? UInt128(-v) : UInt128(v); }

inline UInt128 gcd128(UInt128 a, UInt128 b) {
  while (b != 0) {
    UInt128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool fits_ll(Int128 v) {
  return v >= Int128(std::numeric_limits<long long>::min()) &&
         v <= Int128(std::numeric_limits<long long>::max());
}

inline int ctz128(Int128 v) {
  // trailing zeros are invariant under negation; v != 0
  const auto u = static_cast<UInt128>(v);
  const auto lo = static_cast<unsigned long long>(u);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<unsigned long long>(u >> 64));
}

inline long long gcd_ll(long long a, long long b) {
  // callers guarantee a, b >= 0; binary gcd
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(static_cast<unsigned long long>(a | b));
  a >>= __builtin_ctzll(static_cast<unsigned long long>(a));
  do {
    b >>= __builtin_ctzll(static_cast<unsigned long long>(b));
    if (a > b) {
      const long long t = a;
      a = b;
      b = t;
    }
    b -= a;
  } while (b != 0);
  return a << shift;
}

}  // namespace detail

// Exact rational number, always in lowest terms with positive denominator.
//
// Values that fit in int64 numerator/denominator are kept inline and all of
// their arithmetic runs allocation-free through 128-bit intermediates;
// anything larger is promoted to a GMP rational behind a pointer and demoted
// back as soon as it fits again.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(long long n) noexcept : num_(n), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(int n) noexcept : num_(n), den_(1) {}        // NOLINT(runtime/explicit)
  Rational(long long n, long long d);  // throws DomainError on d == 0

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) clone_from(other);
  }
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other) {
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_ || big_) assign_big_slow(other);
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const {
    if (!big_) return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
    return sign_big();
  }

  Rational operator-() const {
    if (!big_ && num_ != detail::kMinLL) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return negate_slow();
  }

  Rational& operator+=(const Rational& rhs) { return add_impl(rhs, false); }
  Rational& operator-=(const Rational& rhs) { return add_impl(rhs, true); }

  Rational& operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
      if (num_ == 0 || rhs.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      // dyadic fast path: cross-cancellation against a power-of-two
      // denominator is a pair of shifts
      const auto da = static_cast<unsigned long long>(den_);
      const auto db = static_cast<unsigned long long>(rhs.den_);
      if (((da & (da - 1)) | (db & (db - 1))) == 0 && num_ != detail::kMinLL &&
          rhs.num_ != detail::kMinLL) {
        const int ta = __builtin_ctzll(da), tb = __builtin_ctzll(db);
        const int s1 = std::min(__builtin_ctzll(static_cast<unsigned long long>(
                                    num_ < 0 ? -num_ : num_)),
                                tb);
        const int s2 = std::min(__builtin_ctzll(static_cast<unsigned long long>(
                                    rhs.num_ < 0 ? -rhs.num_ : rhs.num_)),
                                ta);
        const int de = (ta - s2) + (tb - s1);
        long long n;
        if (de < 63 &&
            !__builtin_mul_overflow(num_ >> s1, rhs.num_ >> s2, &n) &&
            n != detail::kMinLL) {
          num_ = n;
          den_ = 1LL << de;
          return *this;
        }
      }
      // cross-cancel; the remaining factors are coprime by construction
      long long an = num_, ad = den_, bn = rhs.num_, bd = rhs.den_;
      const long long g1 = detail::gcd_ll(an < 0 ? -an : an, bd);
      const long long g2 = detail::gcd_ll(bn < 0 ? -bn : bn, ad);
      an /= g1;
      bd /= g1;
      bn /= g2;
      ad /= g2;
      long long n, d;
      if (!__builtin_mul_overflow(an, bn, &n) && !__builtin_mul_overflow(ad, bd, &d) &&
          n != detail::kMinLL) {
        num_ = n;
        den_ = d;
        return *this;
      }
    }
    return mul_big_assign(rhs, false);
  }

  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero rational");
    if (!big_ && !rhs.big_ && rhs.num_ != detail::kMinLL) {
      Rational inv;
      if (rhs.num_ < 0) {
        inv.num_ = -rhs.den_;
        inv.den_ = -rhs.num_;
      } else {
        inv.num_ = rhs.den_;
        inv.den_ = rhs.num_;
      }
      return *this *= inv;
    }
    return mul_big_assign(rhs, true);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;  // big values never fit inline
    return eq_big(a, b);
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      return detail::Int128(a.num_) * b.den_ < detail::Int128(b.num_) * a.den_;
    }
    return lt_big(a, b);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const;       // throws DomainError on zero
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(long long e) const;  // negative e requires nonzero base

  // Decimal text of numerator and denominator, e.g. "-3" / "2".
  std::string numerator_str() const;
  std::string denominator_str() const;
  std::string str() const;  // "num/den", always with the slash

  // Parses "n" or "n/d" with optional sign; throws DomainError on bad text.
  static Rational parse(const std::string& text);

  size_t hash() const noexcept;

 private:
  struct Big;  // wraps a GMP rational
  struct BigDeleter {
    void operator()(Big* q) const noexcept;
  };
  using BigPtr = std::unique_ptr<Big, BigDeleter>;

  static BigPtr new_big();
  explicit Rational(BigPtr big);

  bool small() const noexcept { return !big_; }
  void promote();             // move inline value into big_
  void demote_if_possible();  // shrink big_ back to inline when it fits
  void clone_from(const Rational& other);
  void assign_big_slow(const Rational& other);
  int sign_big() const;
  Rational negate_slow() const;
  Rational& add_big_assign(const Rational& rhs, bool negate_rhs);
  Rational& mul_big_assign(const Rational& rhs, bool invert_rhs);
  static bool eq_big(const Rational& a, const Rational& b);
  static bool lt_big(const Rational& a, const Rational& b);

  Rational& add_impl(const Rational& rhs, bool neg) {
    if (!big_ && !rhs.big_) {
      using detail::Int128;
      if (rhs.num_ == 0) return *this;
      if (num_ == 0 && rhs.num_ != detail::kMinLL) {
        num_ = neg ? -rhs.num_ : rhs.num_;
        den_ = rhs.den_;
        return *this;
      }
      // dyadic fast path: alignment and reduction are shifts
      const auto da = static_cast<unsigned long long>(den_);
      const auto db = static_cast<unsigned long long>(rhs.den_);
      if (((da & (da - 1)) | (db & (db - 1))) == 0) {
        const int ta = __builtin_ctzll(da), tb = __builtin_ctzll(db);
        const int m = ta < tb ? ta : tb;
        Int128 t = neg ? (Int128(num_) << (tb - m)) - (Int128(rhs.num_) << (ta - m))
                       : (Int128(num_) << (tb - m)) + (Int128(rhs.num_) << (ta - m));
        if (t == 0) {
          num_ = 0;
          den_ = 1;
          return *this;
        }
        int de = ta + tb - m;
        const int e = std::min(detail::ctz128(t), de);
        t >>= e;
        de -= e;
        if (de < 63 && detail::fits_ll(t) && (long long)t != detail::kMinLL) {
          num_ = (long long)t;
          den_ = 1LL << de;
          return *this;
        }
        return add_big_assign(rhs, neg);
      }
      // reduce through g0 = gcd of the denominators: with ad = a*g0 and
      // bd = b*g0, t = an*b + bn*a over a*b*g0, and gcd(t, a*b*g0) divides g0
      const long long g0 = detail::gcd_ll(den_, rhs.den_);
      const long long ar = den_ / g0;
      const long long br = rhs.den_ / g0;
      Int128 t = neg ? Int128(num_) * br - Int128(rhs.num_) * ar
                     : Int128(num_) * br + Int128(rhs.num_) * ar;
      if (t == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      Int128 d = Int128(ar) * rhs.den_;
      if (g0 > 1) {
        const long long g2 =
            detail::gcd_ll(static_cast<long long>(detail::uabs128(t) %
                                                  static_cast<unsigned long long>(g0)),
                           g0);
        if (g2 > 1) {
          t /= g2;
          d /= g2;
        }
      }
      if (detail::fits_ll(t) && detail::fits_ll(d) && (long long)t != detail::kMinLL) {
        num_ = (long long)t;
        den_ = (long long)d;
        return *this;
      }
    }
    return add_big_assign(rhs, neg);
  }

  long long num_;
  long long den_;
  BigPtr big_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace liftfb
