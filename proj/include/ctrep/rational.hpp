#pragma once

// Exact rationals: the base field K = Q.
//
// Values whose reduced numerator and denominator fit in int64 are stored
// inline; everything else falls back to a shared immutable GMP rational.
// The representation is canonical (a value that fits is never stored as a
// big number), so equality is a field-wise comparison.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "ctrep/error.hpp"

namespace ctrep {

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == std::numeric_limits<std::int64_t>::min()) {
      *this = Rational(mpq_class(mpz_class(static_cast<long>(n))));
    }
  }
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error("zero divisor");
    *this = from_wide(static_cast<Wide>(n), static_cast<Wide>(d));
  }
  /// Accepts any mpq_class, canonicalized or not.
  explicit Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(c);
  }

  /// Parses `p` or `p/q` with an optional leading sign; digits may be
  /// arbitrarily long.
  static Rational parse(std::string_view text) {
    auto bad = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    auto check_digits = [&](std::string_view s, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) throw bad();
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw bad();
      }
    };
    check_digits(num_text, true);
    std::string n(num_text);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class num(n, 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
      auto den_text = text.substr(slash + 1);
      check_digits(den_text, false);
      den = mpz_class(std::string(den_text), 10);
      if (den == 0) throw Error("zero divisor");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  bool is_big() const noexcept { return static_cast<bool>(big_); }
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }

  std::string to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        return from_integer(static_cast<Wide>(a.num_) + b.num_);
      }
      return from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                       static_cast<Wide>(a.den_) * b.den_);
    }
    return from_canonical(a.to_mpq() + b.to_mpq());
  }

  friend Rational operator-(const Rational& a) {
    if (!a.big_) {
      Rational r;
      r.num_ = -a.num_;
      r.den_ = a.den_;
      return r;
    }
    return from_canonical(mpq_class(-*a.big_));
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        return from_integer(static_cast<Wide>(a.num_) - b.num_);
      }
      return from_wide(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                       static_cast<Wide>(a.den_) * b.den_);
    }
    return from_canonical(a.to_mpq() - b.to_mpq());
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) {
        return from_integer(static_cast<Wide>(a.num_) * b.num_);
      }
      return from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
    }
    return from_canonical(a.to_mpq() * b.to_mpq());
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("zero divisor");
    if (!a.big_ && !b.big_) {
      return from_wide(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
    }
    return from_canonical(a.to_mpq() / b.to_mpq());
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
      if (!a.big_ || !b.big_) return false;
      return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  using Wide = __int128;
  using UWide = unsigned __int128;

  static UWide gcd(UWide a, UWide b) {
    while (b != 0) {
      if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max()) {
        auto x = static_cast<std::uint64_t>(a);
        auto y = static_cast<std::uint64_t>(b);
        while (y != 0) {
          auto r = x % y;
          x = y;
          y = r;
        }
        return x;
      }
      UWide r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  static bool fits(Wide v) {
    return v > std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
  }

  static mpz_class to_mpz(Wide v) {
    bool negative = v < 0;
    UWide mag = negative ? static_cast<UWide>(-(v + 1)) + 1 : static_cast<UWide>(v);
    std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (negative) z = -z;
    return z;
  }

  static Rational from_integer(Wide n) {
    if (fits(n)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      return r;
    }
    return from_canonical(mpq_class(to_mpz(n)));
  }

  // d != 0; magnitudes below 2^127.
  static Rational from_wide(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    if (d != 1) {
      UWide g = gcd(static_cast<UWide>(n < 0 ? -n : n), static_cast<UWide>(d));
      if (g != 1) {
        n /= static_cast<Wide>(g);
        d /= static_cast<Wide>(g);
      }
    }
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return from_canonical(mpq_class(to_mpz(n), to_mpz(d)));
  }

  static Rational from_canonical(const mpq_class& q) {
    Rational r;
    r.assign_big(q);
    return r;
  }

  void assign_big(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
      num_ = n.get_si();
      den_ = d.get_si();
      big_.reset();
    } else {
      big_ = std::make_shared<const mpq_class>(q);
      num_ = 0;
      den_ = 1;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

// Ring-interface hooks so Q can sit wherever a generic ring element is
// expected (matrices over Q, the regular representation, ...).
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational embed_scalar(const Rational&, const Rational& c) { return c; }
inline Rational scale(const Rational& x, const Rational& c) { return x * c; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_scalar(const Rational&) { return true; }
inline Rational scalar_value(const Rational& x) { return x; }
inline std::string to_string(const Rational& x) { return x.to_string(); }

}  // namespace ctrep
