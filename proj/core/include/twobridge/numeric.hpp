#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twobridge {

/// Signed integer of unbounded magnitude. Thin value wrapper over GMP.
class ExactInt {
 public:
  ExactInt() = default;
  template <std::signed_integral T>
  ExactInt(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  ExactInt(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  /// Parses an optionally signed decimal literal. Throws InputError.
  static ExactInt parse(std::string_view text);

  std::string str() const { return value_.get_str(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool is_even() const { return !is_odd(); }
  ExactInt abs() const;

  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws std::overflow_error when it does not fit

  ExactInt operator-() const;
  ExactInt& operator+=(const ExactInt& rhs);
  ExactInt& operator-=(const ExactInt& rhs);
  ExactInt& operator*=(const ExactInt& rhs);

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
  friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& raw() const { return value_; }

 private:
  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}
  friend ExactInt floor_div(const ExactInt&, const ExactInt&);
  friend ExactInt ceil_div(const ExactInt&, const ExactInt&);
  friend ExactInt exact_div(const ExactInt&, const ExactInt&);
  friend ExactInt floor_mod(const ExactInt&, const ExactInt&);
  friend ExactInt gcd(const ExactInt&, const ExactInt&);

  mpz_class value_;
};

// Division helpers. A zero divisor throws std::domain_error.
ExactInt floor_div(const ExactInt& a, const ExactInt& b);
ExactInt ceil_div(const ExactInt& a, const ExactInt& b);
// Requires b | a.
ExactInt exact_div(const ExactInt& a, const ExactInt& b);
// Result lies in [0, |b|).
ExactInt floor_mod(const ExactInt& a, const ExactInt& b);
// Non-negative; gcd(0, 0) = 0.
ExactInt gcd(const ExactInt& a, const ExactInt& b);

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

/// Exact rational kept in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() : den_(1) {}
  ExactRational(ExactInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExactRational(T value) : ExactRational(ExactInt(value)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when denominator is zero.
  ExactRational(ExactInt numerator, ExactInt denominator);

  const ExactInt& numerator() const { return num_; }
  const ExactInt& denominator() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == ExactInt(1); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  ExactRational reciprocal() const;  // throws std::domain_error on zero

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  void canonicalize();

  ExactInt num_;
  ExactInt den_;
};

inline int rational_sign(const ExactRational& x) { return x.sign(); }

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

}  // namespace twobridge
