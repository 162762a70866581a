#include "twobridge/numeric.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

void require_nonzero(const ExactInt& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
}

}  // namespace

ExactInt ExactInt::parse(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size()) throw InputError("malformed integer '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("malformed integer '" + std::string(text) + "'");
  }
  // mpz_set_str rejects a leading '+'.
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return ExactInt(mpz_class(digits, 10));
}

ExactInt ExactInt::abs() const { return ExactInt(mpz_class(::abs(value_))); }

bool ExactInt::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer " + str() + " does not fit in 64 bits");
  return value_.get_si();
}

ExactInt ExactInt::operator-() const { return ExactInt(mpz_class(-value_)); }

ExactInt& ExactInt::operator+=(const ExactInt& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
  require_nonzero(b);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt ceil_div(const ExactInt& a, const ExactInt& b) {
  require_nonzero(b);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  require_nonzero(b);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt floor_mod(const ExactInt& a, const ExactInt& b) {
  require_nonzero(b);
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(g));
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }

ExactRational::ExactRational(ExactInt numerator, ExactInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_nonzero(den_);
  canonicalize();
}

void ExactRational::canonicalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const ExactInt g = gcd(num_, den_);
  if (g != ExactInt(1)) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

std::string ExactRational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExactRational ExactRational::reciprocal() const { return ExactRational(den_, num_); }

ExactRational ExactRational::operator-() const {
  ExactRational r = *this;
  r.num_ = -r.num_;
  return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) { return *this += -rhs; }

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  require_nonzero(rhs.num_);
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.str(); }

}  // namespace twobridge
