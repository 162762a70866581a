#include "twobridge/contfrac.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "twobridge/error.hpp"

namespace twobridge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_knot_fraction(const ExactInt& p, const ExactInt& q) {
  if (q.sign() <= 0) throw InputError("denominator must be positive, got " + q.str());
  if (gcd(p, q) != ExactInt(1))
    throw InputError("fraction " + p.str() + "/" + q.str() + " is not in lowest terms (p and q must be coprime)");
  if (p.is_even())
    throw InputError("numerator " + p.str() + " is even: K_{p/q} is a two-component link, not a knot");
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos)
    throw InputError("malformed fraction '" + std::string(text) + "': expected p/q");
  Fraction f{ExactInt::parse(trim(t.substr(0, slash))), ExactInt::parse(trim(t.substr(slash + 1)))};
  if (f.q.is_zero()) throw InputError("malformed fraction '" + std::string(text) + "': zero denominator");
  return f;
}

ContinuedFraction::ContinuedFraction(std::vector<ExactInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw InputError("continued fraction needs at least one coefficient");
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero())
      throw InputError("zero coefficient at position " + std::to_string(i + 1) +
                       ": continued-fraction coefficients must be nonzero");
  }
}

ContinuedFraction::ContinuedFraction(std::initializer_list<long> coefficients)
    : ContinuedFraction(std::vector<ExactInt>(coefficients.begin(), coefficients.end())) {}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  std::vector<ExactInt> coefficients;
  std::string_view rest = trim(text);
  if (rest.size() >= 2 && rest.front() == '[' && rest.back() == ']') rest = trim(rest.substr(1, rest.size() - 2));
  if (rest.empty()) throw InputError("empty coefficient list");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = trim(rest.substr(0, comma));
    if (token.empty()) throw InputError("empty entry in coefficient list '" + std::string(text) + "'");
    coefficients.push_back(ExactInt::parse(token));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return ContinuedFraction(std::move(coefficients));
}

bool ContinuedFraction::is_even_expansion() const {
  if (!has_odd_length()) return false;
  for (std::size_t i = 2; i <= size(); i += 2)
    if (coefficient(i).is_odd()) return false;
  return true;
}

ContinuedFraction ContinuedFraction::reversed() const {
  std::vector<ExactInt> r(coefficients_.rbegin(), coefficients_.rend());
  return ContinuedFraction(std::move(r));
}

ContinuedFraction ContinuedFraction::mirrored() const {
  std::vector<ExactInt> r;
  r.reserve(size());
  for (const auto& c : coefficients_) r.push_back(-c);
  return ContinuedFraction(std::move(r));
}

ExactInt ContinuedFraction::crossing_count() const {
  ExactInt total;
  for (const auto& c : coefficients_) total += c.abs();
  return total;
}

std::string ContinuedFraction::str() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ',';
    out += coefficients_[i].str();
  }
  return out;
}

ConvergentSequence convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> pairs;
  pairs.reserve(cf.size() + 1);
  // (p_{-1}, q_{-1}) = (0, -1) and (p_0, q_0) = (1, 0) give p_1 = c_1, q_1 = 1.
  Convergent before{ExactInt(0), ExactInt(-1)};
  pairs.push_back({ExactInt(1), ExactInt(0)});
  for (const auto& c : cf.coefficients()) {
    const Convergent& prev = pairs.back();
    Convergent next{c * prev.numerator - before.numerator, c * prev.denominator - before.denominator};
    before = prev;
    pairs.push_back(std::move(next));
  }
  return ConvergentSequence(std::move(pairs));
}

ExactRational evaluate(const ContinuedFraction& cf) {
  const auto cs = cf.coefficients();
  ExactRational tail(cs.back());
  for (std::size_t i = cs.size() - 1; i-- > 0;) {
    if (tail.is_zero())
      throw std::domain_error("continued fraction [" + cf.str() + "] has a zero tail and no finite value");
    tail = ExactRational(cs[i]) - tail.reciprocal();
  }
  return tail;
}

ContinuedFraction normalize_odd_length(const ContinuedFraction& cf) {
  if (cf.has_odd_length()) return cf;
  std::vector<ExactInt> cs(cf.coefficients().begin(), cf.coefficients().end());
  ExactInt& last = cs.back();
  if (last == ExactInt(-1)) {
    last -= 1;
    cs.emplace_back(-1);
  } else {
    last += 1;
    cs.emplace_back(1);
  }
  return ContinuedFraction(std::move(cs));
}

bool is_knot(const ContinuedFraction& cf) { return convergents(cf).last().numerator.is_odd(); }

ExactInt determinant(const ContinuedFraction& cf) { return convergents(cf).last().numerator.abs(); }

ExactRational EvenCfResult::target() const {
  if (trace.fix == ParityFix::kShiftedDenominator) return ExactRational(input.p, input.p + input.q);
  return ExactRational(input.p, input.q);
}

namespace {

// Writes dividend = c * divisor + r (sign -1) or c * divisor - r (sign +1)
// with 0 <= r < divisor and c of the requested parity. An exact division has
// no choice and is recorded with sign +1.
EvenCfStep divide_with_parity(std::size_t step, const ExactInt& dividend, const ExactInt& divisor,
                              bool want_odd) {
  const ExactInt below = floor_div(dividend, divisor);
  const ExactInt r_below = dividend - below * divisor;
  if (r_below.is_zero()) return {step, below, +1, ExactInt(0)};
  if (below.is_odd() == want_odd) return {step, below, -1, r_below};
  const ExactInt above = below + 1;
  return {step, above, +1, above * divisor - dividend};
}

}  // namespace

std::optional<EvenCfResult> even_cf(const ExactInt& p, const ExactInt& q, std::size_t max_length) {
  require_knot_fraction(p, q);
  EvenCfResult result{ContinuedFraction({1}), {}, Fraction{p, q}};
  EvenCfTrace& trace = result.trace;

  if (q == ExactInt(1)) {
    trace.first = {1, p, +1, ExactInt(0)};
    result.expansion = ContinuedFraction(std::vector<ExactInt>{p});
    return result;
  }

  // The first dividend is sign(p) * |p| = p over r_0 = q.
  trace.first = divide_with_parity(1, p, q, /*want_odd=*/true);
  std::vector<ExactInt> cs{trace.first.coefficient};
  ExactInt prev_remainder = q;
  int prev_sign = trace.first.sign;
  ExactInt remainder = trace.first.remainder;

  std::size_t step = 1;
  while (!remainder.is_zero()) {
    if (cs.size() >= max_length) return std::nullopt;
    ++step;
    const ExactInt dividend = prev_sign < 0 ? -prev_remainder : prev_remainder;
    EvenCfStep s = divide_with_parity(step, dividend, remainder, /*want_odd=*/false);
    cs.push_back(s.coefficient);
    prev_remainder = remainder;
    prev_sign = s.sign;
    remainder = s.remainder;
    trace.steps.push_back(std::move(s));
  }

  if (cs.size() % 2 == 0) {
    if (cs.back().is_odd()) {
      trace.fix = ParityFix::kSplitLast;
      result.expansion = normalize_odd_length(ContinuedFraction(std::move(cs)));
      return result;
    }
    trace.fix = ParityFix::kShiftedDenominator;
    cs.front() += 1;
    cs.insert(cs.begin(), ExactInt(1));
  }
  result.expansion = ContinuedFraction(std::move(cs));
  return result;
}

EvenCfResult even_cf(const ExactInt& p, const ExactInt& q) {
  return *even_cf(p, q, std::numeric_limits<std::size_t>::max());
}

ContinuedFraction ceiling_expansion(const ExactInt& p, const ExactInt& q) {
  if (q.is_zero()) throw InputError("zero denominator");
  if (p.is_zero()) throw InputError("0 has no continued-fraction expansion with nonzero coefficients");
  ExactRational tail(p, q);
  std::vector<ExactInt> cs;
  while (true) {
    ExactInt c = ceil_div(tail.numerator(), tail.denominator());
    if (c.is_zero()) c = ExactInt(-1);  // tail in (-1, 0)
    const ExactRational rest = ExactRational(c) - tail;
    cs.push_back(std::move(c));
    if (rest.is_zero()) break;
    tail = rest.reciprocal();
  }
  return normalize_odd_length(ContinuedFraction(std::move(cs)));
}

ContinuedFraction nearest_expansion(const ExactInt& p, const ExactInt& q) {
  if (q.is_zero()) throw InputError("zero denominator");
  if (p.is_zero()) throw InputError("0 has no continued-fraction expansion with nonzero coefficients");
  ExactRational tail(p, q);
  std::vector<ExactInt> cs;
  while (true) {
    // floor(tail + 1/2)
    ExactInt c = floor_div(tail.numerator() + tail.numerator() + tail.denominator(),
                           tail.denominator() + tail.denominator());
    if (c.is_zero()) c = ExactInt(tail.sign());  // |tail| < 1/2, first step only
    const ExactRational rest = ExactRational(c) - tail;
    cs.push_back(std::move(c));
    if (rest.is_zero()) break;
    tail = rest.reciprocal();
  }
  return normalize_odd_length(ContinuedFraction(std::move(cs)));
}

}  // namespace twobridge
