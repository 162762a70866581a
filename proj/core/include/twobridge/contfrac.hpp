#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/numeric.hpp"

namespace twobridge {

/// A fraction p/q as written by the user, not necessarily reduced.
struct Fraction {
  ExactInt p;
  ExactInt q;

  ExactRational value() const { return ExactRational(p, q); }
  std::string str() const { return p.str() + "/" + q.str(); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Parses "p/q". Rejects malformed text and q = 0.
Fraction parse_fraction(std::string_view text);

/// Continued fraction [c1, ..., cn] = c1 - 1/(c2 - 1/(... - 1/cn)) with
/// nonzero integer coefficients. Positions are 1-based throughout this
/// library; odd positions are the horizontal twist boxes of the template
/// diagram and even positions the vertical ones.
class ContinuedFraction {
 public:
  /// Throws InputError on an empty list or a zero coefficient.
  explicit ContinuedFraction(std::vector<ExactInt> coefficients);
  ContinuedFraction(std::initializer_list<long> coefficients);

  /// Parses "3,-2,-2,-4,-4" or "[3,-2,-2,-4,-4]". Whitespace around entries
  /// is ignored.
  static ContinuedFraction parse(std::string_view text);

  std::size_t size() const { return coefficients_.size(); }
  bool has_odd_length() const { return size() % 2 == 1; }

  const ExactInt& coefficient(std::size_t position) const { return coefficients_.at(position - 1); }
  /// Sign of the coefficient at `position`: +1 right-handed, -1 left-handed.
  int handedness(std::size_t position) const { return coefficient(position).sign(); }
  std::span<const ExactInt> coefficients() const { return coefficients_; }

  /// Odd length with every even-position coefficient even.
  bool is_even_expansion() const;

  ContinuedFraction reversed() const;
  ContinuedFraction mirrored() const;

  /// Sum of |c_i|: the number of crossings of the template diagram.
  ExactInt crossing_count() const;

  std::string str() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<ExactInt> coefficients_;
};

struct Convergent {
  ExactInt numerator;
  ExactInt denominator;

  ExactRational value() const { return ExactRational(numerator, denominator); }
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// Canonical numerators/denominators of every prefix [c1..ci]. Index 0 holds
/// the seed (1, 0); index i holds the prefix of length i.
class ConvergentSequence {
 public:
  explicit ConvergentSequence(std::vector<Convergent> pairs) : pairs_(std::move(pairs)) {}

  std::size_t length() const { return pairs_.size() - 1; }
  const Convergent& operator[](std::size_t prefix_length) const { return pairs_.at(prefix_length); }
  const Convergent& last() const { return pairs_.back(); }

 private:
  std::vector<Convergent> pairs_;
};

/// p_i = c_i p_{i-1} - p_{i-2} (same for q) seeded so that p_1 = c_1, q_1 = 1.
ConvergentSequence convergents(const ContinuedFraction& cf);

/// Evaluates the nested fraction from the innermost term outward.
/// Throws std::domain_error if an intermediate tail evaluates to 0.
ExactRational evaluate(const ContinuedFraction& cf);

/// Appends a trailing +-1 when the length is even: [.., cn] = [.., cn+1, 1]
/// unless cn = -1, in which case [.., cn-1, -1].
ContinuedFraction normalize_odd_length(const ContinuedFraction& cf);

/// |p_n| is odd, i.e. the template closes up to a single curve.
bool is_knot(const ContinuedFraction& cf);

/// Knot determinant |p_n|.
ExactInt determinant(const ContinuedFraction& cf);

/// One division step of the even-expansion algorithm:
///   sign_{n-2} r_{n-2} = c_n r_{n-1} + r_n    (sign_{n-1} = -1)
///   sign_{n-2} r_{n-2} = c_n r_{n-1} - r_n    (sign_{n-1} = +1)
struct EvenCfStep {
  std::size_t step = 0;
  ExactInt coefficient;
  int sign = 0;
  ExactInt remainder;

  friend bool operator==(const EvenCfStep&, const EvenCfStep&) = default;
};

enum class ParityFix {
  kNone,          // division chain already had odd length
  kSplitLast,     // [.., cn] -> [.., cn +- 1, +-1]
  kShiftedDenominator,  // [1, 1 + c1, c2, ..., cn], expands p/(p+q)
};

struct EvenCfTrace {
  EvenCfStep first;                // the odd-coefficient step producing c1
  std::vector<EvenCfStep> steps;   // even-coefficient steps, n >= 2
  ParityFix fix = ParityFix::kNone;
};

struct EvenCfResult {
  ContinuedFraction expansion;
  EvenCfTrace trace;
  Fraction input;
  /// The fraction the expansion evaluates to: p/q, or p/(p+q) after a
  /// shifted-denominator fix. Both name the same knot.
  ExactRational target() const;
};

/// Length cap the signature routines put on even expansions.
inline constexpr std::size_t kMaxEvenExpansionLength = 1'000'000;

/// Even continued-fraction expansion of p/q: odd length, c1 odd and every
/// even-position coefficient even. Requires q > 0, gcd(|p|, q) = 1, |p| odd.
/// The division chain can be as long as p itself (quotients pinned near 2
/// produce runs of +-2), so prefer the bounded overload for large inputs.
EvenCfResult even_cf(const ExactInt& p, const ExactInt& q);

/// Same, but nullopt once more than `max_length` coefficients are needed.
std::optional<EvenCfResult> even_cf(const ExactInt& p, const ExactInt& q, std::size_t max_length);

/// Expansion taking c_i = ceil of the running tail (so every later tail
/// exceeds 1), normalized to odd length. Used as a generic, usually non-even,
/// expansion for cross-checking. Requires q != 0 and p != 0.
ContinuedFraction ceiling_expansion(const ExactInt& p, const ExactInt& q);

/// Expansion taking c_i = the nearest integer to the running tail (halves
/// round up), normalized to odd length. Usually the shortest expansion, e.g.
/// 23/10 = [2,-3,3]. Requires q != 0 and p != 0.
ContinuedFraction nearest_expansion(const ExactInt& p, const ExactInt& q);

}  // namespace twobridge
