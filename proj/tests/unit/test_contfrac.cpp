#include <doctest.h>

#include <optional>

#include "support/oracles.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/error.hpp"

using namespace twobridge;
namespace t = twobridge::testing;

namespace {

bool same_value(const ExactRational& x, const std::pair<ExactInt, ExactInt>& pq) {
  return x.numerator() * pq.second == x.denominator() * pq.first;
}

}  // namespace

TEST_SUITE("contfrac") {

TEST_CASE("parsing") {
  CHECK(ContinuedFraction::parse("2,-3,3") == ContinuedFraction{2, -3, 3});
  CHECK(ContinuedFraction::parse(" 11, 10 ,9 ") == ContinuedFraction{11, 10, 9});
  CHECK(ContinuedFraction::parse("[3,-2]") == ContinuedFraction{3, -2});
  CHECK_THROWS_AS(ContinuedFraction::parse(""), InputError);
  CHECK_THROWS_AS(ContinuedFraction::parse("1,,2"), InputError);
  CHECK_THROWS_WITH_AS(ContinuedFraction::parse("1,0,2"), doctest::Contains("zero coefficient"), InputError);
  CHECK(parse_fraction("23/10") == Fraction{23, 10});
  CHECK(parse_fraction("-23/10") == Fraction{-23, 10});
  CHECK_THROWS_AS(parse_fraction("23"), InputError);
  CHECK_THROWS_AS(parse_fraction("1/0"), InputError);
}

TEST_CASE("evaluation examples") {
  CHECK(evaluate({3, -3, -5}) == ExactRational(47, 14));
  CHECK(evaluate({7}) == ExactRational(7));
  CHECK(evaluate({2, -3, 3}) == ExactRational(23, 10));
  CHECK(evaluate({20, -50, 3}) == ExactRational(3023, 151));
  CHECK(evaluate({11, 10, 9, 8, 7}) == ExactRational(52587, 4825));
  CHECK(evaluate({3, -2, -2, -4, -4}) == ExactRational(137, 37));
}

TEST_CASE("convergent examples") {
  const ConvergentSequence s = convergents({2, -3, 3});
  REQUIRE(s.length() == 3);
  CHECK(s[0] == Convergent{1, 0});
  CHECK(s[1] == Convergent{2, 1});
  CHECK(s[2] == Convergent{-7, -3});
  CHECK(s[3] == Convergent{-23, -10});
  CHECK(convergents({5}).last() == Convergent{5, 1});
  CHECK(convergents({11, 10, 9, 8, 7}).last() == Convergent{52587, 4825});
}

TEST_CASE("normalizing to odd length") {
  CHECK(normalize_odd_length({3}) == ContinuedFraction{3});
  CHECK(normalize_odd_length({2, 3}) == ContinuedFraction{2, 4, 1});
  CHECK(normalize_odd_length({2, -1}) == ContinuedFraction{2, -2, -1});
}

TEST_CASE("knot detection") {
  CHECK(is_knot({2, -3, 3}));
  CHECK(determinant(ContinuedFraction{2, -3, 3}) == ExactInt(23));
  CHECK_FALSE(is_knot({2}));
  CHECK(is_knot({3, -2, -2, -4, -4}));
  CHECK(determinant(ContinuedFraction{3, -2, -2, -4, -4}) == ExactInt(137));
}

TEST_CASE("even expansion examples") {
  const EvenCfResult r = even_cf(137, 37);
  CHECK(r.expansion == ContinuedFraction{3, -2, -2, -4, -4});
  CHECK(r.trace.first == EvenCfStep{1, 3, -1, 26});
  REQUIRE(r.trace.steps.size() == 4);
  CHECK(r.trace.steps[0] == EvenCfStep{2, -2, -1, 15});
  CHECK(r.trace.steps[1] == EvenCfStep{3, -2, -1, 4});
  CHECK(r.trace.steps[2] == EvenCfStep{4, -4, -1, 1});
  CHECK(r.trace.steps[3] == EvenCfStep{5, -4, 1, 0});
  CHECK(r.trace.fix == ParityFix::kNone);

  CHECK(even_cf(3, 1).expansion == ContinuedFraction{3});
  CHECK(even_cf(5, 3).expansion == ContinuedFraction{1, -2, -2});
  CHECK(even_cf(61, 17).expansion == ContinuedFraction{3, -2, -4, -2, -2});
}

TEST_CASE("even expansion preconditions name the violation") {
  CHECK_THROWS_WITH_AS(even_cf(5, 0), doctest::Contains("denominator must be positive"), InputError);
  CHECK_THROWS_WITH_AS(even_cf(5, -3), doctest::Contains("denominator must be positive"), InputError);
  CHECK_THROWS_WITH_AS(even_cf(9, 3), doctest::Contains("coprime"), InputError);
  CHECK_THROWS_WITH_AS(even_cf(8, 3), doctest::Contains("link, not a knot"), InputError);
}

TEST_CASE("even expansions can be long; the bounded form gives up") {
  // Quotients pinned near 2 force a run of +-2 entries.
  const EvenCfResult full = even_cf(101, 51);
  CHECK(full.expansion.size() > 40);
  CHECK_FALSE(even_cf(101, 51, 10).has_value());
  const auto bounded = even_cf(101, 51, full.expansion.size());
  REQUIRE(bounded.has_value());
  CHECK(bounded->expansion == full.expansion);
  CHECK(nearest_expansion(101, 51).size() < 10);
}

TEST_CASE("fallback expansions") {
  // [3,2,2,4] has even length with an even last entry; the shifted form is used.
  const EvenCfResult r = even_cf(23, 10);
  CHECK(r.trace.fix == ParityFix::kShiftedDenominator);
  CHECK(r.expansion.is_even_expansion());
  CHECK(r.target() == ExactRational(23, 33));
  CHECK(evaluate(r.expansion) == r.target());

  CHECK(evaluate(ceiling_expansion(23, 10)) == ExactRational(23, 10));
  CHECK(nearest_expansion(23, 10) == ContinuedFraction{2, -3, 3});
  CHECK(nearest_expansion(1, 3).has_odd_length());
  CHECK(evaluate(nearest_expansion(1, 3)) == ExactRational(1, 3));
}

TEST_CASE("property: evaluation equals the last convergent and a right-to-left fold") {
  t::Rng rng(21);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto cs = t::random_coefficients(rng, static_cast<std::size_t>(t::uniform(rng, 1, 8)), 9);
    const ContinuedFraction cf = t::make_cf(cs);
    const Convergent last = convergents(cf).last();
    const auto folded = t::nested_value(cs);
    CHECK(last.numerator * folded.second == last.denominator * folded.first);
    CHECK(last.numerator.abs() == folded.first.abs());
    std::optional<ExactRational> value;
    try {
      value = evaluate(cf);
    } catch (const std::domain_error&) {
      // a tail evaluates to zero; only the convergent form is defined
    }
    if (value) CHECK(same_value(*value, folded));
  }
}

TEST_CASE("property: normalization preserves the value and avoids zeros") {
  t::Rng rng(22);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto cs = t::random_coefficients(rng, static_cast<std::size_t>(t::uniform(rng, 1, 8)), 5);
    const ContinuedFraction cf = t::make_cf(cs);
    const ContinuedFraction n = normalize_odd_length(cf);
    CHECK(n.has_odd_length());
    for (const auto& c : n.coefficients()) CHECK_FALSE(c.is_zero());
    const Convergent a = convergents(cf).last(), b = convergents(n).last();
    CHECK(a.numerator * b.denominator == a.denominator * b.numerator);
  }
}

TEST_CASE("property: even expansions are even and evaluate as flagged") {
  for (long p = 1; p < 400; p += 2)
    for (long q = 1; q < 2 * p + 3; ++q) {
      if (gcd(p, q) != ExactInt(1)) continue;
      const EvenCfResult r = even_cf(p, q);
      CHECK(r.expansion.is_even_expansion());
      CHECK(r.expansion.has_odd_length());
      const ExactRational want = r.trace.fix == ParityFix::kShiftedDenominator ? ExactRational(p, p + q) : ExactRational(p, q);
      CHECK(evaluate(r.expansion) == want);
      CHECK(r.target() == want);
    }
}

TEST_CASE("property: ceiling and nearest expansions evaluate back") {
  t::Rng rng(23);
  for (int trial = 0; trial < 1500; ++trial) {
    const long p = t::nonzero(rng, 5000);
    const long q = t::nonzero(rng, 5000);
    if (gcd(p, q) != ExactInt(1)) continue;
    for (const auto& cf : {ceiling_expansion(p, q), nearest_expansion(p, q)}) {
      CHECK(cf.has_odd_length());
      CHECK(evaluate(cf) == ExactRational(p, q));
    }
  }
}

TEST_CASE("reversal and mirror helpers") {
  const ContinuedFraction cf{3, -2, 5};
  CHECK(cf.reversed() == ContinuedFraction{5, -2, 3});
  CHECK(cf.mirrored() == ContinuedFraction{-3, 2, -5});
  CHECK(cf.crossing_count() == ExactInt(10));
  CHECK(evaluate(cf.mirrored()) == -evaluate(cf));
}

}
