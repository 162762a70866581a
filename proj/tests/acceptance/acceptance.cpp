// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "twobridge/twobridge.hpp"

using namespace twobridge;
namespace t = twobridge::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string show(const std::vector<long>& cs) {
  std::string s = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + std::to_string(cs[i]);
  return s + "]";
}

// Closed-form correction term rows for n = 1, 3, 5: parity pattern and
// mu = sum w_i c_i.
struct TableRow {
  const char* parity;
  std::vector<int> weights;
};

const std::vector<TableRow> kTable = {
    {"o", {0}},
    {"ooo", {-1, 1, -1}},
    {"ooe", {0, 0, -1}},
    {"oee", {0, 0, 0}},
    {"ooooe", {-1, 1, -1, 0, 0}},
    {"oooeo", {0, 0, -1, 1, -1}},
    {"oooee", {-1, 1, -1, 0, -1}},
    {"ooeoe", {0, 0, -1, 0, 0}},
    {"eoooe", {-1, 0, 0, 0, -1}},
    {"ooeeo", {-1, 1, -1, 1, -1}},
    {"oeoeo", {0, 0, 0, 0, 0}},
    {"ooeee", {0, 0, -1, 0, -1}},
    {"oeeoe", {0, 0, 0, 0, -1}},
    {"eooee", {-1, 0, 0, 0, 0}},
    {"oeeee", {0, 0, 0, 0, 0}},
    {"eeoee", {0, 0, 0, 0, 0}},
};

ExactInt full_template_mu(const ContinuedFraction& cf) {
  ExactInt total;
  for (const auto& x : classify_crossings(TemplateDiagram::build(cf)))
    if (x.type == CrossingType::kTypeII) total += ExactInt(x.sign);
  return total;
}

ExactInt oracle_of(const std::vector<long>& cs) {
  const auto [num, den] = t::nested_value(cs);
  return oracle_signature(num, den);
}

// --- criteria ----------------------------------------------------------

Outcome reference_values() {
  Outcome o;
  struct Known {
    long p, q;
    std::vector<long> cf;
    long sigma;
  };
  const std::vector<Known> known = {
      {3023, 151, {20, -50, 3}, -22},  {52587, 4825, {11, 10, 9, 8, 7}, -22}, {35, 16, {2, -5, 3}, -2},
      {283, 34, {8, -3, 11}, -10},     {1193, 145, {8, -4, 3, 2, -6}, -4},    {187, 26, {7, -5, 5}, 6},
      {1451, 131, {11, -13, 10}, -10}, {715, 23, {31, -12, -2}, -30},         {23, 10, {2, -3, 3}, -2},
  };
  for (const auto& k : known) {
    const std::string name = std::to_string(k.p) + "/" + std::to_string(k.q);
    const ContinuedFraction cf = t::make_cf(k.cf);
    o.expect(evaluate(cf) == ExactRational(k.p, k.q), name + " expansion");
    o.expect(signature_from_fraction(k.p, k.q).signature == ExactInt(k.sigma), name + " even-cf route");
    o.expect(signature_from_cf(cf).signature == ExactInt(k.sigma), name + " goeritz+mu route");
    o.expect(murasugi_signature(k.p, k.q) == ExactInt(k.sigma), name + " oracle");
  }
  const SignatureReport r = signature_from_cf({2, -3, 3});
  o.expect(r.goeritz_signature == ExactInt(-4) && r.correction == ExactInt(-2) && r.determinant == ExactInt(23),
           "23/10 sigma(G), mu, det");
  o.detail = std::to_string(known.size()) + " knots, three routes each";
  return o;
}

Outcome even_cf_regression() {
  Outcome o;
  const EvenCfResult a = even_cf(137, 37);
  o.expect(a.expansion == ContinuedFraction{3, -2, -2, -4, -4}, "137/37 expansion");
  const std::vector<EvenCfStep> rows = {{2, -2, -1, 15}, {3, -2, -1, 4}, {4, -4, -1, 1}, {5, -4, 1, 0}};
  o.expect(a.trace.steps == rows, "137/37 trace rows");
  o.expect(even_cf(61, 17).expansion == ContinuedFraction{3, -2, -4, -2, -2}, "61/17 expansion");

  std::size_t count = 0;
  for (long p = 1; p < 600; p += 2)
    for (long q = 1; q < p; ++q) {
      if (gcd(p, q) != ExactInt(1)) continue;
      const EvenCfResult r = even_cf(p, q);
      const bool shifted = r.trace.fix == ParityFix::kShiftedDenominator;
      const ExactRational want = shifted ? ExactRational(p, p + q) : ExactRational(p, q);
      o.expect(r.expansion.is_even_expansion(), std::to_string(p) + "/" + std::to_string(q) + " not even");
      o.expect(evaluate(r.expansion) == want, std::to_string(p) + "/" + std::to_string(q) + " value");
      ++count;
    }
  o.detail = "trace exact; " + std::to_string(count) + " expansions even and evaluating as flagged";
  return o;
}

Outcome triple_agreement() {
  Outcome o;
  std::size_t count = 0;
  for (long p = 3; p < 300; p += 2)
    for (long q = 1; q < p; ++q) {
      if (gcd(p, q) != ExactInt(1)) continue;
      const std::string name = std::to_string(p) + "/" + std::to_string(q);
      const ExactInt oracle = murasugi_signature(p, q);
      const ExactInt even = signature_from_fraction(p, q).signature;
      const ContinuedFraction generic = ceiling_expansion(p, q);
      const ExactInt diagram = signature_from_cf(generic).signature;
      o.expect(even == oracle, name + ": even-cf " + even.str() + " vs oracle " + oracle.str());
      o.expect(diagram == oracle, name + ": [" + generic.str() + "] gives " + diagram.str() + " vs oracle " + oracle.str());
      o.expect(oracle == ExactInt(t::floor_sum_signature(p, q)), name + ": oracle vs floor sum");
      ++count;
    }
  o.detail = std::to_string(count) + " knots";
  return o;
}

struct Corpus {
  std::vector<std::vector<long>> full;        // closed form exists
  std::vector<std::vector<long>> degenerate;  // some p_i with odd i < n vanishes
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    t::Rng rng(2024);
    while (out.full.size() < 500) {
      const std::size_t length = 2 * static_cast<std::size_t>(t::uniform(rng, 0, 3)) + 1;
      auto cs = t::random_knot(rng, length, 9);
      (t::nondegenerate(cs) ? out.full : out.degenerate).push_back(std::move(cs));
    }
    return out;
  }();
  return c;
}

Outcome congruence_property() {
  Outcome o;
  for (const auto& cs : corpus().full) {
    const ContinuedFraction cf = t::make_cf(cs);
    const GoeritzMatrix g = goeritz_matrix(cf);
    const ExactInt pn = t::prefix_numerators(cs).back();
    o.expect(determinant(g.entries).abs() == pn.abs(), show(cs) + " det G");

    const DiagonalForm closed = closed_form_diagonal(cf);
    const RationalMatrix p = transition_matrix(cf);
    bool unit_triangular = p.is_upper_triangular();
    ExactRational diag_product(1);
    for (std::size_t i = 0; i < p.rows(); ++i) diag_product *= p(i, i);
    unit_triangular = unit_triangular && (diag_product == ExactRational(1) || diag_product == ExactRational(-1));
    o.expect(unit_triangular, show(cs) + " det P");

    const RationalMatrix d = p.transposed() * to_rational(g.entries) * p;
    bool equal = d.rows() == closed.entries.size();
    for (std::size_t r = 0; equal && r < d.rows(); ++r)
      for (std::size_t c = 0; equal && c < d.cols(); ++c)
        equal = d(r, c) == (r == c ? closed.entries[r] : ExactRational(0));
    o.expect(equal, show(cs) + " P^T G P");
  }
  for (const auto& cs : corpus().degenerate) {
    const GoeritzMatrix g = goeritz_matrix(t::make_cf(cs));
    o.expect(determinant(g.entries).abs() == ExactInt(t::prefix_numerators(cs).back()).abs(), show(cs) + " det G");
  }
  o.detail = "500 knot expansions";
  if (!corpus().degenerate.empty())
    o.detail += ", plus " + std::to_string(corpus().degenerate.size()) + " without a closed form (det G only)";
  return o;
}

Outcome weight_identity() {
  Outcome o;
  for (const auto& cs : corpus().full) {
    const ContinuedFraction cf = t::make_cf(cs);
    const auto by_recursion = junction_weights_by_recursion(cf);
    const auto by_convergents = junction_weights_by_convergents(cf);
    o.expect(by_recursion == by_convergents, show(cs));
    // Third computation straight from int64 numerators.
    const auto pn = t::prefix_numerators(cs);
    for (std::size_t j = 1; 2 * j < cs.size(); ++j) {
      const ExactRational direct(pn[2 * j], ExactInt(cs[2 * j]) * ExactInt(pn[2 * j - 2]));
      o.expect(j - 1 < by_recursion.size() && by_recursion[j - 1] == direct, show(cs) + " weight " + std::to_string(2 * j));
    }
  }
  o.detail = "500 knot expansions";
  return o;
}

Outcome table_conformance() {
  Outcome o;
  t::Rng rng(7);
  std::size_t patterns = 0;
  for (const auto& row : kTable) {
    const std::string forward = row.parity;
    const std::string backward(forward.rbegin(), forward.rend());
    for (int reversed = 0; reversed < 2; ++reversed) {
      if (reversed && backward == forward) continue;
      const std::string& pattern = reversed ? backward : forward;
      ++patterns;
      for (int instance = 0; instance < 50; ++instance) {
        std::vector<long> cs;
        for (char ch : pattern) cs.push_back(t::with_parity(rng, 9, ch == 'o'));
        o.expect(t::defines_knot(cs), show(cs) + " should be a knot");
        ExactInt want;
        for (std::size_t i = 0; i < cs.size(); ++i) {
          const long c = reversed ? cs[cs.size() - 1 - i] : cs[i];
          want += ExactInt(row.weights[i] * c);
        }
        const ContinuedFraction cf = t::make_cf(cs);
        const ExactInt got = full_template_mu(cf);
        o.expect(got == want, show(cs) + ": diagram mu " + got.str() + ", table " + want.str());
        const ExactInt sigma = goeritz_signature(cf) - got;
        o.expect(sigma == oracle_of(cs), show(cs) + ": sigma(G) - mu vs oracle");
      }
    }
  }
  o.detail = std::to_string(patterns) + " parity patterns x 50";
  return o;
}

Outcome even_expansions_have_zero_mu() {
  Outcome o;
  t::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t length = 2 * static_cast<std::size_t>(t::uniform(rng, 0, 4)) + 1;
    const auto cs = t::random_even_expansion(rng, length, 9);
    o.expect(full_template_mu(t::make_cf(cs)) == ExactInt(0), show(cs));
  }
  o.detail = "200 even expansions, lengths 1-9";
  return o;
}

Outcome symmetry() {
  Outcome o;
  std::size_t count = 0;
  for (const auto* set : {&corpus().full, &corpus().degenerate})
    for (const auto& cs : *set) {
      const ContinuedFraction cf = t::make_cf(cs);
      const ExactInt s = signature_from_cf(cf).signature;
      o.expect(signature_from_cf(cf.mirrored()).signature == -s, show(cs) + " mirror");
      o.expect(signature_from_cf(cf.reversed()).signature == s, show(cs) + " reversal");
      ++count;
    }
  o.detail = std::to_string(count) + " expansions";
  return o;
}

Outcome slice_examples() {
  Outcome o;
  const SumReport first = slice_obstruction({{35, 16, 1}, {283, 34, 1}, {1193, 145, 1}});
  o.expect(first.total == ExactInt(-16) && first.obstructed, "35/16 + 283/34 + 1193/145");
  for (long n = -10; n <= 10; ++n)
    for (long m = -10; m <= 10; ++m) {
      const SumReport r = slice_obstruction({{187, 26, 1}, {1451, 131, n}, {715, 23, m}});
      const long expected = 6 - 10 * n - 30 * m;
      o.expect(r.total == ExactInt(expected) && expected != 0 && r.obstructed,
               "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  o.detail = "total -16; 441 (n, m) pairs nonzero";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 reference-value regression", reference_values},
      {"AC2 even-CF regression", even_cf_regression},
      {"AC3 triple-agreement sweep", triple_agreement},
      {"AC4 congruence property", congruence_property},
      {"AC5 junction weight identity", weight_identity},
      {"AC6 closed-form table conformance", table_conformance},
      {"AC7 even expansions have mu = 0", even_expansions_have_zero_mu},
      {"AC8 mirror and reversal symmetry", symmetry},
      {"AC9 slice-obstruction examples", slice_examples},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %-36s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), seconds);
    for (const auto& f : o.failures) std::printf("      %s\n", f.c_str());
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
