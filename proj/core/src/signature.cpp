#include "twobridge/signature.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "twobridge/diagram.hpp"
#include "twobridge/error.hpp"
#include "twobridge/goeritz.hpp"

namespace twobridge {

namespace {

// Beyond this determinant the O(p) remainder count is skipped by verify_*.
constexpr std::int64_t kMaxOracleDeterminant = 50'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_signature_parity(const SignatureReport& r, const std::string& what) {
  if (r.signature.is_odd())
    throw CrossCheckError("odd signature " + r.signature.str() + " for " + what);
}

void compare(const SignatureReport& primary, SignatureMethod method, const ExactInt& value,
             const std::string& what) {
  if (value != primary.signature)
    throw CrossCheckError(what + ": " + to_string(primary.method) + " gives " + primary.signature.str() +
                          " but " + to_string(method) + " gives " + value.str());
}

}  // namespace

std::string to_string(SignatureMethod m) {
  switch (m) {
    case SignatureMethod::kGoeritzAndDiagram: return "goeritz+diagram-mu";
    case SignatureMethod::kEvenExpansion: return "even-cf";
    case SignatureMethod::kRemainderCount: return "oracle";
  }
  return "unknown";
}

ExactInt murasugi_signature(const ExactInt& p, const ExactInt& q) {
  if (p.sign() <= 0 || p.is_even()) throw InputError("remainder count needs an odd positive p, got " + p.str());
  if (q.sign() <= 0 || q >= p) throw InputError("remainder count needs 0 < q < p, got q = " + q.str());
  if (gcd(p, q) != ExactInt(1)) throw InputError("p = " + p.str() + " and q = " + q.str() + " are not coprime");

  const ExactInt odd_q = q.is_odd() ? q : q + p;
  const ExactInt modulus = p + p;
  long balance = 0;  // #positive - #negative
  if (modulus.fits_int64()) {
    const std::int64_t m = modulus.to_int64();
    const std::int64_t half = p.to_int64();
    const std::int64_t step = floor_mod(odd_q, modulus).to_int64();
    std::int64_t r = 0;
    for (std::int64_t k = 0; k < half; ++k) {
      if (r > 0 && r < half) ++balance;
      else if (r > half) --balance;  // r - 2p lies in (-p, 0)
      r += step;
      if (r >= m) r -= m;
    }
  } else {
    const ExactInt step = floor_mod(odd_q, modulus);
    ExactInt r;
    for (ExactInt k; k < p; k += 1) {
      if (r.sign() > 0 && r < p) ++balance;
      else if (r > p) --balance;
      r += step;
      if (r >= modulus) r -= modulus;
    }
  }
  return ExactInt(-balance);
}

ExactInt oracle_signature(const ExactInt& p_in, const ExactInt& q_in) {
  if (q_in.is_zero()) {
    if (p_in.abs() == ExactInt(1)) return ExactInt(0);  // K_{1/0} is the unknot
    throw InputError("zero denominator");
  }
  ExactInt p = q_in.sign() < 0 ? -p_in : p_in;
  const ExactInt q = q_in.abs();
  if (p.is_even()) throw InputError("numerator " + p.str() + " is even: link, not a knot");
  if (gcd(p, q) != ExactInt(1)) throw InputError("fraction " + p_in.str() + "/" + q_in.str() + " is not reduced");
  const int mirror = p.sign();
  p = p.abs();
  if (p == ExactInt(1)) return ExactInt(0);
  const ExactInt sigma = murasugi_signature(p, floor_mod(q, p));
  return mirror < 0 ? -sigma : sigma;
}

SignatureReport signature_from_cf(const ContinuedFraction& cf) {
  if (!is_knot(cf)) throw InputError("[" + cf.str() + "] has even determinant: link, not a knot");
  SignatureReport r;
  r.expansion = normalize_odd_length(cf);
  r.goeritz_signature = goeritz_signature(r.expansion);
  r.correction = mu(r.expansion).total;
  r.signature = r.goeritz_signature - r.correction;
  r.determinant = determinant(r.expansion);
  r.method = SignatureMethod::kGoeritzAndDiagram;
  r.even_expansion_used = r.expansion.is_even_expansion();
  check_signature_parity(r, "[" + cf.str() + "]");
  return r;
}

SignatureReport signature_from_fraction(const ExactInt& p_in, const ExactInt& q_in) {
  if (q_in.is_zero()) throw InputError("zero denominator");
  const ExactInt p = q_in.sign() < 0 ? -p_in : p_in;
  const ExactInt q = q_in.abs();
  const std::optional<EvenCfResult> bounded = even_cf(p, q, kMaxEvenExpansionLength);
  if (!bounded) {
    SignatureReport r = signature_from_cf(nearest_expansion(p, q));
    r.fraction = Fraction{p_in, q_in};
    return r;
  }
  const EvenCfResult& even = *bounded;

  SignatureReport r;
  r.fraction = Fraction{p_in, q_in};
  r.expansion = even.expansion;
  r.goeritz_signature = goeritz_signature(r.expansion);
  r.correction = ExactInt(0);
  r.signature = r.goeritz_signature;
  r.determinant = p.abs();
  r.method = SignatureMethod::kEvenExpansion;
  r.even_expansion_used = true;
  r.parity_fix = even.trace.fix;
  if (auto table = tabulated_mu(r.expansion); table && !table->is_zero())
    throw CrossCheckError("even expansion [" + r.expansion.str() + "] has tabulated correction " + table->str());
  check_signature_parity(r, p.str() + "/" + q.str());
  return r;
}

namespace {

void add_oracle_check(VerificationReport& v, const ExactInt& p, const ExactInt& q, const std::string& what) {
  if (p.abs() > ExactInt(kMaxOracleDeterminant)) {
    v.skipped.push_back("oracle: determinant " + p.abs().str() + " above " + std::to_string(kMaxOracleDeterminant));
    return;
  }
  const ExactInt s = oracle_signature(p, q);
  compare(v.primary, SignatureMethod::kRemainderCount, s, what);
  v.checks.emplace_back(SignatureMethod::kRemainderCount, s);
}

}  // namespace

VerificationReport verify_fraction(const ExactInt& p, const ExactInt& q) {
  VerificationReport v{signature_from_fraction(p, q), {}, {}};
  const std::string what = p.str() + "/" + q.str();

  if (v.primary.method == SignatureMethod::kEvenExpansion) {
    const MuValue even_mu = mu(v.primary.expansion);
    if (!even_mu.total.is_zero())
      throw CrossCheckError("even expansion [" + v.primary.expansion.str() + "] has correction term " +
                            even_mu.total.str());
    const SignatureReport generic = signature_from_cf(nearest_expansion(p, q));
    compare(v.primary, SignatureMethod::kGoeritzAndDiagram, generic.signature, what);
    v.checks.emplace_back(SignatureMethod::kGoeritzAndDiagram, generic.signature);
  } else {
    v.skipped.push_back("even-cf: expansion longer than " + std::to_string(kMaxEvenExpansionLength) + " entries");
  }

  add_oracle_check(v, p, q, what);
  return v;
}

VerificationReport verify_cf(const ContinuedFraction& cf) {
  VerificationReport v{signature_from_cf(cf), {}, {}};
  const std::string what = "[" + cf.str() + "]";
  const Convergent last = convergents(cf).last();
  if (last.denominator.is_zero()) {
    v.skipped.push_back("fraction-based methods: expansion evaluates to 1/0");
    return v;
  }
  const ExactRational value = last.value();
  const SignatureReport even = signature_from_fraction(value.numerator(), value.denominator());
  compare(v.primary, SignatureMethod::kEvenExpansion, even.signature, what);
  v.checks.emplace_back(SignatureMethod::kEvenExpansion, even.signature);
  add_oracle_check(v, value.numerator(), value.denominator(), what);
  return v;
}

SumSpec parse_sum_spec(std::string_view text) {
  SumSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = trim(line);
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = trim(l.substr(0, hash));
    if (l.empty()) continue;
    const auto x = l.find_first_of("xX*");
    if (x == std::string_view::npos)
      throw InputError("sum spec line " + std::to_string(line_no) + ": expected '<multiplicity> x <p/q>'");
    try {
      const ExactInt mult = ExactInt::parse(trim(l.substr(0, x)));
      const Fraction f = parse_fraction(l.substr(x + 1));
      spec.push_back({f.p, f.q, mult});
    } catch (const InputError& e) {
      throw InputError("sum spec line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return spec;
}

SumReport slice_obstruction(const SumSpec& spec) {
  SumReport report;
  for (const auto& term : spec) {
    const ExactInt s = signature_from_fraction(term.p, term.q).signature;
    report.term_signatures.push_back(s);
    report.total += term.multiplicity * s;
  }
  report.obstructed = !report.total.is_zero();
  return report;
}

ExactInt sum_signature(const SumSpec& spec) { return slice_obstruction(spec).total; }

}  // namespace twobridge
