#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/contfrac.hpp"
#include "twobridge/numeric.hpp"

namespace twobridge {

enum class SignatureMethod {
  kGoeritzAndDiagram,  // closed-form Goeritz signature minus the diagram correction term
  kEvenExpansion,      // even expansion, correction term known to vanish
  kRemainderCount,     // remainder-count oracle on p and q
};

std::string to_string(SignatureMethod m);

struct SignatureReport {
  std::optional<Fraction> fraction;  // as requested, when the input was p/q
  ContinuedFraction expansion{1};    // odd-length expansion the computation used
  ExactInt goeritz_signature;
  ExactInt correction;
  ExactInt signature;
  ExactInt determinant;  // |p|, odd and positive
  SignatureMethod method = SignatureMethod::kEvenExpansion;
  bool even_expansion_used = false;
  ParityFix parity_fix = ParityFix::kNone;
};

/// Remainder-count signature of K_{p/q}. Requires p > 0 odd, 0 < q < p and
/// gcd(p, q) = 1. An even q is replaced by q + p. Returns minus (#positive -
/// #negative) over k q mod 2p in (-p, p), k = 0..p-1.
ExactInt murasugi_signature(const ExactInt& p, const ExactInt& q);

/// Oracle for an arbitrary knot fraction: normalizes the sign of q, reduces q
/// modulo |p| and negates for negative fractions (mirror image). Accepts
/// +-1/0, the unknot.
ExactInt oracle_signature(const ExactInt& p, const ExactInt& q);

/// sigma(K) = sigma(G) - mu on the template of `cf` (normalized to odd length
/// first). Throws InputError for links.
SignatureReport signature_from_cf(const ContinuedFraction& cf);

/// sigma(K) = sigma(G) of an even expansion of p/q. q may be negative (both
/// signs flip); |p| must be odd and coprime to q. When the even expansion
/// would exceed kMaxEvenExpansionLength entries, sigma(G) - mu on the
/// nearest-integer expansion is used instead (method kGoeritzAndDiagram).
SignatureReport signature_from_fraction(const ExactInt& p, const ExactInt& q);

/// Every method that is feasible for the input, compared against each other.
struct VerificationReport {
  SignatureReport primary;
  std::vector<std::pair<SignatureMethod, ExactInt>> checks;
  std::vector<std::string> skipped;
};

/// Runs every feasible method on p/q. Throws CrossCheckError on any mismatch.
VerificationReport verify_fraction(const ExactInt& p, const ExactInt& q);
/// Same for an explicit expansion.
VerificationReport verify_cf(const ContinuedFraction& cf);

/// One summand of a connected sum. Negative multiplicity means copies of the
/// reverse mirror.
struct SumTerm {
  ExactInt p;
  ExactInt q;
  ExactInt multiplicity;
};

using SumSpec = std::vector<SumTerm>;

/// Parses lines of "[+-]m x p/q"; blank lines and '#' comments are skipped.
SumSpec parse_sum_spec(std::string_view text);

struct SumReport {
  std::vector<ExactInt> term_signatures;
  ExactInt total;
  bool obstructed = false;  // total != 0 proves the sum is not slice
};

ExactInt sum_signature(const SumSpec& spec);
SumReport slice_obstruction(const SumSpec& spec);

}  // namespace twobridge
