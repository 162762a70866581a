#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twobridge/contfrac.hpp"
#include "twobridge/matrix.hpp"
#include "twobridge/numeric.hpp"

namespace twobridge {

/// Largest Goeritz matrix the dense routines will materialize.
inline constexpr std::size_t kMaxMatrixDimension = 1500;

/// A bounded white region of the template diagram. Bigons sit between
/// consecutive crossings of an odd-position twist box; a junction is the
/// region beside an even-position twist box.
struct WhiteRegion {
  enum class Kind { kBigon, kJunction };
  Kind kind;
  std::size_t twist;     // 1-based position in the continued fraction
  std::size_t position;  // 1-based index within the box for bigons, 0 for junctions

  /// "e1_2" for a bigon, "e2" for a junction.
  std::string label() const;
  friend bool operator==(const WhiteRegion&, const WhiteRegion&) = default;
};

/// Ordered basis: bigons of boxes 1, 3, ..., n, then junctions 2, 4, ..., n-1.
/// The unbounded region is excluded.
class WhiteRegionBasis {
 public:
  /// Requires odd length. Throws InputError when the basis would exceed
  /// kMaxMatrixDimension.
  explicit WhiteRegionBasis(const ContinuedFraction& cf);

  std::size_t size() const { return regions_.size(); }
  const WhiteRegion& operator[](std::size_t i) const { return regions_[i]; }
  const std::vector<WhiteRegion>& regions() const { return regions_; }

  /// Number of bigons in odd box `twist` (|c_twist| - 1).
  std::size_t bigon_count(std::size_t twist) const;
  std::size_t bigon_index(std::size_t twist, std::size_t position) const;
  std::size_t junction_index(std::size_t twist) const;

 private:
  std::vector<WhiteRegion> regions_;
  std::vector<std::size_t> bigon_offset_;  // indexed by twist, odd entries used
  std::vector<std::size_t> bigon_count_;
  std::size_t junction_offset_ = 0;
};

/// N = |c1| + |c3| + ... + |cn| - 1, without materializing anything.
ExactInt goeritz_dimension(const ContinuedFraction& cf);

struct GoeritzMatrix {
  WhiteRegionBasis basis;
  IntMatrix entries;
};

/// Goeritz matrix of the template diagram. Requires odd length.
GoeritzMatrix goeritz_matrix(const ContinuedFraction& cf);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct DiagonalForm {
  std::vector<ExactRational> entries;

  Inertia inertia() const;
  long signature() const { return inertia().signature(); }
  ExactRational product() const;
};

/// Weights of the junction basis vectors after orthogonalization, by the
/// three-term recursion w_2 = c2 - 1/c1 - 1/c3,
/// w_2j = (c_2j - 1/c_{2j-1} - 1/c_{2j+1}) - 1/(c_{2j-1}^2 w_{2j-2}).
/// Throws DegenerateFormError when a weight needed as a divisor is zero.
std::vector<ExactRational> junction_weights_by_recursion(const ContinuedFraction& cf);

/// Same weights as p_{2j+1} / (c_{2j+1} p_{2j-1}) from the convergents.
/// Throws DegenerateFormError when some p_{2j-1} is zero.
std::vector<ExactRational> junction_weights_by_convergents(const ContinuedFraction& cf);

/// Closed-form congruence diagonal in basis order: -eps_i (k+1)/k for each
/// bigon (i odd, k = 1..|c_i|-1), then the junction weights. Both weight
/// routes run and must agree exactly (CrossCheckError otherwise). Throws
/// DegenerateFormError if any weight is zero.
DiagonalForm closed_form_diagonal(const ContinuedFraction& cf);

/// Upper-triangular change of basis P with +-1 diagonal whose columns are the
/// orthogonalized basis vectors, so that P^T G P = closed_form_diagonal(cf).
RationalMatrix transition_matrix(const ContinuedFraction& cf);

/// Symmetric Gaussian elimination over Q. A zero pivot is swapped with a later
/// nonzero diagonal entry, or repaired by adding a row/column with a nonzero
/// off-diagonal partner. Throws std::invalid_argument for non-symmetric input.
DiagonalForm congruence_diagonalize(const RationalMatrix& m);

/// Signature of the template Goeritz form:
///   sum over odd i of (eps_i - c_i) + sum over even i of sign(p_{i+1} / (c_{i+1} p_{i-1})).
/// Falls back to the reversed expansion, then to dense diagonalization, when a
/// junction weight degenerates. Requires odd length.
ExactInt goeritz_signature(const ContinuedFraction& cf);

}  // namespace twobridge
