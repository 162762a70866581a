#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/contfrac.hpp"
#include "twobridge/goeritz.hpp"
#include "twobridge/numeric.hpp"

namespace twobridge {

/// Largest template the explicit diagram builder will materialize.
inline constexpr std::size_t kMaxTemplateCrossings = 2'000'000;

enum class CrossingType { kTypeI, kTypeII };

std::string to_string(CrossingType t);

/// One twist box of the 4-plat template. Odd positions are horizontal boxes
/// whose inner regions are white; even positions are vertical boxes whose
/// inner regions are black.
struct TwistRegion {
  std::size_t index = 0;
  ExactInt coefficient;

  bool horizontal() const { return index % 2 == 1; }
  int handedness() const { return coefficient.sign(); }
  /// Checkerboard crossing sign shared by every crossing in the box.
  int crossing_sign() const { return horizontal() ? -handedness() : handedness(); }
};

struct CrossingInfo {
  std::size_t region = 0;    // twist-box position
  std::size_t position = 0;  // 1-based within the box
  int sign = 0;              // checkerboard sign
  CrossingType type = CrossingType::kTypeI;
  std::size_t white_a = 0;   // white region ids, 0 is the unbounded region
  std::size_t white_b = 0;

  friend bool operator==(const CrossingInfo&, const CrossingInfo&) = default;
};

/// The template diagram as an embedded white-region graph: white regions are
/// vertices, crossings are edges, black regions are faces. Strands run along
/// the medial graph; orientation is propagated from a fixed starting crossing.
class TemplateDiagram {
 public:
  /// Requires odd length and a knot. Throws InputError otherwise, or when the
  /// template exceeds kMaxTemplateCrossings.
  static TemplateDiagram build(const ContinuedFraction& cf);

  const ContinuedFraction& expansion() const { return cf_; }
  const std::vector<TwistRegion>& regions() const { return regions_; }

  std::size_t crossing_count() const { return edges_.size(); }
  /// Including the unbounded region.
  std::size_t white_region_count() const { return vertex_count_; }
  std::size_t black_region_count() const;
  std::size_t component_count() const { return components_; }
  /// "e0" for the unbounded region, otherwise the Goeritz basis label.
  const std::string& white_label(std::size_t id) const { return labels_.at(id); }

  /// Whether the two strands in box `region` run the same way along the box.
  bool strands_parallel(std::size_t region) const;

  struct Edge {
    std::size_t tail;      // white region on one side
    std::size_t head;      // white region on the other side
    std::size_t region;
    std::size_t position;
  };
  const std::vector<Edge>& edges() const { return edges_; }

  /// For each crossing, whether each of its two strand passes moves from the
  /// tail region towards the head region. Meaningful for knots.
  struct Passes {
    bool first_tail_to_head;
    bool second_tail_to_head;
  };
  const std::vector<Passes>& passes() const { return passes_; }

 private:
  TemplateDiagram() = default;
  static TemplateDiagram assemble(const ContinuedFraction& cf);
  friend std::size_t component_count(const ContinuedFraction& cf);

  ContinuedFraction cf_{1};
  std::vector<TwistRegion> regions_;
  std::size_t vertex_count_ = 0;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> next_ccw_;  // per dart
  std::vector<std::size_t> prev_ccw_;
  std::vector<Passes> passes_;
  std::size_t components_ = 0;
};

/// Number of closed curves in the template of an odd-length expansion
/// (1 for knots, 2 for two-bridge links).
std::size_t component_count(const ContinuedFraction& cf);

/// Checkerboard sign and Gordon-Litherland type of every crossing.
std::vector<CrossingInfo> classify_crossings(const TemplateDiagram& d);

struct RegionCorrection {
  std::size_t region = 0;
  ExactInt coefficient;
  int sign = 0;
  CrossingType type = CrossingType::kTypeI;
  ExactInt contribution;  // sign * |c| for type II boxes, else 0
};

struct MuValue {
  ExactInt total;
  std::vector<RegionCorrection> regions;
  /// Closed-form value for expansions of length 1, 3 or 5, when available.
  std::optional<ExactInt> tabulated;
};

/// Correction term: sum of signs over type II crossings. Crossing types are
/// classified on a reduced template with every |c_i| replaced by 1 or 2 of
/// the same parity, which has the same strand pattern in every box. Throws
/// CrossCheckError when a tabulated value exists and disagrees.
MuValue mu(const ContinuedFraction& cf);

/// Closed-form correction term for lengths 1, 3, 5, matched on the parity
/// pattern of the coefficients or of their reversal. nullopt when no row
/// applies.
std::optional<ExactInt> tabulated_mu(const ContinuedFraction& cf);

/// Goeritz matrix rebuilt from crossing signs and white-region incidences.
GoeritzMatrix goeritz_from_diagram(const TemplateDiagram& d);

}  // namespace twobridge
