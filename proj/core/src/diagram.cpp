#include "twobridge/diagram.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

#include "twobridge/error.hpp"

namespace twobridge {

std::string to_string(CrossingType t) { return t == CrossingType::kTypeI ? "I" : "II"; }

namespace {

std::size_t small_magnitude(const ExactInt& c) { return static_cast<std::size_t>(c.abs().to_int64()); }

// Dart 2e leaves edge e's tail, dart 2e+1 leaves its head.
constexpr std::size_t tail_dart(std::size_t edge) { return 2 * edge; }
constexpr std::size_t head_dart(std::size_t edge) { return 2 * edge + 1; }

}  // namespace

TemplateDiagram TemplateDiagram::build(const ContinuedFraction& cf) {
  if (!cf.has_odd_length())
    throw InputError("template diagram needs an odd-length expansion, got [" + cf.str() + "]");
  if (!is_knot(cf))
    throw InputError("[" + cf.str() + "] has even determinant: link, not a knot");
  TemplateDiagram d = assemble(cf);
  if (d.components_ != 1)
    throw CrossCheckError("template of [" + cf.str() + "] traced " + std::to_string(d.components_) +
                          " components for an odd determinant");
  return d;
}

TemplateDiagram TemplateDiagram::assemble(const ContinuedFraction& cf) {
  if (!cf.has_odd_length())
    throw InputError("template diagram needs an odd-length expansion, got [" + cf.str() + "]");
  if (cf.crossing_count() > ExactInt(kMaxTemplateCrossings))
    throw InputError("template of [" + cf.str() + "] has more than " +
                     std::to_string(kMaxTemplateCrossings) + " crossings");

  TemplateDiagram d;
  d.cf_ = cf;
  const std::size_t n = cf.size();
  for (std::size_t i = 1; i <= n; ++i) d.regions_.push_back({i, cf.coefficient(i)});

  // White region ids: 0 unbounded, then bigons of boxes 1, 3, ..., n, then
  // junctions 2, 4, ..., n-1. Matches the Goeritz basis shifted by one.
  std::vector<std::size_t> bigon_base(n + 1, 0);
  d.labels_.push_back("e0");
  std::size_t next_id = 1;
  for (std::size_t i = 1; i <= n; i += 2) {
    bigon_base[i] = next_id;
    const std::size_t m = small_magnitude(cf.coefficient(i)) - 1;
    for (std::size_t k = 1; k <= m; ++k)
      d.labels_.push_back(WhiteRegion{WhiteRegion::Kind::kBigon, i, k}.label());
    next_id += m;
  }
  std::vector<std::size_t> junction_id(n + 2, 0);  // boxes 0 and n+1 mean the unbounded region
  for (std::size_t j = 2; j < n; j += 2) {
    junction_id[j] = next_id++;
    d.labels_.push_back(WhiteRegion{WhiteRegion::Kind::kJunction, j, 0}.label());
  }
  d.vertex_count_ = next_id;

  // Rotation lists, counterclockwise, per white region.
  std::vector<std::vector<std::size_t>> rotation(d.vertex_count_);
  std::vector<std::size_t> first_edge(n + 1), last_edge(n + 1);

  for (std::size_t i = 1; i <= n; i += 2) {
    const std::size_t len = small_magnitude(cf.coefficient(i));
    const std::size_t start = junction_id[i - 1];
    const std::size_t end = junction_id[i + 1];
    first_edge[i] = d.edges_.size();
    for (std::size_t k = 1; k <= len; ++k) {
      const std::size_t tail = k == 1 ? start : bigon_base[i] + k - 2;
      const std::size_t head = k == len ? end : bigon_base[i] + k - 1;
      d.edges_.push_back({tail, head, i, k});
    }
    last_edge[i] = d.edges_.size() - 1;
    for (std::size_t k = 1; k < len; ++k) {
      const std::size_t e = first_edge[i] + k - 1;
      rotation[bigon_base[i] + k - 1] = {head_dart(e), tail_dart(e + 1)};
    }
  }
  std::vector<std::size_t> bundle_start(n + 1);
  for (std::size_t j = 2; j < n; j += 2) {
    bundle_start[j] = d.edges_.size();
    const std::size_t len = small_magnitude(cf.coefficient(j));
    for (std::size_t k = 1; k <= len; ++k) d.edges_.push_back({junction_id[j], 0, j, k});
  }

  // The odd boxes form a cycle through the unbounded region; every bundle lies
  // on the same side of it. Going around the cycle, each vertex sees: the
  // forward edge, the backward edge, then the interior edges.
  for (std::size_t j = 2; j < n; j += 2) {
    auto& rot = rotation[junction_id[j]];
    rot.push_back(tail_dart(first_edge[j + 1]));
    rot.push_back(head_dart(last_edge[j - 1]));
    const std::size_t len = small_magnitude(cf.coefficient(j));
    for (std::size_t k = len; k >= 1; --k) rot.push_back(tail_dart(bundle_start[j] + k - 1));
  }
  {
    auto& rot = rotation[0];
    rot.push_back(tail_dart(first_edge[1]));
    rot.push_back(head_dart(last_edge[n]));
    for (std::size_t j = n - 1; j >= 2; j -= 2) {
      const std::size_t len = small_magnitude(cf.coefficient(j));
      for (std::size_t k = 1; k <= len; ++k) rot.push_back(head_dart(bundle_start[j] + k - 1));
    }
  }

  const std::size_t darts = 2 * d.edges_.size();
  d.next_ccw_.assign(darts, 0);
  d.prev_ccw_.assign(darts, 0);
  for (const auto& rot : rotation) {
    for (std::size_t a = 0; a < rot.size(); ++a) {
      const std::size_t b = (a + 1) % rot.size();
      d.next_ccw_[rot[a]] = rot[b];
      d.prev_ccw_[rot[b]] = rot[a];
    }
  }

  const std::size_t faces = d.black_region_count();
  if (d.vertex_count_ + faces != d.edges_.size() + 2)
    throw CrossCheckError("template embedding of [" + cf.str() + "] is not planar");

  // Strand tracing on the medial graph. State 2*dart + side means "entering
  // the crossing of edge(dart) next to dart's origin, on its counterclockwise
  // (side 0) or clockwise (side 1) flank". Passing straight through keeps the
  // flank and swaps the dart; the medial edge then turns to the neighbouring
  // dart around the far region, flipping the flank.
  auto advance = [&](std::size_t state) {
    const std::size_t far = (state / 2) ^ 1;
    return state % 2 == 0 ? 2 * d.next_ccw_[far] + 1 : 2 * d.prev_ccw_[far];
  };
  auto reverse = [](std::size_t state) { return 2 * ((state / 2) ^ 1) + state % 2; };

  const std::size_t states = 2 * darts;
  std::vector<char> seen(states, 0);
  d.passes_.assign(d.edges_.size(), {false, false});
  for (std::size_t s0 = 0; s0 < states; ++s0) {
    if (seen[s0]) continue;
    ++d.components_;
    std::size_t s = s0;
    do {
      seen[s] = 1;
      const std::size_t dart = s / 2;
      auto& pass = d.passes_[dart / 2];
      (s % 2 == 0 ? pass.first_tail_to_head : pass.second_tail_to_head) = dart % 2 == 0;
      s = advance(s);
    } while (s != s0);
    s = reverse(s0);
    do {
      seen[s] = 1;
      s = advance(s);
    } while (s != reverse(s0));
  }
  return d;
}

std::size_t TemplateDiagram::black_region_count() const {
  const std::size_t darts = 2 * edges_.size();
  std::vector<char> seen(darts, 0);
  std::size_t faces = 0;
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (seen[d0]) continue;
    ++faces;
    std::size_t d = d0;
    do {
      seen[d] = 1;
      d = next_ccw_[d ^ 1];
    } while (d != d0);
  }
  return faces;
}

bool TemplateDiagram::strands_parallel(std::size_t region) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].region != region) continue;
    const bool same_white = passes_[e].first_tail_to_head == passes_[e].second_tail_to_head;
    // Odd boxes twist along the white axis, even boxes along the black axis.
    return region % 2 == 1 ? same_white : !same_white;
  }
  throw std::out_of_range("no twist region " + std::to_string(region));
}

std::size_t component_count(const ContinuedFraction& cf) {
  return TemplateDiagram::assemble(cf).components_;
}

std::vector<CrossingInfo> classify_crossings(const TemplateDiagram& d) {
  std::vector<CrossingInfo> out;
  out.reserve(d.crossing_count());
  for (std::size_t e = 0; e < d.crossing_count(); ++e) {
    const auto& edge = d.edges()[e];
    const auto& pass = d.passes()[e];
    // Type II when the strands cross the white axis in opposite directions.
    const CrossingType type = pass.first_tail_to_head == pass.second_tail_to_head ? CrossingType::kTypeI
                                                                                  : CrossingType::kTypeII;
    out.push_back({edge.region, edge.position, d.regions()[edge.region - 1].crossing_sign(), type,
                   edge.tail, edge.head});
  }
  return out;
}

namespace {

ContinuedFraction parity_skeleton(const ContinuedFraction& cf) {
  std::vector<ExactInt> cs;
  cs.reserve(cf.size());
  for (const auto& c : cf.coefficients()) cs.emplace_back(c.sign() * (c.is_odd() ? 1 : 2));
  return ContinuedFraction(std::move(cs));
}

struct TableRow {
  std::string_view parity;  // 'o' odd, 'e' even
  std::array<int, 5> weights;  // mu = sum weights[i] * c_{i+1}
};

constexpr std::array kTableRows{
    TableRow{"o", {0, 0, 0, 0, 0}},
    TableRow{"ooo", {-1, 1, -1, 0, 0}},
    TableRow{"ooe", {0, 0, -1, 0, 0}},
    TableRow{"oee", {0, 0, 0, 0, 0}},
    TableRow{"ooooe", {-1, 1, -1, 0, 0}},
    TableRow{"oooeo", {0, 0, -1, 1, -1}},
    TableRow{"oooee", {-1, 1, -1, 0, -1}},
    TableRow{"ooeoe", {0, 0, -1, 0, 0}},
    TableRow{"eoooe", {-1, 0, 0, 0, -1}},
    TableRow{"ooeeo", {-1, 1, -1, 1, -1}},
    TableRow{"oeoeo", {0, 0, 0, 0, 0}},
    TableRow{"ooeee", {0, 0, -1, 0, -1}},
    TableRow{"oeeoe", {0, 0, 0, 0, -1}},
    TableRow{"eooee", {-1, 0, 0, 0, 0}},
    TableRow{"oeeee", {0, 0, 0, 0, 0}},
    TableRow{"eeoee", {0, 0, 0, 0, 0}},
};

std::string parity_pattern(const ContinuedFraction& cf) {
  std::string s;
  for (const auto& c : cf.coefficients()) s += c.is_odd() ? 'o' : 'e';
  return s;
}

std::optional<ExactInt> apply_table(const ContinuedFraction& cf) {
  const std::string pattern = parity_pattern(cf);
  for (const auto& row : kTableRows) {
    if (row.parity != pattern) continue;
    ExactInt total;
    for (std::size_t i = 0; i < cf.size(); ++i) total += ExactInt(row.weights[i]) * cf.coefficient(i + 1);
    return total;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExactInt> tabulated_mu(const ContinuedFraction& cf) {
  if (cf.size() != 1 && cf.size() != 3 && cf.size() != 5) return std::nullopt;
  if (auto direct = apply_table(cf)) return direct;
  return apply_table(cf.reversed());
}

MuValue mu(const ContinuedFraction& cf) {
  const TemplateDiagram skeleton = TemplateDiagram::build(parity_skeleton(cf));
  std::vector<CrossingType> types(cf.size() + 1, CrossingType::kTypeI);
  for (const auto& crossing : classify_crossings(skeleton)) types[crossing.region] = crossing.type;

  MuValue value;
  for (std::size_t i = 1; i <= cf.size(); ++i) {
    const TwistRegion region{i, cf.coefficient(i)};
    RegionCorrection rc{i, region.coefficient, region.crossing_sign(), types[i], ExactInt(0)};
    if (rc.type == CrossingType::kTypeII) rc.contribution = ExactInt(rc.sign) * region.coefficient.abs();
    value.total += rc.contribution;
    value.regions.push_back(std::move(rc));
  }
  value.tabulated = tabulated_mu(cf);
  if (value.tabulated && *value.tabulated != value.total)
    throw CrossCheckError("correction term of [" + cf.str() + "]: diagram gives " + value.total.str() +
                          ", closed-form table gives " + value.tabulated->str());
  return value;
}

GoeritzMatrix goeritz_from_diagram(const TemplateDiagram& d) {
  WhiteRegionBasis basis(d.expansion());
  const std::size_t n = basis.size();
  IntMatrix g(n, n);
  const auto crossings = classify_crossings(d);
  for (const auto& x : crossings) {
    if (x.white_a == x.white_b) continue;  // a kink touches one white region twice
    const ExactInt weight(-x.sign);
    if (x.white_a != 0 && x.white_b != 0) {
      g(x.white_a - 1, x.white_b - 1) += weight;
      g(x.white_b - 1, x.white_a - 1) += weight;
    }
    // Diagonal entries are minus the row sums of the full pre-Goeritz matrix.
    if (x.white_a != 0) g(x.white_a - 1, x.white_a - 1) -= weight;
    if (x.white_b != 0) g(x.white_b - 1, x.white_b - 1) -= weight;
  }
  return {std::move(basis), std::move(g)};
}

}  // namespace twobridge
