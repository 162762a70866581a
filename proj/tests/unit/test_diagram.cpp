#include <doctest.h>

#include <map>

#include "support/oracles.hpp"
#include "twobridge/diagram.hpp"
#include "twobridge/error.hpp"
#include "twobridge/goeritz.hpp"

using namespace twobridge;
namespace t = twobridge::testing;

namespace {

// mu summed over every crossing of the full template.
ExactInt full_mu(const ContinuedFraction& cf) {
  ExactInt total;
  for (const auto& x : classify_crossings(TemplateDiagram::build(cf)))
    if (x.type == CrossingType::kTypeII) total += ExactInt(x.sign);
  return total;
}

std::vector<CrossingType> region_types(const ContinuedFraction& cf) {
  std::vector<CrossingType> types;
  for (const auto& r : mu(cf).regions) types.push_back(r.type);
  return types;
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("template construction") {
  const TemplateDiagram trefoil = TemplateDiagram::build({3});
  CHECK(trefoil.regions().size() == 1);
  CHECK(trefoil.regions()[0].horizontal());
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.component_count() == 1);

  const TemplateDiagram d = TemplateDiagram::build({3, -3, -5});
  CHECK(d.regions().size() == 3);
  CHECK(d.crossing_count() == 11);
  CHECK(d.component_count() == 1);
  CHECK(d.white_region_count() == 3 + 5);  // |c1| + |c3| white regions, e0 included
  CHECK(d.white_region_count() + d.black_region_count() == d.crossing_count() + 2);

  CHECK_THROWS_WITH_AS(TemplateDiagram::build({2}), doctest::Contains("link, not a knot"), InputError);
  CHECK_THROWS_AS(TemplateDiagram::build({2, 3}), InputError);
  CHECK(component_count(ContinuedFraction{2}) == 2);
  CHECK(component_count(ContinuedFraction{2, 2, 2}) == 2);
}

TEST_CASE("crossing classification examples") {
  CHECK(region_types({3, -3, -5}) ==
        std::vector<CrossingType>{CrossingType::kTypeII, CrossingType::kTypeII, CrossingType::kTypeII});
  const MuValue m = mu({3, -3, -5});
  CHECK(m.regions[0].contribution == ExactInt(-3));
  CHECK(m.regions[1].contribution == ExactInt(-3));
  CHECK(m.regions[2].contribution == ExactInt(5));
  CHECK(m.total == ExactInt(-1));

  CHECK(region_types({3, -2, -4, -1, -2}) ==
        std::vector<CrossingType>{CrossingType::kTypeI, CrossingType::kTypeI, CrossingType::kTypeI,
                                  CrossingType::kTypeI, CrossingType::kTypeII});
  for (const auto& x : classify_crossings(TemplateDiagram::build({3, -2, -2, -4, -4})))
    CHECK(x.type == CrossingType::kTypeI);
}

TEST_CASE("correction term examples") {
  CHECK(mu({3, -3, -5}).total == ExactInt(-1));
  CHECK(mu({3, -2, -4, -1, -2}).total == ExactInt(2));
  CHECK(mu({2, -3, 3}).total == ExactInt(-2));
  CHECK(mu({2, -3, 3}).tabulated == ExactInt(-2));
  CHECK(mu({3}).total == ExactInt(0));
  CHECK_FALSE(tabulated_mu({3, 2, 3, 2, 3, 2, 3}).has_value());
}

TEST_CASE("Goeritz matrix from the diagram") {
  CHECK(goeritz_from_diagram(TemplateDiagram::build({3})).entries == goeritz_matrix({3}).entries);
  CHECK(goeritz_from_diagram(TemplateDiagram::build({2, -3, 3})).entries == goeritz_matrix({2, -3, 3}).entries);
  CHECK(goeritz_from_diagram(TemplateDiagram::build({1})).entries.rows() == 0);
}

TEST_CASE("property: per-region constancy and the sign rule") {
  t::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t length = 2 * static_cast<std::size_t>(t::uniform(rng, 0, 3)) + 1;
    const auto cs = t::random_knot(rng, length, 6);
    const TemplateDiagram d = TemplateDiagram::build(t::make_cf(cs));
    std::map<std::size_t, std::pair<int, CrossingType>> seen;
    for (const auto& x : classify_crossings(d)) {
      const long c = cs[x.region - 1];
      const int eps = c > 0 ? 1 : -1;
      CHECK(x.sign == (x.region % 2 == 1 ? -eps : eps));
      auto [it, fresh] = seen.emplace(x.region, std::make_pair(x.sign, x.type));
      if (!fresh) CHECK(it->second == std::make_pair(x.sign, x.type));
    }
    CHECK(seen.size() == cs.size());
  }
}

TEST_CASE("property: diagram Goeritz matrix equals the closed formula") {
  t::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t length = 2 * static_cast<std::size_t>(t::uniform(rng, 0, 3)) + 1;
    const ContinuedFraction cf = t::make_cf(t::random_knot(rng, length, 6));
    CHECK(goeritz_from_diagram(TemplateDiagram::build(cf)).entries == goeritz_matrix(cf).entries);
  }
}

TEST_CASE("property: reduced-template mu equals the full-template mu") {
  t::Rng rng(43);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t length = 2 * static_cast<std::size_t>(t::uniform(rng, 0, 4)) + 1;
    const ContinuedFraction cf = t::make_cf(t::random_knot(rng, length, 9));
    CHECK(mu(cf).total == full_mu(cf));
  }
}

TEST_CASE("property: even expansions have no type II crossings") {
  t::Rng rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t length = 2 * static_cast<std::size_t>(t::uniform(rng, 0, 4)) + 1;
    const ContinuedFraction cf = t::make_cf(t::random_even_expansion(rng, length, 9));
    for (const auto& x : classify_crossings(TemplateDiagram::build(cf))) CHECK(x.type == CrossingType::kTypeI);
  }
}

TEST_CASE("property: reversal and mirror act on mu as expected") {
  t::Rng rng(45);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t length = 2 * static_cast<std::size_t>(t::uniform(rng, 0, 3)) + 1;
    const ContinuedFraction cf = t::make_cf(t::random_knot(rng, length, 9));
    CHECK(mu(cf.mirrored()).total == -mu(cf).total);
    CHECK(component_count(cf.reversed()) == 1);
  }
}

}
