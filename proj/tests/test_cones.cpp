#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace tsupport;
using namespace permutokit::cones;
using permutokit::preposet::AugPreposet;
using permutokit::preposet::Preposet;
using permutokit::preposet::enumerate_preposets;
using permutokit::preposet::total_of_composition;

TEST_CASE("coroot and pairing") {
  const auto g = N(3);
  CHECK(coroot(1, 2, g) == H(g, {1, -1, 0}));
  CHECK(pairing(H(g, {1, -1, 0}), L({1})) == 1);
  CHECK(pairing(H(g, {-2, 1, 1}), L({1, 2})) == -1);
  CHECK(pairing(H(g, {-2, 1, 1}), g) == 0);
  CHECK_THROWS_AS(coroot(1, 1, g), ValidationError);
  CHECK_THROWS_AS(H(g, {1, 0, 0}), ValidationError);
}

TEST_CASE("cone membership") {
  const auto g = N(3);
  const AugPreposet p = total_of_composition(C({{1}, {2}, {3}}));
  CHECK(cone_contains(p, coroot(2, 1, g)));
  CHECK_FALSE(cone_contains(p, coroot(1, 2, g)));
  CHECK_FALSE(cone_contains(AugPreposet::bottom(g), CoweightVector::zero(g)));
}

TEST_CASE("cone lattice points") {
  const auto g = N(2);
  const auto pts = cone_lattice_points(total_of_composition(C({{1}, {2}})), Box(3));
  const std::set<CoweightVector> expected{H(g, {0, 0}), H(g, {-1, 1}), H(g, {-2, 2}), H(g, {-3, 3})};
  CHECK(std::set<CoweightVector>(pts.begin(), pts.end()) == expected);
  CHECK(cone_lattice_points(AugPreposet::bottom(g), Box(3)).empty());
  CHECK(cone_lattice_points(Preposet::complete(g), Box(1)).size() == 3);
}

TEST_CASE("bound zero gives the origin") {
  for (const auto& p : enumerate_preposets(N(3))) {
    const auto pts = cone_lattice_points(p, Box(0));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == CoweightVector::zero(N(3)));
  }
}

TEST_CASE("product map") {
  CHECK(cone_product_map(H(N(2), {1, -1}), H(L({3}), {0})) == H(N(3), {1, -1, 0}));
  CHECK(cone_product_map(CoweightVector::zero(N(1)), CoweightVector::zero(L({2}))) == CoweightVector::zero(N(2)));
  const auto h = cone_product_map(coroot(2, 1, N(2)), CoweightVector::zero(L({3})));
  CHECK(h == H(N(3), {-1, 1, 0}));
  const auto pq = permutokit::preposet::o_mul(P(N(2), {{1, 2}}), Preposet::antichain(L({3})));
  CHECK(cone_contains(pq, h));
}

TEST_CASE("faces") {
  const auto p = total_of_composition(C({{1}, {2}, {3}}));
  CHECK(cone_face(p, 0b001, 0b110) == AugPreposet(P(N(3), {{2, 3}})));
  CHECK(cone_face(p, 0b110, 0b001).is_bottom());
  const auto a = Preposet::antichain(N(3));
  for (Mask s = 0; s <= 7; ++s) CHECK(cone_face(a, s, 7 & ~s) == AugPreposet(a));
}

TEST_CASE("halfspace cone equals the cone generated by coroots") {
  for (int n = 1; n <= 3; ++n) {
    const auto g = N(n);
    const auto box = box_points(g, Box(3));
    for (const auto& p : enumerate_preposets(g)) {
      std::vector<std::vector<std::int64_t>> gens;
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
          if (a != b && p.related(b, a)) gens.push_back(coroot(g[a], g[b], g).coords());
      const auto pts = cone_lattice_points(p, Box(3));
      const std::set<CoweightVector> in(pts.begin(), pts.end());
      for (const auto& h : box) CHECK(in.count(h) == (oracles::nonneg_combination(gens, h.coords()) ? 1u : 0u));
    }
  }
}

TEST_CASE("coroot dichotomy") {
  for (int n = 2; n <= 3; ++n) {
    const auto g = N(n);
    for (const auto& p : enumerate_preposets(g))
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
          if (a != b) CHECK(cone_contains(p, coroot(g[a], g[b], g)) == p.related(b, a));
  }
}

TEST_CASE("cone membership is natural under relabeling") {
  const auto sigma = setcomp::Bijection::from_pairs({{"x", 3}, {"y", 1}, {"z", 2}});
  for (const auto& p : enumerate_preposets(N(3)))
    for (const auto& h : box_points(N(3), Box(2)))
      CHECK(cone_contains(p, h) == cone_contains(permutokit::preposet::relabel(sigma, p), relabel(sigma, h)));
}
