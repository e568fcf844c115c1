#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "checks.hpp"

using namespace tsupport;
using namespace permutokit::opens;
using permutokit::preposet::AugPreposet;
using permutokit::preposet::Preposet;

TEST_CASE("opens of preposets") {
  const auto g = N(2);
  CHECK(open_of_preposet(Preposet::complete(g)).orbits() == std::set<OrbitTuple>{{C({{1, 2}})}});
  CHECK(open_of_preposet(AugPreposet::bottom(g)).size() == 0);
  CHECK(open_of_preposet(Preposet::antichain(N(3))).size() == 13);
  CHECK(open_of_preposet(P(g, {{1, 2}})).orbits() == std::set<OrbitTuple>{{C({{1, 2}})}, {C({{1}, {2}})}});
}

TEST_CASE("opens are down-closed") {
  const auto shape = C({{1, 2, 3}});
  const ToricOpen u(shape, {{C({{1}, {2}, {3}})}});
  CHECK(u.is_down_closed());
  CHECK(u.size() == 4);
  for (const auto& p : permutokit::preposet::enumerate_preposets(N(3))) CHECK(open_of_preposet(p).is_down_closed());
}

TEST_CASE("opens determine their preposets") {
  std::set<std::set<OrbitTuple>> seen;
  const auto all = permutokit::preposet::enumerate_aug_preposets(N(4));
  for (const auto& p : all) seen.insert(open_of_preposet(p).orbits());
  CHECK(seen.size() == all.size());
}

TEST_CASE("pullbacks of the whole space") {
  for (const auto& f : setcomp::all_compositions(N(3)))
    for (const auto& g : setcomp::coarsenings(f)) {
      CHECK(pullback_comul(ToricOpen::whole(f), g) == ToricOpen::whole(g));
      CHECK(pullback_mul(ToricOpen::whole(g), f) == ToricOpen::whole(f));
    }
}

TEST_CASE("pullback along multiplication") {
  const auto f = C({{1}, {2}});
  const auto up = pullback_mul(open_of_preposet(P(N(2), {{1, 2}})), f);
  CHECK(up == ToricOpen::whole(f));
  CHECK(up.size() == 1);
  CHECK(pullback_mul(open_of_preposet(P(N(2), {{2, 1}})), f).size() == 0);
}

TEST_CASE("products of opens") {
  const auto a = ToricOpen::whole(C({{1, 2}}));
  const auto b = ToricOpen::whole(C({{3}}));
  CHECK(open_product({a, b}) == ToricOpen::whole(C({{1, 2}, {3}})));
  CHECK(open_product({a, b}).size() == a.size() * b.size());
  CHECK(open_product({ToricOpen::empty(C({{1}})), ToricOpen::empty(C({{2}}))}).size() == 0);
  const auto u = open_of_preposet(P(N(2), {{1, 2}}));
  const auto v = open_of_preposet(Preposet::antichain(L({3, 4})));
  CHECK(open_product({u, v}).size() == u.size() * v.size());
}

TEST_CASE("pullbacks compose along refinements") {
  const auto all = setcomp::all_compositions(N(3));
  for (const auto& p : permutokit::preposet::enumerate_aug_preposets(N(3))) {
    const auto u = open_of_preposet(p);
    for (const auto& f : all)
      for (const auto& g : setcomp::coarsenings(f)) {
        const auto direct = pullback_mul(u, f);
        const auto staged = pullback_mul(pullback_mul(u, g), f);
        CHECK(direct == staged);
        CHECK(direct.is_down_closed());
        CHECK(pullback_comul(pullback_comul(direct, g), setcomp::Composition::single_lump(N(3))) ==
              pullback_comul(direct, setcomp::Composition::single_lump(N(3))));
      }
  }
}

TEST_CASE("orbit formulas agree with points") {
  checks::Rng rng(29);
  for (int r = 0; r < 300; ++r) {
    const GroundSet g = N(static_cast<int>(permutokit::sampling::uniform(rng, 1, 4)));
    const auto f = permutokit::sampling::random_composition(g, rng);
    const auto k = permutokit::sampling::random_composition(g, rng);
    const auto x = permutokit::sampling::random_point(k, rng);
    // Comultiplication along the lumps of f, one lump at a time.
    OrbitTuple image;
    auto rest = x;
    for (std::size_t i = 0; i < f.length(); ++i) {
      const Mask lump = rest.ground().mask_of(g.subset(f.lump(i)));
      auto [head, tail] = permutokit::points::point_comul(rest, lump, rest.ground().full() & ~lump);
      image.push_back(head.orbit());
      rest = tail;
    }
    OrbitTuple other;
    for (std::size_t i = 0; i < f.length(); ++i)
      other.push_back(permutokit::sampling::random_composition(g.subset(f.lump(i)), rng));
    const auto whole = setcomp::Composition::single_lump(g);
    CHECK(pullback_comul(ToricOpen(f, {image}), whole).contains({k}));
    const ToricOpen u(f, {other});
    CHECK(pullback_comul(u, whole).contains({k}) == u.contains(image));
    std::vector<permutokit::points::PermPoint> parts;
    for (std::size_t i = 0; i < f.length(); ++i)
      parts.push_back(permutokit::sampling::random_point(g.subset(f.lump(i)), rng));
    auto prod = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) prod = permutokit::points::point_mul(prod, parts[i]);
    OrbitTuple tuple;
    for (const auto& y : parts) tuple.push_back(y.orbit());
    for (const auto& p : permutokit::preposet::enumerate_aug_preposets(g))
      CHECK(pullback_mul(open_of_preposet(p), f).contains(tuple) == open_of_preposet(p).contains({prod.orbit()}));
  }
}

TEST_CASE("indexing by opens") {
  for (int n = 0; n <= 3; ++n) {
    const auto report = check_indexing(N(n));
    CHECK_MESSAGE(report.passed, report.counterexample);
  }
  const auto broken = check_indexing(N(3), true);
  CHECK_FALSE(broken.passed);
  CHECK_FALSE(broken.counterexample.empty());
  CHECK_THROWS_AS(check_indexing(N(5)), permutokit::SizeGuardError);
}
