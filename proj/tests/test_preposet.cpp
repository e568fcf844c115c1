#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace tsupport;
using namespace permutokit::preposet;

TEST_CASE("preposet counts") {
  CHECK(enumerate_preposets(N(0)).size() == 1);
  CHECK(enumerate_preposets(N(1)).size() == 1);
  CHECK(enumerate_preposets(N(2)).size() == 4);
  CHECK(enumerate_preposets(N(3)).size() == 29);
  CHECK(enumerate_preposets(N(4)).size() == 355);
  CHECK(enumerate_aug_preposets(N(3)).size() == 30);
}

TEST_CASE("enumeration yields distinct transitive relations") {
  const auto all = enumerate_preposets(N(4));
  CHECK(std::set<Preposet>(all.begin(), all.end()).size() == all.size());
  for (const auto& p : all)
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c)
          if (a != c && p.related(a, b) && p.related(b, c)) CHECK(p.related(a, c));
}

TEST_CASE("non-transitive input is rejected") {
  CHECK_THROWS_AS(P(N(3), {{1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(P(N(2), {{1, 5}}), ValidationError);
}

TEST_CASE("order on preposets") {
  const auto g = N(2);
  const auto q = P(g, {{1, 2}});
  const auto p = Preposet::antichain(g);
  CHECK(preposet_leq(q, p));
  CHECK_FALSE(preposet_leq(p, q));
  CHECK(preposet_leq(p, p));
  CHECK(preposet_leq(AugPreposet::bottom(g), q));
  CHECK_FALSE(preposet_leq(q, AugPreposet::bottom(g)));
}

TEST_CASE("multiplication") {
  CHECK(o_mul(P(N(2), {{1, 2}}), Preposet::antichain(L({3}))) == AugPreposet(P(N(3), {{1, 2}})));
  CHECK(o_mul(P(N(2), {{1, 2}}), AugPreposet::bottom(L({3}))).is_bottom());
  CHECK(o_mul(Preposet::antichain(L({1})), Preposet::antichain(L({2, 3}))) == AugPreposet(Preposet::antichain(N(3))));
}

TEST_CASE("comultiplication") {
  const auto g = N(2);
  const auto [a, b] = o_comul(Preposet::antichain(g), L({1}), L({2}));
  CHECK(a == AugPreposet(Preposet::antichain(L({1}))));
  CHECK(b == AugPreposet(Preposet::antichain(L({2}))));
  const auto [c, d] = o_comul(P(g, {{2, 1}}), L({1}), L({2}));
  CHECK(c.is_bottom());
  CHECK(d.is_bottom());
  const auto [e, f] = o_comul(AugPreposet::bottom(g), L({1}), L({2}));
  CHECK(e.is_bottom());
  CHECK(f.is_bottom());
}

TEST_CASE("total preposets and compositions") {
  CHECK(total_of_composition(C({{1}, {2}})) == P(N(2), {{1, 2}}));
  CHECK(total_of_composition(C({{1, 2, 3}})) == Preposet::complete(N(3)));
  CHECK(composition_of_total(P(N(2), {{1, 2}})) == C({{1}, {2}}));
  CHECK(composition_of_total(Preposet::complete(N(3))) == C({{1, 2, 3}}));
  CHECK_THROWS_AS(composition_of_total(Preposet::antichain(N(2))), ValidationError);
}

TEST_CASE("compositions embed as total preposets preserving order") {
  const auto all = setcomp::all_compositions(N(3));
  std::size_t totals = 0;
  for (const auto& p : enumerate_preposets(N(3))) totals += p.is_total() ? 1 : 0;
  CHECK(totals == all.size());
  for (const auto& f : all) {
    CHECK(composition_of_total(total_of_composition(f)) == f);
    for (const auto& g : all)
      CHECK(setcomp::refines(g, f) == preposet_leq(total_of_composition(g), total_of_composition(f)));
  }
}

TEST_CASE("upward pairs") {
  CHECK(upward_pairs(P(N(2), {{1, 2}})) == std::vector<UpwardPair>{{0b01, 0b10}});
  CHECK(upward_pairs(Preposet::antichain(N(2))).size() == 2);
  CHECK(upward_pairs(Preposet::complete(N(2))).empty());
}

TEST_CASE("split order agrees with the order on total preposets") {
  for (const auto& p : enumerate_preposets(N(4)))
    for (Mask s = 1; s < 15; ++s) {
      const Mask t = 15 & ~s;
      const auto st = setcomp::Composition(N(4), {s, t});
      CHECK(split_leq(s, t, p) == preposet_leq(total_of_composition(st), p));
    }
}

TEST_CASE("relabel preserves the relation") {
  const auto sigma = setcomp::Bijection::from_pairs({{"a", 2}, {"b", 1}});
  CHECK(relabel(sigma, P(N(2), {{1, 2}})) == AugPreposet(P(L({"a", "b"}), {{"b", "a"}})));
  CHECK(relabel(sigma, AugPreposet::bottom(N(2))).is_bottom());
}
