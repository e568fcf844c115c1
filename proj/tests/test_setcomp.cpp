#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tsupport;
using namespace permutokit::setcomp;

TEST_CASE("tits product") {
  CHECK(tits_product(C({{1, 2}, {3}}), C({{1, 3}, {2}})) == C({{1}, {2}, {3}}));
  for (const auto& f : all_compositions(N(3))) {
    CHECK(tits_product(f, Composition::single_lump(N(3))) == f);
    CHECK(tits_product(f, f) == f);
  }
}

TEST_CASE("tits product is associative") {
  const auto all = all_compositions(N(3));
  for (const auto& f : all)
    for (const auto& g : all)
      for (const auto& h : all) CHECK(tits_product(tits_product(f, g), h) == tits_product(f, tits_product(g, h)));
}

TEST_CASE("concatenate") {
  CHECK(concatenate(C({{1}, {2}}), C({{3}})) == C({{1}, {2}, {3}}));
  const auto k = C({{3, 4}, {5}});
  CHECK(concatenate(Composition::singletons(GroundSet()), k) == k);
  CHECK(concatenate(k, Composition::singletons(GroundSet())) == k);
  CHECK_THROWS_AS(concatenate(C({{1}}), C({{1, 2}})), ValidationError);
}

TEST_CASE("restrict") {
  const auto h = C({{1, 2}, {3}, {4, 5}});
  CHECK(restrict(h, L({2, 3, 5})) == C({{2}, {3}, {5}}));
  CHECK(restrict(h, h.ground()) == h);
  CHECK(restrict(h, Mask{0}).length() == 0);
  CHECK_THROWS_AS(restrict(h, L({6})), ValidationError);
}

TEST_CASE("refinement") {
  CHECK(refines(C({{1, 2}, {3}}), C({{1}, {2}, {3}})));
  CHECK_FALSE(refines(C({{1, 3}, {2}}), C({{1}, {2}, {3}})));
  for (const auto& f : all_compositions(N(3))) {
    CHECK(refines(f, f));
    for (const auto& g : coarsenings(f)) CHECK(refines(g, f));
  }
}

TEST_CASE("composition counts are ordered Bell numbers") {
  const std::vector<std::size_t> fubini{1, 1, 3, 13, 75};
  for (int n = 0; n <= 4; ++n) CHECK(all_compositions(N(n)).size() == fubini[n]);
}

TEST_CASE("coarsenings of a k-lump composition") {
  CHECK(coarsenings(C({{1}, {2}, {3}, {4}})).size() == 8);
}

TEST_CASE("relabel") {
  const auto sigma = Bijection::from_pairs({{"a", 1}, {"b", 2}, {"c", 3}});
  CHECK(relabel(sigma, C({{1, 2}, {3}})) == C({{"a", "b"}, {"c"}}));
  const auto f = C({{2}, {1, 3}});
  CHECK(relabel(Bijection::identity(f.ground()), f) == f);
}

TEST_CASE("relabel respects composition of bijections") {
  const auto sigma = Bijection::from_pairs({{"a", 1}, {"b", 2}, {"c", 3}});
  const auto tau = Bijection::from_pairs({{"x", "b"}, {"y", "c"}, {"z", "a"}});
  for (const auto& f : all_compositions(N(3))) CHECK(relabel(tau, relabel(sigma, f)) == relabel(compose(sigma, tau), f));
}

TEST_CASE("bijections reject non-injective maps") {
  CHECK_THROWS_AS(Bijection::from_pairs({{"a", 1}, {"b", 1}}), ValidationError);
}

TEST_CASE("permute lumps") {
  CHECK(permute_lumps(Perm::from_one_line({2, 1}), C({{1}, {2, 3}})) == C({{2, 3}, {1}}));
  const auto f = C({{1}, {2, 3}});
  CHECK(permute_lumps(Perm::identity(2), f) == f);
}

TEST_CASE("hat beta") {
  const auto f = C({{1}, {2}, {3}});
  CHECK(hat_beta(Perm::identity(1), f, Composition::single_lump(N(3))) == Perm::identity(3));
  const auto g = C({{1, 2}, {3}});
  const auto swap = Perm::from_one_line({2, 1});
  const auto bh = hat_beta(swap, f, g);
  CHECK(permute_lumps(bh, f) == tits_product(C({{3}, {1, 2}}), f));
  for (const auto& beta : all_perms(3)) CHECK(hat_beta(beta, f, f) == beta);
}

TEST_CASE("hat beta defining equation holds exhaustively") {
  for (const auto& f : all_compositions(N(4)))
    for (const auto& g : coarsenings(f))
      for (const auto& beta : all_perms(g.length()))
        CHECK(permute_lumps(hat_beta(beta, f, g), f) == tits_product(permute_lumps(beta, g), f));
}

TEST_CASE("compositions over string labels") {
  const auto f = C({{"b"}, {"a", 1}});
  CHECK(f.ground() == L({1, "a", "b"}));
  CHECK(to_string(f) == "(b|1,a)");
}

TEST_CASE("invalid compositions") {
  CHECK_THROWS_AS(C({{1}, {}}), ValidationError);
  CHECK_THROWS_AS(C({{1, 2}, {2}}), ValidationError);
}
