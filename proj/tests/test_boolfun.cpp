#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "checks.hpp"

using namespace tsupport;
using namespace permutokit::boolfun;

namespace {

bool submodular_all_pairs(const BooleanFunction& z) {
  for (Mask a = 0; a < z.values().size(); ++a)
    for (Mask b = 0; b < z.values().size(); ++b)
      if (z(a) + z(b) < z(a | b) + z(a & b)) return false;
  return true;
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(Z(N(1), {1, 0}), ValidationError);
  CHECK_THROWS_AS(Z(N(2), {0, 1}), ValidationError);
  CHECK(BooleanFunction::zero(N(2)).height() == 0);
}

TEST_CASE("multiplication") {
  CHECK(bf_mul(BooleanFunction::zero(N(1)), BooleanFunction::zero(L({2}))) == BooleanFunction::zero(N(2)));
  const auto h1 = pt(N(2), {2, -1});
  const auto h2 = pt(L({3}), {4});
  CHECK(bf_mul(z_of_point(h1), z_of_point(h2)) == z_of_point(juxtapose(h1, h2)));
}

TEST_CASE("multiplication interleaves ground sets") {
  const auto z1 = Z(L({1, 3}), {0, 1, 2, 5});
  const auto z2 = Z(L({2}), {0, 7});
  const auto z = bf_mul(z1, z2);
  REQUIRE(z.ground() == N(3));
  CHECK(z(0b001) == 1);
  CHECK(z(0b010) == 7);
  CHECK(z(0b100) == 2);
  CHECK(z(0b111) == 12);
}

TEST_CASE("comultiplication") {
  const auto z = Z(N(2), {0, 1, 1, 2});
  const auto [a, b] = bf_comul(z, L({1}), L({2}));
  CHECK(a == Z(L({1}), {0, 1}));
  CHECK(b == Z(L({2}), {0, 1}));
  const auto [c, d] = bf_comul(z, N(2), GroundSet());
  CHECK(c == z);
  CHECK(d == BooleanFunction::zero(GroundSet()));
}

TEST_CASE("modular functions") {
  CHECK(z_of_point(pt(N(3), {0, 0, 0})) == BooleanFunction::zero(N(3)));
  CHECK(z_of_point(pt(N(2), {1, 1})) == Z(N(2), {0, 1, 1, 2}));
}

TEST_CASE("equivalence") {
  const auto z = Z(N(2), {0, 3, -1, 4});
  CHECK(bf_equivalent(z, z) == pt(N(2), {0, 0}));
  CHECK(bf_equivalent(BooleanFunction::zero(N(2)), z_of_point(pt(N(2), {1, 1}))) == pt(N(2), {1, 1}));
  CHECK_FALSE(bf_equivalent(BooleanFunction::zero(N(2)), Z(N(2), {0, 0, 0, 1})).has_value());
}

TEST_CASE("generalized permutohedra") {
  CHECK(is_generalized_permutohedron(z_of_point(pt(N(3), {1, -2, 5}))));
  CHECK(is_generalized_permutohedron(permutohedron(3)));
  CHECK_FALSE(is_generalized_permutohedron(Z(N(2), {0, 0, 0, 1})));
}

TEST_CASE("local submodularity agrees with the all-pairs inequality") {
  checks::Rng rng(7);
  for (int r = 0; r < 3000; ++r) {
    const auto z = permutokit::sampling::random_boolean_function(N(3), -2, 2, rng);
    CHECK(is_generalized_permutohedron(z) == submodular_all_pairs(z));
  }
  for (int r = 0; r < 300; ++r) CHECK(is_generalized_permutohedron(permutokit::sampling::random_submodular(N(4), rng)));
}

TEST_CASE("heights along a composition") {
  const auto z = Z(N(2), {0, 1, 1, 2});
  CHECK(heights_along(z, C({{1}, {2}})) == std::vector<std::int64_t>{1, 1});
  CHECK(heights_along(z, C({{1, 2}})) == std::vector<std::int64_t>{2});
}

TEST_CASE("comultiplication components") {
  const auto z = permutohedron(3);
  const auto f = C({{2}, {1, 3}});
  const auto first = comul_component(z, f, 0);
  const auto second = comul_component(z, f, 1);
  CHECK(first == Z(L({2}), {0, 3}));
  CHECK(second == bf_comul(z, L({2}), L({1, 3})).second);
  CHECK(first.height() + second.height() == z.height());
}

TEST_CASE("relabel") {
  const auto sigma = setcomp::Bijection::from_pairs({{"a", 2}, {"b", 1}});
  const auto z = Z(N(2), {0, 5, 7, 9});
  const auto r = relabel(sigma, z);
  CHECK(r.ground() == L({"a", "b"}));
  CHECK(r(0b01) == 7);
  CHECK(r(0b10) == 5);
  CHECK(r.height() == 9);
}

TEST_CASE("height additivity") {
  const auto o = checks::height_additivity(300, 3);
  CHECK_MESSAGE(o.ok, o.detail);
}

TEST_CASE("bf laws") {
  const auto inst = permutokit::axioms::bf_instance(false);
  for (int n = 0; n <= 3; ++n) {
    const auto o = checks::laws_pass(permutokit::axioms::check_all(inst, N(n), 300, 11));
    CHECK_MESSAGE(o.ok, o.detail);
  }
}
