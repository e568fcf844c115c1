#include "permutokit/sampling.hpp"

#include <algorithm>

namespace permutokit::sampling {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

setcomp::Composition random_composition(const GroundSet& ground, Rng& rng) {
  const std::size_t n = ground.size();
  std::vector<Mask> lumps(n, 0);
  for (std::size_t a = 0; a < n; ++a) lumps[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1))] |= Mask{1} << a;
  lumps.erase(std::remove(lumps.begin(), lumps.end(), Mask{0}), lumps.end());
  return setcomp::Composition(ground, std::move(lumps));
}

boolfun::BooleanFunction random_boolean_function(const GroundSet& ground, std::int64_t lo, std::int64_t hi, Rng& rng) {
  std::vector<std::int64_t> values(std::size_t{1} << ground.size(), 0);
  for (std::size_t a = 1; a < values.size(); ++a) values[a] = uniform(rng, lo, hi);
  return boolfun::BooleanFunction(ground, std::move(values));
}

boolfun::BooleanFunction random_submodular(const GroundSet& ground, Rng& rng) {
  const std::size_t n = ground.size();
  auto z = boolfun::z_of_point(random_lattice_point(ground, -2, 2, rng));
  const int terms = static_cast<int>(uniform(rng, 0, 3));
  for (int k = 0; k < terms; ++k) {
    const Mask b = n == 0 ? 0 : static_cast<Mask>(uniform(rng, 1, static_cast<std::int64_t>(ground.full())));
    const std::int64_t r = uniform(rng, 1, std::max<std::int64_t>(1, popcount(b)));
    const std::int64_t c = uniform(rng, 1, 2);
    std::vector<std::int64_t> values(std::size_t{1} << n);
    for (Mask a = 0; a < values.size(); ++a) values[a] = c * std::min<std::int64_t>(popcount(a & b), r);
    z = z + boolfun::BooleanFunction(ground, std::move(values));
  }
  return z;
}

LatticePoint random_lattice_point(const GroundSet& ground, std::int64_t lo, std::int64_t hi, Rng& rng) {
  std::vector<std::int64_t> coords(ground.size());
  for (auto& c : coords) c = uniform(rng, lo, hi);
  return LatticePoint(ground, std::move(coords));
}

points::PermPoint random_point(const setcomp::Composition& orbit, Rng& rng) {
  std::vector<points::Rational> coords;
  for (std::size_t a = 0; a < orbit.ground().size(); ++a) {
    std::int64_t num = 0;
    while (num == 0) num = uniform(rng, -6, 6);
    coords.emplace_back(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(uniform(rng, 1, 6))));
  }
  return points::PermPoint(orbit, std::move(coords));
}

points::PermPoint random_point(const GroundSet& ground, Rng& rng) {
  return random_point(random_composition(ground, rng), rng);
}

}  // namespace permutokit::sampling
