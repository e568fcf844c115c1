#pragma once

#include <cstdint>
#include <random>

#include "permutokit/boolfun.hpp"
#include "permutokit/lattice.hpp"
#include "permutokit/points.hpp"
#include "permutokit/preposet.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::sampling {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

setcomp::Composition random_composition(const GroundSet& ground, Rng& rng);

/// Independent values in [lo, hi] on every nonempty subset.
boolfun::BooleanFunction random_boolean_function(const GroundSet& ground, std::int64_t lo, std::int64_t hi, Rng& rng);

/// A modular part plus nonnegative multiples of truncated cardinality
/// functions min(|A ∩ B|, r); always submodular.
boolfun::BooleanFunction random_submodular(const GroundSet& ground, Rng& rng);

LatticePoint random_lattice_point(const GroundSet& ground, std::int64_t lo, std::int64_t hi, Rng& rng);

/// Random orbit and random nonzero rational scalars with small numerators
/// and denominators.
points::PermPoint random_point(const GroundSet& ground, Rng& rng);
points::PermPoint random_point(const setcomp::Composition& orbit, Rng& rng);

}  // namespace permutokit::sampling
