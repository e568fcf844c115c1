#pragma once

#include <utility>
#include <vector>

#include "permutokit/boolfun.hpp"
#include "permutokit/error.hpp"
#include "permutokit/cones.hpp"
#include "permutokit/preposet.hpp"
#include "permutokit/setcomp.hpp"

namespace tsupport {

using namespace permutokit;

inline GroundSet N(int n) { return GroundSet::range(n); }

inline GroundSet L(std::vector<Label> labels) { return GroundSet(std::move(labels)); }

inline setcomp::Composition C(const std::vector<std::vector<Label>>& lumps) {
  return setcomp::Composition::from_lumps(lumps);
}

inline preposet::Preposet P(const GroundSet& g, const std::vector<std::pair<Label, Label>>& rel) {
  return preposet::Preposet::from_pairs(g, rel);
}

inline cones::CoweightVector H(const GroundSet& g, std::vector<std::int64_t> coords) {
  return cones::CoweightVector(g, std::move(coords));
}

inline LatticePoint pt(const GroundSet& g, std::vector<std::int64_t> coords) {
  return LatticePoint(g, std::move(coords));
}

/// Values listed by bitmask order over g.
inline boolfun::BooleanFunction Z(const GroundSet& g, std::vector<std::int64_t> values) {
  return boolfun::BooleanFunction(g, std::move(values));
}

/// z(A) = a + b + ... values of singletons summed from the |A| largest of `tops`.
inline boolfun::BooleanFunction permutohedron(int n) {
  const GroundSet g = N(n);
  std::vector<std::int64_t> v(std::size_t{1} << n, 0);
  for (Mask a = 0; a < v.size(); ++a) {
    const int k = popcount(a);
    for (int j = 0; j < k; ++j) v[a] += n - j;
  }
  return Z(g, v);
}

}  // namespace tsupport
