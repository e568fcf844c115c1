#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "permutokit/cones.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::points {

using permutokit::to_string;
using Rational = mpq_class;

/// A point of the torus orbit V_H: nonzero scalars per label modulo scaling
/// on each lump. Stored normalized, the least label of every lump carrying 1.
class PermPoint {
 public:
  PermPoint() = default;
  /// Normalizes; throws ValidationError on a zero scalar or a size mismatch.
  PermPoint(setcomp::Composition orbit, std::vector<Rational> coords);
  /// The point with every scalar equal to 1.
  static PermPoint base(const setcomp::Composition& orbit);

  const setcomp::Composition& orbit() const { return orbit_; }
  const GroundSet& ground() const { return orbit_.ground(); }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const PermPoint& a, const PermPoint& b) {
    return a.orbit_ == b.orbit_ && a.coords_ == b.coords_;
  }

 private:
  setcomp::Composition orbit_;
  std::vector<Rational> coords_;
};

std::string to_string(const PermPoint& x);

/// V_H x V_K -> V_{H;K}.
PermPoint point_mul(const PermPoint& x1, const PermPoint& x2);

/// Forget the labels outside each block and stabilize.
std::pair<PermPoint, PermPoint> point_comul(const PermPoint& x, Mask s, Mask t);

/// A preimage in V_H of (y1, y2) under point_comul, where H restricts to the
/// orbits of y1 and y2. Scalars on different blocks keep ratio 1.
PermPoint point_comul_preimage(const setcomp::Composition& h, const PermPoint& y1, const PermPoint& y2);

/// x(f^h) for x in the chart of H (orbit of x coarser than or equal to H)
/// and h in the cone of H: zero unless h sums to zero on every lump of the
/// orbit, otherwise the product of x_i^{h_i}.
Rational evaluate(const PermPoint& x, const setcomp::Composition& chart, const cones::CoweightVector& h);

/// Pulls x back along sigma: J -> I.
PermPoint point_relabel(const setcomp::Bijection& sigma, const PermPoint& x);

/// q^e for integer e; q must be nonzero when e < 0.
Rational power(const Rational& q, std::int64_t e);

}  // namespace permutokit::points
