#pragma once

#include <vector>

#include "permutokit/lattice.hpp"
#include "permutokit/preposet.hpp"

namespace permutokit::cones {

using permutokit::to_string;

/// An integer vector with zero coordinate sum (an element of the coweight
/// lattice M_I).
class CoweightVector {
 public:
  CoweightVector() = default;
  /// Throws ValidationError unless the coordinates sum to zero.
  explicit CoweightVector(LatticePoint point);
  CoweightVector(GroundSet ground, std::vector<std::int64_t> coords);
  static CoweightVector zero(const GroundSet& ground);

  const LatticePoint& point() const { return point_; }
  const GroundSet& ground() const { return point_.ground(); }
  const std::vector<std::int64_t>& coords() const { return point_.coords(); }
  std::int64_t operator[](std::size_t i) const { return point_[i]; }

  friend CoweightVector operator+(const CoweightVector& a, const CoweightVector& b);
  friend CoweightVector operator-(const CoweightVector& a) { return CoweightVector(-a.point_); }
  friend bool operator==(const CoweightVector&, const CoweightVector&) = default;
  friend auto operator<=>(const CoweightVector&, const CoweightVector&) = default;

 private:
  LatticePoint point_;
};

/// h_{i1 i2}: +1 at i1, -1 at i2.
CoweightVector coroot(const Label& i1, const Label& i2, const GroundSet& ground);

/// sum of h over S.
std::int64_t pairing(const CoweightVector& h, Mask s);
std::int64_t pairing(const CoweightVector& h, const GroundSet& s);

/// The cone of a preposet in halfspace form: h is in the cone iff
/// <h, lambda_S> <= 0 for every upward pair (S, T) <= p. The bottom cone is empty.
class Cone {
 public:
  explicit Cone(preposet::AugPreposet p);
  const preposet::AugPreposet& preposet() const { return p_; }
  bool contains(const LatticePoint& h) const;
  bool contains(const CoweightVector& h) const { return contains(h.point()); }

 private:
  preposet::AugPreposet p_;
  std::vector<Mask> upward_;
};

bool cone_contains(const preposet::AugPreposet& p, const CoweightVector& h);

/// Lattice points of the cone with ||h||_inf <= bound, lexicographically sorted.
std::vector<CoweightVector> cone_lattice_points(const preposet::AugPreposet& p, Box box);

/// All zero-sum integer points in the box, lexicographically sorted.
std::vector<CoweightVector> box_points(const GroundSet& ground, Box box);

/// Juxtaposition over the disjoint union of the grounds.
CoweightVector cone_product_map(const CoweightVector& h1, const CoweightVector& h2);

/// The preposet (p|_S | p|_T) of the lambda_ST-face when (S, T) <= p, else bottom.
preposet::AugPreposet cone_face(const preposet::Preposet& p, Mask s, Mask t);

/// Relabels along sigma: J -> I; coordinates are pulled back.
CoweightVector relabel(const setcomp::Bijection& sigma, const CoweightVector& h);
LatticePoint relabel(const setcomp::Bijection& sigma, const LatticePoint& h);

}  // namespace permutokit::cones
