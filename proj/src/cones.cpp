#include "permutokit/cones.hpp"

#include "permutokit/error.hpp"

namespace permutokit::cones {

using preposet::AugPreposet;
using preposet::Preposet;

CoweightVector::CoweightVector(LatticePoint point) : point_(std::move(point)) {
  require(point_.sum() == 0, "coweight vector: coordinates must sum to zero");
}

CoweightVector::CoweightVector(GroundSet ground, std::vector<std::int64_t> coords)
    : CoweightVector(LatticePoint(std::move(ground), std::move(coords))) {}

CoweightVector CoweightVector::zero(const GroundSet& ground) { return CoweightVector(LatticePoint::zero(ground)); }

CoweightVector operator+(const CoweightVector& a, const CoweightVector& b) { return CoweightVector(a.point_ + b.point_); }

CoweightVector coroot(const Label& i1, const Label& i2, const GroundSet& ground) {
  require(i1 != i2, "coroot: labels must be distinct");
  auto a = ground.index_of(i1);
  auto b = ground.index_of(i2);
  require(a && b, "coroot: labels must lie in the ground set");
  std::vector<std::int64_t> coords(ground.size(), 0);
  coords[*a] = 1;
  coords[*b] = -1;
  return CoweightVector(ground, std::move(coords));
}

std::int64_t pairing(const CoweightVector& h, Mask s) {
  require(is_subset(s, h.ground().full()), "pairing: subset outside the ground set");
  return h.point().pairing(s);
}

std::int64_t pairing(const CoweightVector& h, const GroundSet& s) { return pairing(h, h.ground().mask_of(s)); }

Cone::Cone(AugPreposet p) : p_(std::move(p)) {
  if (p_.is_bottom()) return;
  for (const auto& pair : preposet::upward_pairs(p_.value())) upward_.push_back(pair.s);
}

bool Cone::contains(const LatticePoint& h) const {
  require(h.ground() == p_.ground(), "cone membership: ground sets differ");
  if (p_.is_bottom() || h.sum() != 0) return false;
  for (Mask s : upward_)
    if (h.pairing(s) > 0) return false;
  return true;
}

bool cone_contains(const AugPreposet& p, const CoweightVector& h) { return Cone(p).contains(h); }

std::vector<CoweightVector> box_points(const GroundSet& ground, Box box) {
  std::vector<CoweightVector> out;
  for (auto& pt : enumerate_window(ground, std::vector<std::int64_t>(ground.size(), 0), box.bound, 0))
    out.emplace_back(std::move(pt));
  return out;
}

std::vector<CoweightVector> cone_lattice_points(const AugPreposet& p, Box box) {
  std::vector<CoweightVector> out;
  if (p.is_bottom()) return out;
  const Cone cone(p);
  for (auto& h : box_points(p.ground(), box))
    if (cone.contains(h)) out.push_back(std::move(h));
  return out;
}

CoweightVector cone_product_map(const CoweightVector& h1, const CoweightVector& h2) {
  return CoweightVector(juxtapose(h1.point(), h2.point()));
}

AugPreposet cone_face(const Preposet& p, Mask s, Mask t) {
  auto [left, right] = preposet::o_comul(AugPreposet(p), s, t);
  return preposet::o_mul(left, right);
}

LatticePoint relabel(const setcomp::Bijection& sigma, const LatticePoint& h) {
  require(sigma.target() == h.ground(), "relabel: bijection target differs from the ground set");
  std::vector<std::int64_t> coords(sigma.source().size());
  for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = h[sigma.image()[j]];
  return LatticePoint(sigma.source(), std::move(coords));
}

CoweightVector relabel(const setcomp::Bijection& sigma, const CoweightVector& h) {
  return CoweightVector(relabel(sigma, h.point()));
}

}  // namespace permutokit::cones
