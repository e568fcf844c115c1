#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permutokit/boolfun.hpp"
#include "permutokit/cones.hpp"
#include "permutokit/lattice.hpp"
#include "permutokit/preposet.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::plates {

using permutokit::to_string;
using AffinePoint = LatticePoint;

/// The plate [[H]]_z.
class Plate {
 public:
  Plate() = default;
  /// Throws ValidationError unless H and z share a ground set.
  Plate(setcomp::Composition h, boolfun::BooleanFunction z);

  const setcomp::Composition& h() const { return h_; }
  const boolfun::BooleanFunction& z() const { return z_; }
  const GroundSet& ground() const { return h_.ground(); }

  friend bool operator==(const Plate&, const Plate&) = default;

 private:
  setcomp::Composition h_;
  boolfun::BooleanFunction z_;
};

/// Affine flat: points whose coordinate sum over lump i of F equals heights[i].
class FlatSpec {
 public:
  FlatSpec() = default;
  FlatSpec(setcomp::Composition f, std::vector<std::int64_t> heights);

  const setcomp::Composition& f() const { return f_; }
  const std::vector<std::int64_t>& heights() const { return heights_; }
  bool contains(const AffinePoint& h) const;

  friend bool operator==(const FlatSpec&, const FlatSpec&) = default;

 private:
  setcomp::Composition f_;
  std::vector<std::int64_t> heights_;
};

/// <h, lambda_A> <= z(A). A must be proper and nonempty.
bool halfspace_contains(Mask a, const boolfun::BooleanFunction& z, const AffinePoint& h);

/// Ambient equality plus the inequalities of the proper initial segments of H.
bool plate_contains(const Plate& plate, const AffinePoint& h);

/// Ambient equality plus <h, lambda_A> <= z(A) for every upward pair (A, B) <= p.
/// For p the total preposet of H this is the plate of H.
bool region_contains(const preposet::Preposet& p, const boolfun::BooleanFunction& z, const AffinePoint& h);

/// T_{H, hei(Delta_H z)}.
FlatSpec max_affine_flat(const Plate& plate);

/// Default window center: each lump height of the maximal flat split as
/// evenly as possible, the remainder going to the least labels.
std::vector<std::int64_t> window_center(const Plate& plate);

/// Integer points of the plate with ||h - center||_inf <= bound, sorted.
std::vector<AffinePoint> plate_lattice_points(const Plate& plate, Box box);
std::vector<AffinePoint> plate_lattice_points(const Plate& plate, Box box, const std::vector<std::int64_t>& center);

/// Juxtaposes one piece per lump of the flat's composition; piece i must sum
/// to heights[i].
AffinePoint flat_mul(const FlatSpec& flat, const std::vector<AffinePoint>& pieces);

/// Membership in the F-face. Always false when F is not <= H.
bool plate_F_face_contains(const Plate& plate, const setcomp::Composition& f, const AffinePoint& h);

/// When F is not <= H: an initial segment S of F and a coroot of sigma°_H
/// along which <., lambda_S> grows without bound on the plate.
struct FaceEscape {
  Mask segment = 0;
  cones::CoweightVector direction;
};
std::optional<FaceEscape> face_escape_witness(const Plate& plate, const setcomp::Composition& f);

}  // namespace permutokit::plates
