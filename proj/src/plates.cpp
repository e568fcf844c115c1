#include "permutokit/plates.hpp"

#include "permutokit/error.hpp"

namespace permutokit::plates {

using boolfun::BooleanFunction;
using setcomp::Composition;

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Plate::Plate(Composition h, BooleanFunction z) : h_(std::move(h)), z_(std::move(z)) {
  require(h_.ground() == z_.ground(), "plate: composition and boolean function have different ground sets");
}

FlatSpec::FlatSpec(Composition f, std::vector<std::int64_t> heights) : f_(std::move(f)), heights_(std::move(heights)) {
  require(heights_.size() == f_.length(), "flat: one height per lump required");
}

bool FlatSpec::contains(const AffinePoint& h) const {
  require(h.ground() == f_.ground(), "flat membership: ground sets differ");
  for (std::size_t i = 0; i < heights_.size(); ++i)
    if (h.pairing(f_.lump(i)) != heights_[i]) return false;
  return true;
}

bool halfspace_contains(Mask a, const BooleanFunction& z, const AffinePoint& h) {
  require(h.ground() == z.ground(), "halfspace membership: ground sets differ");
  require(a != 0 && a != z.ground().full() && is_subset(a, z.ground().full()),
          "halfspace: subset must be proper and nonempty");
  return h.pairing(a) <= z(a);
}

bool plate_contains(const Plate& plate, const AffinePoint& h) {
  require(h.ground() == plate.ground(), "plate membership: ground sets differ");
  const auto& z = plate.z();
  if (h.sum() != z.height()) return false;
  for (std::size_t j = 1; j < plate.h().length(); ++j) {
    const Mask seg = plate.h().initial_segment(j);
    if (h.pairing(seg) > z(seg)) return false;
  }
  return true;
}

bool region_contains(const preposet::Preposet& p, const BooleanFunction& z, const AffinePoint& h) {
  require(h.ground() == z.ground() && p.ground() == z.ground(), "region membership: ground sets differ");
  if (h.sum() != z.height()) return false;
  for (const auto& pair : preposet::upward_pairs(p))
    if (h.pairing(pair.s) > z(pair.s)) return false;
  return true;
}

FlatSpec max_affine_flat(const Plate& plate) {
  return FlatSpec(plate.h(), boolfun::heights_along(plate.z(), plate.h()));
}

std::vector<std::int64_t> window_center(const Plate& plate) {
  const FlatSpec flat = max_affine_flat(plate);
  std::vector<std::int64_t> center(plate.ground().size(), 0);
  for (std::size_t i = 0; i < flat.f().length(); ++i) {
    const Mask lump = flat.f().lump(i);
    const auto m = static_cast<std::int64_t>(popcount(lump));
    const std::int64_t base = floor_div(flat.heights()[i], m);
    std::int64_t extra = flat.heights()[i] - base * m;
    for_each_bit(lump, [&](std::size_t a) { center[a] = base + (extra-- > 0 ? 1 : 0); });
  }
  return center;
}

std::vector<AffinePoint> plate_lattice_points(const Plate& plate, Box box) {
  return plate_lattice_points(plate, box, window_center(plate));
}

std::vector<AffinePoint> plate_lattice_points(const Plate& plate, Box box, const std::vector<std::int64_t>& center) {
  require(center.size() == plate.ground().size(), "plate window: center has the wrong dimension");
  std::vector<AffinePoint> out;
  for (auto& h : enumerate_window(plate.ground(), center, box.bound, plate.z().height()))
    if (plate_contains(plate, h)) out.push_back(std::move(h));
  return out;
}

AffinePoint flat_mul(const FlatSpec& flat, const std::vector<AffinePoint>& pieces) {
  const Composition& f = flat.f();
  require(pieces.size() == f.length(), "flat product: one piece per lump required");
  std::vector<std::int64_t> coords(f.ground().size(), 0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    require(pieces[i].ground() == f.ground().subset(f.lump(i)), "flat product: piece ground differs from its lump");
    require(pieces[i].sum() == flat.heights()[i], "flat product: piece does not have the prescribed height");
    std::size_t k = 0;
    for_each_bit(f.lump(i), [&](std::size_t a) { coords[a] = pieces[i][k++]; });
  }
  return AffinePoint(f.ground(), std::move(coords));
}

bool plate_F_face_contains(const Plate& plate, const Composition& f, const AffinePoint& h) {
  require(f.ground() == plate.ground(), "face membership: composition ground differs from the plate's");
  if (!setcomp::refines(f, plate.h())) return false;
  return plate_contains(plate, h) && FlatSpec(f, boolfun::heights_along(plate.z(), f)).contains(h);
}

std::optional<FaceEscape> face_escape_witness(const Plate& plate, const Composition& f) {
  require(f.ground() == plate.ground(), "face witness: composition ground differs from the plate's");
  const auto idx = plate.h().lump_index();
  for (std::size_t j = 1; j < f.length(); ++j) {
    const Mask seg = f.initial_segment(j);
    const Mask rest = plate.ground().full() & ~seg;
    std::optional<FaceEscape> found;
    for_each_bit(seg, [&](std::size_t s) {
      for_each_bit(rest, [&](std::size_t t) {
        if (!found && idx[t] <= idx[s])
          found = FaceEscape{seg, cones::coroot(plate.ground()[s], plate.ground()[t], plate.ground())};
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace permutokit::plates
