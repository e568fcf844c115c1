#include "permutokit/boolfun.hpp"

#include "permutokit/error.hpp"

namespace permutokit::boolfun {

BooleanFunction::BooleanFunction(GroundSet ground, std::vector<std::int64_t> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  require(ground_.size() <= kMaxBooleanGround, "boolean function: ground set too large for dense storage");
  require(values_.size() == (std::size_t{1} << ground_.size()), "boolean function: one value per subset required");
  require(values_[0] == 0, "boolean function: value at the empty set must be 0");
}

BooleanFunction BooleanFunction::zero(const GroundSet& ground) {
  return BooleanFunction(ground, std::vector<std::int64_t>(std::size_t{1} << ground.size(), 0));
}

BooleanFunction operator+(const BooleanFunction& a, const BooleanFunction& b) {
  require(a.ground_ == b.ground_, "boolean function sum: ground sets differ");
  BooleanFunction out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] += b.values_[i];
  return out;
}

BooleanFunction operator-(const BooleanFunction& a, const BooleanFunction& b) {
  require(a.ground_ == b.ground_, "boolean function difference: ground sets differ");
  BooleanFunction out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] -= b.values_[i];
  return out;
}

std::string to_string(const BooleanFunction& z) {
  std::string out = to_string(z.ground()) + "[";
  for (std::size_t a = 0; a < z.values().size(); ++a) {
    if (a) out += ",";
    out += std::to_string(z.values()[a]);
  }
  return out + "]";
}

BooleanFunction bf_mul(const BooleanFunction& z1, const BooleanFunction& z2) {
  GroundSet ground = disjoint_union(z1.ground(), z2.ground());
  const Mask s = ground.mask_of(z1.ground());
  const Mask t = ground.mask_of(z2.ground());
  std::vector<std::int64_t> values(std::size_t{1} << ground.size());
  for (Mask a = 0; a < values.size(); ++a)
    values[a] = z1(ground.translate(a & s, z1.ground())) + z2(ground.translate(a & t, z2.ground()));
  return BooleanFunction(std::move(ground), std::move(values));
}

std::pair<BooleanFunction, BooleanFunction> bf_comul(const BooleanFunction& z, Mask s, Mask t) {
  const GroundSet& g = z.ground();
  require((s & t) == 0 && (s | t) == g.full(), "comultiplication: (S, T) must be a decomposition of the ground set");
  GroundSet gs = g.subset(s);
  GroundSet gt = g.subset(t);
  std::vector<std::int64_t> left(std::size_t{1} << gs.size());
  std::vector<std::int64_t> right(std::size_t{1} << gt.size());
  for (Mask a = 0; a < left.size(); ++a) left[a] = z(gs.translate(a, g));
  for (Mask a = 0; a < right.size(); ++a) right[a] = z(gt.translate(a, g) | s) - z(s);
  return {BooleanFunction(std::move(gs), std::move(left)), BooleanFunction(std::move(gt), std::move(right))};
}

std::pair<BooleanFunction, BooleanFunction> bf_comul(const BooleanFunction& z, const GroundSet& s,
                                                     const GroundSet& t) {
  return bf_comul(z, z.ground().mask_of(s), z.ground().mask_of(t));
}

BooleanFunction z_of_point(const LatticePoint& h) {
  std::vector<std::int64_t> values(std::size_t{1} << h.ground().size());
  for (Mask a = 0; a < values.size(); ++a) values[a] = h.pairing(a);
  return BooleanFunction(h.ground(), std::move(values));
}

std::optional<LatticePoint> bf_equivalent(const BooleanFunction& z1, const BooleanFunction& z2) {
  const BooleanFunction d = z2 - z1;
  const std::size_t n = d.ground().size();
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = d(Mask{1} << i);
  LatticePoint point(d.ground(), std::move(h));
  for (Mask a = 0; a < d.values().size(); ++a)
    if (d(a) != point.pairing(a)) return std::nullopt;
  return point;
}

bool is_generalized_permutohedron(const BooleanFunction& z) {
  // Local form of submodularity: z(A+i) + z(A+j) >= z(A+i+j) + z(A) for i, j ∉ A.
  // It is equivalent to the all-pairs inequality.
  const std::size_t n = z.ground().size();
  for (Mask a = 0; a < z.values().size(); ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const Mask bi = Mask{1} << i;
      if (a & bi) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        const Mask bj = Mask{1} << j;
        if (a & bj) continue;
        if (z(a | bi) + z(a | bj) < z(a | bi | bj) + z(a)) return false;
      }
    }
  return true;
}

BooleanFunction comul_component(const BooleanFunction& z, const setcomp::Composition& f, std::size_t i) {
  require(f.ground() == z.ground(), "comultiplication: composition ground differs from the function's");
  require(i < f.length(), "comultiplication: lump index out of range");
  const Mask before = f.initial_segment(i);
  GroundSet lump = z.ground().subset(f.lump(i));
  std::vector<std::int64_t> values(std::size_t{1} << lump.size());
  for (Mask a = 0; a < values.size(); ++a) values[a] = z(lump.translate(a, z.ground()) | before) - z(before);
  return BooleanFunction(std::move(lump), std::move(values));
}

std::vector<std::int64_t> heights_along(const BooleanFunction& z, const setcomp::Composition& f) {
  require(f.ground() == z.ground(), "heights: composition ground differs from the function's");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < f.length(); ++i) out.push_back(z(f.initial_segment(i + 1)) - z(f.initial_segment(i)));
  return out;
}

BooleanFunction relabel(const setcomp::Bijection& sigma, const BooleanFunction& z) {
  require(sigma.target() == z.ground(), "relabel: bijection target differs from the ground set");
  std::vector<std::int64_t> values(z.values().size());
  for (Mask a = 0; a < values.size(); ++a) values[a] = z(sigma.forward(a));
  return BooleanFunction(sigma.source(), std::move(values));
}

}  // namespace permutokit::boolfun
