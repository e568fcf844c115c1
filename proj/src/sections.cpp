#include "permutokit/sections.hpp"

#include <algorithm>

namespace permutokit::sections {

using boolfun::BooleanFunction;
using cones::CoweightVector;
using preposet::Preposet;

ConeMonomial::ConeMonomial(Preposet grade, CoweightVector exponent)
    : grade_(std::move(grade)), exponent_(std::move(exponent)) {
  require(grade_.ground() == exponent_.ground(), "monomial: exponent and grade have different ground sets");
  require(cones::Cone(grade_).contains(exponent_), "monomial: exponent lies outside the cone of its grade");
}

ConeMonomial co_mul(const ConeMonomial& a, const ConeMonomial& b) {
  auto grade = preposet::o_mul(a.grade(), b.grade());
  return ConeMonomial(grade.value(), cones::cone_product_map(a.exponent(), b.exponent()));
}

TensorWord<ConeMonomial> co_comul(const ConeMonomial& m, Mask s, Mask t) {
  const Preposet& p = m.grade();
  const auto face = cones::cone_face(p, s, t);
  if (!cones::Cone(face).contains(m.exponent())) return TensorWord<ConeMonomial>::zero();
  const LatticePoint& h = m.exponent().point();
  return TensorWord<ConeMonomial>({ConeMonomial(p.restrict(s), CoweightVector(h.restrict(s))),
                                   ConeMonomial(p.restrict(t), CoweightVector(h.restrict(t)))});
}

bool is_section(const BooleanFunction& z, const LatticePoint& h) {
  require(z.ground() == h.ground(), "section test: ground sets differ");
  if (h.sum() != z.height()) return false;
  for (Mask a = 1; a < z.values().size(); ++a)
    if (h.pairing(a) > z(a)) return false;
  return true;
}

SectionBasis::SectionBasis(BooleanFunction z, std::vector<LatticePoint> points)
    : z_(std::move(z)), points_(std::move(points)) {
  for (const auto& h : points_) require(is_section(z_, h), "section basis: point violates a subset inequality of z");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool SectionBasis::contains(const LatticePoint& h) const {
  return std::binary_search(points_.begin(), points_.end(), h);
}

SectionBasis global_sections(const BooleanFunction& z) {
  const GroundSet& g = z.ground();
  const std::size_t n = g.size();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    hi[i] = z(bit);
    lo[i] = z.height() - z(g.full() & ~bit);
  }
  std::vector<LatticePoint> points;
  if (std::equal(lo.begin(), lo.end(), hi.begin(), [](auto l, auto h) { return l <= h; }))
    for (auto& h : enumerate_box(g, lo, hi, z.height()))
      if (is_section(z, h)) points.push_back(std::move(h));
  return SectionBasis(z, std::move(points));
}

SectionBasis sections_mul(const SectionBasis& s1, const SectionBasis& s2) {
  std::vector<LatticePoint> points;
  points.reserve(s1.size() * s2.size());
  for (const auto& a : s1.points())
    for (const auto& b : s2.points()) points.push_back(juxtapose(a, b));
  return SectionBasis(boolfun::bf_mul(s1.z(), s2.z()), std::move(points));
}

TensorWord<LatticePoint> sections_comul(const SectionBasis& s, const LatticePoint& h, Mask sm, Mask tm) {
  const GroundSet& g = s.z().ground();
  require((sm & tm) == 0 && (sm | tm) == g.full(), "comultiplication: (S, T) must be a decomposition of the ground set");
  require(s.contains(h), "section comultiplication: point is not a section of z");
  if (h.pairing(sm) != s.z()(sm)) return TensorWord<LatticePoint>::zero();
  return TensorWord<LatticePoint>({h.restrict(sm), h.restrict(tm)});
}

}  // namespace permutokit::sections
