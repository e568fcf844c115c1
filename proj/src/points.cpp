#include "permutokit/points.hpp"

#include "permutokit/error.hpp"
#include "permutokit/preposet.hpp"

namespace permutokit::points {

using setcomp::Composition;

PermPoint::PermPoint(Composition orbit, std::vector<Rational> coords)
    : orbit_(std::move(orbit)), coords_(std::move(coords)) {
  require(coords_.size() == orbit_.ground().size(), "point: one scalar per label required");
  for (auto& c : coords_) {
    c.canonicalize();
    require(c != 0, "point: scalars must be nonzero");
  }
  for (Mask lump : orbit_.lumps()) {
    const Rational lead = coords_[static_cast<std::size_t>(std::countr_zero(lump))];
    for_each_bit(lump, [&](std::size_t a) { coords_[a] /= lead; });
  }
}

PermPoint PermPoint::base(const Composition& orbit) {
  return PermPoint(orbit, std::vector<Rational>(orbit.ground().size(), Rational(1)));
}

std::string to_string(const PermPoint& x) {
  std::string out = setcomp::to_string(x.orbit()) + "{";
  for (std::size_t a = 0; a < x.coords().size(); ++a) {
    if (a) out += ",";
    out += to_string(x.ground()[a]) + ":" + x.coords()[a].get_str();
  }
  return out + "}";
}

PermPoint point_mul(const PermPoint& x1, const PermPoint& x2) {
  Composition orbit = setcomp::concatenate(x1.orbit(), x2.orbit());
  const GroundSet& g = orbit.ground();
  std::vector<Rational> coords(g.size());
  for (const auto* x : {&x1, &x2})
    for (std::size_t a = 0; a < x->ground().size(); ++a) coords[*g.index_of(x->ground()[a])] = x->coords()[a];
  return PermPoint(std::move(orbit), std::move(coords));
}

namespace {

PermPoint restrict_point(const PermPoint& x, Mask s) {
  std::vector<Rational> coords;
  for_each_bit(s, [&](std::size_t a) { coords.push_back(x.coords()[a]); });
  return PermPoint(setcomp::restrict(x.orbit(), s), std::move(coords));
}

}  // namespace

std::pair<PermPoint, PermPoint> point_comul(const PermPoint& x, Mask s, Mask t) {
  require((s & t) == 0 && (s | t) == x.ground().full(),
          "comultiplication: (S, T) must be a decomposition of the ground set");
  return {restrict_point(x, s), restrict_point(x, t)};
}

PermPoint point_comul_preimage(const Composition& h, const PermPoint& y1, const PermPoint& y2) {
  const GroundSet& g = h.ground();
  require(disjoint_union(y1.ground(), y2.ground()) == g, "preimage: blocks do not decompose the orbit's ground set");
  require(setcomp::restrict(h, y1.ground()) == y1.orbit() && setcomp::restrict(h, y2.ground()) == y2.orbit(),
          "preimage: orbit does not restrict to the given orbits");
  std::vector<Rational> coords(g.size());
  for (const auto* y : {&y1, &y2})
    for (std::size_t a = 0; a < y->ground().size(); ++a) coords[*g.index_of(y->ground()[a])] = y->coords()[a];
  return PermPoint(h, std::move(coords));
}

Rational power(const Rational& q, std::int64_t e) {
  require(e >= 0 || q != 0, "power: zero raised to a negative exponent");
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  Rational out = e < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

Rational evaluate(const PermPoint& x, const Composition& chart, const cones::CoweightVector& h) {
  require(chart.ground() == x.ground() && h.ground() == x.ground(), "evaluate: ground sets differ");
  require(setcomp::refines(x.orbit(), chart), "evaluate: point lies outside the chart");
  require(cones::Cone(preposet::total_of_composition(chart)).contains(h),
          "evaluate: exponent lies outside the cone of the chart");
  for (Mask lump : x.orbit().lumps())
    if (h.point().pairing(lump) != 0) return Rational(0);
  Rational out(1);
  for (std::size_t a = 0; a < x.coords().size(); ++a) out *= power(x.coords()[a], h[a]);
  return out;
}

PermPoint point_relabel(const setcomp::Bijection& sigma, const PermPoint& x) {
  require(sigma.target() == x.ground(), "relabel: bijection target differs from the ground set");
  std::vector<Rational> coords(sigma.source().size());
  for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = x.coords()[sigma.image()[j]];
  return PermPoint(setcomp::relabel(sigma, x.orbit()), std::move(coords));
}

}  // namespace permutokit::points
