#include "permutokit/instances.hpp"

#include <algorithm>

#include "permutokit/sampling.hpp"

namespace permutokit::axioms {

using boolfun::BooleanFunction;
using points::PermPoint;
using preposet::AugPreposet;

namespace {

Composition reversed(const Composition& h) {
  std::vector<Mask> lumps(h.lumps().rbegin(), h.lumps().rend());
  return Composition(h.ground(), std::move(lumps));
}

}  // namespace

BimonoidInstance<Composition> sigma_instance(bool mutated) {
  BimonoidInstance<Composition> inst;
  inst.name = mutated ? "sigma-mutated" : "sigma";
  inst.ground = [](const Composition& h) { return h.ground(); };
  inst.enumerate = [](const GroundSet& g) { return setcomp::all_compositions(g); };
  inst.sample = [](const GroundSet& g, std::mt19937_64& rng) { return sampling::random_composition(g, rng); };
  inst.mul = [](const Composition& a, const Composition& b) { return setcomp::concatenate(a, b); };
  inst.comul = [mutated](const Composition& h, Mask s, Mask t) {
    std::pair<Composition, Composition> out{setcomp::restrict(h, s), setcomp::restrict(h, t)};
    if (mutated) out = {reversed(out.first), reversed(out.second)};
    return out;
  };
  inst.relabel = [](const Bijection& sigma, const Composition& h) { return setcomp::relabel(sigma, h); };
  inst.unit = [](const GroundSet& g) { return Composition::single_lump(g); };
  inst.show = [](const Composition& h) { return setcomp::to_string(h); };
  return inst;
}

BimonoidInstance<AugPreposet> o_bullet_instance(bool mutated) {
  BimonoidInstance<AugPreposet> inst;
  inst.name = mutated ? "o-bullet-mutated" : "o-bullet";
  inst.pointed = true;
  inst.ground = [](const AugPreposet& p) { return p.ground(); };
  inst.enumerate = [](const GroundSet& g) { return preposet::enumerate_aug_preposets(g); };
  inst.sample = [](const GroundSet& g, std::mt19937_64& rng) {
    const auto all = preposet::enumerate_aug_preposets(g);
    return all[static_cast<std::size_t>(sampling::uniform(rng, 0, static_cast<std::int64_t>(all.size()) - 1))];
  };
  inst.mul = [](const AugPreposet& p, const AugPreposet& q) { return preposet::o_mul(p, q); };
  inst.comul = [mutated](const AugPreposet& p, Mask s, Mask t) {
    if (!mutated || p.is_bottom()) return preposet::o_comul(p, s, t);
    const GroundSet& g = p.ground();
    if (preposet::split_leq(s, t, p.value()))
      return std::pair<AugPreposet, AugPreposet>{AugPreposet::bottom(g.subset(s)), AugPreposet::bottom(g.subset(t))};
    return std::pair<AugPreposet, AugPreposet>{p.value().restrict(s), p.value().restrict(t)};
  };
  inst.relabel = [](const Bijection& sigma, const AugPreposet& p) { return preposet::relabel(sigma, p); };
  inst.unit = [](const GroundSet& g) { return AugPreposet(preposet::Preposet::antichain(g)); };
  inst.zero = [](const GroundSet& g) { return AugPreposet::bottom(g); };
  inst.is_zero = [](const AugPreposet& p) { return p.is_bottom(); };
  inst.show = [](const AugPreposet& p) { return preposet::to_string(p); };
  return inst;
}

BimonoidInstance<BooleanFunction> bf_instance(bool mutated) {
  BimonoidInstance<BooleanFunction> inst;
  inst.name = mutated ? "bf-mutated" : "bf";
  inst.ground = [](const BooleanFunction& z) { return z.ground(); };
  inst.sample = [](const GroundSet& g, std::mt19937_64& rng) {
    return sampling::random_boolean_function(g, -3, 3, rng);
  };
  inst.mul = [](const BooleanFunction& a, const BooleanFunction& b) { return boolfun::bf_mul(a, b); };
  inst.comul = [mutated](const BooleanFunction& z, Mask s, Mask t) {
    auto out = boolfun::bf_comul(z, s, t);
    if (mutated) {
      const GroundSet gt = z.ground().subset(t);
      std::vector<std::int64_t> values(std::size_t{1} << gt.size(), 0);
      for (Mask a = 1; a < values.size(); ++a) values[a] = z(gt.translate(a, z.ground()) | s);
      out.second = BooleanFunction(gt, std::move(values));
    }
    return out;
  };
  inst.relabel = [](const Bijection& sigma, const BooleanFunction& z) { return boolfun::relabel(sigma, z); };
  inst.unit = [](const GroundSet& g) { return BooleanFunction::zero(g); };
  inst.show = [](const BooleanFunction& z) { return boolfun::to_string(z); };
  return inst;
}

BimonoidInstance<PermPoint> points_instance(bool mutated) {
  BimonoidInstance<PermPoint> inst;
  inst.name = mutated ? "points-mutated" : "points";
  inst.ground = [](const PermPoint& x) { return x.ground(); };
  inst.sample = [](const GroundSet& g, std::mt19937_64& rng) { return sampling::random_point(g, rng); };
  inst.mul = [](const PermPoint& a, const PermPoint& b) { return points::point_mul(a, b); };
  inst.comul = [mutated](const PermPoint& x, Mask s, Mask t) {
    auto out = points::point_comul(x, s, t);
    if (mutated) {
      out.first = PermPoint(reversed(out.first.orbit()), out.first.coords());
      out.second = PermPoint(reversed(out.second.orbit()), out.second.coords());
    }
    return out;
  };
  inst.relabel = [](const Bijection& sigma, const PermPoint& x) { return points::point_relabel(sigma, x); };
  inst.unit = [](const GroundSet&) { return PermPoint(); };
  inst.show = [](const PermPoint& x) { return points::to_string(x); };
  return inst;
}

}  // namespace permutokit::axioms
