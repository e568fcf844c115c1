#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "permutokit/error.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::axioms {

using setcomp::Bijection;
using setcomp::Composition;
using setcomp::Perm;

/// A candidate bimonoid given by its binary (co)multiplication on
/// decompositions S ⊔ T, blocks allowed to be empty. Masks passed to comul
/// are relative to the ground of the element.
template <class E>
struct BimonoidInstance {
  std::string name;
  bool pointed = false;
  std::function<GroundSet(const E&)> ground;
  /// All elements over a ground set; left empty when the carrier is infinite.
  std::function<std::vector<E>(const GroundSet&)> enumerate;
  std::function<E(const GroundSet&, std::mt19937_64&)> sample;
  std::function<E(const E&, const E&)> mul;
  std::function<std::pair<E, E>(const E&, Mask, Mask)> comul;
  std::function<E(const Bijection&, const E&)> relabel;
  /// The element over the empty set.
  std::function<E(const GroundSet&)> unit;
  /// Pointed instances only.
  std::function<E(const GroundSet&)> zero;
  std::function<bool(const E&)> is_zero;
  std::function<std::string(const E&)> show;
};

struct LawReport {
  std::string law;
  std::size_t cases = 0;
  bool exhaustive = false;
  bool passed = true;
  std::string counterexample;
};

enum class Merge { left, right, random };

/// Decomposition data for one law case; elements are drawn per slot.
struct Skeleton {
  std::vector<Mask> blocks;
  Composition f;
  Composition g;
  Perm beta;
  Bijection sigma;
  std::vector<GroundSet> slots;
};

std::string describe(const GroundSet& ground, const Skeleton& s);

/// Every assignment of the n ground positions to k blocks, blocks may be empty.
std::vector<std::vector<Mask>> decompositions(std::size_t n, std::size_t k);

/// The string labels "a", "b", ... used as the other side of relabelings.
GroundSet letters(std::size_t n);

/// For G <= F: the position of the lump of G containing each lump of F.
std::vector<std::size_t> blocks_of(const Composition& f, const Composition& g);

/// The permutation moving each lump of FG to its position in GF.
Perm lump_matching(const Composition& fg, const Composition& gf);

template <class E>
class Harness {
 public:
  Harness(BimonoidInstance<E> instance, std::uint64_t seed) : inst_(std::move(instance)), rng_(seed) {}

  const BimonoidInstance<E>& instance() const { return inst_; }

  /// Multiplies, within every lump of G, the elements over the lumps of F it
  /// contains, by one binary multiplication at a time.
  std::vector<E> lift_mul(const Composition& f, const Composition& g, const std::vector<E>& xs,
                          Merge order = Merge::left) {
    require(xs.size() == f.length(), "lifted multiplication: one element per lump of F required");
    const auto block = blocks_of(f, g);
    std::vector<std::pair<E, std::size_t>> work;
    for (std::size_t i = 0; i < xs.size(); ++i) work.emplace_back(xs[i], block[i]);
    for (;;) {
      std::vector<std::size_t> joinable;
      for (std::size_t i = 0; i + 1 < work.size(); ++i)
        if (work[i].second == work[i + 1].second) joinable.push_back(i);
      if (joinable.empty()) break;
      std::size_t i = joinable.front();
      if (order == Merge::right) i = joinable.back();
      if (order == Merge::random) i = joinable[pick(joinable.size())];
      work[i].first = inst_.mul(work[i].first, work[i + 1].first);
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    std::vector<E> out;
    for (auto& w : work) out.push_back(std::move(w.first));
    return out;
  }

  /// Splits each element over a lump of G along the lumps of F inside it.
  std::vector<E> lift_comul(const Composition& f, const Composition& g, const std::vector<E>& ys,
                            Merge order = Merge::left) {
    require(ys.size() == g.length(), "lifted comultiplication: one element per lump of G required");
    const auto block = blocks_of(f, g);
    std::vector<E> out;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      std::vector<Mask> inner;
      for (std::size_t i = 0; i < block.size(); ++i)
        if (block[i] == j) inner.push_back(f.lump(i));
      split(f.ground(), ys[j], inner, 0, inner.size(), order, out);
    }
    return out;
  }

  std::vector<LawReport> check_all(const GroundSet& ground, std::size_t budget);

 private:
  using Check = std::function<std::optional<std::string>(const Skeleton&, const std::vector<E>&)>;

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  void split(const GroundSet& ground, const E& y, const std::vector<Mask>& lumps, std::size_t a, std::size_t b,
             Merge order, std::vector<E>& out) {
    if (b - a == 1) {
      out.push_back(y);
      return;
    }
    std::size_t cut = a + 1;
    if (order == Merge::right) cut = b - 1;
    if (order == Merge::random) cut = a + 1 + pick(b - a - 1);
    Mask s = 0, t = 0;
    for (std::size_t i = a; i < cut; ++i) s |= lumps[i];
    for (std::size_t i = cut; i < b; ++i) t |= lumps[i];
    const GroundSet own = inst_.ground(y);
    auto [y1, y2] = inst_.comul(y, ground.translate(s, own), ground.translate(t, own));
    split(ground, y1, lumps, a, cut, order, out);
    split(ground, y2, lumps, cut, b, order, out);
  }

  const std::vector<E>& elements(const GroundSet& g) {
    auto it = cache_.find(g);
    if (it == cache_.end()) it = cache_.emplace(g, inst_.enumerate(g)).first;
    return it->second;
  }

  bool equal(const std::vector<E>& a, const std::vector<E>& b) const {
    if (inst_.pointed) {
      bool za = false, zb = false;
      for (const auto& e : a) za = za || inst_.is_zero(e);
      for (const auto& e : b) zb = zb || inst_.is_zero(e);
      if (za || zb) return za && zb;
    }
    return a == b;
  }

  std::string show(const std::vector<E>& xs) const {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + inst_.show(xs[i]);
    return out + ")";
  }

  std::optional<std::string> compare(const std::vector<E>& lhs, const std::vector<E>& rhs) const {
    if (equal(lhs, rhs)) return std::nullopt;
    return "lhs " + show(lhs) + " rhs " + show(rhs);
  }

  LawReport run(const std::string& law, const GroundSet& ground, const std::vector<Skeleton>& skeletons,
                const Check& check, std::size_t budget);

  BimonoidInstance<E> inst_;
  std::mt19937_64 rng_;
  std::map<GroundSet, std::vector<E>> cache_;
};

/// Skeleton families shared by all instances.
std::vector<Skeleton> split_skeletons(const GroundSet& ground, std::size_t blocks, bool whole_slot);
std::vector<Skeleton> relabel_skeletons(const GroundSet& ground, bool whole_slot);
std::vector<Skeleton> bimonoid_skeletons(const GroundSet& ground);
std::vector<Skeleton> refinement_skeletons(const GroundSet& ground, bool with_beta, bool mul_slots);
std::vector<Skeleton> pair_skeletons(const GroundSet& ground);

template <class E>
LawReport Harness<E>::run(const std::string& law, const GroundSet& ground, const std::vector<Skeleton>& skeletons,
                          const Check& check, std::size_t budget) {
  LawReport report;
  report.law = law;
  auto record = [&](const Skeleton& s, const std::vector<E>& xs) {
    ++report.cases;
    if (!report.passed) return;
    if (auto bad = check(s, xs)) {
      report.passed = false;
      report.counterexample = describe(ground, s) + " inputs " + show(xs) + " " + *bad;
    }
  };
  if (skeletons.empty()) {
    report.exhaustive = true;
    return report;
  }
  std::optional<std::size_t> total;
  if (inst_.enumerate) {
    std::size_t count = 0;
    for (const auto& s : skeletons) {
      std::size_t c = 1;
      for (const auto& slot : s.slots) c *= elements(slot).size();
      count += c;
      if (count > budget) break;
    }
    if (count <= budget) total = count;
  }
  if (total) {
    report.exhaustive = true;
    for (const auto& s : skeletons) {
      std::vector<E> xs;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == s.slots.size()) {
          record(s, xs);
          return;
        }
        for (const auto& e : elements(s.slots[i])) {
          xs.push_back(e);
          self(self, i + 1);
          xs.pop_back();
        }
      };
      rec(rec, 0);
    }
    return report;
  }
  for (std::size_t c = 0; c < budget; ++c) {
    const Skeleton& s = skeletons[pick(skeletons.size())];
    std::vector<E> xs;
    for (const auto& slot : s.slots) {
      if (inst_.enumerate) {
        const auto& all = elements(slot);
        xs.push_back(all[pick(all.size())]);
      } else {
        xs.push_back(inst_.sample(slot, rng_));
      }
    }
    record(s, xs);
  }
  return report;
}

template <class E>
std::vector<LawReport> Harness<E>::check_all(const GroundSet& ground, std::size_t budget) {
  const GroundSet empty;
  const E unit = inst_.unit(empty);
  auto on = [&](const E& e, Mask m) { return ground.translate(m, inst_.ground(e)); };
  auto pair = [](std::pair<E, E> p) { return std::vector<E>{std::move(p.first), std::move(p.second)}; };
  std::vector<LawReport> out;

  out.push_back(run("mul-naturality", ground, relabel_skeletons(ground, false),
                    [&](const Skeleton& s, const std::vector<E>& xs) {
                      const Bijection& sigma = s.sigma;
                      const E lhs = inst_.relabel(sigma, inst_.mul(xs[0], xs[1]));
                      const E rhs = inst_.mul(inst_.relabel(sigma.restrict_to_target(s.blocks[0]), xs[0]),
                                              inst_.relabel(sigma.restrict_to_target(s.blocks[1]), xs[1]));
                      return compare({lhs}, {rhs});
                    },
                    budget));

  out.push_back(run("comul-naturality", ground, relabel_skeletons(ground, true),
                    [&](const Skeleton& s, const std::vector<E>& xs) {
                      const Bijection& sigma = s.sigma;
                      const auto lhs = pair(inst_.comul(inst_.relabel(sigma, xs[0]), sigma.backward(s.blocks[0]),
                                                        sigma.backward(s.blocks[1])));
                      auto [a, b] = inst_.comul(xs[0], s.blocks[0], s.blocks[1]);
                      const std::vector<E> rhs{inst_.relabel(sigma.restrict_to_target(s.blocks[0]), a),
                                               inst_.relabel(sigma.restrict_to_target(s.blocks[1]), b)};
                      return compare(lhs, rhs);
                    },
                    budget));

  out.push_back(run("associativity", ground, split_skeletons(ground, 3, false),
                    [&](const Skeleton&, const std::vector<E>& xs) {
                      return compare({inst_.mul(inst_.mul(xs[0], xs[1]), xs[2])},
                                     {inst_.mul(xs[0], inst_.mul(xs[1], xs[2]))});
                    },
                    budget));

  out.push_back(run("coassociativity", ground, split_skeletons(ground, 3, true),
                    [&](const Skeleton& s, const std::vector<E>& xs) {
                      const Mask S = s.blocks[0], T = s.blocks[1], U = s.blocks[2];
                      auto [a, bc] = inst_.comul(xs[0], S, T | U);
                      auto [b, c] = inst_.comul(bc, on(bc, T), on(bc, U));
                      auto [ab, c2] = inst_.comul(xs[0], S | T, U);
                      auto [a2, b2] = inst_.comul(ab, on(ab, S), on(ab, T));
                      return compare({a, b, c}, {a2, b2, c2});
                    },
                    budget));

  out.push_back(run("bimonoid", ground, bimonoid_skeletons(ground),
                    [&](const Skeleton& s, const std::vector<E>& xs) {
                      const Mask S = s.blocks[0], T = s.blocks[1], U = s.blocks[2], V = s.blocks[3];
                      const E& x = xs[0];
                      const E& y = xs[1];
                      const E xy = inst_.mul(x, y);
                      const auto lhs = pair(inst_.comul(xy, on(xy, S | U), on(xy, T | V)));
                      auto [x1, x2] = inst_.comul(x, on(x, S), on(x, T));
                      auto [y1, y2] = inst_.comul(y, on(y, U), on(y, V));
                      return compare(lhs, {inst_.mul(x1, y1), inst_.mul(x2, y2)});
                    },
                    budget));

  out.push_back(run("unit", ground, split_skeletons(ground, 1, true),
                    [&](const Skeleton&, const std::vector<E>& xs) -> std::optional<std::string> {
                      if (auto bad = compare({inst_.mul(unit, xs[0])}, {xs[0]})) return "left: " + *bad;
                      if (auto bad = compare({inst_.mul(xs[0], unit)}, {xs[0]})) return "right: " + *bad;
                      return std::nullopt;
                    },
                    budget));

  out.push_back(run("counit", ground, split_skeletons(ground, 1, true),
                    [&](const Skeleton&, const std::vector<E>& xs) -> std::optional<std::string> {
                      const Mask full = ground.full();
                      if (auto bad = compare(pair(inst_.comul(xs[0], full, 0)), {xs[0], unit})) return "left: " + *bad;
                      if (auto bad = compare(pair(inst_.comul(xs[0], 0, full)), {unit, xs[0]})) return "right: " + *bad;
                      return std::nullopt;
                    },
                    budget));

  if (inst_.pointed) {
    out.push_back(run("zero-absorption", ground, split_skeletons(ground, 2, false),
                      [&](const Skeleton& s, const std::vector<E>& xs) -> std::optional<std::string> {
                        const E z0 = inst_.zero(s.slots[0]);
                        const E z1 = inst_.zero(s.slots[1]);
                        if (!inst_.is_zero(inst_.mul(xs[0], z1))) return "x * 0 is not zero";
                        if (!inst_.is_zero(inst_.mul(z0, xs[1]))) return "0 * y is not zero";
                        auto [a, b] = inst_.comul(inst_.zero(ground), s.blocks[0], s.blocks[1]);
                        if (!inst_.is_zero(a) || !inst_.is_zero(b)) return "comultiplication of zero is not zero";
                        return std::nullopt;
                      },
                      budget));
  }

  out.push_back(run("merge-independence-mul", ground, refinement_skeletons(ground, false, true),
                    [&](const Skeleton& s, const std::vector<E>& xs) -> std::optional<std::string> {
                      const auto left = lift_mul(s.f, s.g, xs, Merge::left);
                      if (auto bad = compare(left, lift_mul(s.f, s.g, xs, Merge::right))) return "right: " + *bad;
                      if (auto bad = compare(left, lift_mul(s.f, s.g, xs, Merge::random))) return "random: " + *bad;
                      return std::nullopt;
                    },
                    budget));

  out.push_back(run("merge-independence-comul", ground, refinement_skeletons(ground, false, false),
                    [&](const Skeleton& s, const std::vector<E>& xs) -> std::optional<std::string> {
                      const auto left = lift_comul(s.f, s.g, xs, Merge::left);
                      if (auto bad = compare(left, lift_comul(s.f, s.g, xs, Merge::right))) return "right: " + *bad;
                      if (auto bad = compare(left, lift_comul(s.f, s.g, xs, Merge::random))) return "random: " + *bad;
                      return std::nullopt;
                    },
                    budget));

  out.push_back(run("beta-naturality-mul", ground, refinement_skeletons(ground, true, true),
                    [&](const Skeleton& s, const std::vector<E>& xs) {
                      const Perm hat = setcomp::hat_beta(s.beta, s.f, s.g);
                      const auto lhs = lift_mul(setcomp::permute_lumps(hat, s.f), setcomp::permute_lumps(s.beta, s.g),
                                                setcomp::permute_tuple(hat, xs));
                      return compare(lhs, setcomp::permute_tuple(s.beta, lift_mul(s.f, s.g, xs)));
                    },
                    budget));

  out.push_back(run("beta-naturality-comul", ground, refinement_skeletons(ground, true, false),
                    [&](const Skeleton& s, const std::vector<E>& xs) {
                      const Perm hat = setcomp::hat_beta(s.beta, s.f, s.g);
                      const auto lhs = lift_comul(setcomp::permute_lumps(hat, s.f),
                                                  setcomp::permute_lumps(s.beta, s.g), setcomp::permute_tuple(s.beta, xs));
                      return compare(lhs, setcomp::permute_tuple(hat, lift_comul(s.f, s.g, xs)));
                    },
                    budget));

  out.push_back(run("general-bimonoid", ground, pair_skeletons(ground),
                    [&](const Skeleton& s, const std::vector<E>& xs) {
                      const Composition whole = Composition::single_lump(ground);
                      const auto lhs = lift_comul(s.g, whole, lift_mul(s.f, whole, xs));
                      const Composition fg = setcomp::tits_product(s.f, s.g);
                      const Composition gf = setcomp::tits_product(s.g, s.f);
                      const auto split = lift_comul(fg, s.f, xs);
                      const auto rhs = lift_mul(gf, s.g, setcomp::permute_tuple(lump_matching(fg, gf), split));
                      return compare(lhs, rhs);
                    },
                    budget));
  return out;
}

/// Runs every law on one ground set with a fixed seed.
template <class E>
std::vector<LawReport> check_all(const BimonoidInstance<E>& instance, const GroundSet& ground, std::size_t budget,
                                 std::uint64_t seed) {
  Harness<E> harness(instance, seed);
  return harness.check_all(ground, budget);
}

}  // namespace permutokit::axioms
