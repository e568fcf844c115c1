#include "permutokit/setcomp.hpp"

#include <algorithm>
#include <numeric>

#include "permutokit/error.hpp"

namespace permutokit::setcomp {

Composition::Composition(GroundSet ground, std::vector<Mask> lumps)
    : ground_(std::move(ground)), lumps_(std::move(lumps)) {
  Mask seen = 0;
  for (Mask m : lumps_) {
    require(m != 0, "composition: lumps must be nonempty");
    require((m & seen) == 0, "composition: lumps must be pairwise disjoint");
    require(is_subset(m, ground_.full()), "composition: lump outside the ground set");
    seen |= m;
  }
  require(seen == ground_.full(), "composition: lumps must cover the ground set");
}

Composition Composition::from_lumps(const std::vector<std::vector<Label>>& lumps) {
  std::vector<Label> all;
  for (const auto& l : lumps) all.insert(all.end(), l.begin(), l.end());
  GroundSet ground(std::move(all));
  std::vector<Mask> masks;
  masks.reserve(lumps.size());
  for (const auto& l : lumps) masks.push_back(ground.mask_of(std::span<const Label>(l)));
  return Composition(std::move(ground), std::move(masks));
}

Composition Composition::single_lump(const GroundSet& ground) {
  if (ground.empty()) return Composition(ground, {});
  return Composition(ground, {ground.full()});
}

Composition Composition::singletons(const GroundSet& ground) {
  std::vector<Mask> lumps;
  for (std::size_t i = 0; i < ground.size(); ++i) lumps.push_back(Mask{1} << i);
  return Composition(ground, std::move(lumps));
}

std::vector<std::size_t> Composition::lump_index() const {
  std::vector<std::size_t> out(ground_.size());
  for (std::size_t j = 0; j < lumps_.size(); ++j) for_each_bit(lumps_[j], [&](std::size_t i) { out[i] = j; });
  return out;
}

std::vector<std::vector<Label>> Composition::lump_labels() const {
  std::vector<std::vector<Label>> out;
  for (Mask m : lumps_) out.push_back(ground_.labels_of(m));
  return out;
}

Mask Composition::initial_segment(std::size_t j) const {
  Mask m = 0;
  for (std::size_t i = 0; i < j && i < lumps_.size(); ++i) m |= lumps_[i];
  return m;
}

std::string to_string(const Composition& f) {
  std::string out = "(";
  for (std::size_t j = 0; j < f.length(); ++j) {
    if (j) out += "|";
    const auto labels = f.ground().labels_of(f.lump(j));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ",";
      out += to_string(labels[i]);
    }
  }
  return out + ")";
}

Composition tits_product(const Composition& f, const Composition& g) {
  require(f.ground() == g.ground(), "tits product: ground sets differ");
  std::vector<Mask> lumps;
  for (Mask s : f.lumps())
    for (Mask t : g.lumps())
      if ((s & t) != 0) lumps.push_back(s & t);
  return Composition(f.ground(), std::move(lumps));
}

Composition concatenate(const Composition& h, const Composition& k) {
  GroundSet ground = disjoint_union(h.ground(), k.ground());
  std::vector<Mask> lumps;
  for (Mask m : h.lumps()) lumps.push_back(h.ground().translate(m, ground));
  for (Mask m : k.lumps()) lumps.push_back(k.ground().translate(m, ground));
  return Composition(std::move(ground), std::move(lumps));
}

Composition restrict(const Composition& h, Mask s) {
  require(is_subset(s, h.ground().full()), "restrict: subset is not contained in the ground set");
  GroundSet sub = h.ground().subset(s);
  std::vector<Mask> lumps;
  for (Mask m : h.lumps())
    if ((m & s) != 0) lumps.push_back(h.ground().translate(m & s, sub));
  return Composition(std::move(sub), std::move(lumps));
}

Composition restrict(const Composition& h, const GroundSet& s) {
  require(s.is_subset_of(h.ground()), "restrict: subset is not contained in the ground set");
  return restrict(h, h.ground().mask_of(s));
}

bool refines(const Composition& g, const Composition& f) {
  require(f.ground() == g.ground(), "refinement: ground sets differ");
  // Each lump of G must be a union of a contiguous run of F's lumps, in order.
  std::size_t j = 0;
  for (Mask t : g.lumps()) {
    Mask acc = 0;
    while (j < f.length() && acc != t) {
      if (!is_subset(f.lump(j), t)) return false;
      acc |= f.lump(j++);
    }
    if (acc != t) return false;
  }
  return j == f.length();
}

std::vector<Composition> coarsenings(const Composition& f) {
  std::vector<Composition> out;
  const std::size_t k = f.length();
  if (k == 0) return {f};
  // Bit c of `cuts` keeps the boundary between lumps c and c+1.
  const std::size_t boundaries = k - 1;
  for (Mask cuts = 0; cuts < (Mask{1} << boundaries); ++cuts) {
    std::vector<Mask> lumps;
    Mask acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
      acc |= f.lump(j);
      if (j + 1 == k || (cuts >> j) & 1u) {
        lumps.push_back(acc);
        acc = 0;
      }
    }
    out.emplace_back(f.ground(), std::move(lumps));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Composition& a, const Composition& b) { return a.length() < b.length(); });
  return out;
}

namespace {

void compositions_rec(const GroundSet& ground, Mask rest, std::vector<Mask>& prefix,
                      std::vector<Composition>& out) {
  if (rest == 0) {
    out.emplace_back(ground, prefix);
    return;
  }
  // Nonempty submasks of `rest`, in increasing numeric order.
  for (Mask sub = rest & (~rest + 1);; sub = (sub - rest) & rest) {
    if (sub == 0) break;
    prefix.push_back(sub);
    compositions_rec(ground, rest & ~sub, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> all_compositions(const GroundSet& ground) {
  std::vector<Composition> out;
  std::vector<Mask> prefix;
  compositions_rec(ground, ground.full(), prefix, out);
  return out;
}

Bijection::Bijection(GroundSet source, GroundSet target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  require(source_.size() == target_.size() && image_.size() == source_.size(),
          "bijection: source and target sizes differ");
  std::vector<bool> hit(target_.size(), false);
  for (std::size_t j : image_) {
    require(j < target_.size() && !hit[j], "bijection: map is not one-to-one onto the target");
    hit[j] = true;
  }
}

Bijection Bijection::from_pairs(const std::vector<std::pair<Label, Label>>& pairs) {
  std::vector<Label> src, tgt;
  for (const auto& [a, b] : pairs) {
    src.push_back(a);
    tgt.push_back(b);
  }
  GroundSet source(src), target(tgt);
  std::vector<std::size_t> image(source.size());
  for (const auto& [a, b] : pairs) image[*source.index_of(a)] = *target.index_of(b);
  return Bijection(std::move(source), std::move(target), std::move(image));
}

Bijection Bijection::identity(const GroundSet& ground) {
  std::vector<std::size_t> image(ground.size());
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Bijection(ground, ground, std::move(image));
}

Label Bijection::operator()(const Label& l) const {
  auto i = source_.index_of(l);
  require(i.has_value(), "bijection: label outside the source");
  return target_[image_[*i]];
}

Mask Bijection::forward(Mask m) const {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) { out |= Mask{1} << image_[i]; });
  return out;
}

Mask Bijection::backward(Mask m) const {
  Mask out = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if ((m >> image_[i]) & 1u) out |= Mask{1} << i;
  return out;
}

Bijection Bijection::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Bijection(target_, source_, std::move(inv));
}

Bijection Bijection::restrict_to_target(Mask s) const {
  const Mask pre = backward(s);
  GroundSet src = source_.subset(pre);
  GroundSet tgt = target_.subset(s);
  std::vector<std::size_t> image;
  for_each_bit(pre, [&](std::size_t i) { image.push_back(*tgt.index_of(target_[image_[i]])); });
  return Bijection(std::move(src), std::move(tgt), std::move(image));
}

Bijection compose(const Bijection& sigma, const Bijection& tau) {
  require(tau.target() == sigma.source(), "compose: bijections are not composable");
  std::vector<std::size_t> image(tau.source().size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = sigma.image()[tau.image()[i]];
  return Bijection(tau.source(), sigma.target(), std::move(image));
}

Composition relabel(const Bijection& sigma, const Composition& f) {
  require(sigma.target() == f.ground(), "relabel: bijection target differs from the ground set");
  std::vector<Mask> lumps;
  for (Mask m : f.lumps()) lumps.push_back(sigma.backward(m));
  return Composition(sigma.source(), std::move(lumps));
}

Perm::Perm(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t j : image_) {
    require(j < image_.size() && !hit[j], "permutation: map is not a bijection of (k)");
    hit[j] = true;
  }
}

Perm Perm::from_one_line(const std::vector<int>& one_line) {
  std::vector<std::size_t> image;
  for (int v : one_line) {
    require(v >= 1, "permutation: one-line entries are 1-based");
    image.push_back(static_cast<std::size_t>(v - 1));
  }
  return Perm(std::move(image));
}

Perm Perm::identity(std::size_t k) {
  std::vector<std::size_t> image(k);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Perm(std::move(image));
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out;
  for (std::size_t j : image_) out.push_back(static_cast<int>(j + 1));
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Perm(std::move(inv));
}

Perm compose(const Perm& gamma, const Perm& beta) {
  require(gamma.degree() == beta.degree(), "compose: permutation degrees differ");
  std::vector<std::size_t> image(beta.degree());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = gamma(beta(i));
  return Perm(std::move(image));
}

std::vector<Perm> all_perms(std::size_t k) {
  std::vector<std::size_t> image(k);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<Perm> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Composition permute_lumps(const Perm& beta, const Composition& f) {
  require(beta.degree() == f.length(), "permute lumps: degree differs from the composition length");
  return Composition(f.ground(), permute_tuple(beta, f.lumps()));
}

Perm hat_beta(const Perm& beta, const Composition& f, const Composition& g) {
  require(beta.degree() == g.length(), "hat beta: degree differs from the length of G");
  require(refines(g, f), "hat beta: G must satisfy G <= F");
  const Composition target = tits_product(permute_lumps(beta, g), f);
  for (const Perm& candidate : all_perms(f.length()))
    if (permute_lumps(candidate, f) == target) return candidate;
  throw ValidationError("hat beta: no solution (inputs violate G <= F)");
}

}  // namespace permutokit::setcomp
