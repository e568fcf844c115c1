#include "permutokit/preposet.hpp"

#include <algorithm>

#include "permutokit/error.hpp"

namespace permutokit::preposet {

using setcomp::Composition;

Preposet::Preposet(GroundSet ground, std::vector<Mask> rows) : ground_(std::move(ground)), rows_(std::move(rows)) {
  require(rows_.size() == ground_.size(), "preposet: one relation row per element required");
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    require(((rows_[a] >> a) & 1u) == 0, "preposet: relation stores only distinct pairs");
    require(is_subset(rows_[a], ground_.full()), "preposet: relation pair outside the ground set");
  }
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    Mask reach = 0;
    for_each_bit(rows_[a], [&](std::size_t b) { reach |= rows_[b]; });
    reach &= ~(Mask{1} << a);
    require(is_subset(reach, rows_[a]), "preposet: relation is not transitive");
  }
}

Preposet Preposet::from_pairs(const GroundSet& ground, const std::vector<std::pair<Label, Label>>& pairs) {
  std::vector<Mask> rows(ground.size(), 0);
  for (const auto& [a, b] : pairs) {
    auto i = ground.index_of(a);
    auto j = ground.index_of(b);
    require(i && j, "preposet: relation pair outside the ground set");
    require(*i != *j, "preposet: relation stores only distinct pairs");
    rows[*i] |= Mask{1} << *j;
  }
  return Preposet(ground, std::move(rows));
}

Preposet Preposet::antichain(const GroundSet& ground) { return Preposet(ground, std::vector<Mask>(ground.size(), 0)); }

Preposet Preposet::complete(const GroundSet& ground) {
  std::vector<Mask> rows(ground.size());
  for (std::size_t a = 0; a < rows.size(); ++a) rows[a] = ground.full() & ~(Mask{1} << a);
  return Preposet(ground, std::move(rows));
}

std::vector<std::pair<Label, Label>> Preposet::pairs() const {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for_each_bit(rows_[a], [&](std::size_t b) { out.emplace_back(ground_[a], ground_[b]); });
  return out;
}

std::size_t Preposet::relation_size() const {
  std::size_t n = 0;
  for (Mask r : rows_) n += static_cast<std::size_t>(popcount(r));
  return n;
}

bool Preposet::is_total() const {
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (std::size_t b = a + 1; b < rows_.size(); ++b)
      if (!related(a, b) && !related(b, a)) return false;
  return true;
}

bool Preposet::includes(const Preposet& other) const {
  require(ground_ == other.ground_, "preposet comparison: ground sets differ");
  for (std::size_t a = 0; a < rows_.size(); ++a)
    if (!is_subset(other.rows_[a], rows_[a])) return false;
  return true;
}

Preposet Preposet::restrict(Mask s) const {
  GroundSet sub = ground_.subset(s);
  std::vector<Mask> rows;
  for_each_bit(s, [&](std::size_t a) { rows.push_back(ground_.translate(rows_[a] & s, sub)); });
  return Preposet(std::move(sub), std::move(rows));
}

AugPreposet::AugPreposet(Preposet p) : ground_(p.ground()), value_(std::move(p)) {}

AugPreposet AugPreposet::bottom(GroundSet ground) {
  AugPreposet out;
  out.ground_ = std::move(ground);
  return out;
}

const Preposet& AugPreposet::value() const {
  require(value_.has_value(), "augmented preposet: bottom has no relation");
  return *value_;
}

std::string to_string(const Preposet& p) {
  std::string out = to_string(p.ground()) + "{";
  bool first = true;
  for (const auto& [a, b] : p.pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + to_string(a) + "," + to_string(b) + ")";
  }
  return out + "}";
}

std::string to_string(const AugPreposet& p) {
  return p.is_bottom() ? to_string(p.ground()) + "•" : to_string(p.value());
}

bool preposet_leq(const AugPreposet& q, const AugPreposet& p) {
  require(q.ground() == p.ground(), "preposet comparison: ground sets differ");
  if (q.is_bottom()) return true;
  if (p.is_bottom()) return false;
  return q.value().includes(p.value());
}

Preposet total_of_composition(const Composition& f) {
  const auto idx = f.lump_index();
  const std::size_t n = f.ground().size();
  std::vector<Mask> rows(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && idx[a] <= idx[b]) rows[a] |= Mask{1} << b;
  return Preposet(f.ground(), std::move(rows));
}

Composition composition_of_total(const Preposet& p) {
  require(p.is_total(), "composition of total preposet: preposet is not total");
  // The first lump consists of the elements that are >= everything.
  std::vector<Mask> lumps;
  Mask rest = p.ground().full();
  while (rest != 0) {
    Mask top = 0;
    for_each_bit(rest, [&](std::size_t a) {
      if (is_subset(rest & ~(Mask{1} << a), p.rows()[a])) top |= Mask{1} << a;
    });
    lumps.push_back(top);
    rest &= ~top;
  }
  return Composition(p.ground(), std::move(lumps));
}

bool split_leq(Mask s, Mask t, const Preposet& p) {
  require((s & t) == 0 && (s | t) == p.ground().full(), "split: (S, T) must be a decomposition of the ground set");
  // The total preposet of (S|T) relates every distinct pair except (t, s)
  // with t in T and s in S, so inclusion reduces to rows of T staying in T.
  bool ok = true;
  for_each_bit(t, [&](std::size_t i) { ok = ok && is_subset(p.rows()[i], t); });
  return ok;
}

std::vector<UpwardPair> upward_pairs(const Preposet& p) {
  std::vector<UpwardPair> out;
  const Mask full = p.ground().full();
  for (Mask s = 1; s < full; ++s)
    if (split_leq(s, full & ~s, p)) out.push_back({s, full & ~s});
  return out;
}

AugPreposet o_mul(const AugPreposet& p, const AugPreposet& q) {
  GroundSet ground = disjoint_union(p.ground(), q.ground());
  if (p.is_bottom() || q.is_bottom()) return AugPreposet::bottom(std::move(ground));
  std::vector<Mask> rows(ground.size(), 0);
  for (const auto* part : {&p.value(), &q.value()}) {
    const GroundSet& g = part->ground();
    for (std::size_t a = 0; a < g.size(); ++a)
      rows[*ground.index_of(g[a])] = g.translate(part->rows()[a], ground);
  }
  return Preposet(std::move(ground), std::move(rows));
}

std::pair<AugPreposet, AugPreposet> o_comul(const AugPreposet& p, Mask s, Mask t) {
  const GroundSet& g = p.ground();
  require((s & t) == 0 && (s | t) == g.full(), "comultiplication: (S, T) must be a decomposition of the ground set");
  if (p.is_bottom() || !split_leq(s, t, p.value()))
    return {AugPreposet::bottom(g.subset(s)), AugPreposet::bottom(g.subset(t))};
  return {p.value().restrict(s), p.value().restrict(t)};
}

std::pair<AugPreposet, AugPreposet> o_comul(const AugPreposet& p, const GroundSet& s, const GroundSet& t) {
  require(s.is_subset_of(p.ground()) && t.is_subset_of(p.ground()),
          "comultiplication: blocks must lie in the ground set");
  return o_comul(p, p.ground().mask_of(s), p.ground().mask_of(t));
}

std::vector<Preposet> enumerate_preposets(const GroundSet& ground) {
  const std::size_t n = ground.size();
  if (n > kMaxEnumerationSize)
    throw SizeGuardError("preposet enumeration: ground sets above " + std::to_string(kMaxEnumerationSize) +
                         " elements are not supported");
  // Off-diagonal positions, row-major.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) cells.emplace_back(a, b);
  std::vector<Preposet> out;
  const std::uint64_t total = std::uint64_t{1} << cells.size();
  std::vector<Mask> rows(n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((bits >> c) & 1u) rows[cells[c].first] |= Mask{1} << cells[c].second;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a) {
      Mask reach = 0;
      for_each_bit(rows[a], [&](std::size_t b) { reach |= rows[b]; });
      transitive = is_subset(reach & ~(Mask{1} << a), rows[a]);
    }
    if (transitive) out.emplace_back(ground, rows);
  }
  return out;
}

std::vector<AugPreposet> enumerate_aug_preposets(const GroundSet& ground) {
  std::vector<AugPreposet> out{AugPreposet::bottom(ground)};
  for (auto& p : enumerate_preposets(ground)) out.emplace_back(std::move(p));
  return out;
}

AugPreposet relabel(const setcomp::Bijection& sigma, const AugPreposet& p) {
  require(sigma.target() == p.ground(), "relabel: bijection target differs from the ground set");
  if (p.is_bottom()) return AugPreposet::bottom(sigma.source());
  const auto& img = sigma.image();
  std::vector<Mask> rows(img.size());
  for (std::size_t j = 0; j < img.size(); ++j) rows[j] = sigma.backward(p.value().rows()[img[j]]);
  return Preposet(sigma.source(), std::move(rows));
}

}  // namespace permutokit::preposet
