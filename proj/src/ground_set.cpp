#include "permutokit/ground_set.hpp"

#include <algorithm>

#include "permutokit/error.hpp"

namespace permutokit {

std::string to_string(const Label& label) {
  if (const auto* n = std::get_if<std::int64_t>(&label)) return std::to_string(*n);
  return std::get<std::string>(label);
}

GroundSet::GroundSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  require(std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end(),
          "ground set: labels must be pairwise distinct");
  require(labels_.size() <= kMaxGroundSize, "ground set: too many labels");
}

GroundSet GroundSet::range(int n) {
  std::vector<Label> labels;
  for (int i = 1; i <= n; ++i) labels.emplace_back(std::int64_t{i});
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(const Label& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Mask GroundSet::mask_of(std::span<const Label> labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    auto i = index_of(l);
    require(i.has_value(), "label " + to_string(l) + " is not in the ground set");
    m |= Mask{1} << *i;
  }
  return m;
}

Mask GroundSet::mask_of(const GroundSet& sub) const { return mask_of(std::span<const Label>(sub.labels_)); }

GroundSet GroundSet::subset(Mask m) const {
  GroundSet out;
  out.labels_ = labels_of(m);
  return out;
}

std::vector<Label> GroundSet::labels_of(Mask m) const {
  std::vector<Label> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(labels_[i]); });
  return out;
}

Mask GroundSet::translate(Mask m, const GroundSet& target) const {
  if (*this == target) return m;
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) {
    auto j = target.index_of(labels_[i]);
    require(j.has_value(), "label " + to_string(labels_[i]) + " is not in the target ground set");
    out |= Mask{1} << *j;
  });
  return out;
}

bool GroundSet::is_subset_of(const GroundSet& other) const {
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
}

bool GroundSet::disjoint(const GroundSet& other) const {
  auto a = labels_.begin();
  auto b = other.labels_.begin();
  while (a != labels_.end() && b != other.labels_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a;
    else ++b;
  }
  return true;
}

GroundSet disjoint_union(const GroundSet& a, const GroundSet& b) {
  require(a.disjoint(b), "disjoint union: ground sets overlap");
  std::vector<Label> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return GroundSet(std::move(labels));
}

std::string to_string(const GroundSet& ground) {
  std::string out = "{";
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (i) out += ",";
    out += to_string(ground[i]);
  }
  return out + "}";
}

}  // namespace permutokit
