#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace permutokit {

/// An atom of a finite label set. Integers order before strings; within a
/// kind the natural order applies. This is the canonical total order.
using Label = std::variant<std::int64_t, std::string>;

std::string to_string(const Label& label);

/// A subset of a GroundSet, as a bitmask over its canonical positions.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 20;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Finite set of distinct labels stored in canonical order.
class GroundSet {
 public:
  GroundSet() = default;
  /// Sorts the labels; throws ValidationError on duplicates or oversize input.
  explicit GroundSet(std::vector<Label> labels);

  /// The set {1, ..., n}.
  static GroundSet range(int n);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const Label& operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  Mask full() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }

  std::optional<std::size_t> index_of(const Label& label) const;
  bool contains(const Label& label) const { return index_of(label).has_value(); }

  /// Mask of the given labels; throws if one is missing.
  Mask mask_of(std::span<const Label> labels) const;
  /// Mask of `sub` viewed inside this set; throws unless sub ⊆ this.
  Mask mask_of(const GroundSet& sub) const;

  /// The labels selected by `m`, as a ground set.
  GroundSet subset(Mask m) const;
  std::vector<Label> labels_of(Mask m) const;

  /// Re-expresses a mask over this set as a mask over `target`, which must
  /// contain every selected label.
  Mask translate(Mask m, const GroundSet& target) const;

  bool is_subset_of(const GroundSet& other) const;
  bool disjoint(const GroundSet& other) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
  friend auto operator<=>(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<Label> labels_;
};

/// Disjoint union; throws ValidationError if the sets overlap.
GroundSet disjoint_union(const GroundSet& a, const GroundSet& b);

std::string to_string(const GroundSet& ground);

/// Iterates the positions set in a mask, lowest first.
template <class Fn>
void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    const int i = std::countr_zero(m);
    fn(static_cast<std::size_t>(i));
    m &= m - 1;
  }
}

}  // namespace permutokit
