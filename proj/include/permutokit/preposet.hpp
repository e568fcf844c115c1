#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permutokit/ground_set.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::preposet {

using permutokit::to_string;

/// A preposet of a ground set, identified with its set of strict comparable
/// pairs (i1, i2), i1 != i2, i1 >= i2. Stored as one bit-row per element:
/// bit j of row i is set iff (i, j) is in the relation.
class Preposet {
 public:
  Preposet() = default;
  /// Throws ValidationError if a row has its diagonal bit set or the relation
  /// is not transitive.
  Preposet(GroundSet ground, std::vector<Mask> rows);

  static Preposet from_pairs(const GroundSet& ground, const std::vector<std::pair<Label, Label>>& pairs);
  static Preposet antichain(const GroundSet& ground);
  static Preposet complete(const GroundSet& ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& rows() const { return rows_; }
  bool related(std::size_t i1, std::size_t i2) const { return (rows_[i1] >> i2) & 1u; }
  std::vector<std::pair<Label, Label>> pairs() const;
  std::size_t relation_size() const;

  bool is_total() const;
  /// rel(other) ⊆ rel(this); grounds must agree.
  bool includes(const Preposet& other) const;
  Preposet restrict(Mask s) const;

  friend bool operator==(const Preposet&, const Preposet&) = default;
  friend auto operator<=>(const Preposet&, const Preposet&) = default;

 private:
  GroundSet ground_;
  std::vector<Mask> rows_;
};

/// An element of the augmented family: a preposet, or the bottom element.
class AugPreposet {
 public:
  AugPreposet() = default;
  AugPreposet(Preposet p);  // NOLINT(google-explicit-constructor)
  static AugPreposet bottom(GroundSet ground);

  bool is_bottom() const { return !value_.has_value(); }
  const Preposet& value() const;
  const GroundSet& ground() const { return ground_; }

  friend bool operator==(const AugPreposet&, const AugPreposet&) = default;
  friend auto operator<=>(const AugPreposet&, const AugPreposet&) = default;

 private:
  GroundSet ground_;
  std::optional<Preposet> value_;
};

std::string to_string(const Preposet& p);
std::string to_string(const AugPreposet& p);

/// A two-block decomposition (S, T) of the ground set, as masks.
struct UpwardPair {
  Mask s = 0;
  Mask t = 0;
  friend bool operator==(const UpwardPair&, const UpwardPair&) = default;
  friend auto operator<=>(const UpwardPair&, const UpwardPair&) = default;
};

/// q <= p iff rel(p) ⊆ rel(q); bottom is below everything.
bool preposet_leq(const AugPreposet& q, const AugPreposet& p);

/// The total preposet of F: (i1, i2) whenever i1's lump comes no later than i2's.
Preposet total_of_composition(const setcomp::Composition& f);

/// Inverse of total_of_composition; throws unless p is total.
setcomp::Composition composition_of_total(const Preposet& p);

/// (S, T) <= p for a decomposition S ⊔ T of the ground set (either part may
/// be empty): rel(p) ⊆ rel of the total preposet of (S|T).
bool split_leq(Mask s, Mask t, const Preposet& p);

/// All (S, T) with S, T nonempty and (S, T) <= p.
std::vector<UpwardPair> upward_pairs(const Preposet& p);

/// (p | q): disjoint union of relations; bottom if either input is bottom.
AugPreposet o_mul(const AugPreposet& p, const AugPreposet& q);

/// (p restricted to S, p restricted to T) if (S, T) <= p, else (bottom, bottom).
std::pair<AugPreposet, AugPreposet> o_comul(const AugPreposet& p, Mask s, Mask t);
std::pair<AugPreposet, AugPreposet> o_comul(const AugPreposet& p, const GroundSet& s, const GroundSet& t);

inline constexpr std::size_t kMaxEnumerationSize = 5;

/// Every preposet of the ground set exactly once, ordered by relation bit
/// pattern. Throws SizeGuardError above kMaxEnumerationSize elements.
std::vector<Preposet> enumerate_preposets(const GroundSet& ground);

/// Preposets plus the bottom element (bottom first).
std::vector<AugPreposet> enumerate_aug_preposets(const GroundSet& ground);

/// Relabels along sigma: J -> I, pulling p back to a preposet of J.
AugPreposet relabel(const setcomp::Bijection& sigma, const AugPreposet& p);

}  // namespace permutokit::preposet
