#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "permutokit/ground_set.hpp"

namespace permutokit::setcomp {

using permutokit::to_string;

/// Ordered partition of a ground set into nonempty lumps. Lump i is the
/// preimage of i under the corresponding surjection I -> (k); position 0 is
/// the first lump. The empty ground set has exactly one composition, ().
class Composition {
 public:
  Composition() = default;
  /// Throws ValidationError unless the lumps are nonempty, disjoint and cover
  /// the ground set.
  Composition(GroundSet ground, std::vector<Mask> lumps);

  /// The ground set is the union of the lumps.
  static Composition from_lumps(const std::vector<std::vector<Label>>& lumps);
  /// (I) for nonempty I, () for the empty set.
  static Composition single_lump(const GroundSet& ground);
  /// One lump per element, in canonical label order.
  static Composition singletons(const GroundSet& ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& lumps() const { return lumps_; }
  std::size_t length() const { return lumps_.size(); }
  Mask lump(std::size_t i) const { return lumps_[i]; }

  /// Lump position of each ground element (the function view I -> (k)).
  std::vector<std::size_t> lump_index() const;
  std::vector<std::vector<Label>> lump_labels() const;
  /// Union of the first j lumps.
  Mask initial_segment(std::size_t j) const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  GroundSet ground_;
  std::vector<Mask> lumps_;
};

std::string to_string(const Composition& f);

/// Restricts G to each lump of F and concatenates the results.
Composition tits_product(const Composition& f, const Composition& g);

/// H ; K for compositions of disjoint sets.
Composition concatenate(const Composition& h, const Composition& k);

/// H|_S with emptied lumps deleted. S must be a subset of ground(H).
Composition restrict(const Composition& h, const GroundSet& s);
Composition restrict(const Composition& h, Mask s);

/// True iff G <= F, i.e. G arises from F by merging contiguous lumps.
bool refines(const Composition& g, const Composition& f);

/// Every G with G <= F, coarsest first.
std::vector<Composition> coarsenings(const Composition& f);

/// All compositions of a ground set in a deterministic order.
std::vector<Composition> all_compositions(const GroundSet& ground);

/// A bijection source -> target of finite label sets.
class Bijection {
 public:
  Bijection() = default;
  Bijection(GroundSet source, GroundSet target, std::vector<std::size_t> image);

  static Bijection from_pairs(const std::vector<std::pair<Label, Label>>& pairs);
  static Bijection identity(const GroundSet& ground);

  const GroundSet& source() const { return source_; }
  const GroundSet& target() const { return target_; }
  const std::vector<std::size_t>& image() const { return image_; }

  Label operator()(const Label& l) const;
  /// Mask over target of the image of a mask over source.
  Mask forward(Mask m) const;
  /// Mask over source of the preimage of a mask over target.
  Mask backward(Mask m) const;

  Bijection inverse() const;
  /// The restriction sigma^{-1}(S) -> S for a subset S of the target.
  Bijection restrict_to_target(Mask s) const;

  friend bool operator==(const Bijection&, const Bijection&) = default;

 private:
  GroundSet source_;
  GroundSet target_;
  std::vector<std::size_t> image_;
};

/// sigma ∘ tau, for tau: K -> J and sigma: J -> I.
Bijection compose(const Bijection& sigma, const Bijection& tau);

/// F ∘ sigma for sigma: J -> I and F a composition of I.
Composition relabel(const Bijection& sigma, const Composition& f);

/// A permutation of (k), stored 0-based: position i maps to image()[i].
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::size_t> image);
  /// From the 1-based one-line notation.
  static Perm from_one_line(const std::vector<int>& one_line);
  static Perm identity(std::size_t k);

  std::size_t degree() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::vector<int> one_line() const;
  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// gamma ∘ beta.
Perm compose(const Perm& gamma, const Perm& beta);

std::vector<Perm> all_perms(std::size_t k);

/// beta ∘ F: the lump at position i of F moves to position beta(i).
Composition permute_lumps(const Perm& beta, const Composition& f);

/// The unique hat-beta in Sym_{l(F)} with hat-beta ∘ F = (beta ∘ G) F, for G <= F.
Perm hat_beta(const Perm& beta, const Composition& f, const Composition& g);

/// Reorders a lump-indexed tuple: entry i moves to position beta(i).
template <class T>
std::vector<T> permute_tuple(const Perm& beta, const std::vector<T>& tuple) {
  std::vector<T> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) out[beta(i)] = tuple[i];
  return out;
}

}  // namespace permutokit::setcomp
