#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "permutokit/preposet.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::opens {

using permutokit::to_string;

/// One orbit per block of the shape.
using OrbitTuple = std::vector<setcomp::Composition>;

/// A torus-invariant open of the product of permutohedral spaces over the
/// lumps of a shape composition, as a down-closed family of orbit tuples.
class ToricOpen {
 public:
  ToricOpen() = default;
  /// Takes the down-closure; throws ValidationError if a tuple does not fit
  /// the shape.
  ToricOpen(setcomp::Composition shape, const std::set<OrbitTuple>& orbits);

  static ToricOpen whole(const setcomp::Composition& shape);
  static ToricOpen empty(const setcomp::Composition& shape);

  const setcomp::Composition& shape() const { return shape_; }
  const std::set<OrbitTuple>& orbits() const { return orbits_; }
  std::size_t size() const { return orbits_.size(); }
  bool contains(const OrbitTuple& t) const { return orbits_.count(t) != 0; }
  bool is_down_closed() const;

  friend bool operator==(const ToricOpen&, const ToricOpen&) = default;

 private:
  setcomp::Composition shape_;
  std::set<OrbitTuple> orbits_;
};

std::string to_string(const ToricOpen& u);

/// Every orbit tuple over the lumps of the shape.
std::vector<OrbitTuple> all_orbit_tuples(const setcomp::Composition& shape);

/// U_p: compositions H whose total preposet contains p. Empty for bottom.
ToricOpen open_of_preposet(const preposet::AugPreposet& p);

/// Pullback along the comultiplication from shape G to shape F, G <= F: the
/// tuples over G whose restrictions to the lumps of F lie in U.
ToricOpen pullback_comul(const ToricOpen& u, const setcomp::Composition& g);
/// Pullback along the multiplication from shape F to shape G, G <= F: the
/// tuples over F whose concatenations within the lumps of G lie in U.
ToricOpen pullback_mul(const ToricOpen& u, const setcomp::Composition& f);

/// Cartesian product; the shape is the concatenation of the shapes.
ToricOpen open_product(const std::vector<ToricOpen>& factors);

struct IndexingReport {
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

/// Checks, for every pair G <= F of compositions of the ground set and every
/// tuple of preposets, that pulling back products of U_p along the
/// comultiplication gives the U of the multiplied preposets, and that
/// pulling back along the multiplication gives the U of the comultiplied
/// preposets. `mutate` swaps the branch deciding whether the comultiplied
/// preposets are bottom.
IndexingReport check_indexing(const GroundSet& ground, bool mutate = false);

inline constexpr std::size_t kMaxIndexingSize = 4;

}  // namespace permutokit::opens
