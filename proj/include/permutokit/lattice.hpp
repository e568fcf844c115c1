#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permutokit/ground_set.hpp"

namespace permutokit {

/// Integer vector indexed by a ground set (an element of ZI).
class LatticePoint {
 public:
  LatticePoint() = default;
  LatticePoint(GroundSet ground, std::vector<std::int64_t> coords);
  static LatticePoint zero(const GroundSet& ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t at(const Label& label) const;

  std::int64_t sum() const;
  /// <h, lambda_A> = sum of the coordinates in A.
  std::int64_t pairing(Mask a) const;
  LatticePoint restrict(Mask s) const;

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a);
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  GroundSet ground_;
  std::vector<std::int64_t> coords_;
};

std::string to_string(const LatticePoint& h);

/// Coordinate-wise juxtaposition over the disjoint union of the grounds.
LatticePoint juxtapose(const LatticePoint& a, const LatticePoint& b);

/// L∞ enumeration window.
struct Box {
  std::int64_t bound = 3;
  explicit Box(std::int64_t b = 3);
};

/// All integer points h over `ground` with |h_i - center_i| <= bound and
/// sum(h) = total, in lexicographic order.
std::vector<LatticePoint> enumerate_window(const GroundSet& ground, const std::vector<std::int64_t>& center,
                                           std::int64_t bound, std::int64_t total);

/// All integer points h with lo_i <= h_i <= hi_i and sum(h) = total, in
/// lexicographic order.
std::vector<LatticePoint> enumerate_box(const GroundSet& ground, const std::vector<std::int64_t>& lo,
                                        const std::vector<std::int64_t>& hi, std::int64_t total);

}  // namespace permutokit
