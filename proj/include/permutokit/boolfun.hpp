#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permutokit/lattice.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::boolfun {

using permutokit::to_string;

inline constexpr std::size_t kMaxBooleanGround = 12;

/// Integer-valued function on the subsets of a ground set with z(∅) = 0.
/// Values are stored densely, indexed by subset mask.
class BooleanFunction {
 public:
  BooleanFunction() : values_{0} {}
  /// Throws ValidationError unless values has 2^n entries and values[0] == 0.
  BooleanFunction(GroundSet ground, std::vector<std::int64_t> values);
  static BooleanFunction zero(const GroundSet& ground);

  const GroundSet& ground() const { return ground_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t operator()(Mask a) const { return values_[a]; }
  /// z(I).
  std::int64_t height() const { return values_.back(); }

  friend BooleanFunction operator+(const BooleanFunction& a, const BooleanFunction& b);
  friend BooleanFunction operator-(const BooleanFunction& a, const BooleanFunction& b);
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
  friend auto operator<=>(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  GroundSet ground_;
  std::vector<std::int64_t> values_;
};

std::string to_string(const BooleanFunction& z);

/// (z1|z2)(A) = z1(A ∩ S) + z2(A ∩ T).
BooleanFunction bf_mul(const BooleanFunction& z1, const BooleanFunction& z2);

/// (z restricted to S, z contracted to T) with contraction A ↦ z(A ⊔ S) - z(S).
std::pair<BooleanFunction, BooleanFunction> bf_comul(const BooleanFunction& z, Mask s, Mask t);
std::pair<BooleanFunction, BooleanFunction> bf_comul(const BooleanFunction& z, const GroundSet& s,
                                                     const GroundSet& t);

/// z_h(A) = sum of h over A.
BooleanFunction z_of_point(const LatticePoint& h);

/// The unique h with z2 = z1 + z_h, if the difference is modular.
std::optional<LatticePoint> bf_equivalent(const BooleanFunction& z1, const BooleanFunction& z2);

/// Submodularity: z(A) + z(B) >= z(A ∪ B) + z(A ∩ B) for all A, B.
bool is_generalized_permutohedron(const BooleanFunction& z);

/// Component i of the iterated comultiplication along F, over lump S_i:
/// A ↦ z(S_1 ⊔ ... ⊔ S_{i-1} ⊔ A) - z(S_1 ⊔ ... ⊔ S_{i-1}).
BooleanFunction comul_component(const BooleanFunction& z, const setcomp::Composition& f, std::size_t i);

/// Heights of the iterated comultiplication along F, one per lump.
std::vector<std::int64_t> heights_along(const BooleanFunction& z, const setcomp::Composition& f);

/// Pulls z back along sigma: J -> I, (sigma z)(A) = z(sigma(A)).
BooleanFunction relabel(const setcomp::Bijection& sigma, const BooleanFunction& z);

}  // namespace permutokit::boolfun
