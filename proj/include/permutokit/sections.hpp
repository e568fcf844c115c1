#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permutokit/boolfun.hpp"
#include "permutokit/cones.hpp"
#include "permutokit/error.hpp"
#include "permutokit/lattice.hpp"
#include "permutokit/preposet.hpp"

namespace permutokit::sections {

using permutokit::to_string;

/// Ordered factors over the blocks of a decomposition, or the formal zero.
template <class M>
class TensorWord {
 public:
  static TensorWord zero() { return TensorWord(); }
  explicit TensorWord(std::vector<M> factors) : factors_(std::move(factors)) {}

  bool is_zero() const { return !factors_.has_value(); }
  const std::vector<M>& factors() const {
    require(factors_.has_value(), "tensor word: the zero word has no factors");
    return *factors_;
  }

  friend bool operator==(const TensorWord&, const TensorWord&) = default;

 private:
  TensorWord() = default;
  std::optional<std::vector<M>> factors_;
};

/// f^h in the cone-graded algebra: an exponent in the cone of its grade.
class ConeMonomial {
 public:
  ConeMonomial() = default;
  /// Throws ValidationError unless exponent lies in the cone of grade.
  ConeMonomial(preposet::Preposet grade, cones::CoweightVector exponent);

  const preposet::Preposet& grade() const { return grade_; }
  const cones::CoweightVector& exponent() const { return exponent_; }

  friend bool operator==(const ConeMonomial&, const ConeMonomial&) = default;

 private:
  preposet::Preposet grade_;
  cones::CoweightVector exponent_;
};

/// f^{h1} (x) f^{h2} -> f^{(h1, h2)}, graded by (p|q).
ConeMonomial co_mul(const ConeMonomial& a, const ConeMonomial& b);

/// Projection to the lambda_S face and factorization; zero off the face.
TensorWord<ConeMonomial> co_comul(const ConeMonomial& m, Mask s, Mask t);

/// Sum of h equals z(I) and <h, lambda_A> <= z(A) for every A.
bool is_section(const boolfun::BooleanFunction& z, const LatticePoint& h);

/// Integer points of the section polytope of z, sorted.
class SectionBasis {
 public:
  SectionBasis() = default;
  /// Sorts the points; throws ValidationError if one of them is not a section.
  SectionBasis(boolfun::BooleanFunction z, std::vector<LatticePoint> points);

  const boolfun::BooleanFunction& z() const { return z_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const LatticePoint& h) const;

  friend bool operator==(const SectionBasis&, const SectionBasis&) = default;

 private:
  boolfun::BooleanFunction z_;
  std::vector<LatticePoint> points_;
};

SectionBasis global_sections(const boolfun::BooleanFunction& z);

/// All juxtapositions, carried by bf_mul(z1, z2).
SectionBasis sections_mul(const SectionBasis& s1, const SectionBasis& s2);

/// (h|_S, h|_T) when <h, lambda_S> = z(S); zero otherwise.
TensorWord<LatticePoint> sections_comul(const SectionBasis& s, const LatticePoint& h, Mask sm, Mask tm);

}  // namespace permutokit::sections
