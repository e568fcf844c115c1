#pragma once

#include "permutokit/axioms.hpp"
#include "permutokit/boolfun.hpp"
#include "permutokit/points.hpp"
#include "permutokit/preposet.hpp"
#include "permutokit/setcomp.hpp"

namespace permutokit::axioms {

/// Compositions under concatenation and restriction. The mutation reverses
/// the lump order of both restrictions.
BimonoidInstance<setcomp::Composition> sigma_instance(bool mutated = false);

/// Augmented preposets. The mutation swaps the branch deciding whether the
/// comultiplication is bottom.
BimonoidInstance<preposet::AugPreposet> o_bullet_instance(bool mutated = false);

/// Boolean functions with values in [-3, 3]. The mutation drops the
/// subtraction of z(S) in the contraction.
BimonoidInstance<boolfun::BooleanFunction> bf_instance(bool mutated = false);

/// Torus-orbit points. The mutation reverses the orbit lump order of both
/// comultiplication factors.
BimonoidInstance<points::PermPoint> points_instance(bool mutated = false);

}  // namespace permutokit::axioms
