#pragma once

#include <span>

#include "ordcone/rational.hpp"

namespace ordcone {

/// Outcome of deciding whether a target lies in the cone spanned by a set of
/// generators. Exactly one of the two certificates is populated:
///  - feasible: `coefficients` (one per generator, all >= 0) reproduce the
///    target exactly;
///  - infeasible: `witness` separates, i.e. witness . g >= 0 for every
///    generator g and witness . target < 0.
struct ConeMembership {
  bool feasible = false;
  RatVector coefficients;
  RatVector witness;
};

/// Decides target in { sum_j lambda_j g_j : lambda >= 0 } by Fourier-Motzkin
/// elimination in exact arithmetic. Equalities are used for substitution
/// before any pairwise elimination, which keeps the blowup small for the
/// low-dimensional systems this library produces.
ConeMembership solve_cone_membership(std::span<const RatVector> generators, const RatVector& target);

/// Checks a certificate by direct substitution.
bool verify_membership(std::span<const RatVector> generators, const RatVector& target,
                       const ConeMembership& cert);

}  // namespace ordcone
