#pragma once

// Independent brute-force verifiers. None of these share a decision path
// with the closed-form facets or the label-setting search they are used to
// check.

#include <cstdint>
#include <vector>

#include "ordcone/cone.hpp"
#include "ordcone/conic_solver.hpp"
#include "ordcone/graph.hpp"
#include "ordcone/pathsolve.hpp"

namespace ordcone {

/// Coefficients per column of B (all columns, extreme or not), or a separating
/// witness.
using MembershipCertificate = ConeMembership;

/// Exact decision of v in vcone(B) by Fourier-Motzkin elimination.
MembershipCertificate ray_membership(const ConeVRep& rays, const RatVector& v);

/// Facet normals of vcone(B) as canonical representatives, computed by the
/// incremental double-description method on { n : B^T n >= 0 }. Columns are
/// inserted in stored order. Throws NotPointed when two columns are opposite,
/// Error when B does not have full row rank.
std::vector<RatVector> double_description(const ConeVRep& rays);

/// All simple s-t paths by depth-first search, visiting out-edges ordered by
/// target node id and then edge index. Throws PathCapExceeded past `cap`.
std::vector<Path> enumerate_simple_paths(const CategoryGraph& g, std::size_t source, std::size_t target,
                                         std::size_t cap);

/// Enumerate-and-filter reference for efficient_paths: every simple path
/// whose counting vector is non-dominated under `cone` among all simple paths.
std::vector<EfficientPath> brute_force_efficient_paths(const CategoryGraph& g, std::size_t source,
                                                       std::size_t target, const ConeHRep& cone, std::size_t cap);

/// Necessary condition for weak dominance: nu . y1 <= nu . y2 for the rows of
/// the representation matrix and `samples` random nonnegative combinations of
/// them. false refutes weak dominance; true is only supporting evidence.
bool sampled_dual_check(const Weights& w, const RatVector& y1, const RatVector& y2, std::size_t samples,
                        std::uint64_t seed);

/// The sampled numerical representations used by sampled_dual_check.
std::vector<RatVector> sample_dual_vectors(const Weights& w, std::size_t samples, std::uint64_t seed);

}  // namespace ordcone
