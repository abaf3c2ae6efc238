#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordcone/cone.hpp"
#include "ordcone/rational.hpp"

namespace ordcone {

/// Finite outcome set with a stable identifier per point.
class PointSet {
 public:
  PointSet() = default;
  /// Identifiers default to "0", "1", ...
  explicit PointSet(std::vector<RatVector> points);
  PointSet(std::vector<RatVector> points, std::vector<std::string> ids);

  void add(RatVector point, std::string id);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t dimension() const noexcept { return points_.empty() ? 0 : points_.front().size(); }
  const RatVector& point(std::size_t i) const { return points_[i]; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  const std::vector<RatVector>& points() const noexcept { return points_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

 private:
  std::vector<RatVector> points_;
  std::vector<std::string> ids_;
};

/// y1 weakly dominates y2 iff A (y2 - y1) >= 0.
bool weakly_dominates(const ConeHRep& cone, const RatVector& y1, const RatVector& y2);

/// Weak dominance with y1 != y2. Throws NotPointed for a non-pointed cone.
bool dominates(const ConeHRep& cone, const RatVector& y1, const RatVector& y2);

/// Points of Y not dominated by any other point of Y. Equal copies never
/// dominate each other, so duplicates survive together. Order and ids are
/// preserved. Throws EmptyInput for an empty set.
PointSet filter_nondominated(const ConeHRep& cone, const PointSet& points);

/// Indices (into the input) of the non-dominated points.
std::vector<std::size_t> nondominated_indices(const ConeHRep& cone, const std::vector<RatVector>& points);

/// { A y : y in Y } with ids carried over. Throws RankDeficient unless
/// rank(A) == K.
PointSet pareto_transform(const ConeHRep& cone, const PointSet& points);

}  // namespace ordcone
