#include "ordcone/dominance.hpp"

#include "ordcone/errors.hpp"

namespace ordcone {

PointSet::PointSet(std::vector<RatVector> points) {
  for (std::size_t i = 0; i < points.size(); ++i) add(std::move(points[i]), std::to_string(i));
}

PointSet::PointSet(std::vector<RatVector> points, std::vector<std::string> ids) {
  if (points.size() != ids.size()) throw DimensionMismatch("point set needs one id per point");
  for (std::size_t i = 0; i < points.size(); ++i) add(std::move(points[i]), std::move(ids[i]));
}

void PointSet::add(RatVector point, std::string id) {
  if (!points_.empty() && point.size() != dimension())
    throw DimensionMismatch("point '" + id + "' has dimension " + std::to_string(point.size()) + ", expected " +
                            std::to_string(dimension()));
  points_.push_back(std::move(point));
  ids_.push_back(std::move(id));
}

bool weakly_dominates(const ConeHRep& cone, const RatVector& y1, const RatVector& y2) {
  if (y1.size() != cone.dimension() || y2.size() != cone.dimension())
    throw DimensionMismatch("dominance test: vectors must have " + std::to_string(cone.dimension()) + " entries");
  const RatVector diff = y2 - y1;
  for (const auto& row : cone.facets.row_list())
    if (dot(row, diff).sign() < 0) return false;
  return true;
}

bool dominates(const ConeHRep& cone, const RatVector& y1, const RatVector& y2) {
  if (!cone.pointed) throw NotPointed("strict dominance needs a pointed cone");
  return y1 != y2 && weakly_dominates(cone, y1, y2);
}

std::vector<std::size_t> nondominated_indices(const ConeHRep& cone, const std::vector<RatVector>& points) {
  if (!cone.pointed) throw NotPointed("filtering needs a pointed cone");
  // Compare in transformed space: y1 <=_C y2 iff A y1 <= A y2 componentwise.
  std::vector<RatVector> image;
  image.reserve(points.size());
  for (const auto& p : points) image.push_back(mat_vec(cone.facets, p));

  auto leq = [](const RatVector& a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j)
      dominated = j != i && points[j] != points[i] && leq(image[j], image[i]);
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

PointSet filter_nondominated(const ConeHRep& cone, const PointSet& points) {
  if (points.empty()) throw EmptyInput("cannot filter an empty point set");
  if (points.dimension() != cone.dimension())
    throw DimensionMismatch("points have dimension " + std::to_string(points.dimension()) + ", cone has " +
                            std::to_string(cone.dimension()));
  PointSet out;
  for (std::size_t i : nondominated_indices(cone, points.points())) out.add(points.point(i), points.id(i));
  return out;
}

PointSet pareto_transform(const ConeHRep& cone, const PointSet& points) {
  if (cone.facets.rank() != cone.dimension())
    throw RankDeficient("pareto transform needs rank(A) == " + std::to_string(cone.dimension()));
  PointSet out;
  for (std::size_t i = 0; i < points.size(); ++i) out.add(mat_vec(cone.facets, points.point(i)), points.id(i));
  return out;
}

}  // namespace ordcone
