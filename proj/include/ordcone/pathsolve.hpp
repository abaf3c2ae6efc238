#pragma once

// Multi-objective label-setting search for ordinally efficient s-t paths.
//
// Edge counting vectors are mapped through the facet matrix A of the ordering
// cone; cone dominance between paths then becomes componentwise (Pareto)
// dominance between transformed costs. Facet normals are nonnegative and
// lengths positive, so transformed edge costs are nonnegative and nonzero and
// a Dijkstra-style label-setting search with per-node Pareto pruning is exact.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordcone/cone.hpp"
#include "ordcone/graph.hpp"

namespace ordcone {

enum class PathMode { OnePerVector, AllPaths };

std::string to_string(PathMode m);
std::optional<PathMode> path_mode_from_string(const std::string& s);

struct SolveOptions {
  PathMode mode = PathMode::OnePerVector;
  /// Upper bound on the number of returned paths in AllPaths mode.
  std::size_t cap = 100000;
  /// Route degenerate weights through the merged cone instead of throwing.
  bool merge_degenerate = false;
};

struct EfficientPath {
  Path path;
  RatVector counts;       // raw K-dimensional counting vector
  RatVector transformed;  // A * counts
};

/// All simple s-t paths whose counting vectors are non-dominated under the
/// cone of `w`. OnePerVector returns one representative per non-dominated
/// vector; AllPaths returns every simple path attaining one. Results are
/// ordered by transformed cost, then by node sequence. An unreachable target
/// yields an empty list. Throws NotPointed for degenerate weights (unless
/// options.merge_degenerate) and
/// PathCapExceeded when AllPaths finds more than `cap` paths.
std::vector<EfficientPath> efficient_paths(const CategoryGraph& g, std::size_t source, std::size_t target,
                                           const Weights& w, const SolveOptions& options = {});

/// Same search for an explicit facet matrix (e.g. the lifted cone of merged
/// weights). Every row must be nonnegative and A * c(e) must be nonzero for
/// each edge; otherwise throws Error.
std::vector<EfficientPath> efficient_paths(const CategoryGraph& g, std::size_t source, std::size_t target,
                                           const ConeHRep& cone, const SolveOptions& options = {});

/// Number of distinct counting vectors among the results.
std::size_t distinct_vector_count(const std::vector<EfficientPath>& paths);

struct SweepRow {
  Weights weights;
  std::size_t efficient_vectors = 0;
  std::size_t efficient_paths = 0;
  double runtime_ms = 0.0;
  std::optional<std::string> error;
};

/// Runs efficient_paths once per grid entry. Rows keep grid order regardless
/// of `threads`; a failing entry records its error and the sweep continues.
std::vector<SweepRow> weight_sweep(const CategoryGraph& g, std::size_t source, std::size_t target,
                                   const std::vector<Weights>& grid, const SolveOptions& options = {},
                                   std::size_t threads = 1);

}  // namespace ordcone
