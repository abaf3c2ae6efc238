#pragma once

// File formats: graph JSON, result documents, GeoJSON export.

#include <optional>
#include <string>
#include <vector>

#include "ordcone/cone.hpp"
#include "ordcone/graph.hpp"
#include "ordcone/pathsolve.hpp"

namespace ordcone {

/// {"K": int, "nodes": [{"id", "lat"?, "lon"?}], "edges": [{"from", "to",
/// "category", "length": "decimal"}]}. Throws ParseError or GraphError.
CategoryGraph parse_graph(const std::string& text);
CategoryGraph load_graph(const std::string& path);
std::string dump_graph(const CategoryGraph& g);

struct RouteRecord {
  std::vector<std::string> nodes;
  std::vector<std::size_t> edges;
  RatVector count_vector;
  RatVector transformed_cost;
};

struct ResultDocument {
  std::size_t K = 0;
  RatVector omega, gamma;
  std::optional<Weights> merged;
  std::string source, target;
  PathMode mode = PathMode::OnePerVector;
  RatMatrix facets;
  std::vector<RouteRecord> routes;

  std::size_t efficient_vectors() const;
};

ResultDocument make_result(const CategoryGraph& g, std::size_t source, std::size_t target, const Weights& w,
                           const ConeHRep& cone, PathMode mode, const std::vector<EfficientPath>& paths,
                           const std::optional<Weights>& merged = std::nullopt);

std::string dump_result(const ResultDocument& doc);
ResultDocument parse_result(const std::string& text);

/// Keeps the routes whose count vectors are non-dominated under doc.facets.
/// Idempotent: filtering a filtered document returns it unchanged.
ResultDocument filter_result(const ResultDocument& doc);

/// One FeatureCollection with a LineString per route; with `edge_layer`, every
/// graph edge is added first as a LineString carrying its category. Throws
/// GraphError listing nodes without coordinates.
std::string export_geojson(const ResultDocument& doc, const CategoryGraph& g, bool edge_layer = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ordcone
