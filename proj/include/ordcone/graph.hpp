#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordcone/rational.hpp"

namespace ordcone {

struct GraphNode {
  std::string id;
  std::optional<double> lat;
  std::optional<double> lon;

  bool has_coordinates() const noexcept { return lat.has_value() && lon.has_value(); }
};

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t category = 1;  // 1 = best, K = worst
  Rational length;
};

/// Directed graph whose edges carry an ordinal category and a positive length.
class CategoryGraph {
 public:
  explicit CategoryGraph(std::size_t K);

  std::size_t K() const noexcept { return K_; }

  /// Throws GraphError on a duplicate id.
  std::size_t add_node(std::string id, std::optional<double> lat = std::nullopt,
                       std::optional<double> lon = std::nullopt);
  /// Throws UnknownNode, or GraphError for a category outside 1..K or a
  /// non-positive length.
  std::size_t add_edge(const std::string& from, const std::string& to, std::size_t category, Rational length);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const GraphNode& node(std::size_t v) const { return nodes_[v]; }
  const GraphEdge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  /// Outgoing edge indices in insertion order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

  std::optional<std::size_t> find_node(const std::string& id) const;
  /// Throws UnknownNode naming the id.
  std::size_t node_index(const std::string& id) const;

  /// K-vector with the edge length in the slot of its category.
  RatVector edge_counts(std::size_t e) const;

 private:
  std::size_t K_;
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A walk given by its edge sequence; `nodes` has one more entry than `edges`
/// (or exactly the source when the walk is empty).
struct Path {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Per-category accumulated lengths of a walk. Throws DisconnectedPath when
/// consecutive edges do not share endpoints.
RatVector counting_vector(const std::vector<std::size_t>& edges, const CategoryGraph& g);

/// Builds the node sequence of an edge walk starting at `source`.
Path path_from_edges(const CategoryGraph& g, std::size_t source, std::vector<std::size_t> edges);

}  // namespace ordcone
