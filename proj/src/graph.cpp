#include "ordcone/graph.hpp"

#include "ordcone/errors.hpp"

namespace ordcone {

CategoryGraph::CategoryGraph(std::size_t K) : K_(K) {
  if (K == 0) throw GraphError("a graph needs at least one category");
}

std::size_t CategoryGraph::add_node(std::string id, std::optional<double> lat, std::optional<double> lon) {
  if (index_.contains(id)) throw GraphError("duplicate node id '" + id + "'");
  const std::size_t v = nodes_.size();
  index_.emplace(id, v);
  nodes_.push_back(GraphNode{std::move(id), lat, lon});
  out_.emplace_back();
  return v;
}

std::size_t CategoryGraph::add_edge(const std::string& from, const std::string& to, std::size_t category,
                                    Rational length) {
  const std::size_t u = node_index(from);
  const std::size_t v = node_index(to);
  if (category < 1 || category > K_)
    throw GraphError("edge " + from + "->" + to + " has category " + std::to_string(category) + " outside 1.." +
                     std::to_string(K_));
  if (length.sign() <= 0) throw GraphError("edge " + from + "->" + to + " has non-positive length " + length.str());
  const std::size_t e = edges_.size();
  edges_.push_back(GraphEdge{u, v, category, std::move(length)});
  out_[u].push_back(e);
  return e;
}

std::optional<std::size_t> CategoryGraph::find_node(const std::string& id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t CategoryGraph::node_index(const std::string& id) const {
  if (auto v = find_node(id)) return *v;
  throw UnknownNode("unknown node id '" + id + "'");
}

RatVector CategoryGraph::edge_counts(std::size_t e) const {
  RatVector c(K_);
  c[edges_[e].category - 1] = edges_[e].length;
  return c;
}

RatVector counting_vector(const std::vector<std::size_t>& edges, const CategoryGraph& g) {
  RatVector c(g.K());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k] >= g.edge_count()) throw DisconnectedPath("edge index " + std::to_string(edges[k]) + " out of range");
    if (k > 0 && g.edge(edges[k - 1]).to != g.edge(edges[k]).from)
      throw DisconnectedPath("edges " + std::to_string(edges[k - 1]) + " and " + std::to_string(edges[k]) +
                             " do not share an endpoint");
    const auto& e = g.edge(edges[k]);
    c[e.category - 1] += e.length;
  }
  return c;
}

Path path_from_edges(const CategoryGraph& g, std::size_t source, std::vector<std::size_t> edges) {
  Path p;
  p.nodes.push_back(source);
  for (std::size_t e : edges) {
    if (g.edge(e).from != p.nodes.back()) throw DisconnectedPath("edge sequence is not a walk");
    p.nodes.push_back(g.edge(e).to);
  }
  p.edges = std::move(edges);
  return p;
}

}  // namespace ordcone
