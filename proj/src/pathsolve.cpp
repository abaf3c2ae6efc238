#include "ordcone/pathsolve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <queue>
#include <set>
#include <thread>

#include "ordcone/errors.hpp"

namespace ordcone {

std::string to_string(PathMode m) { return m == PathMode::AllPaths ? "all_paths" : "one_per_vector"; }

std::optional<PathMode> path_mode_from_string(const std::string& s) {
  if (s == "all_paths") return PathMode::AllPaths;
  if (s == "one_per_vector") return PathMode::OnePerVector;
  return std::nullopt;
}

namespace {

struct Label {
  std::size_t node = 0;
  RatVector cost;  // transformed
  RatVector raw;
  std::optional<std::size_t> pred;
  std::size_t via_edge = 0;
  std::vector<std::uint64_t> visited;
  bool alive = true;
};

bool visited(const Label& l, std::size_t v) { return (l.visited[v / 64] >> (v % 64)) & 1U; }
void mark(Label& l, std::size_t v) { l.visited[v / 64] |= std::uint64_t{1} << (v % 64); }

bool leq(const RatVector& a, const RatVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

class LabelSetting {
 public:
  LabelSetting(const CategoryGraph& g, const ConeHRep& cone, const SolveOptions& options)
      : g_(g), options_(options), per_node_(g.node_count()) {
    edge_cost_.reserve(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      RatVector c = mat_vec(cone.facets, g.edge_counts(e));
      if (!c.is_nonnegative() || c.is_zero())
        throw Error("facet matrix maps edge " + std::to_string(e) + " to a cost that is negative or zero");
      edge_cost_.push_back(std::move(c));
    }
    dim_ = cone.size();
  }

  std::vector<EfficientPath> run(std::size_t source, std::size_t target) {
    Label start;
    start.node = source;
    start.cost = RatVector(dim_);
    start.raw = RatVector(g_.K());
    start.visited.assign((g_.node_count() + 63) / 64, 0);
    mark(start, source);
    push(std::move(start));

    while (!queue_.empty()) {
      const std::size_t id = queue_.top();
      queue_.pop();
      if (!labels_[id].alive) continue;
      const std::size_t v = labels_[id].node;
      if (v == target) continue;  // simple paths never leave the target again
      for (std::size_t e : g_.out_edges(v)) {
        const std::size_t w = g_.edge(e).to;
        if (visited(labels_[id], w)) continue;
        Label next;
        next.node = w;
        next.cost = labels_[id].cost + edge_cost_[e];
        next.raw = labels_[id].raw + g_.edge_counts(e);
        next.pred = id;
        next.via_edge = e;
        next.visited = labels_[id].visited;
        mark(next, w);
        if (admit(next)) push(std::move(next));
      }
    }
    if (options_.mode == PathMode::AllPaths && live_count(target) > options_.cap)
      throw PathCapExceeded("more than " + std::to_string(options_.cap) + " efficient paths");
    return collect(source, target);
  }

 private:
  struct Order {
    const std::vector<Label>* labels;
    bool operator()(std::size_t a, std::size_t b) const {
      // std::priority_queue pops the largest; invert for a min-queue.
      const Label& la = (*labels)[a];
      const Label& lb = (*labels)[b];
      if (la.cost != lb.cost) return la.cost > lb.cost;
      if (la.node != lb.node) return la.node > lb.node;
      return a > b;
    }
  };

  // Pareto check against the live labels at the node. Dominated newcomers are
  // rejected, labels dominated by the newcomer are retired. Equal costs are
  // merged in OnePerVector mode and kept side by side in AllPaths mode.
  bool admit(const Label& next) {
    auto& bucket = per_node_[next.node];
    for (std::size_t id : bucket) {
      const Label& other = labels_[id];
      if (!other.alive) continue;
      if (leq(other.cost, next.cost)) {
        if (other.cost != next.cost || options_.mode == PathMode::OnePerVector) return false;
      }
    }
    for (std::size_t id : bucket) {
      Label& other = labels_[id];
      if (other.alive && other.cost != next.cost && leq(next.cost, other.cost)) other.alive = false;
    }
    std::erase_if(bucket, [&](std::size_t id) { return !labels_[id].alive; });
    return true;
  }

  void push(Label l) {
    const std::size_t id = labels_.size();
    per_node_[l.node].push_back(id);
    labels_.push_back(std::move(l));
    queue_.push(id);
  }

  std::size_t live_count(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(per_node_[v].begin(), per_node_[v].end(), [&](std::size_t id) { return labels_[id].alive; }));
  }

  std::vector<EfficientPath> collect(std::size_t source, std::size_t target) const {
    std::vector<EfficientPath> out;
    for (std::size_t id : per_node_[target]) {
      if (!labels_[id].alive) continue;
      std::vector<std::size_t> edges;
      for (std::size_t cur = id; labels_[cur].pred; cur = *labels_[cur].pred) edges.push_back(labels_[cur].via_edge);
      std::reverse(edges.begin(), edges.end());
      out.push_back(EfficientPath{path_from_edges(g_, source, std::move(edges)), labels_[id].raw, labels_[id].cost});
    }
    std::sort(out.begin(), out.end(), [](const EfficientPath& a, const EfficientPath& b) {
      if (a.transformed != b.transformed) return a.transformed < b.transformed;
      return a.path.nodes < b.path.nodes;
    });
    return out;
  }

  const CategoryGraph& g_;
  SolveOptions options_;
  std::size_t dim_ = 0;
  std::vector<RatVector> edge_cost_;
  std::vector<Label> labels_;
  std::vector<std::vector<std::size_t>> per_node_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, Order> queue_{Order{&labels_}};
};

}  // namespace

std::vector<EfficientPath> efficient_paths(const CategoryGraph& g, std::size_t source, std::size_t target,
                                           const ConeHRep& cone, const SolveOptions& options) {
  if (source >= g.node_count() || target >= g.node_count()) throw UnknownNode("source or target out of range");
  if (cone.dimension() != g.K())
    throw DimensionMismatch("cone dimension " + std::to_string(cone.dimension()) + " differs from K = " +
                            std::to_string(g.K()));
  for (const auto& row : cone.facets.row_list())
    if (!row.is_nonnegative()) throw Error("facet matrix has a negative entry");
  if (source == target) {
    RatVector zero(g.K());
    return {EfficientPath{Path{{source}, {}}, zero, RatVector(cone.size())}};
  }
  return LabelSetting(g, cone, options).run(source, target);
}

std::vector<EfficientPath> efficient_paths(const CategoryGraph& g, std::size_t source, std::size_t target,
                                           const Weights& w, const SolveOptions& options) {
  if (w.K() != g.K())
    throw DimensionMismatch("weights have K = " + std::to_string(w.K()) + ", graph has K = " + std::to_string(g.K()));
  if (!w.is_pointed() && !options.merge_degenerate)
    throw NotPointed("weights are degenerate at index " + std::to_string(w.degenerate_indices().front() + 1));
  return efficient_paths(g, source, target, effective_cone(w), options);
}

std::size_t distinct_vector_count(const std::vector<EfficientPath>& paths) {
  std::set<RatVector> vectors;
  for (const auto& p : paths) vectors.insert(p.counts);
  return vectors.size();
}

std::vector<SweepRow> weight_sweep(const CategoryGraph& g, std::size_t source, std::size_t target,
                                   const std::vector<Weights>& grid, const SolveOptions& options,
                                   std::size_t threads) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& w : grid) rows.push_back(SweepRow{w, 0, 0, 0.0, std::nullopt});

  auto run_row = [&](std::size_t i) {
    const auto started = std::chrono::steady_clock::now();
    try {
      const auto result = efficient_paths(g, source, target, grid[i], options);
      rows[i].efficient_vectors = distinct_vector_count(result);
      rows[i].efficient_paths = result.size();
    } catch (const std::exception& ex) {
      rows[i].error = ex.what();
    }
    rows[i].runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  };

  threads = std::max<std::size_t>(1, std::min(threads, grid.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) run_row(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) run_row(i);
      });
  }
  return rows;
}

}  // namespace ordcone
