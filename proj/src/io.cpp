#include "ordcone/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ordcone/dominance.hpp"
#include "ordcone/errors.hpp"

namespace ordcone {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <class T>
T field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string(where) + ": bad \"" + key + "\": " + e.what());
  }
}

ordered_json vector_json(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.decimal_str());
  return out;
}

RatVector vector_from(const json& arr, const char* where) {
  if (!arr.is_array()) throw ParseError(std::string(where) + ": expected an array");
  RatVector v;
  for (const auto& x : arr) {
    if (x.is_string()) v.push_back(Rational::parse(x.get<std::string>()));
    else if (x.is_number_integer()) v.push_back(Rational(x.get<long>()));
    else throw ParseError(std::string(where) + ": entries must be decimal strings");
  }
  return v;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

CategoryGraph parse_graph(const std::string& text) {
  const json doc = parse_json(text, "graph");
  const auto K = field<long>(doc, "K", "graph");
  if (K < 1) throw GraphError("graph: K must be at least 1");
  CategoryGraph g(static_cast<std::size_t>(K));

  const json& nodes = doc.contains("nodes") ? doc["nodes"] : json::array();
  if (!nodes.is_array()) throw ParseError("graph: \"nodes\" must be an array");
  for (const auto& n : nodes) {
    auto id = field<std::string>(n, "id", "node");
    std::optional<double> lat, lon;
    if (n.contains("lat") && !n["lat"].is_null()) lat = field<double>(n, "lat", "node");
    if (n.contains("lon") && !n["lon"].is_null()) lon = field<double>(n, "lon", "node");
    g.add_node(std::move(id), lat, lon);
  }

  const json& edges = doc.contains("edges") ? doc["edges"] : json::array();
  if (!edges.is_array()) throw ParseError("graph: \"edges\" must be an array");
  for (const auto& e : edges) {
    const auto from = field<std::string>(e, "from", "edge");
    const auto to = field<std::string>(e, "to", "edge");
    const auto cat = field<long>(e, "category", "edge");
    if (cat < 1) throw GraphError("edge " + from + "->" + to + " has category " + std::to_string(cat));
    if (!e.contains("length") || !e["length"].is_string())
      throw ParseError("edge " + from + "->" + to + ": length must be a decimal string");
    g.add_edge(from, to, static_cast<std::size_t>(cat), Rational::parse(e["length"].get<std::string>()));
  }
  return g;
}

CategoryGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string dump_graph(const CategoryGraph& g) {
  ordered_json doc;
  doc["K"] = g.K();
  doc["nodes"] = ordered_json::array();
  for (const auto& n : g.nodes()) {
    ordered_json node{{"id", n.id}};
    if (n.lat) node["lat"] = *n.lat;
    if (n.lon) node["lon"] = *n.lon;
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges())
    doc["edges"].push_back({{"from", g.node(e.from).id},
                            {"to", g.node(e.to).id},
                            {"category", e.category},
                            {"length", e.length.decimal_str()}});
  return doc.dump(2) + "\n";
}

std::size_t ResultDocument::efficient_vectors() const {
  std::set<RatVector> seen;
  for (const auto& r : routes) seen.insert(r.count_vector);
  return seen.size();
}

ResultDocument make_result(const CategoryGraph& g, std::size_t source, std::size_t target, const Weights& w,
                           const ConeHRep& cone, PathMode mode, const std::vector<EfficientPath>& paths,
                           const std::optional<Weights>& merged) {
  ResultDocument doc;
  doc.K = w.K();
  doc.omega = w.omega();
  doc.gamma = w.gamma();
  doc.merged = merged;
  doc.source = g.node(source).id;
  doc.target = g.node(target).id;
  doc.mode = mode;
  doc.facets = cone.facets;
  for (const auto& p : paths) {
    RouteRecord r;
    for (std::size_t v : p.path.nodes) r.nodes.push_back(g.node(v).id);
    r.edges = p.path.edges;
    r.count_vector = p.counts;
    r.transformed_cost = p.transformed;
    doc.routes.push_back(std::move(r));
  }
  return doc;
}

std::string dump_result(const ResultDocument& doc) {
  ordered_json out;
  out["K"] = doc.K;
  out["weights"] = {{"omega", vector_json(doc.omega)}, {"gamma", vector_json(doc.gamma)}};
  if (doc.merged)
    out["merged_weights"] = {
        {"K", doc.merged->K()}, {"omega", vector_json(doc.merged->omega())}, {"gamma", vector_json(doc.merged->gamma())}};
  out["source"] = doc.source;
  out["target"] = doc.target;
  out["mode"] = to_string(doc.mode);
  out["facets"] = ordered_json::array();
  for (const auto& row : doc.facets.row_list()) out["facets"].push_back(vector_json(row));
  out["routes"] = ordered_json::array();
  for (const auto& r : doc.routes)
    out["routes"].push_back({{"nodes", r.nodes},
                             {"edges", r.edges},
                             {"count_vector", vector_json(r.count_vector)},
                             {"transformed_cost", vector_json(r.transformed_cost)}});
  out["summary"] = {{"efficient_paths", doc.routes.size()}, {"efficient_vectors", doc.efficient_vectors()}};
  return out.dump(2) + "\n";
}

ResultDocument parse_result(const std::string& text) {
  const json in = parse_json(text, "result");
  ResultDocument doc;
  doc.K = field<std::size_t>(in, "K", "result");
  const auto& weights = in.contains("weights") ? in["weights"] : json::object();
  doc.omega = vector_from(weights.value("omega", json::array()), "weights.omega");
  doc.gamma = vector_from(weights.value("gamma", json::array()), "weights.gamma");
  if (in.contains("merged_weights")) {
    const auto& m = in["merged_weights"];
    doc.merged = Weights::classify(field<std::size_t>(m, "K", "merged_weights"),
                                   vector_from(m.value("omega", json::array()), "merged_weights.omega"),
                                   vector_from(m.value("gamma", json::array()), "merged_weights.gamma"));
  }
  doc.source = in.value("source", "");
  doc.target = in.value("target", "");
  if (auto mode = path_mode_from_string(in.value("mode", "one_per_vector"))) doc.mode = *mode;
  else throw ParseError("result: unknown mode");

  std::vector<RatVector> rows;
  for (const auto& row : in.value("facets", json::array())) {
    rows.push_back(vector_from(row, "facets"));
    if (rows.back().size() != doc.K) throw ParseError("result: facet row has wrong length");
  }
  if (rows.empty()) throw ParseError("result: missing facet matrix");
  doc.facets = RatMatrix(std::move(rows));

  for (const auto& r : in.value("routes", json::array())) {
    RouteRecord rec;
    rec.nodes = field<std::vector<std::string>>(r, "nodes", "route");
    rec.edges = r.value("edges", std::vector<std::size_t>{});
    rec.count_vector = vector_from(r.at("count_vector"), "route.count_vector");
    if (rec.count_vector.size() != doc.K) throw ParseError("result: count vector has wrong length");
    rec.transformed_cost = r.contains("transformed_cost") ? vector_from(r["transformed_cost"], "route.transformed_cost")
                                                          : mat_vec(doc.facets, rec.count_vector);
    doc.routes.push_back(std::move(rec));
  }
  return doc;
}

ResultDocument filter_result(const ResultDocument& doc) {
  ResultDocument out = doc;
  out.routes.clear();
  if (doc.routes.empty()) return out;
  // Pareto filter on A*c, which also covers the non-pointed lifted cones of
  // merged weights.
  std::vector<RatVector> images;
  for (const auto& r : doc.routes) images.push_back(mat_vec(doc.facets, r.count_vector));
  const auto pareto = ConeHRep::from_matrix(RatMatrix::identity(doc.facets.rows()));
  for (std::size_t i : nondominated_indices(pareto, images)) out.routes.push_back(doc.routes[i]);
  return out;
}

std::string export_geojson(const ResultDocument& doc, const CategoryGraph& g, bool edge_layer) {
  std::vector<std::string> missing;
  auto need = [&](std::size_t v) {
    if (!g.node(v).has_coordinates()) missing.push_back(g.node(v).id);
  };
  for (const auto& r : doc.routes)
    for (const auto& id : r.nodes) need(g.node_index(id));
  if (edge_layer)
    for (const auto& e : g.edges()) {
      need(e.from);
      need(e.to);
    }
  if (!missing.empty()) {
    std::set<std::string> uniq(missing.begin(), missing.end());
    std::string list;
    for (const auto& id : uniq) list += (list.empty() ? "" : ", ") + id;
    throw GraphError("nodes without coordinates: " + list);
  }

  auto coord = [&](std::size_t v) { return ordered_json::array({*g.node(v).lon, *g.node(v).lat}); };

  ordered_json fc{{"type", "FeatureCollection"}, {"features", ordered_json::array()}};
  if (edge_layer) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      fc["features"].push_back(
          {{"type", "Feature"},
           {"geometry", {{"type", "LineString"}, {"coordinates", {coord(edge.from), coord(edge.to)}}}},
           {"properties", {{"layer", "edge"}, {"edge_index", e}, {"category", edge.category}}}});
    }
  }
  for (std::size_t i = 0; i < doc.routes.size(); ++i) {
    const auto& r = doc.routes[i];
    ordered_json coords = ordered_json::array();
    for (const auto& id : r.nodes) coords.push_back(coord(g.node_index(id)));
    ordered_json breakdown = ordered_json::object();
    for (std::size_t k = 0; k < r.count_vector.size(); ++k)
      breakdown[std::to_string(k + 1)] = r.count_vector[k].decimal_str();
    fc["features"].push_back({{"type", "Feature"},
                              {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
                              {"properties",
                               {{"layer", "route"},
                                {"path_index", i},
                                {"count_vector", vector_json(r.count_vector)},
                                {"category_breakdown", breakdown}}}});
  }
  return fc.dump(2) + "\n";
}

}  // namespace ordcone
