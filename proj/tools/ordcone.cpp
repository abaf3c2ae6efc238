// ordcone: command-line front end for weighted ordinal cones and routing.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 infeasible weights,
// 3 path cap overflow, 4 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "ordcone/cone.hpp"
#include "ordcone/dominance.hpp"
#include "ordcone/errors.hpp"
#include "ordcone/io.hpp"
#include "ordcone/oracle.hpp"
#include "ordcone/pathsolve.hpp"

using namespace ordcone;
using ordered_json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInfeasible = 2, kCapOverflow = 3, kMismatch = 4 };

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t cap = 100000;
  bool strict = false;
};

struct WeightArgs {
  std::optional<std::size_t> K;
  std::optional<std::string> omega, gamma, omega_vec, gamma_vec;

  void attach(CLI::App* sub, bool with_k) {
    if (with_k) sub->add_option("--K", K, "number of categories")->check(CLI::PositiveNumber);
    sub->add_option("--omega", omega, "omega for every index (decimal or p/q)");
    sub->add_option("--gamma", gamma, "gamma for every index");
    sub->add_option("--omega-vec", omega_vec, "comma-separated omega_1..omega_{K-1}");
    sub->add_option("--gamma-vec", gamma_vec, "comma-separated gamma_1..gamma_{K-1}");
  }
};

RatVector weight_list(std::size_t n, const std::optional<std::string>& scalar, const std::optional<std::string>& vec,
                      const char* name, const char* fallback) {
  if (scalar && vec) throw ParseError(std::string("--") + name + " and --" + name + "-vec are exclusive");
  if (vec) return vec->empty() ? RatVector() : RatVector::parse_list(*vec);
  return RatVector(std::vector<Rational>(n, Rational::parse(scalar.value_or(fallback))));
}

Weights build_weights(std::size_t K, const WeightArgs& a) {
  if (K == 0) throw ParseError("K must be at least 1");
  RatVector omega = weight_list(K - 1, a.omega, a.omega_vec, "omega", "1");
  RatVector gamma = weight_list(K - 1, a.gamma, a.gamma_vec, "gamma", "0");
  return Weights::classify(K, std::move(omega), std::move(gamma));
}

std::string join(const RatVector& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].decimal_str();
  return out;
}

ordered_json vec_json(const RatVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.decimal_str());
  return out;
}

std::string one_based(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ", " : "") + std::to_string(idx[i] + 1);
  return out;
}

struct PreparedCone {
  Weights weights;
  ConeHRep cone;
  std::optional<MergeResult> merge;
};

class StrictDegenerate : public Error {
 public:
  using Error::Error;
};

PreparedCone prepare(const Weights& w, const Globals& g, std::ostream& notices) {
  if (w.is_pointed()) return {w, facet_matrix(w), std::nullopt};
  const std::string where = "omega_i * gamma_i = 1 at i = " + one_based(w.degenerate_indices());
  if (g.strict) throw StrictDegenerate("degenerate weights (" + where + "); rerun without --strict to merge");
  auto merge = merge_degenerate(w);
  notices << "notice: degenerate weights (" << where << "); merging categories to K' = " << merge.merged.K()
          << " with omega' = (" << join(merge.merged.omega()) << ") gamma' = (" << join(merge.merged.gamma())
          << ")\n";
  return {w, effective_cone(w), std::move(merge)};
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
  if (out_path) write_file(*out_path, text);
  else std::cout << text;
}

// ---------------------------------------------------------------- cone

int cmd_cone(const Globals& g, const WeightArgs& wa) {
  if (!wa.K) throw ParseError("cone: --K is required");
  const Weights w = build_weights(*wa.K, wa);
  std::ostringstream notices;
  const auto prepared = prepare(w, g, notices);
  const auto rays = mark_extreme_rays(spanning_rays(w));
  const auto kinds = applicable_special_kinds(w);

  std::optional<std::size_t> closed_form;
  if (w.is_pointed() && w.all_omega_positive()) closed_form = facet_count(w);

  std::cerr << notices.str();
  if (g.json) {
    ordered_json out;
    out["K"] = w.K();
    out["omega"] = vec_json(w.omega());
    out["gamma"] = vec_json(w.gamma());
    out["weight_class"] = to_string(w.weight_class());
    ordered_json deg = ordered_json::array();
    for (auto i : w.degenerate_indices()) deg.push_back(i + 1);
    out["degenerate_indices"] = deg;
    out["spanning_rays"] = ordered_json::array();
    for (std::size_t j = 0; j < rays.size(); ++j)
      out["spanning_rays"].push_back(
          {{"label", rays.label(j)}, {"vector", vec_json(rays.rays.column(j))}, {"extreme", bool(rays.extreme[j])}});
    out["facets"] = ordered_json::array();
    for (std::size_t r = 0; r < prepared.cone.size(); ++r) {
      ordered_json row{{"normal", vec_json(prepared.cone.facets.row(r))}};
      if (r < prepared.cone.selection.size()) row["selection"] = to_string(prepared.cone.selection[r]);
      out["facets"].push_back(std::move(row));
    }
    out["facet_count"] = prepared.cone.size();
    out["closed_form_count"] = closed_form ? ordered_json(*closed_form) : ordered_json(nullptr);
    out["special_cases"] = ordered_json::array();
    for (auto k : kinds) out["special_cases"].push_back(to_string(k));
    if (prepared.merge) {
      ordered_json lift = ordered_json::array();
      for (const auto& row : prepared.merge->lift.row_list()) lift.push_back(vec_json(row));
      out["merge"] = {{"K", prepared.merge->merged.K()},
                      {"omega", vec_json(prepared.merge->merged.omega())},
                      {"gamma", vec_json(prepared.merge->merged.gamma())},
                      {"lift", lift}};
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
  }

  std::ostringstream os;
  os << "K = " << w.K() << "\n";
  os << "omega = (" << join(w.omega()) << ")\ngamma = (" << join(w.gamma()) << ")\n";
  os << "class: " << to_string(w.weight_class());
  if (!w.is_pointed()) os << " at index " << one_based(w.degenerate_indices());
  os << "\nspanning rays:\n";
  for (std::size_t j = 0; j < rays.size(); ++j)
    os << "  " << rays.label(j) << " = (" << join(rays.rays.column(j)) << ")"
       << (rays.extreme[j] ? "  extreme" : "  redundant") << "\n";
  if (prepared.merge) {
    const auto& m = *prepared.merge;
    os << "merge: K' = " << m.merged.K() << ", omega' = (" << join(m.merged.omega()) << "), gamma' = ("
       << join(m.merged.gamma()) << ")\n";
    os << "lift (K' x K):\n";
    for (const auto& row : m.lift.row_list()) os << "  (" << join(row) << ")\n";
    os << "facet matrix of the merged cone, lifted to K = " << w.K() << " (" << prepared.cone.size() << " rows):\n";
  } else {
    os << "facet matrix (" << prepared.cone.size() << " rows):\n";
  }
  for (std::size_t r = 0; r < prepared.cone.size(); ++r) {
    os << "  ";
    if (r < prepared.cone.selection.size()) os << "[" << to_string(prepared.cone.selection[r]) << "] ";
    os << "(" << join(prepared.cone.facets.row(r)) << ")\n";
  }
  os << "facet count: " << prepared.cone.size();
  if (closed_form) os << " (closed form: " << *closed_form << ")";
  os << "\nspecial case: ";
  if (kinds.empty()) os << "none";
  for (std::size_t i = 0; i < kinds.size(); ++i) os << (i ? ", " : "") << to_string(kinds[i]);
  os << "\n";
  std::cout << os.str();
  return kOk;
}

// ---------------------------------------------------------------- dominates

int cmd_dominates(const Globals& g, const WeightArgs& wa, const std::string& y1s, const std::string& y2s) {
  const RatVector y1 = RatVector::parse_list(y1s), y2 = RatVector::parse_list(y2s);
  const std::size_t K = wa.K.value_or(y1.size());
  if (y1.size() != K || y2.size() != K) throw DimensionMismatch("--y1 and --y2 need " + std::to_string(K) + " entries");
  std::ostringstream notices;
  const auto prepared = prepare(build_weights(K, wa), g, notices);
  std::cerr << notices.str();

  const bool weak = weakly_dominates(prepared.cone, y1, y2);
  const bool reverse = weakly_dominates(prepared.cone, y2, y1);
  // For merged (non-pointed) cones strict means weak one way only.
  const bool strict = prepared.cone.pointed ? dominates(prepared.cone, y1, y2) : weak && !reverse;
  const RatVector image = mat_vec(prepared.cone.facets, y2 - y1);
  std::optional<std::size_t> violated;
  for (std::size_t r = 0; r < image.size() && !violated; ++r)
    if (image[r].sign() < 0) violated = r;

  if (g.json) {
    ordered_json out{{"y1", vec_json(y1)},
                     {"y2", vec_json(y2)},
                     {"weakly_dominates", weak},
                     {"dominates", strict},
                     {"reverse_weakly_dominates", reverse},
                     {"facet_image", vec_json(image)}};
    out["violated_facet"] =
        violated ? ordered_json(vec_json(prepared.cone.facets.row(*violated))) : ordered_json(nullptr);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "y1 = (" << join(y1) << "), y2 = (" << join(y2) << ")\n";
  std::cout << "weakly dominates: " << (weak ? "yes" : "no") << "\n";
  std::cout << "dominates: " << (strict ? "yes" : "no") << "\n";
  if (!weak && !reverse) std::cout << "incomparable\n";
  if (violated) std::cout << "violated facet: (" << join(prepared.cone.facets.row(*violated)) << ")\n";
  return kOk;
}

// ---------------------------------------------------------------- filter

int cmd_filter(const Globals& g, const WeightArgs& wa, const std::string& input,
               const std::optional<std::string>& out_path) {
  const auto text = read_file(input);
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("filter: '" + input + "' is not valid JSON");

  if (doc.contains("routes")) {
    emit(dump_result(filter_result(parse_result(text))), out_path);
    return kOk;
  }

  if (!doc.contains("points") || !doc["points"].is_array()) throw ParseError("filter: expected \"points\" or \"routes\"");
  PointSet points;
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const auto& p = doc["points"][i];
    RatVector v;
    for (const auto& x : p.at("vector")) v.push_back(x.is_string() ? Rational::parse(x.get<std::string>())
                                                                  : Rational(x.get<long>()));
    points.add(std::move(v), p.contains("id") ? p["id"].get<std::string>() : std::to_string(i));
  }
  if (points.empty()) throw EmptyInput("filter: no points");
  const std::size_t K = wa.K.value_or(points.dimension());
  std::ostringstream notices;
  const auto prepared = prepare(build_weights(K, wa), g, notices);
  std::cerr << notices.str();

  std::vector<std::size_t> keep;
  if (prepared.cone.pointed) {
    keep = nondominated_indices(prepared.cone, points.points());
  } else {
    std::vector<RatVector> images;
    for (const auto& p : points.points()) images.push_back(mat_vec(prepared.cone.facets, p));
    keep = nondominated_indices(ConeHRep::from_matrix(RatMatrix::identity(prepared.cone.size())), images);
  }

  ordered_json out{{"K", K}, {"points", ordered_json::array()}};
  for (std::size_t i : keep) out["points"].push_back({{"id", points.id(i)}, {"vector", vec_json(points.point(i))}});
  if (g.json || out_path) {
    emit(out.dump(2) + "\n", out_path);
  } else {
    for (std::size_t i : keep) std::cout << points.id(i) << "  (" << join(points.point(i)) << ")\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- route

struct RouteArgs {
  std::string graph, source, target;
  std::string mode = "one_per_vector";
  std::optional<std::string> out;
};

PathMode parse_mode(const std::string& s) {
  if (auto m = path_mode_from_string(s)) return *m;
  throw ParseError("unknown mode '" + s + "' (one_per_vector or all_paths)");
}

int cmd_route(const Globals& g, const WeightArgs& wa, const RouteArgs& ra) {
  const auto graph = load_graph(ra.graph);
  const auto s = graph.node_index(ra.source), t = graph.node_index(ra.target);
  if (wa.K && *wa.K != graph.K()) throw DimensionMismatch("--K differs from the graph's K");
  std::ostringstream notices;
  const auto prepared = prepare(build_weights(graph.K(), wa), g, notices);
  std::cerr << notices.str();

  SolveOptions opt;
  opt.mode = parse_mode(ra.mode);
  opt.cap = g.cap;
  const auto paths = efficient_paths(graph, s, t, prepared.cone, opt);
  const auto doc = make_result(graph, s, t, prepared.weights, prepared.cone, opt.mode, paths,
                               prepared.merge ? std::optional<Weights>(prepared.merge->merged) : std::nullopt);
  const auto text = dump_result(doc);
  if (ra.out) {
    write_file(*ra.out, text);
    if (!g.json)
      std::cout << doc.routes.size() << " efficient paths, " << doc.efficient_vectors() << " efficient vectors -> "
                << *ra.out << "\n";
  } else {
    std::cout << text;
  }
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string graph, source, target;
  std::string mode = "one_per_vector";
  std::string omega_grid, gamma_grid;
  std::vector<std::string> cells;
  std::size_t threads = 0;
  bool no_timing = false;
  std::optional<std::string> out;
};

int cmd_sweep(const Globals& g, const SweepArgs& sa) {
  const auto graph = load_graph(sa.graph);
  const auto s = graph.node_index(sa.source), t = graph.node_index(sa.target);
  const std::size_t K = graph.K();

  struct Cell {
    std::string omega_label, gamma_label;
    std::optional<Weights> weights;
    std::optional<std::string> error;
  };
  std::vector<Cell> cells;
  auto add_cell = [&](std::string ol, std::string gl, const WeightArgs& wa) {
    Cell c{std::move(ol), std::move(gl), std::nullopt, std::nullopt};
    try {
      c.weights = build_weights(K, wa);
    } catch (const Error& e) {
      c.error = e.what();
    }
    cells.push_back(std::move(c));
  };

  if (!sa.omega_grid.empty() || !sa.gamma_grid.empty()) {
    auto split = [](const std::string& list, const char* fallback) {
      std::vector<std::string> out;
      std::stringstream ss(list.empty() ? std::string(fallback) : list);
      for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) throw ParseError("empty grid entry");
        (void)Rational::parse(item);
        out.push_back(item);
      }
      return out;
    };
    for (const auto& o : split(sa.omega_grid, "1"))
      for (const auto& gm : split(sa.gamma_grid, "0")) {
        WeightArgs wa;
        wa.omega = o;
        wa.gamma = gm;
        add_cell(o, gm, wa);
      }
  }
  for (const auto& cell : sa.cells) {
    const auto bar = cell.find(';');
    if (bar == std::string::npos) throw ParseError("--cell expects 'omega-list;gamma-list', got '" + cell + "'");
    WeightArgs wa;
    wa.omega_vec = cell.substr(0, bar);
    wa.gamma_vec = cell.substr(bar + 1);
    auto label = [](std::string l) {
      std::replace(l.begin(), l.end(), ',', ' ');
      return l;
    };
    add_cell(label(*wa.omega_vec), label(*wa.gamma_vec), wa);
  }
  if (cells.empty()) throw ParseError("sweep: give --omega-grid/--gamma-grid or at least one --cell");

  // Degenerate cells go through the merged cone unless --strict.
  std::vector<Weights> grid;
  std::vector<std::size_t> grid_cell;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& c = cells[i];
    if (!c.weights) continue;
    if (!c.weights->is_pointed() && g.strict) {
      c.error = "degenerate weights at index " + one_based(c.weights->degenerate_indices()) + " (--strict)";
      continue;
    }
    grid.push_back(*c.weights);
    grid_cell.push_back(i);
  }

  SolveOptions opt;
  opt.mode = parse_mode(sa.mode);
  opt.cap = g.cap;
  opt.merge_degenerate = !g.strict;
  const std::size_t threads = sa.threads ? sa.threads : std::max(1U, std::thread::hardware_concurrency());
  const auto rows = weight_sweep(graph, s, t, grid, opt, threads);

  std::vector<std::optional<SweepRow>> by_cell(cells.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    by_cell[grid_cell[r]] = rows[r];
    if (rows[r].error) cells[grid_cell[r]].error = rows[r].error;
  }

  std::ostringstream csv, diag;
  csv << "omega,gamma,efficient_vectors,efficient_paths,runtime_ms\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    csv << c.omega_label << "," << c.gamma_label << ",";
    if (c.error) {
      csv << ",,\n";
      diag << "row " << i + 1 << " (omega=" << c.omega_label << ", gamma=" << c.gamma_label << "): " << *c.error
           << "\n";
      continue;
    }
    const auto& row = *by_cell[i];
    csv << row.efficient_vectors << "," << row.efficient_paths << ",";
    if (!sa.no_timing) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(3);
      ms << row.runtime_ms;
      csv << ms.str();
    }
    csv << "\n";
  }
  std::cerr << diag.str();
  emit(csv.str(), sa.out);
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::optional<std::string> graph, source, target;
  std::size_t pairs = 200;
  std::optional<std::size_t> corrupt_row;
};

std::string set_diff(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  std::string out;
  for (const auto& v : a)
    if (!std::binary_search(b.begin(), b.end(), v)) out += (out.empty() ? "" : ", ") + ("(" + join(v) + ")");
  return out.empty() ? "none" : out;
}

int cmd_verify(const Globals& g, const WeightArgs& wa, const VerifyArgs& va) {
  std::optional<CategoryGraph> graph;
  if (va.graph) graph = load_graph(*va.graph);
  const std::size_t K = graph ? graph->K() : wa.K.value_or(0);
  if (K == 0) throw ParseError("verify: give --K or --graph");
  if (graph && wa.K && *wa.K != K) throw DimensionMismatch("--K differs from the graph's K");
  std::ostringstream notices;
  auto prepared = prepare(build_weights(K, wa), g, notices);
  std::cerr << notices.str();

  // Negative control: perturb one facet row before any check runs.
  auto corrupt = [&](RatMatrix m) {
    if (!va.corrupt_row) return m;
    if (*va.corrupt_row >= m.rows()) throw ParseError("--debug-corrupt-facet: row out of range");
    auto rows = m.row_list();
    rows[*va.corrupt_row][0] = rows[*va.corrupt_row][0] * Rational(2) + Rational(1);
    return RatMatrix(std::move(rows));
  };
  prepared.cone.facets = corrupt(prepared.cone.facets);

  struct Check {
    std::string name;
    std::string status;  // PASS, FAIL, SKIP
    std::string detail;
  };
  std::vector<Check> checks;

  // 1. closed-form facets against double description; degenerate weights are
  // checked on the merged cone.
  {
    const Weights& base = prepared.merge ? prepared.merge->merged : prepared.weights;
    const auto got = canonical_rows(prepared.merge ? corrupt(facet_matrix(base).facets) : prepared.cone.facets);
    if (base.K() == 1) {
      checks.push_back({"facets-vs-double-description", "SKIP", "merged cone has K' = 1"});
    } else {
      const auto dd = double_description(spanning_rays(base));
      if (got == dd) {
        checks.push_back({"facets-vs-double-description", "PASS", std::to_string(dd.size()) + " facets"});
      } else {
        checks.push_back({"facets-vs-double-description", "FAIL",
                          "facet rows not produced by double description: " + set_diff(got, dd) +
                              "; missing: " + set_diff(dd, got)});
      }
    }
  }

  // 2. dominance against exact ray membership on seeded random pairs.
  {
    auto gens = spanning_rays(prepared.weights).columns();
    if (prepared.merge)
      for (std::size_t k = 0; k < K; ++k) gens.push_back(RatVector::unit(K, k));
    std::mt19937_64 rng(g.seed);
    std::uniform_int_distribution<long> entry(-6, 6), den(1, 3);
    std::size_t mismatches = 0, refuted = 0;
    std::string first;
    for (std::size_t p = 0; p < va.pairs; ++p) {
      RatVector y1, y2;
      for (std::size_t k = 0; k < K; ++k) y1.push_back(Rational(entry(rng), den(rng)));
      for (std::size_t k = 0; k < K; ++k) y2.push_back(Rational(entry(rng), den(rng)));
      const bool by_facets = weakly_dominates(prepared.cone, y1, y2);
      const bool by_rays = solve_cone_membership(gens, y2 - y1).feasible;
      if (by_facets != by_rays) {
        if (mismatches++ == 0) first = "y1=(" + join(y1) + ") y2=(" + join(y2) + ")";
      }
      if (by_rays && !sampled_dual_check(prepared.weights, y1, y2, 20, g.seed + p)) ++refuted;
    }
    if (mismatches == 0 && refuted == 0) {
      checks.push_back({"dominance-vs-ray-membership", "PASS", std::to_string(va.pairs) + " pairs"});
    } else {
      checks.push_back({"dominance-vs-ray-membership", "FAIL",
                        std::to_string(mismatches) + " mismatches, " + std::to_string(refuted) +
                            " dual refutations; first: " + (first.empty() ? "n/a" : first)});
    }
  }

  // 3. label-setting search against enumeration.
  if (graph) {
    if (!va.source || !va.target) throw ParseError("verify: --graph needs --source and --target");
    const auto s = graph->node_index(*va.source), t = graph->node_index(*va.target);
    try {
      const auto brute = brute_force_efficient_paths(*graph, s, t, prepared.cone, g.cap);
      const auto fast = efficient_paths(*graph, s, t, prepared.cone);
      std::set<RatVector> a, b;
      for (const auto& p : fast) a.insert(p.transformed);
      for (const auto& p : brute) b.insert(p.transformed);
      if (a == b && fast.size() == a.size()) {
        checks.push_back({"solver-vs-enumeration", "PASS", std::to_string(a.size()) + " efficient vectors"});
      } else {
        checks.push_back({"solver-vs-enumeration", "FAIL",
                          "solver found " + std::to_string(a.size()) + " vectors, enumeration " +
                              std::to_string(b.size())});
      }
    } catch (const PathCapExceeded&) {
      checks.push_back({"solver-vs-enumeration", "SKIP",
                        "more than " + std::to_string(g.cap) + " simple paths; enumeration skipped"});
    }
  } else {
    checks.push_back({"solver-vs-enumeration", "SKIP", "no graph given"});
  }

  bool failed = false;
  for (const auto& c : checks) failed |= c.status == "FAIL";
  if (g.json) {
    ordered_json out{{"checks", ordered_json::array()}, {"ok", !failed}};
    for (const auto& c : checks) out["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : checks) std::cout << c.status << "  " << c.name << "  " << c.detail << "\n";
  }
  return failed ? kMismatch : kOk;
}

// ---------------------------------------------------------------- export

int cmd_export(const std::string& result, const std::string& graph_path, bool edges,
               const std::optional<std::string>& out) {
  const auto doc = parse_result(read_file(result));
  const auto graph = load_graph(graph_path);
  emit(export_geojson(doc, graph, edges), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted ordinal dominance cones, dominance tests and efficient routes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--cap", g.cap, "path-count cap for all_paths and enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--strict", g.strict, "treat degenerate weights as an error instead of merging");

  WeightArgs cone_w, dom_w, filter_w, route_w, verify_w;

  auto* cone = app.add_subcommand("cone", "inspect the cone of a weight pair");
  cone_w.attach(cone, true);

  auto* dom = app.add_subcommand("dominates", "test whether y1 dominates y2");
  dom_w.attach(dom, true);
  std::string y1, y2;
  dom->add_option("--y1", y1, "comma-separated vector")->required();
  dom->add_option("--y2", y2, "comma-separated vector")->required();

  auto* filter = app.add_subcommand("filter", "non-dominated filter of a point file or result document");
  filter_w.attach(filter, true);
  std::string filter_in;
  std::optional<std::string> filter_out;
  filter->add_option("input", filter_in, "points JSON or result document")->required()->check(CLI::ExistingFile);
  filter->add_option("-o,--output", filter_out, "write to file");

  auto* route = app.add_subcommand("route", "all efficient s-t paths");
  route_w.attach(route, true);
  RouteArgs ra;
  route->add_option("--graph", ra.graph, "graph JSON")->required()->check(CLI::ExistingFile);
  route->add_option("--source,-s", ra.source, "source node id")->required();
  route->add_option("--target,-t", ra.target, "target node id")->required();
  route->add_option("--mode", ra.mode, "one_per_vector or all_paths");
  route->add_option("-o,--output", ra.out, "write the result document to a file");

  auto* sweep = app.add_subcommand("sweep", "efficient path counts over a weight grid (CSV)");
  SweepArgs sa;
  sweep->add_option("--graph", sa.graph, "graph JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--source,-s", sa.source, "source node id")->required();
  sweep->add_option("--target,-t", sa.target, "target node id")->required();
  sweep->add_option("--mode", sa.mode, "one_per_vector or all_paths");
  sweep->add_option("--omega-grid", sa.omega_grid, "comma-separated omega values, broadcast per cell");
  sweep->add_option("--gamma-grid", sa.gamma_grid, "comma-separated gamma values, broadcast per cell");
  sweep->add_option("--cell", sa.cells, "explicit cell 'o1,o2,...;g1,g2,...' (repeatable)");
  sweep->add_option("--threads", sa.threads, "worker threads (default: hardware)");
  sweep->add_flag("--no-timing", sa.no_timing, "leave runtime_ms empty for byte-stable output");
  sweep->add_option("-o,--output", sa.out, "write CSV to a file");

  auto* verify = app.add_subcommand("verify", "cross-check facets, dominance and routing against oracles");
  verify_w.attach(verify, true);
  VerifyArgs va;
  verify->add_option("--graph", va.graph, "graph JSON")->check(CLI::ExistingFile);
  verify->add_option("--source,-s", va.source, "source node id");
  verify->add_option("--target,-t", va.target, "target node id");
  verify->add_option("--pairs", va.pairs, "random dominance pairs");
  verify->add_option("--debug-corrupt-facet", va.corrupt_row, "")->group("");

  auto* exp = app.add_subcommand("export-geojson", "routes of a result document as GeoJSON");
  std::string exp_result, exp_graph;
  bool exp_edges = false;
  std::optional<std::string> exp_out;
  exp->add_option("--result", exp_result, "result document")->required()->check(CLI::ExistingFile);
  exp->add_option("--graph", exp_graph, "graph JSON with coordinates")->required()->check(CLI::ExistingFile);
  exp->add_flag("--edges", exp_edges, "add every graph edge as a background layer");
  exp->add_option("-o,--output", exp_out, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cone) return cmd_cone(g, cone_w);
    if (*dom) return cmd_dominates(g, dom_w, y1, y2);
    if (*filter) return cmd_filter(g, filter_w, filter_in, filter_out);
    if (*route) return cmd_route(g, route_w, ra);
    if (*sweep) return cmd_sweep(g, sa);
    if (*verify) return cmd_verify(g, verify_w, va);
    if (*exp) return cmd_export(exp_result, exp_graph, exp_edges, exp_out);
  } catch (const WeightError& e) {
    std::cerr << "error: infeasible weights: " << e.what() << "\n";
    return kInfeasible;
  } catch (const StrictDegenerate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const PathCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap)\n";
    return kCapOverflow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
