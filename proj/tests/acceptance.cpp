// Acceptance suite: one line per criterion, each with its own time bound.
// Exit status is nonzero when any criterion fails or runs over its bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ordcone/cone.hpp"
#include "ordcone/dominance.hpp"
#include "ordcone/errors.hpp"
#include "ordcone/oracle.hpp"
#include "ordcone/pathsolve.hpp"
#include "support.hpp"

using namespace ordcone;
using ordcone::testing::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::set<RatVector> vector_set(const std::vector<EfficientPath>& paths) {
  std::set<RatVector> out;
  for (const auto& p : paths) out.insert(p.counts);
  return out;
}

std::multiset<RatVector> multiset_of(const std::vector<RatVector>& v) { return {v.begin(), v.end()}; }

// 2^{K-1-l} + sum_k 2^{K-1-j_k-(l-k)} for the zero-gamma index set J.
std::size_t zero_gamma_formula(const Weights& w) {
  const std::size_t K = w.K();
  std::vector<std::size_t> J;
  for (std::size_t i = 0; i + 1 < K; ++i)
    if (w.gamma()[i].is_zero()) J.push_back(i + 1);
  const std::size_t l = J.size();
  std::size_t total = std::size_t{1} << (K - 1 - l);
  for (std::size_t k = 1; k <= l; ++k) total += std::size_t{1} << (K - 1 - J[k - 1] - (l - k));
  return total;
}

// A larger pointed weight pair, componentwise >= w.
Weights grow(Gen& gen, const Weights& w) {
  RatVector o = w.omega(), g = w.gamma();
  for (std::size_t i = 0; i < o.size(); ++i) {
    const Rational o2 = o[i] + gen.rational(3, 2);
    const Rational g2 = g[i] + gen.rational(2, 6);
    if (o2 * g2 < Rational(1)) {
      o[i] = o2;
      g[i] = g2;
    } else if (o2 * g[i] < Rational(1)) {
      o[i] = o2;
    } else if (o[i] * g2 < Rational(1)) {
      g[i] = g2;
    }
  }
  return Weights::classify(w.K(), o, g);
}

// ------------------------------------------------------------------ 1..12

Outcome facet_count_positive() {
  Outcome out;
  Gen gen(101);
  for (int t = 0; t < 50; ++t) {
    const std::size_t K = 2 + t % 5;
    const auto w = gen.pointed(K, true, true);
    const auto rows = facet_matrix(w).size();
    out.require(rows == (std::size_t{1} << (K - 1)), w.str() + " gave " + std::to_string(rows) + " rows");
  }
  if (out.pass) out.detail = "50 weight sets, K in 2..6, rows == 2^(K-1)";
  return out;
}

Outcome facet_count_zeros() {
  Outcome out;
  Gen gen(102);
  std::vector<Weights> cases;
  cases.push_back(Weights::classify(5, RatVector{2, 3, Rational(3, 2), 5},
                                    RatVector{0, Rational(1, 4), 0, Rational(1, 7)}));
  for (std::size_t K = 2; K <= 6; ++K) cases.push_back(Weights::classify(K, RatVector(std::vector<Rational>(K - 1, 2)),
                                                                         RatVector(K - 1)));
  for (int t = 0; t < 50; ++t) cases.push_back(gen.gamma_zero_pattern(2 + t % 5));
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& w = cases[c];
    const auto rows = canonical_rows(facet_matrix(w).facets).size();
    out.require(rows == zero_gamma_formula(w) && rows == facet_count(w),
                w.str() + ": " + std::to_string(rows) + " rows, formula " + std::to_string(zero_gamma_formula(w)));
  }
  out.require(facet_matrix(cases[0]).size() == 10, "K=5, J={1,3} is not 10 rows");
  for (std::size_t K = 2; K <= 6; ++K)
    out.require(facet_matrix(cases[K - 1]).size() == K, "gamma = 0 is not K rows for K = " + std::to_string(K));
  if (out.pass) out.detail = std::to_string(cases.size()) + " weight sets incl. K=5 J={1,3} -> 10 and gamma=0 -> K";
  return out;
}

Outcome displayed_matrices() {
  Outcome out;
  Gen gen(103);
  for (int t = 0; t < 10; ++t) {
    const auto w4 = gen.pointed(4, true, true);
    out.require(canonical_rows(facet_matrix(w4).facets) ==
                    canonical_rows(testing::displayed_k4(w4.omega(), w4.gamma())),
                "K=4 mismatch at " + w4.str());
    RatVector o, g;
    for (int i = 0; i < 4; ++i) o.push_back(gen.positive());
    for (int i = 0; i < 4; ++i) g.push_back(i % 2 == 0 ? Rational(0) : gen.fit_gamma(o[i], gen.positive(6, 6)));
    const auto w5 = Weights::classify(5, o, g);
    out.require(canonical_rows(facet_matrix(w5).facets) == canonical_rows(testing::displayed_k5(o, g)),
                "K=5 mismatch at " + w5.str());
  }
  if (out.pass) out.detail = "10 random instances each of the 8x4 and 10x5 matrices";
  return out;
}

Outcome double_description_agreement() {
  Outcome out;
  Gen gen(104);
  for (int t = 0; t < 100; ++t) {
    const auto w = gen.pointed(2 + t % 5, false, false, 0.3);
    out.require(double_description(spanning_rays(w)) == canonical_rows(facet_matrix(w).facets),
                "disagreement at " + w.str());
  }
  if (out.pass) out.detail = "100 weight sets, K in 2..6";
  return out;
}

Outcome dominance_triangle() {
  Outcome out;
  Gen gen(105);
  int dominated = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto K = static_cast<std::size_t>(gen.integer(2, 5));
    const auto w = gen.pointed(K);
    const auto a = facet_matrix(w);
    const auto rays = spanning_rays(w);
    const auto y1 = gen.vector(K);
    RatVector y2 = gen.vector(K);
    if (t % 2 == 0) {
      // y2 = y1 + a random cone element, so half the triples are comparable
      y2 = y1;
      for (const auto& r : rays.columns()) y2 += r * gen.rational(4, 3);
    }
    const bool weak = weakly_dominates(a, y1, y2);
    const auto cert = ray_membership(rays, y2 - y1);
    dominated += weak;
    out.require(weak == cert.feasible, "facets and ray membership disagree at " + w.str());
    out.require(verify_membership(rays.columns(), y2 - y1, cert), "unsound certificate at " + w.str());
    if (weak) out.require(sampled_dual_check(w, y1, y2, 20, static_cast<std::uint64_t>(t)), "dual sample refutes");
  }
  if (out.pass) out.detail = "1000 triples, " + std::to_string(dominated) + " weakly dominated";
  return out;
}

Outcome transformation_law() {
  Outcome out;
  Gen gen(106);
  const auto pareto_of = [](std::size_t p) { return ConeHRep::from_matrix(RatMatrix::identity(p)); };
  for (int t = 0; t < 200; ++t) {
    const auto K = static_cast<std::size_t>(gen.integer(2, 4));
    const auto a = facet_matrix(gen.pointed(K));
    const PointSet y(gen.points(static_cast<std::size_t>(gen.integer(1, 100)), K, 0, 7));
    const auto kept = filter_nondominated(a, y);
    std::vector<RatVector> lhs;
    for (const auto& p : kept.points()) lhs.push_back(mat_vec(a.facets, p));
    const auto rhs = filter_nondominated(pareto_of(a.size()), pareto_transform(a, y)).points();
    out.require(multiset_of(lhs) == multiset_of(rhs), "multisets differ");
  }
  if (out.pass) out.detail = "200 instances, |Y| <= 100, K <= 4";
  return out;
}

Outcome solver_vs_enumeration() {
  Outcome out;
  Gen gen(107);
  std::size_t vectors = 0;
  for (int t = 0; t < 100; ++t) {
    const auto K = static_cast<std::size_t>(gen.integer(2, 4));
    const auto n = static_cast<std::size_t>(gen.integer(4, 12));
    const auto g = gen.graph(K, n, static_cast<std::size_t>(gen.integer(n, 30)), gen.coin());
    const auto w = gen.pointed(K);
    const auto fast = efficient_paths(g, 0, n - 1, w);
    const auto brute = brute_force_efficient_paths(g, 0, n - 1, facet_matrix(w), 10000000);
    out.require(vector_set(fast) == vector_set(brute) && fast.size() == vector_set(fast).size(),
                "graph " + std::to_string(t) + " at " + w.str());
    vectors += fast.size();
  }
  if (out.pass) out.detail = "100 graphs (<= 12 nodes, <= 30 edges), " + std::to_string(vectors) + " efficient vectors";
  return out;
}

Outcome intro_figures() {
  Outcome out;
  const auto a = testing::figure_1a();
  const auto s = a.node_index("6"), t = a.node_index("1");
  auto solve = [&](const CategoryGraph& g, std::size_t from, std::size_t to, Rational o, Rational gm) {
    return vector_set(efficient_paths(g, from, to, Weights::classify(2, RatVector{o}, RatVector{gm})));
  };
  out.require(solve(a, s, t, 1, 0) == std::set<RatVector>{RatVector{9, 0}, RatVector{0, 1}},
              "1a standard ordinal is not {(9,0),(0,1)}");
  for (const Rational& gm : {Rational(1, 9) + Rational(1, 1000), Rational(1, 8), Rational(1, 2), Rational(9, 10)})
    out.require(solve(a, s, t, 1, gm) == std::set<RatVector>{RatVector{0, 1}}, "1a with gamma > 1/9 is not {(0,1)}");
  out.require(solve(a, s, t, 1, Rational(1, 9)).size() == 1, "1a boundary gamma = 1/9");
  out.require(solve(a, s, t, 1, Rational(1, 9) - Rational(1, 1000)).size() == 2, "1a just below 1/9");
  const auto b = testing::figure_1b();
  out.require(solve(b, b.node_index("6"), b.node_index("10"), 2, 0) == std::set<RatVector>{RatVector{6, 0}},
              "1b with omega = 2 is not {(6,0)}");
  if (out.pass) out.detail = "1a: {(9,0),(0,1)} then {(0,1)} for gamma > 1/9; 1b: {(6,0)}";
  return out;
}

Outcome monotonicity() {
  Outcome out;
  Gen gen(109);
  std::size_t steps = 0;
  for (int t = 0; t < 20; ++t) {
    const auto K = static_cast<std::size_t>(gen.integer(2, 4));
    const auto g = gen.graph(K, 9, 24);
    Weights w = gen.pointed(K);
    auto previous = vector_set(efficient_paths(g, 0, 8, w));
    for (int step = 0; step < 4; ++step) {
      const Weights next = grow(gen, w);
      out.require(w.componentwise_leq(next), "chain is not increasing");
      const auto current = vector_set(efficient_paths(g, 0, 8, next));
      for (const auto& v : current)
        out.require(previous.contains(v), "efficient set grew from " + w.str() + " to " + next.str());
      previous = current;
      w = next;
      ++steps;
    }
  }
  if (out.pass) out.detail = "20 graphs, " + std::to_string(steps) + " chain steps, sets nested";
  return out;
}

Outcome degenerate_merge() {
  Outcome out;
  Gen gen(110);
  std::size_t comparable = 0;
  for (int t = 0; t < 50; ++t) {
    const auto K = static_cast<std::size_t>(gen.integer(2, 6));
    const auto w = gen.degenerate(K);
    const auto merge = merge_degenerate(w);
    out.require(merge.merged.is_pointed(), "merged weights not pointed: " + w.str());
    const auto cone = effective_cone(w);
    auto gens = spanning_rays(w).columns();
    for (std::size_t k = 0; k < K; ++k) gens.push_back(RatVector::unit(K, k));
    for (int q = 0; q < 20; ++q) {
      const auto y1 = gen.vector(K);
      RatVector y2 = q % 2 ? gen.vector(K) : y1;
      if (q % 2 == 0)
        for (const auto& r : gens) y2 += r * gen.rational(3, 3);
      const bool weak = weakly_dominates(cone, y1, y2);
      comparable += weak;
      if (weak) out.require(sampled_dual_check(w, y1, y2, 30, static_cast<std::uint64_t>(t * 100 + q)),
                            "sampled dual weight refutes merged dominance at " + w.str());
      out.require(weak == solve_cone_membership(gens, y2 - y1).feasible, "lifted cone differs at " + w.str());
    }
  }
  if (out.pass) out.detail = "50 degenerate sets, " + std::to_string(comparable) + " dominated pairs, no refutations";
  return out;
}

Outcome special_cases() {
  Outcome out;
  Gen gen(111);
  for (int t = 0; t < 20; ++t) {
    const std::size_t K = 2 + t % 5;
    RatVector o, g, zero(K - 1);
    for (std::size_t i = 0; i + 1 < K; ++i) {
      o.push_back(gen.positive());
      g.push_back(gen.positive(6, 6));
    }
    const auto same = [](const RatMatrix& x, const RatMatrix& y) { return canonical_rows(x) == canonical_rows(y); };
    out.require(same(facet_matrix(Weights::classify(K, zero, zero)).facets, RatMatrix::identity(K)), "pareto");
    const auto gz = Weights::classify(K, o, zero);
    out.require(same(facet_matrix(gz).facets, special_matrix(SpecialKind::GammaZero, gz)), "gamma = 0");
    const auto oz = Weights::classify(K, zero, g);
    out.require(same(facet_matrix(oz).facets, special_matrix(SpecialKind::OmegaZero, oz)), "omega = 0");
    if (K == 2) {
      const auto k2 = Weights::classify(2, RatVector{o[0]}, RatVector{gen.fit_gamma(o[0], g[0])});
      out.require(same(facet_matrix(k2).facets, RatMatrix{RatVector{1, k2.omega()[0]}, RatVector{k2.gamma()[0], 1}}),
                  "K = 2");
    }
  }
  if (out.pass) out.detail = "identity, A(omega,0), A(0,gamma) and K=2 on 20 weight sets";
  return out;
}

Outcome lexicographic_limit() {
  Outcome out;
  Gen gen(112);
  for (int t = 0; t < 20; ++t) {
    const auto K = static_cast<std::size_t>(gen.integer(2, 4));
    CategoryGraph g(K);
    const std::size_t n = 7;
    for (std::size_t v = 0; v < n; ++v) g.add_node("n" + std::to_string(v));
    Rational total(0), shortest(1000);
    for (std::size_t e = 0; e < 16; ++e) {
      const auto a = static_cast<std::size_t>(gen.integer(0, n - 1));
      const auto b = static_cast<std::size_t>(gen.integer(0, n - 1));
      if (a == b) continue;
      const Rational len(gen.integer(1, 3));
      total += len;
      shortest = std::min(shortest, len);
      g.add_edge("n" + std::to_string(a), "n" + std::to_string(b), static_cast<std::size_t>(gen.integer(1, K)), len);
    }
    // omega above total length / shortest edge, with the +1 slack the
    // geometric bound needs.
    const Rational omega = total / shortest * Rational(2) + Rational(1);
    const auto w = Weights::classify(K, RatVector(std::vector<Rational>(K - 1, omega)), RatVector(K - 1));

    const auto paths = enumerate_simple_paths(g, 0, n - 1, 1000000);
    std::set<RatVector> expected;
    if (!paths.empty()) {
      // worst category decides first
      auto reversed = [](RatVector v) {
        std::reverse(v.begin(), v.end());
        return v;
      };
      RatVector best = reversed(counting_vector(paths[0].edges, g));
      for (const auto& p : paths) best = std::min(best, reversed(counting_vector(p.edges, g)));
      expected.insert(reversed(best));
    }
    out.require(vector_set(efficient_paths(g, 0, n - 1, w)) == expected, "graph " + std::to_string(t));
  }
  if (out.pass) out.detail = "20 graphs, efficient vectors == lexicographic minimum";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double bound_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "facet count, positive weights", 5000, facet_count_positive},
      {2, "facet count with zero gammas", 5000, facet_count_zeros},
      {3, "displayed K=4 and K=5 matrices", 1000, displayed_matrices},
      {4, "double description agreement", 30000, double_description_agreement},
      {5, "dominance triple equivalence", 30000, dominance_triangle},
      {6, "transformation law", 30000, transformation_law},
      {7, "solver vs enumeration", 60000, solver_vs_enumeration},
      {8, "intro figure behavior", 1000, intro_figures},
      {9, "monotonicity sweep", 30000, monotonicity},
      {10, "degenerate merge", 10000, degenerate_merge},
      {11, "special-case identities", 1000, special_cases},
      {12, "lexicographic limit", 10000, lexicographic_limit},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < c.bound_ms;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %2d %s  %-32s %9.1f ms (bound %.0f ms)  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.name, ms,
                c.bound_ms, o.detail.c_str(), in_time ? "" : "  [over time bound]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
