#include "ordcone/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "ordcone/dominance.hpp"
#include "ordcone/errors.hpp"

namespace ordcone {

MembershipCertificate ray_membership(const ConeVRep& rays, const RatVector& v) {
  if (v.size() != rays.dimension()) throw DimensionMismatch("membership query has wrong dimension");
  const auto cols = rays.columns();
  return solve_cone_membership(cols, v);
}

namespace {

// Inverse of a square matrix by Gauss-Jordan elimination.
RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<RatVector> a = m.row_list();
  std::vector<RatVector> inv = RatMatrix::identity(n).row_list();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error("singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational scale = Rational(1) / a[col][col];
    a[col] *= scale;
    inv[col] *= scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      a[r] -= a[col] * f;
      inv[r] -= inv[col] * f;
    }
  }
  return RatMatrix(std::move(inv));
}

struct DdRay {
  RatVector v;
  std::vector<bool> tight;  // per inserted constraint
};

}  // namespace

std::vector<RatVector> double_description(const ConeVRep& rays) {
  const std::size_t K = rays.dimension();
  const auto cols = rays.columns();

  std::set<RatVector> directions;
  for (const auto& c : cols) {
    if (c.is_zero()) continue;
    const RatVector n = normalize_ray(c);
    if (directions.contains(normalize_ray(-c)))
      throw NotPointed("opposite spanning rays " + c.str() + " and its negative: cone is not pointed");
    directions.insert(n);
  }

  // Initial simplicial cone from the first K independent constraints.
  std::vector<std::size_t> basis;
  {
    RatMatrix acc(0, K);
    for (std::size_t j = 0; j < cols.size() && basis.size() < K; ++j) {
      RatMatrix trial = acc;
      trial.append_row(cols[j]);
      if (trial.rank() == basis.size() + 1) {
        acc = std::move(trial);
        basis.push_back(j);
      }
    }
    if (basis.size() < K) throw Error("spanning rays do not have full rank; the dual cone is not pointed");
  }

  std::vector<RatVector> constraints;  // in insertion order
  for (std::size_t j : basis) constraints.push_back(cols[j]);
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (std::find(basis.begin(), basis.end(), j) == basis.end()) constraints.push_back(cols[j]);

  const RatMatrix q_inv = inverse(RatMatrix(std::vector<RatVector>(constraints.begin(), constraints.begin() + K)));
  std::vector<DdRay> current;
  for (std::size_t k = 0; k < K; ++k) {
    DdRay r{q_inv.column(k), std::vector<bool>(K, false)};
    for (std::size_t c = 0; c < K; ++c) r.tight[c] = c != k;
    current.push_back(std::move(r));
  }

  for (std::size_t c = K; c < constraints.size(); ++c) {
    const RatVector& a = constraints[c];
    std::vector<Rational> s;
    for (const auto& r : current) s.push_back(dot(a, r.v));

    std::vector<DdRay> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (s[i].sign() >= 0) {
        DdRay r = current[i];
        r.tight.push_back(s[i].is_zero());
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < current.size(); ++p) {
      if (s[p].sign() <= 0) continue;
      for (std::size_t m = 0; m < current.size(); ++m) {
        if (s[m].sign() >= 0) continue;
        // Combinatorial adjacency: the common tight set has at least K-2
        // members and is not contained in the tight set of any third ray.
        std::vector<bool> common(c);
        std::size_t common_size = 0;
        for (std::size_t t = 0; t < c; ++t) {
          common[t] = current[p].tight[t] && current[m].tight[t];
          common_size += common[t];
        }
        if (common_size + 2 < K) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < current.size() && adjacent; ++o) {
          if (o == p || o == m) continue;
          bool contains = true;
          for (std::size_t t = 0; t < c && contains; ++t)
            if (common[t] && !current[o].tight[t]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        DdRay r{current[m].v * s[p] - current[p].v * s[m], common};
        r.tight.push_back(true);
        next.push_back(std::move(r));
      }
    }
    current = std::move(next);
  }

  std::vector<RatVector> out;
  for (const auto& r : current) out.push_back(normalize_ray(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Path> enumerate_simple_paths(const CategoryGraph& g, std::size_t source, std::size_t target,
                                         std::size_t cap) {
  if (cap == 0) throw Error("path cap must be positive");
  std::vector<std::vector<std::size_t>> ordered(g.node_count());
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    ordered[v] = g.out_edges(v);
    std::sort(ordered[v].begin(), ordered[v].end(), [&](std::size_t a, std::size_t b) {
      const auto& ia = g.node(g.edge(a).to).id;
      const auto& ib = g.node(g.edge(b).to).id;
      return ia != ib ? ia < ib : a < b;
    });
  }

  std::vector<Path> out;
  std::vector<bool> on_path(g.node_count(), false);
  Path cur;
  cur.nodes.push_back(source);
  on_path[source] = true;

  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    if (v == target) {
      if (out.size() == cap) throw PathCapExceeded("more than " + std::to_string(cap) + " simple paths");
      out.push_back(cur);
      return;
    }
    for (std::size_t e : ordered[v]) {
      const std::size_t w = g.edge(e).to;
      if (on_path[w]) continue;
      on_path[w] = true;
      cur.nodes.push_back(w);
      cur.edges.push_back(e);
      dfs(w);
      cur.nodes.pop_back();
      cur.edges.pop_back();
      on_path[w] = false;
    }
  };
  dfs(source);
  return out;
}

std::vector<EfficientPath> brute_force_efficient_paths(const CategoryGraph& g, std::size_t source,
                                                       std::size_t target, const ConeHRep& cone, std::size_t cap) {
  const auto paths = enumerate_simple_paths(g, source, target, cap);
  std::vector<RatVector> counts;
  for (const auto& p : paths) counts.push_back(counting_vector(p.edges, g));

  // Pairwise check straight from the weak-dominance definition, over the
  // distinct vectors only.
  const std::set<RatVector> distinct(counts.begin(), counts.end());
  std::set<RatVector> efficient;
  for (const auto& y : distinct) {
    bool dominated = false;
    for (auto it = distinct.begin(); it != distinct.end() && !dominated; ++it)
      dominated = *it != y && weakly_dominates(cone, *it, y) && !weakly_dominates(cone, y, *it);
    if (!dominated) efficient.insert(y);
  }
  std::vector<EfficientPath> out;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (efficient.contains(counts[i])) out.push_back(EfficientPath{paths[i], counts[i], mat_vec(cone.facets, counts[i])});
  return out;
}

std::vector<RatVector> sample_dual_vectors(const Weights& w, std::size_t samples, std::uint64_t seed) {
  const RatMatrix m = representation_matrix(w);
  std::vector<RatVector> out = m.row_list();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(0, 20);
  std::uniform_int_distribution<long> den(1, 20);
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector nu(w.K());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Rational c(num(rng), den(rng));
      nu += m.row(r) * c;
    }
    out.push_back(std::move(nu));
  }
  return out;
}

bool sampled_dual_check(const Weights& w, const RatVector& y1, const RatVector& y2, std::size_t samples,
                        std::uint64_t seed) {
  if (y1.size() != w.K() || y2.size() != w.K()) throw DimensionMismatch("vectors must have K entries");
  for (const auto& nu : sample_dual_vectors(w, samples, seed))
    if (dot(nu, y1) > dot(nu, y2)) return false;
  return true;
}

}  // namespace ordcone
