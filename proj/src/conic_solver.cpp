#include "ordcone/conic_solver.hpp"

#include <algorithm>
#include <optional>

#include "ordcone/errors.hpp"

namespace ordcone {

namespace {

// a . lambda (== | <=) b, together with the multipliers expressing this row as
// a combination of the original system. The first `dim` multipliers belong to
// the equalities G lambda = target (free sign), the remaining ones to
// -lambda_j <= 0 (kept nonnegative).
struct Row {
  std::vector<Rational> a;
  Rational b;
  bool eq = false;
  std::vector<Rational> mult;

  bool coefficients_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r.is_zero(); });
  }
};

Row combine(const Row& p, const Rational& sp, const Row& q, const Rational& sq) {
  Row out;
  out.a.resize(p.a.size());
  for (std::size_t i = 0; i < p.a.size(); ++i) out.a[i] = p.a[i] * sp + q.a[i] * sq;
  out.b = p.b * sp + q.b * sq;
  out.eq = p.eq && q.eq;
  out.mult.resize(p.mult.size());
  for (std::size_t i = 0; i < p.mult.size(); ++i) out.mult[i] = p.mult[i] * sp + q.mult[i] * sq;
  return out;
}

struct Step {
  std::size_t var = 0;
  std::optional<Row> pivot;  // equality used for substitution
  std::vector<Row> bounds;   // inequalities involving var at elimination time
};

RatVector witness_from(const Row& row, std::size_t dim) {
  RatVector y(dim);
  for (std::size_t i = 0; i < dim; ++i) y[i] = row.mult[i];
  return y;
}

}  // namespace

ConeMembership solve_cone_membership(std::span<const RatVector> generators, const RatVector& target) {
  const std::size_t dim = target.size();
  const std::size_t nvars = generators.size();
  for (const auto& g : generators)
    if (g.size() != dim) throw DimensionMismatch("generator dimension differs from target");

  const std::size_t nmult = dim + nvars;
  std::vector<Row> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    Row r;
    r.a.resize(nvars);
    for (std::size_t j = 0; j < nvars; ++j) r.a[j] = generators[j][i];
    r.b = target[i];
    r.eq = true;
    r.mult.resize(nmult);
    r.mult[i] = 1;
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < nvars; ++j) {
    Row r;
    r.a.resize(nvars);
    r.a[j] = -1;
    r.mult.resize(nmult);
    r.mult[dim + j] = 1;
    rows.push_back(std::move(r));
  }

  std::vector<bool> eliminated(nvars, false);
  std::vector<Step> steps;

  auto infeasible_row = [](const Row& r) {
    if (!r.coefficients_zero()) return false;
    return r.eq ? !r.b.is_zero() : r.b.sign() < 0;
  };

  for (std::size_t round = 0; round < nvars; ++round) {
    // Prefer a variable that occurs in an equality; otherwise the one with the
    // smallest pairwise product of positive and negative occurrences.
    std::optional<std::size_t> var;
    std::optional<std::size_t> pivot_idx;
    for (std::size_t j = 0; j < nvars && !var; ++j) {
      if (eliminated[j]) continue;
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k].eq && !rows[k].a[j].is_zero()) {
          var = j;
          pivot_idx = k;
          break;
        }
    }
    if (!var) {
      std::size_t best_cost = 0;
      for (std::size_t j = 0; j < nvars; ++j) {
        if (eliminated[j]) continue;
        std::size_t pos = 0, neg = 0;
        for (const auto& r : rows) {
          if (r.a[j].sign() > 0) ++pos;
          if (r.a[j].sign() < 0) ++neg;
        }
        const std::size_t cost = pos * neg;
        if (!var || cost < best_cost) {
          var = j;
          best_cost = cost;
        }
      }
    }
    const std::size_t x = *var;
    eliminated[x] = true;

    Step step;
    step.var = x;
    std::vector<Row> next;
    if (pivot_idx) {
      const Row pivot = rows[*pivot_idx];
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k == *pivot_idx) continue;
        const Rational& c = rows[k].a[x];
        if (c.is_zero()) {
          next.push_back(std::move(rows[k]));
        } else {
          Row r = combine(rows[k], Rational(1), pivot, -(c / pivot.a[x]));
          r.eq = rows[k].eq;
          r.a[x] = 0;
          next.push_back(std::move(r));
        }
      }
      step.pivot = pivot;
    } else {
      std::vector<const Row*> pos, neg;
      for (const auto& r : rows) {
        const int s = r.a[x].sign();
        if (s == 0) next.push_back(r);
        else (s > 0 ? pos : neg).push_back(&r);
      }
      for (const Row* p : pos)
        for (const Row* n : neg) {
          Row r = combine(*p, -n->a[x], *n, p->a[x]);
          r.a[x] = 0;
          next.push_back(std::move(r));
        }
      for (const Row* p : pos) step.bounds.push_back(*p);
      for (const Row* n : neg) step.bounds.push_back(*n);
    }

    rows.clear();
    for (auto& r : next) {
      if (infeasible_row(r)) {
        ConeMembership out;
        RatVector y = witness_from(r, dim);
        // An equality 0 = b with b > 0 is flipped so that witness . target < 0.
        if (r.eq && r.b.sign() > 0) y = -y;
        out.witness = std::move(y);
        return out;
      }
      if (r.coefficients_zero()) continue;  // trivially satisfied
      const bool duplicate = std::any_of(rows.begin(), rows.end(), [&](const Row& o) {
        return o.eq == r.eq && o.a == r.a && o.b == r.b;
      });
      if (!duplicate) rows.push_back(std::move(r));
    }
    steps.push_back(std::move(step));
  }

  for (const auto& r : rows) {
    if (infeasible_row(r)) {
      ConeMembership out;
      RatVector y = witness_from(r, dim);
      if (r.eq && r.b.sign() > 0) y = -y;
      out.witness = std::move(y);
      return out;
    }
  }
  // No variables: the system reduces to target == 0 checked row by row above.

  std::vector<Rational> lambda(nvars);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const std::size_t x = it->var;
    auto rest = [&](const Row& r) {
      Rational s;
      for (std::size_t j = 0; j < nvars; ++j)
        if (j != x) s += r.a[j] * lambda[j];
      return s;
    };
    if (it->pivot) {
      lambda[x] = (it->pivot->b - rest(*it->pivot)) / it->pivot->a[x];
      continue;
    }
    std::optional<Rational> lower, upper;
    for (const auto& r : it->bounds) {
      const Rational bound = (r.b - rest(r)) / r.a[x];
      if (r.a[x].sign() > 0) {
        if (!upper || bound < *upper) upper = bound;
      } else {
        if (!lower || bound > *lower) lower = bound;
      }
    }
    lambda[x] = lower ? *lower : (upper ? *upper : Rational(0));
  }

  ConeMembership out;
  out.feasible = true;
  out.coefficients = RatVector(std::move(lambda));
  return out;
}

bool verify_membership(std::span<const RatVector> generators, const RatVector& target, const ConeMembership& cert) {
  if (cert.feasible) {
    if (cert.coefficients.size() != generators.size()) return false;
    RatVector sum(target.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (cert.coefficients[j].sign() < 0) return false;
      sum += generators[j] * cert.coefficients[j];
    }
    return sum == target;
  }
  if (cert.witness.size() != target.size()) return false;
  for (const auto& g : generators)
    if (dot(cert.witness, g).sign() < 0) return false;
  return dot(cert.witness, target).sign() < 0;
}

}  // namespace ordcone
