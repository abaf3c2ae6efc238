#include "ordcone/cone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ordcone/conic_solver.hpp"
#include "ordcone/errors.hpp"

namespace ordcone {

Weights Weights::classify(std::size_t K, RatVector omega, RatVector gamma) {
  if (K == 0) throw DimensionMismatch("number of categories must be positive");
  if (omega.size() != K - 1 || gamma.size() != K - 1)
    throw DimensionMismatch("expected " + std::to_string(K - 1) + " omega and gamma entries, got " +
                            std::to_string(omega.size()) + " and " + std::to_string(gamma.size()));
  Weights w;
  w.K_ = K;
  for (std::size_t i = 0; i + 1 < K; ++i) {
    if (omega[i].sign() < 0)
      throw WeightError(WeightError::Kind::NegativeWeight, i + 1,
                        "omega_" + std::to_string(i + 1) + " = " + omega[i].str() + " is negative");
    if (gamma[i].sign() < 0)
      throw WeightError(WeightError::Kind::NegativeWeight, i + 1,
                        "gamma_" + std::to_string(i + 1) + " = " + gamma[i].str() + " is negative");
    const Rational product = omega[i] * gamma[i];
    if (product > Rational(1))
      throw WeightError(WeightError::Kind::ProductExceedsOne, i + 1,
                        "omega_" + std::to_string(i + 1) + " * gamma_" + std::to_string(i + 1) + " = " +
                            product.str() + " exceeds 1");
    if (product == Rational(1)) w.degenerate_.push_back(i);
  }
  w.omega_ = std::move(omega);
  w.gamma_ = std::move(gamma);
  return w;
}

Weights Weights::uniform(std::size_t K, const Rational& omega, const Rational& gamma) {
  const std::size_t n = K == 0 ? 0 : K - 1;
  return classify(K, RatVector(std::vector<Rational>(n, omega)), RatVector(std::vector<Rational>(n, gamma)));
}

bool Weights::all_omega_positive() const {
  return std::all_of(omega_.begin(), omega_.end(), [](const Rational& r) { return r.sign() > 0; });
}

bool Weights::componentwise_leq(const Weights& other) const {
  if (other.K_ != K_) return false;
  for (std::size_t i = 0; i + 1 < K_; ++i)
    if (omega_[i] > other.omega_[i] || gamma_[i] > other.gamma_[i]) return false;
  return true;
}

std::string Weights::str() const {
  std::ostringstream os;
  os << "K=" << K_ << " omega=" << omega_ << " gamma=" << gamma_;
  return os.str();
}

std::string to_string(WeightClass c) { return c == WeightClass::Pointed ? "pointed" : "degenerate"; }

std::string to_string(const Selection& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += (s[i] == RayKind::U ? 'u' : 'g');
    out += std::to_string(i + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<RatVector> ConeVRep::columns() const {
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < rays.cols(); ++j) out.push_back(rays.column(j));
  return out;
}

std::vector<RatVector> ConeVRep::extreme_columns() const {
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < rays.cols(); ++j)
    if (extreme[j]) out.push_back(rays.column(j));
  return out;
}

std::string ConeVRep::label(std::size_t j) const {
  const std::size_t half = size() / 2;
  return (j < half ? "u" : "g") + std::to_string((j < half ? j : j - half) + 1);
}

ConeHRep ConeHRep::from_matrix(RatMatrix a) {
  ConeHRep h;
  h.pointed = a.rank() == a.cols();
  h.facets = std::move(a);
  return h;
}

ConeVRep spanning_rays(const Weights& w) {
  const std::size_t K = w.K();
  const std::size_t n = K - 1;
  ConeVRep v;
  v.rays = RatMatrix(K, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    v.rays(i, i) = -w.omega()[i];
    v.rays(i + 1, i) = 1;
    v.rays(i, n + i) = 1;
    v.rays(i + 1, n + i) = -w.gamma()[i];
  }
  v.extreme.assign(2 * n, true);
  return mark_extreme_rays(std::move(v));
}

ConeVRep mark_extreme_rays(ConeVRep v) {
  const auto cols = v.columns();
  v.extreme.assign(cols.size(), true);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<RatVector> others;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j && v.extreme[k]) others.push_back(cols[k]);
    if (solve_cone_membership(others, cols[j]).feasible) v.extreme[j] = false;
  }
  return v;
}

RatVector facet_normal(const Selection& selection, const Weights& w) {
  const std::size_t K = w.K();
  if (selection.size() != K - 1)
    throw DimensionMismatch("selection needs " + std::to_string(K - 1) + " entries");
  RatVector n(std::vector<Rational>(K, Rational(1)));
  for (std::size_t i = 0; i + 1 < K; ++i) {
    for (std::size_t k = 0; k < K; ++k) {
      const bool after = k > i;
      if (selection[i] == RayKind::U) {
        if (after) n[k] *= w.omega()[i];
      } else {
        if (!after) n[k] *= w.gamma()[i];
      }
    }
  }
  return n;
}

ConeHRep facet_matrix(const Weights& w) {
  if (!w.is_pointed())
    throw NotPointed("weights are degenerate at index " + std::to_string(w.degenerate_indices().front() + 1) +
                     "; merge categories first");
  const std::size_t n = w.K() - 1;
  if (n >= 8 * sizeof(std::size_t) - 1) throw Error("too many categories for facet enumeration");

  ConeHRep h;
  h.pointed = true;
  h.facets = RatMatrix(0, w.K());
  std::set<RatVector> seen;
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    Selection sel(n);
    for (std::size_t i = 0; i < n; ++i) sel[i] = (mask >> i) & 1U ? RayKind::G : RayKind::U;
    RatVector normal = facet_normal(sel, w);
    if (normal.is_zero()) continue;
    if (!seen.insert(normalize_ray(normal)).second) continue;
    h.facets.append_row(std::move(normal));
    h.selection.push_back(std::move(sel));
  }
  return h;
}

std::size_t facet_count(const Weights& w) {
  if (!w.is_pointed()) throw NotPointed("facet count needs pointed weights");
  if (!w.all_omega_positive())
    throw FormulaInapplicable("closed-form facet count requires every omega_i > 0");
  const std::size_t n = w.K() - 1;
  std::vector<std::size_t> zeros;  // 1-based j with gamma_j == 0
  for (std::size_t i = 0; i < n; ++i)
    if (w.gamma()[i].is_zero()) zeros.push_back(i + 1);
  const std::size_t ell = zeros.size();
  std::size_t count = std::size_t{1} << (n - ell);
  for (std::size_t k = 1; k <= ell; ++k) count += std::size_t{1} << (n - zeros[k - 1] - (ell - k));
  return count;
}

// ---------------------------------------------------------------------------

std::string to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::Pareto: return "pareto";
    case SpecialKind::StandardOrdinal: return "standard_ordinal";
    case SpecialKind::GammaZero: return "gamma_zero";
    case SpecialKind::OmegaZero: return "omega_zero";
    case SpecialKind::K2: return "k2";
    case SpecialKind::WeightedSum: return "weighted_sum";
  }
  return "?";
}

std::optional<SpecialKind> special_kind_from_string(const std::string& s) {
  for (auto k : {SpecialKind::Pareto, SpecialKind::StandardOrdinal, SpecialKind::GammaZero, SpecialKind::OmegaZero,
                 SpecialKind::K2, SpecialKind::WeightedSum})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

bool all_equal(const RatVector& v, const Rational& x) {
  return std::all_of(v.begin(), v.end(), [&](const Rational& r) { return r == x; });
}

}  // namespace

bool special_applies(SpecialKind kind, const Weights& w) {
  const Rational zero(0), one(1);
  switch (kind) {
    case SpecialKind::Pareto: return all_equal(w.omega(), zero) && all_equal(w.gamma(), zero);
    case SpecialKind::StandardOrdinal: return all_equal(w.omega(), one) && all_equal(w.gamma(), zero);
    case SpecialKind::GammaZero: return all_equal(w.gamma(), zero);
    case SpecialKind::OmegaZero: return all_equal(w.omega(), zero);
    case SpecialKind::K2: return w.K() == 2;
    case SpecialKind::WeightedSum: return w.K() >= 2 && w.degenerate_indices().size() == w.K() - 1;
  }
  return false;
}

std::vector<SpecialKind> applicable_special_kinds(const Weights& w) {
  std::vector<SpecialKind> out;
  for (auto k : {SpecialKind::Pareto, SpecialKind::StandardOrdinal, SpecialKind::WeightedSum, SpecialKind::GammaZero,
                 SpecialKind::OmegaZero, SpecialKind::K2})
    if (special_applies(k, w)) out.push_back(k);
  return out;
}

RatMatrix special_matrix(SpecialKind kind, const Weights& w) {
  if (!special_applies(kind, w)) throw KindMismatch("special case '" + to_string(kind) + "' does not apply to " + w.str());
  const std::size_t K = w.K();
  switch (kind) {
    case SpecialKind::Pareto:
      return RatMatrix::identity(K);
    case SpecialKind::StandardOrdinal:
    case SpecialKind::GammaZero: {
      RatMatrix a(K, K);
      for (std::size_t i = 0; i < K; ++i) {
        Rational p(1);
        a(i, i) = 1;
        for (std::size_t j = i + 1; j < K; ++j) {
          p *= w.omega()[j - 1];
          a(i, j) = p;
        }
      }
      return a;
    }
    case SpecialKind::OmegaZero: {
      RatMatrix a(K, K);
      for (std::size_t i = 0; i < K; ++i) {
        a(i, i) = 1;
        Rational p(1);
        for (std::size_t j = i; j-- > 0;) {
          p *= w.gamma()[j];
          a(i, j) = p;
        }
      }
      return a;
    }
    case SpecialKind::K2:
      return RatMatrix{RatVector{Rational(1), w.omega()[0]}, RatVector{w.gamma()[0], Rational(1)}};
    case SpecialKind::WeightedSum: {
      RatVector row(K);
      row[0] = 1;
      for (std::size_t j = 1; j < K; ++j) row[j] = row[j - 1] * w.omega()[j - 1];
      return RatMatrix{row};
    }
  }
  throw KindMismatch("unknown special case");
}

RatMatrix representation_matrix(const Weights& w) {
  const std::size_t K = w.K();
  RatMatrix m(K, K);
  for (std::size_t i = 0; i < K; ++i) {
    m(i, i) = 1;
    Rational p(1);
    for (std::size_t j = i + 1; j < K; ++j) {
      p *= w.omega()[j - 1];
      m(i, j) = p;
    }
    p = 1;
    for (std::size_t j = i; j-- > 0;) {
      p *= w.gamma()[j];
      m(i, j) = p;
    }
  }
  return m;
}

bool dual_contains(const Weights& w, const RatVector& nu) {
  if (nu.size() != w.K()) throw DimensionMismatch("nu must have K entries");
  if (!nu.is_nonnegative()) return false;
  for (std::size_t i = 0; i + 1 < w.K(); ++i) {
    if (w.omega()[i] * nu[i] > nu[i + 1]) return false;
    if (nu[i] < w.gamma()[i] * nu[i + 1]) return false;
  }
  return true;
}

MergeResult merge_degenerate(const Weights& w) {
  if (w.is_pointed()) throw NothingToMerge("no index with omega_i * gamma_i == 1");

  std::vector<Rational> omega(w.omega().begin(), w.omega().end());
  std::vector<Rational> gamma(w.gamma().begin(), w.gamma().end());
  std::vector<RatVector> lift = RatMatrix::identity(w.K()).row_list();
  std::vector<std::size_t> category_map(w.K());
  for (std::size_t c = 0; c < w.K(); ++c) category_map[c] = c;

  for (;;) {
    std::size_t i = 0;
    while (i < omega.size() && omega[i] * gamma[i] != Rational(1)) ++i;
    if (i == omega.size()) break;

    // nu_{i+1} = omega_i nu_i, so nu_i c_i + nu_{i+1} c_{i+1} = nu_i (c_i + omega_i c_{i+1}).
    const Rational factor = omega[i];
    lift[i] += lift[i + 1] * factor;
    lift.erase(lift.begin() + static_cast<std::ptrdiff_t>(i + 1));
    for (auto& c : category_map)
      if (c > i) --c;

    // The coupling to the next category is rewritten in terms of nu_i.
    if (i + 1 < omega.size()) {
      omega[i + 1] = factor * omega[i + 1];
      gamma[i + 1] = gamma[i + 1] / factor;
    }
    omega.erase(omega.begin() + static_cast<std::ptrdiff_t>(i));
    gamma.erase(gamma.begin() + static_cast<std::ptrdiff_t>(i));
  }

  const std::size_t k_merged = lift.size();
  return MergeResult{Weights::classify(k_merged, RatVector(std::move(omega)), RatVector(std::move(gamma))),
                     RatMatrix(std::move(lift)), std::move(category_map)};
}

ConeHRep effective_cone(const Weights& w) {
  if (w.is_pointed()) return facet_matrix(w);
  const MergeResult m = merge_degenerate(w);
  ConeHRep merged = facet_matrix(m.merged);
  ConeHRep out;
  out.facets = mat_mul(merged.facets, m.lift);
  out.selection = merged.selection;
  out.pointed = false;
  return out;
}

std::vector<RatVector> canonical_rows(const RatMatrix& m) {
  std::vector<RatVector> out;
  for (const auto& r : m.row_list())
    if (!r.is_zero()) out.push_back(normalize_ray(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ordcone
