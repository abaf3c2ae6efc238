#pragma once

// Weighted ordinal ordering cones.
//
// Categories are indexed 1..K with 1 the best. The weight pair (omega, gamma)
// relates consecutive categories: omega_i units of category i are at least as
// good as one unit of category i+1, and one unit of category i+1 is at least
// as good as 1/gamma_i units of category i. Internally all vectors are
// 0-based; index i of omega/gamma couples categories i+1 and i+2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcone/rational.hpp"

namespace ordcone {

enum class WeightClass { Pointed, Degenerate };

class Weights {
 public:
  /// Validates and classifies. Throws DimensionMismatch when omega or gamma
  /// do not have K-1 entries, WeightError for negative entries or products
  /// omega_i * gamma_i > 1.
  static Weights classify(std::size_t K, RatVector omega, RatVector gamma);
  /// Same value for every index.
  static Weights uniform(std::size_t K, const Rational& omega, const Rational& gamma);

  std::size_t K() const noexcept { return K_; }
  const RatVector& omega() const noexcept { return omega_; }
  const RatVector& gamma() const noexcept { return gamma_; }

  bool is_pointed() const noexcept { return degenerate_.empty(); }
  WeightClass weight_class() const noexcept {
    return is_pointed() ? WeightClass::Pointed : WeightClass::Degenerate;
  }
  /// 0-based indices i with omega_i * gamma_i == 1.
  const std::vector<std::size_t>& degenerate_indices() const noexcept { return degenerate_; }

  bool all_omega_positive() const;
  /// Componentwise omega <= other.omega and gamma <= other.gamma.
  bool componentwise_leq(const Weights& other) const;

  std::string str() const;

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  Weights() = default;

  std::size_t K_ = 0;
  RatVector omega_;
  RatVector gamma_;
  std::vector<std::size_t> degenerate_;
};

std::string to_string(WeightClass c);

enum class RayKind : std::uint8_t { U, G };

/// One ray kind per index 1..K-1; identifies a candidate facet.
using Selection = std::vector<RayKind>;

std::string to_string(const Selection& s);

/// Spanning rays of the cone, stored as the columns u^1..u^{K-1},
/// g^1..g^{K-1} in this order, with a flag per column marking extreme rays.
struct ConeVRep {
  RatMatrix rays;
  std::vector<bool> extreme;

  std::size_t dimension() const noexcept { return rays.rows(); }
  std::size_t size() const noexcept { return rays.cols(); }
  std::vector<RatVector> columns() const;
  std::vector<RatVector> extreme_columns() const;
  /// "u1", "g3", ... for column j.
  std::string label(std::size_t j) const;
};

/// Facet description hcone(A) = { y : A y >= 0 }.
struct ConeHRep {
  RatMatrix facets;
  /// Generating selector per row; empty when the cone was given as a matrix.
  std::vector<Selection> selection;
  bool pointed = false;

  /// Wraps an arbitrary inequality matrix. Pointedness is rank(A) == cols.
  static ConeHRep from_matrix(RatMatrix a);

  std::size_t dimension() const noexcept { return facets.cols(); }
  std::size_t size() const noexcept { return facets.rows(); }
};

ConeVRep spanning_rays(const Weights& w);

/// Recomputes the extreme mask: walking columns in stored order, a column is
/// unmarked when it is a nonnegative combination of the other still-marked
/// columns. Of two parallel columns only the later one stays marked.
ConeVRep mark_extreme_rays(ConeVRep v);

/// n_k = prod_i d^i_k for the selected rays.
RatVector facet_normal(const Selection& selection, const Weights& w);

/// Enumerates all 2^{K-1} selections in binary order (u = 0, g = 1, index 1
/// least significant), drops zero normals and normals proportional to an
/// earlier one. Throws NotPointed for degenerate weights.
ConeHRep facet_matrix(const Weights& w);

/// Closed-form facet count for pointed weights with omega > 0. Throws
/// FormulaInapplicable when some omega_i == 0, NotPointed when degenerate.
std::size_t facet_count(const Weights& w);

enum class SpecialKind { Pareto, StandardOrdinal, GammaZero, OmegaZero, K2, WeightedSum };

std::string to_string(SpecialKind k);
std::optional<SpecialKind> special_kind_from_string(const std::string& s);

bool special_applies(SpecialKind kind, const Weights& w);
/// All kinds applicable to w, most specific first.
std::vector<SpecialKind> applicable_special_kinds(const Weights& w);
/// Closed-form matrix for a special case. Throws KindMismatch if the kind
/// does not apply.
RatMatrix special_matrix(SpecialKind kind, const Weights& w);

/// M with m_ij = prod_{l=i}^{j-1} omega_l (i<j), 1 (i=j), prod_{l=j}^{i-1} gamma_l (i>j).
RatMatrix representation_matrix(const Weights& w);

/// nu >= 0, omega_i nu_i <= nu_{i+1} and nu_i >= gamma_i nu_{i+1} for all i.
bool dual_contains(const Weights& w, const RatVector& nu);

struct MergeResult {
  Weights merged;
  /// K' x K map collapsing counting vectors of the original categories.
  RatMatrix lift;
  /// For each original category (0-based), the merged category it maps to.
  std::vector<std::size_t> category_map;
};

/// Collapses every degenerate pair of categories. Throws NothingToMerge when
/// the weights are already pointed.
MergeResult merge_degenerate(const Weights& w);

/// Facets usable for comparisons in the original K-space: facet_matrix(w) for
/// pointed weights, otherwise facet_matrix(merged) * lift.
ConeHRep effective_cone(const Weights& w);

/// Rows as a sorted list of canonical ray representatives.
std::vector<RatVector> canonical_rows(const RatMatrix& m);

}  // namespace ordcone
