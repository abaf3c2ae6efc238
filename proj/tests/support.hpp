#pragma once

// Seeded random instances shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ordcone/cone.hpp"
#include "ordcone/dominance.hpp"
#include "ordcone/graph.hpp"

namespace ordcone::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // p/q with 0 <= p <= num_hi, 1 <= q <= den_hi
  Rational rational(long num_hi = 12, long den_hi = 6) { return Rational(integer(0, num_hi), integer(1, den_hi)); }
  Rational positive(long num_hi = 12, long den_hi = 6) { return Rational(integer(1, num_hi), integer(1, den_hi)); }

  // Shrinks gamma into omega * gamma < 1 when needed.
  Rational fit_gamma(const Rational& omega, Rational gamma) {
    if (omega * gamma >= Rational(1)) gamma = gamma / (omega * gamma + Rational(1));
    return gamma;
  }

  Weights pointed(std::size_t K, bool omega_positive = false, bool gamma_positive = false, double zero_p = 0.2) {
    RatVector omega, gamma;
    for (std::size_t i = 0; i + 1 < K; ++i) {
      Rational o = (omega_positive || !coin(zero_p)) ? positive() : Rational(0);
      Rational g = (gamma_positive || !coin(zero_p)) ? positive(6, 6) : Rational(0);
      gamma.push_back(fit_gamma(o, g));
      omega.push_back(o);
    }
    return Weights::classify(K, omega, gamma);
  }

  // Random gamma zero pattern, omega > 0.
  Weights gamma_zero_pattern(std::size_t K) {
    RatVector omega, gamma;
    for (std::size_t i = 0; i + 1 < K; ++i) {
      Rational o = positive();
      omega.push_back(o);
      gamma.push_back(coin() ? Rational(0) : fit_gamma(o, positive(6, 6)));
    }
    return Weights::classify(K, omega, gamma);
  }

  // At least one index with omega_i * gamma_i == 1.
  Weights degenerate(std::size_t K) {
    RatVector omega, gamma;
    const std::size_t forced = static_cast<std::size_t>(integer(0, static_cast<long>(K) - 2));
    for (std::size_t i = 0; i + 1 < K; ++i) {
      Rational o = positive();
      omega.push_back(o);
      if (i == forced || coin(0.3)) gamma.push_back(Rational(1) / o);
      else gamma.push_back(coin(0.3) ? Rational(0) : fit_gamma(o, positive(6, 6)));
    }
    return Weights::classify(K, omega, gamma);
  }

  RatVector vector(std::size_t K, long lo = -6, long hi = 6) {
    RatVector v;
    for (std::size_t k = 0; k < K; ++k) v.push_back(Rational(integer(lo, hi), integer(1, 3)));
    return v;
  }

  std::vector<RatVector> points(std::size_t n, std::size_t K, long lo = 0, long hi = 8) {
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector v;
      for (std::size_t k = 0; k < K; ++k) v.push_back(Rational(integer(lo, hi)));
      out.push_back(std::move(v));
    }
    return out;
  }

  // Directed graph on nodes n0..n{nodes-1} with distinct ordered pairs.
  CategoryGraph graph(std::size_t K, std::size_t nodes, std::size_t edges, bool unit_lengths = false) {
    CategoryGraph g(K);
    for (std::size_t v = 0; v < nodes; ++v) g.add_node("n" + std::to_string(v));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < nodes; ++a)
      for (std::size_t b = 0; b < nodes; ++b)
        if (a != b) pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng_);
    edges = std::min(edges, pairs.size());
    for (std::size_t e = 0; e < edges; ++e) {
      const auto [a, b] = pairs[e];
      const auto cat = static_cast<std::size_t>(integer(1, static_cast<long>(K)));
      const Rational len = unit_lengths ? Rational(1) : Rational(integer(1, 6), integer(1, 2));
      g.add_edge("n" + std::to_string(a), "n" + std::to_string(b), cat, len);
    }
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<RatVector> sorted(std::vector<RatVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Facet matrix of the 8x4 example, rows as displayed.
inline RatMatrix displayed_k4(const RatVector& o, const RatVector& g) {
  const Rational one(1);
  return RatMatrix{
      RatVector{one, o[0], o[0] * o[1], o[0] * o[1] * o[2]},
      RatVector{g[2], g[2] * o[0], g[2] * o[0] * o[1], o[0] * o[1]},
      RatVector{g[1], g[1] * o[0], o[0], o[0] * o[2]},
      RatVector{g[1] * g[2], g[1] * g[2] * o[0], g[2] * o[0], o[0]},
      RatVector{g[0], one, o[1], o[1] * o[2]},
      RatVector{g[0] * g[2], g[2], g[2] * o[1], o[1]},
      RatVector{g[0] * g[1], g[1], one, o[2]},
      RatVector{g[0] * g[1] * g[2], g[1] * g[2], g[2], one},
  };
}

// Facet matrix of the 10x5 example (gamma_1 = gamma_3 = 0). The last row is
// (0, 0, 0, gamma_4, 1); the printed omega_1 in its final entry is a typo.
inline RatMatrix displayed_k5(const RatVector& o, const RatVector& g) {
  const Rational one(1), zero(0);
  return RatMatrix{
      RatVector{one, o[0], o[0] * o[1], o[0] * o[1] * o[2], o[0] * o[1] * o[2] * o[3]},
      RatVector{g[1], g[1] * o[0], o[0], o[0] * o[2], o[0] * o[2] * o[3]},
      RatVector{g[3], g[3] * o[0], g[3] * o[0] * o[1], g[3] * o[0] * o[1] * o[2], o[0] * o[1] * o[2]},
      RatVector{g[1] * g[3], g[1] * g[3] * o[0], g[3] * o[0], g[3] * o[0] * o[2], o[0] * o[2]},
      RatVector{zero, one, o[1], o[1] * o[2], o[1] * o[2] * o[3]},
      RatVector{zero, g[1], one, o[2], o[2] * o[3]},
      RatVector{zero, g[3], g[3] * o[1], g[3] * o[1] * o[2], o[1] * o[2]},
      RatVector{zero, g[1] * g[3], g[3], g[3] * o[2], o[2]},
      RatVector{zero, zero, zero, one, o[3]},
      RatVector{zero, zero, zero, g[3], one},
  };
}

// Intro figure instances: unit lengths, category 1 = green, 2 = red.
inline CategoryGraph figure_1a() {
  CategoryGraph g(2);
  for (int v = 1; v <= 10; ++v) g.add_node(std::to_string(v));
  const char* green[][2] = {{"6", "7"}, {"7", "8"}, {"8", "9"}, {"9", "10"}, {"10", "5"},
                            {"5", "4"}, {"4", "3"}, {"3", "2"}, {"2", "1"}};
  for (auto& e : green) g.add_edge(e[0], e[1], 1, Rational(1));
  g.add_edge("6", "1", 2, Rational(1));
  return g;
}

inline CategoryGraph figure_1b() {
  CategoryGraph g(2);
  for (int v = 1; v <= 10; ++v) g.add_node(std::to_string(v));
  const char* red[][2] = {{"6", "7"}, {"7", "8"}, {"8", "9"}, {"9", "10"}};
  const char* green[][2] = {{"6", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "10"}};
  for (auto& e : red) g.add_edge(e[0], e[1], 2, Rational(1));
  for (auto& e : green) g.add_edge(e[0], e[1], 1, Rational(1));
  return g;
}

}  // namespace ordcone::testing
