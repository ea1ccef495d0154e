#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "corrclust/instance.hpp"
#include "corrclust/lp_model.hpp"

namespace corrclust {

/// How the next pivot is chosen among the vertices not yet clustered.
class PivotOrder {
 public:
  enum class Kind { kLowestId, kSeededRandom, kExplicit };

  static PivotOrder lowest_id() { return PivotOrder(Kind::kLowestId, 0, {}); }
  static PivotOrder seeded(std::uint64_t seed) { return PivotOrder(Kind::kSeededRandom, seed, {}); }
  /// `sequence` must be a permutation of 0..n-1; the pivot is always the
  /// first entry of the sequence that is still unclustered.
  static PivotOrder explicit_sequence(std::vector<Vertex> sequence) {
    return PivotOrder(Kind::kExplicit, 0, std::move(sequence));
  }

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Vertex>& sequence() const { return sequence_; }

 private:
  PivotOrder(Kind kind, std::uint64_t seed, std::vector<Vertex> sequence)
      : kind_(kind), seed_(seed), sequence_(std::move(sequence)) {}
  Kind kind_;
  std::uint64_t seed_;
  std::vector<Vertex> sequence_;
};

/// Throws InvalidArgument unless `sequence` is a permutation of 0..n-1.
void require_permutation(std::span<const Vertex> sequence, int n);

struct RoundingOptions {
  /// Reject solutions that fail check_feasible() at this tolerance.
  bool check_feasibility = false;
  double feasibility_eps = kDefaultFeasibilityEps;
};

/// Region growing around pivots: with u the pivot and
/// T = {w unclustered, w != u : x_uw <= alpha}, emit {u} alone when
/// sum_{w in T} x_uw >= alpha |T| / 2, otherwise emit {u} + T. Both
/// comparisons are inclusive. alpha must lie in (0, 1/2].
Clustering round_lp_solution(const WeightedInstance& instance, const LpSolution& solution, double alpha,
                             const PivotOrder& order, const RoundingOptions& options = {});

/// Lower bound on the LP-cost of the pairs joining z to R, given that the
/// average of x_uv over R is at most alpha / 2 and each x_uv is at most zeta:
///   sum_{v in R} [ w+_vz x_uz + w-_vz (1 - x_uz) - zeta (w+_vz + w-_vz) + (zeta - alpha / 2) ].
/// R may contain u itself (x_uu = 0). Throws InvalidArgument if a
/// precondition fails. Used by the property suites.
double rcost_lower_bound(const WeightedInstance& instance, const PairTable<double>& x, Vertex u, Vertex z,
                         std::span<const Vertex> R, double zeta, double alpha);

/// x_uv with the x_uu = 0 convention.
inline double lp_distance(const PairTable<double>& x, Vertex u, Vertex v) { return u == v ? 0.0 : x(u, v); }

}  // namespace corrclust
