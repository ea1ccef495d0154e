#pragma once

#include <cstdint>

#include "corrclust/instance.hpp"

namespace corrclust {

inline constexpr int kOracleGuardN = 12;

struct OracleOptions {
  /// Skip partitions with a cluster larger than K+1 (penalties are then zero).
  bool hard_bound = false;
  int guard_n = kOracleGuardN;
};

struct OracleResult {
  Clustering best_clustering;
  CostBreakdown best_cost;  // clustering_cost() of best_clustering
  std::uint64_t partitions_examined = 0;
};

/// Exhaustive minimum over all set partitions, enumerated as restricted
/// growth strings in lexicographic order; the first minimum wins ties.
/// Work is split across OpenMP threads by RGS prefix. Throws GuardExceeded
/// (pivot.hpp) when n > guard_n.
OracleResult optimal_clustering(const WeightedInstance& instance, const OracleOptions& options = {});

/// Single-threaded reference enumeration; same result as optimal_clustering.
OracleResult optimal_clustering_serial(const WeightedInstance& instance, const OracleOptions& options = {});

}  // namespace corrclust
