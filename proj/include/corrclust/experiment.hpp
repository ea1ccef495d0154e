#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corrclust/instance.hpp"
#include "corrclust/oracle.hpp"
#include "corrclust/pivot.hpp"

namespace corrclust {

/// A randomized pivot algorithm to be measured against the exact optimum.
///   "cc_pivot"                 plain pivoting; compared with the unbounded optimum
///   "bounded_cc_pivot:exact"   exact degree reduction, then pivoting; hard-bounded optimum
///   "bounded_cc_pivot:greedy"  greedy degree reduction, then pivoting; hard-bounded optimum
struct AlgorithmSpec {
  enum class Kind { kCcPivot, kBoundedExact, kBoundedGreedy };
  Kind kind = Kind::kCcPivot;

  static AlgorithmSpec parse(const std::string& name);  // InvalidArgument on unknown names
  std::string name() const;
  bool bounded() const { return kind != Kind::kCcPivot; }
};

struct RatioStats {
  std::string algorithm;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean_cost = 0.0;
  double min_cost = 0.0;
  double max_cost = 0.0;
  double opt_cost = 0.0;
  /// mean_cost / opt and max_cost / opt. When opt = 0 both are 1 if every
  /// trial also cost 0 and +inf otherwise; callers computing aggregate ratio
  /// statistics exclude opt = 0 instances.
  double mean_ratio = 1.0;
  double max_ratio = 1.0;
  int max_cluster_size = 0;
  std::size_t removed_edges = 0;     // |X| for bounded variants
  std::vector<double> trial_costs;   // indexed by trial
};

struct ExperimentOptions {
  int guard_n = kOracleGuardN;
  /// Precomputed optimum; the oracle runs when absent.
  std::optional<double> opt_cost;
};

/// Runs `trials` independent trials (trial i pivots with seed + i) in
/// parallel and compares them with the exact optimum. The instance must use
/// the (1,0)/(0,1) encoding; bounded variants take K from the instance.
RatioStats empirical_ratio(const AlgorithmSpec& algorithm, const WeightedInstance& instance, std::uint64_t trials,
                           std::uint64_t seed, const ExperimentOptions& options = {});

/// Sequential reference for empirical_ratio; identical output.
RatioStats empirical_ratio_serial(const AlgorithmSpec& algorithm, const WeightedInstance& instance,
                                  std::uint64_t trials, std::uint64_t seed, const ExperimentOptions& options = {});

/// Cost of one trial of `algorithm` with the given pivot order, in the
/// objective the algorithm is judged by.
double run_trial(const AlgorithmSpec& algorithm, const SignedGraph& graph, std::int64_t K, const EdgeSet& removed,
                 const PivotOrder& order, int* cluster_size = nullptr);

}  // namespace corrclust
