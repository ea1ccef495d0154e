#include "corrclust/experiment.hpp"

#include <algorithm>
#include <limits>

namespace corrclust {

AlgorithmSpec AlgorithmSpec::parse(const std::string& name) {
  if (name == "cc_pivot") return {Kind::kCcPivot};
  if (name == "bounded_cc_pivot:exact") return {Kind::kBoundedExact};
  if (name == "bounded_cc_pivot:greedy") return {Kind::kBoundedGreedy};
  throw InvalidArgument("unknown algorithm '" + name +
                        "' (expected cc_pivot, bounded_cc_pivot:exact or bounded_cc_pivot:greedy)");
}

std::string AlgorithmSpec::name() const {
  switch (kind) {
    case Kind::kCcPivot:
      return "cc_pivot";
    case Kind::kBoundedExact:
      return "bounded_cc_pivot:exact";
    case Kind::kBoundedGreedy:
      return "bounded_cc_pivot:greedy";
  }
  return "?";
}

double run_trial(const AlgorithmSpec& algorithm, const SignedGraph& graph, std::int64_t K, const EdgeSet& removed,
                 const PivotOrder& order, int* cluster_size) {
  Clustering c = algorithm.bounded() ? bounded_cc_pivot(graph, K, removed, order).clustering : cc_pivot(graph, order);
  if (cluster_size) *cluster_size = c.max_cluster_size();
  // Bounded runs never exceed K+1, so penalties vanish and the cost is the
  // disagreement count in both cases.
  return static_cast<double>(disagreements(graph, c));
}

namespace {

struct Prepared {
  SignedGraph graph;
  EdgeSet removed;
  double opt;
};

Prepared prepare(const AlgorithmSpec& algorithm, const WeightedInstance& instance, const ExperimentOptions& options) {
  SignedGraph graph = SignedGraph::from_instance(instance);
  EdgeSet removed;
  if (algorithm.kind == AlgorithmSpec::Kind::kBoundedExact) removed = bounded_edge_removal_exact(graph, instance.K());
  if (algorithm.kind == AlgorithmSpec::Kind::kBoundedGreedy) removed = bounded_edge_removal_greedy(graph, instance.K());

  double opt = 0.0;
  if (options.opt_cost) {
    opt = *options.opt_cost;
  } else {
    OracleOptions oracle{.hard_bound = algorithm.bounded(), .guard_n = options.guard_n};
    const WeightedInstance target =
        algorithm.bounded() ? instance
                            : instance.with_mu(std::vector<double>(static_cast<std::size_t>(instance.n()), 0.0));
    opt = optimal_clustering(target, oracle).best_cost.total;
  }
  return {std::move(graph), std::move(removed), opt};
}

RatioStats summarize(const AlgorithmSpec& algorithm, const Prepared& prep, std::uint64_t seed,
                     std::vector<double> costs, const std::vector<int>& sizes) {
  RatioStats stats;
  stats.algorithm = algorithm.name();
  stats.trials = costs.size();
  stats.seed = seed;
  stats.opt_cost = prep.opt;
  stats.removed_edges = prep.removed.size();
  if (!costs.empty()) {
    double sum = 0.0;
    for (double c : costs) sum += c;
    stats.mean_cost = sum / static_cast<double>(costs.size());
    stats.min_cost = *std::min_element(costs.begin(), costs.end());
    stats.max_cost = *std::max_element(costs.begin(), costs.end());
    stats.max_cluster_size = *std::max_element(sizes.begin(), sizes.end());
  }
  if (prep.opt > 0.0) {
    stats.mean_ratio = stats.mean_cost / prep.opt;
    stats.max_ratio = stats.max_cost / prep.opt;
  } else {
    const double inf = std::numeric_limits<double>::infinity();
    stats.mean_ratio = stats.max_cost == 0.0 ? 1.0 : inf;
    stats.max_ratio = stats.mean_ratio;
  }
  stats.trial_costs = std::move(costs);
  return stats;
}

}  // namespace

RatioStats empirical_ratio(const AlgorithmSpec& algorithm, const WeightedInstance& instance, std::uint64_t trials,
                           std::uint64_t seed, const ExperimentOptions& options) {
  const Prepared prep = prepare(algorithm, instance, options);
  std::vector<double> costs(trials);
  std::vector<int> sizes(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    const auto i = static_cast<std::size_t>(t);
    costs[i] = run_trial(algorithm, prep.graph, instance.K(), prep.removed,
                         PivotOrder::seeded(seed + static_cast<std::uint64_t>(t)), &sizes[i]);
  }
  return summarize(algorithm, prep, seed, std::move(costs), sizes);
}

RatioStats empirical_ratio_serial(const AlgorithmSpec& algorithm, const WeightedInstance& instance,
                                  std::uint64_t trials, std::uint64_t seed, const ExperimentOptions& options) {
  const Prepared prep = prepare(algorithm, instance, options);
  std::vector<double> costs(trials);
  std::vector<int> sizes(trials);
  for (std::uint64_t t = 0; t < trials; ++t)
    costs[t] = run_trial(algorithm, prep.graph, instance.K(), prep.removed, PivotOrder::seeded(seed + t), &sizes[t]);
  return summarize(algorithm, prep, seed, std::move(costs), sizes);
}

}  // namespace corrclust
