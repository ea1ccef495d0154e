#include "corrclust/rounding.hpp"

#include <algorithm>
#include <string>

#include "corrclust/rng.hpp"

namespace corrclust {

void require_permutation(std::span<const Vertex> sequence, int n) {
  if (sequence.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("pivot sequence has " + std::to_string(sequence.size()) + " entries, expected " +
                          std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Vertex v : sequence) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("pivot sequence is not a permutation of 0..n-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Clustering round_lp_solution(const WeightedInstance& instance, const LpSolution& solution, double alpha,
                             const PivotOrder& order, const RoundingOptions& options) {
  const int n = instance.n();
  if (!(alpha > 0.0 && alpha <= 0.5)) throw InvalidArgument("alpha must lie in (0, 1/2]");
  if (solution.x.n() != n || solution.y.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("solution does not match the instance");
  if (options.check_feasibility) {
    auto report = check_feasible(instance, solution, options.feasibility_eps);
    if (!report.feasible)
      throw InvalidArgument("infeasible LP solution: " + (report.violations.empty() ? std::string("?") : report.violations.front()));
  }
  if (order.kind() == PivotOrder::Kind::kExplicit) require_permutation(order.sequence(), n);

  Rng rng(order.seed());
  std::vector<Vertex> live(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) live[static_cast<std::size_t>(v)] = v;
  std::vector<bool> clustered(static_cast<std::size_t>(n), false);
  std::size_t next_in_sequence = 0;

  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  int next_cluster = 0;
  std::vector<Vertex> region;
  while (!live.empty()) {
    Vertex u = 0;
    switch (order.kind()) {
      case PivotOrder::Kind::kLowestId:
        u = live.front();
        break;
      case PivotOrder::Kind::kSeededRandom:
        u = live[rng.below(live.size())];
        break;
      case PivotOrder::Kind::kExplicit:
        while (clustered[static_cast<std::size_t>(order.sequence()[next_in_sequence])]) ++next_in_sequence;
        u = order.sequence()[next_in_sequence];
        break;
    }

    region.clear();
    double spread = 0.0;
    for (Vertex w : live) {
      if (w == u) continue;
      double d = solution.x(u, w);
      if (d <= alpha) {
        region.push_back(w);
        spread += d;
      }
    }
    if (spread >= alpha * static_cast<double>(region.size()) / 2.0) region.clear();
    region.push_back(u);

    for (Vertex w : region) {
      assignment[static_cast<std::size_t>(w)] = next_cluster;
      clustered[static_cast<std::size_t>(w)] = true;
    }
    ++next_cluster;
    std::erase_if(live, [&](Vertex w) { return clustered[static_cast<std::size_t>(w)]; });
  }
  return Clustering(std::move(assignment));
}

double rcost_lower_bound(const WeightedInstance& instance, const PairTable<double>& x, Vertex u, Vertex z,
                         std::span<const Vertex> R, double zeta, double alpha) {
  constexpr double kSlack = 1e-12;
  if (!(zeta >= 0.0 && zeta <= 1.0)) throw InvalidArgument("zeta must lie in [0, 1]");
  if (z == u) throw InvalidArgument("z must differ from the pivot");
  double spread = 0.0;
  for (Vertex v : R) {
    if (v == z) throw InvalidArgument("z must not belong to R");
    double d = lp_distance(x, u, v);
    if (d > zeta + kSlack) throw InvalidArgument("x_uv exceeds zeta for some v in R");
    spread += d;
  }
  if (spread > alpha * static_cast<double>(R.size()) / 2.0 + kSlack)
    throw InvalidArgument("sum of x_uv over R exceeds alpha |R| / 2");

  const double xuz = x(u, z);
  double bound = 0.0;
  for (Vertex v : R) {
    const EdgeWeight& w = instance.weight(v, z);
    bound += w.plus * xuz + w.minus * (1.0 - xuz) - zeta * (w.plus + w.minus) + (zeta - alpha / 2.0);
  }
  return bound;
}

}  // namespace corrclust
