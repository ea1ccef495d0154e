// Shared generators and reference computations for the test suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "corrclust/instance.hpp"
#include "corrclust/lp_model.hpp"
#include "corrclust/pivot.hpp"

namespace corrclust::testing {

using Engine = std::mt19937_64;

inline double uniform(Engine& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Weights satisfying w+ <= 1, w- <= tau, w+ + w- >= 1. A third of the pairs
/// are pure (1,0)/(0,1), a third sit on the boundary w+ + w- = 1, the rest
/// are interior points.
inline EdgeWeight random_weight(Engine& rng, const Tau& tau) {
  const double cap = tau.is_infinite() ? 20.0 : tau.value();
  switch (uniform_int(rng, 0, 2)) {
    case 0:
      return uniform_int(rng, 0, 1) ? EdgeWeight{1.0, 0.0} : EdgeWeight{0.0, std::min(1.0, cap)};
    case 1: {
      double p = uniform(rng, 0.0, 1.0);
      return {p, 1.0 - p};
    }
    default: {
      double p = uniform(rng, 0.0, 1.0);
      double lo = 1.0 - p, hi = cap;
      return {p, uniform(rng, std::max(0.0, lo), std::max(lo, hi))};
    }
  }
}

inline WeightedInstance random_weighted_instance(Engine& rng, int n, const Tau& tau, std::vector<double> mu,
                                                 std::int64_t K) {
  PairTable<EdgeWeight> w(n);
  for_each_pair(n, [&](Vertex u, Vertex v) { w(u, v) = random_weight(rng, tau); });
  return WeightedInstance(std::move(w), std::move(mu), K, tau);
}

/// Dyadic weights (multiples of 1/8) so cost sums are exact in floating point.
inline WeightedInstance random_dyadic_instance(Engine& rng, int n, std::int64_t K) {
  PairTable<EdgeWeight> w(n);
  for_each_pair(n, [&](Vertex u, Vertex v) {
    double p = uniform_int(rng, 0, 8) / 8.0;
    double m = std::max(1.0 - p, uniform_int(rng, 0, 16) / 8.0);
    w(u, v) = {p, m};
  });
  std::vector<double> mu(static_cast<std::size_t>(n));
  for (auto& m : mu) m = uniform_int(rng, 0, 8) / 4.0;
  return WeightedInstance(std::move(w), std::move(mu), K, Tau::finite(2.0));
}

inline SignedGraph random_signed_graph(Engine& rng, int n, double p_positive) {
  PairTable<bool> pos(n, false);
  for_each_pair(n, [&](Vertex u, Vertex v) { pos(u, v) = uniform(rng, 0.0, 1.0) < p_positive; });
  return SignedGraph(std::move(pos));
}

/// Random partition into at most `blocks` labels.
inline Clustering random_clustering(Engine& rng, int n, int blocks) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (auto& c : a) c = uniform_int(rng, 0, std::max(0, blocks - 1));
  return Clustering(std::move(a));
}

inline std::vector<Vertex> random_permutation(Engine& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Cost written out directly from its definition; the penalty is charged per
/// vertex as mu_v (|C| - (K+1)).
inline double reference_cost(const WeightedInstance& inst, const std::vector<int>& label) {
  const int n = inst.n();
  double total = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      total += label[static_cast<std::size_t>(u)] == label[static_cast<std::size_t>(v)] ? inst.weight(u, v).minus
                                                                                       : inst.weight(u, v).plus;
  for (int u = 0; u < n; ++u) {
    std::int64_t size = 0;
    for (int v = 0; v < n; ++v) size += label[static_cast<std::size_t>(v)] == label[static_cast<std::size_t>(u)];
    if (size > inst.K() + 1) total += inst.mu(u) * static_cast<double>(size - inst.K() - 1);
  }
  return total;
}

/// Minimum over all n^n labelings (n <= 7). Independent of the restricted
/// growth enumeration used by the library oracle.
inline double brute_force_opt(const WeightedInstance& inst, bool hard_bound) {
  const int n = inst.n();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    bool admissible = true;
    if (hard_bound) {
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int c : label)
        if (++count[static_cast<std::size_t>(c)] > inst.K() + 1) admissible = false;
    }
    if (admissible) best = std::min(best, reference_cost(inst, label));
    int i = 0;
    while (i < n && ++label[static_cast<std::size_t>(i)] == n) label[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return n == 0 ? 0.0 : best;
}

/// Smallest |X| by scanning every subset of the positive edges (<= 20 edges).
inline std::size_t brute_force_min_removal(const SignedGraph& g, std::int64_t K) {
  auto edges = g.positive_edges();
  const std::size_t m = edges.size();
  std::size_t best = m;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (bits >= best) continue;
    std::vector<std::int64_t> deg(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < m; ++i)
      if (!(mask >> i & 1)) {
        ++deg[static_cast<std::size_t>(edges[i].first)];
        ++deg[static_cast<std::size_t>(edges[i].second)];
      }
    if (std::all_of(deg.begin(), deg.end(), [&](std::int64_t d) { return d <= K; })) best = bits;
  }
  return best;
}

inline WeightedInstance make_triangle(std::int64_t K = 2, double mu = 0.0) {
  // 0-1 and 1-2 positive, 0-2 negative.
  PairTable<EdgeWeight> w(3);
  w(0, 1) = {1, 0};
  w(1, 2) = {1, 0};
  w(0, 2) = {0, 1};
  return WeightedInstance(std::move(w), {mu, mu, mu}, K, Tau::finite(1.0));
}

inline WeightedInstance make_complete_positive(int n, std::int64_t K, double mu) {
  PairTable<EdgeWeight> w(n, EdgeWeight{1, 0});
  return WeightedInstance(std::move(w), std::vector<double>(static_cast<std::size_t>(n), mu), K, Tau::finite(1.0));
}

/// Two positive cliques {0..a-1} and {a..a+b-1}, negative across.
inline WeightedInstance make_two_cliques(int a, int b, std::int64_t K, double mu = 0.0) {
  const int n = a + b;
  PairTable<EdgeWeight> w(n);
  for_each_pair(n, [&](Vertex u, Vertex v) { w(u, v) = ((u < a) == (v < a)) ? EdgeWeight{1, 0} : EdgeWeight{0, 1}; });
  return WeightedInstance(std::move(w), std::vector<double>(static_cast<std::size_t>(n), mu), K, Tau::finite(1.0));
}

/// Convex combination of x-tables with minimal feasible y.
inline LpSolution convex_point(const WeightedInstance& inst, const std::vector<const PairTable<double>*>& points,
                               const std::vector<double>& weights) {
  LpSolution s;
  s.x = PairTable<double>(inst.n(), 0.0);
  for (std::size_t k = 0; k < points.size(); ++k)
    for (std::size_t i = 0; i < s.x.size(); ++i) s.x.at_slot(i) += weights[k] * points[k]->at_slot(i);
  for (std::size_t i = 0; i < s.x.size(); ++i) s.x.at_slot(i) = std::clamp(s.x.at_slot(i), 0.0, 1.0);
  s.y = minimal_overflow(inst, s.x);
  s.objective = lp_objective(inst, s.x, s.y);
  return s;
}

}  // namespace corrclust::testing
