#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corrclust/instance.hpp"
#include "corrclust/rounding.hpp"

namespace corrclust {

/// Raised when an exhaustive routine is asked to work beyond its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<Vertex, Vertex>;

/// Set of unordered pairs, stored normalized (first < second) and sorted.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Vertex u, Vertex v) const;
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Complete graph with a +/- label on every pair.
class SignedGraph {
 public:
  explicit SignedGraph(PairTable<bool> positive);
  /// Pairs must be exactly (1,0) (positive) or (0,1) (negative).
  static SignedGraph from_instance(const WeightedInstance& instance);

  int n() const { return positive_.n(); }
  bool positive(Vertex u, Vertex v) const { return positive_(u, v); }
  /// Positive neighbours of v in increasing order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  std::size_t num_positive_edges() const;
  std::vector<Edge> positive_edges() const;

  /// The graph with every edge of `flip` relabelled negative.
  SignedGraph without(const EdgeSet& flip) const;

  /// Unweighted encoding: (1,0) / (0,1) weights, mu = 1, tau = 1.
  WeightedInstance to_instance(std::int64_t K) const;

 private:
  PairTable<bool> positive_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Repeatedly pick a pivot v among the unclustered vertices S and emit
/// ({v} + N+(v)) intersected with S. With a seeded order the pivot is uniform
/// over S.
Clustering cc_pivot(const SignedGraph& graph, const PivotOrder& order);

inline constexpr std::size_t kExactRemovalGuard = 25;

/// Minimum-cardinality X within the positive edges such that every vertex
/// keeps at most K positive edges once X is removed. Exhaustive search over
/// the positive edges touching overloaded vertices; ties resolve to the
/// lexicographically smallest edge list. Throws GuardExceeded when more than
/// `guard` candidate edges exist.
EdgeSet bounded_edge_removal_exact(const SignedGraph& graph, std::int64_t K, std::size_t guard = kExactRemovalGuard);

enum class KeepRule { kLowestIndex, kSeededRandom };

/// Each vertex keeps K of its positive edges (lowest-indexed neighbours, or a
/// seeded random choice); an edge survives only when both endpoints keep it.
/// |X| <= sum_v max(0, d+(v) - K).
EdgeSet bounded_edge_removal_greedy(const SignedGraph& graph, std::int64_t K,
                                    KeepRule rule = KeepRule::kLowestIndex, std::uint64_t seed = 0);

enum class RemovalMethod { kExact, kGreedy };

struct BoundedPivotResult {
  Clustering clustering;
  EdgeSet removed;  // the edges switched to negative before pivoting
};

/// Degree reduction followed by cc_pivot on the reduced graph; every emitted
/// cluster has at most K+1 vertices.
BoundedPivotResult bounded_cc_pivot(const SignedGraph& graph, std::int64_t K, RemovalMethod removal,
                                    const PivotOrder& order);
/// Same, reusing a precomputed removal set.
BoundedPivotResult bounded_cc_pivot(const SignedGraph& graph, std::int64_t K, const EdgeSet& removed,
                                    const PivotOrder& order);

/// Disagreements of a clustering: positive pairs split plus negative pairs joined.
std::int64_t disagreements(const SignedGraph& graph, const Clustering& clustering);

}  // namespace corrclust
