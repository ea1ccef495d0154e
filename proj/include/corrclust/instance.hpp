#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "corrclust/pair_table.hpp"

namespace corrclust {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Upper bound on negative edge weights. Either a finite value >= 1 or the
/// distinguished "unbounded" value, which is never represented as a float.
class Tau {
 public:
  static Tau finite(double value);
  static Tau infinite() { return Tau(); }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful when !is_infinite().
  double value() const { return value_; }

  std::string to_string() const;

  bool operator==(const Tau&) const = default;

 private:
  Tau() = default;
  bool infinite_ = true;
  double value_ = 0.0;
};

struct EdgeWeight {
  double plus = 0.0;   // paid when the pair is split across clusters
  double minus = 0.0;  // paid when the pair shares a cluster

  bool operator==(const EdgeWeight&) const = default;
};

/// Complete graph with per-pair (w+, w-), per-vertex size penalties and the
/// size parameter K (clusters with at most K+1 vertices are free).
class WeightedInstance {
 public:
  WeightedInstance(PairTable<EdgeWeight> weights, std::vector<double> mu,
                   std::int64_t K, Tau tau);

  int n() const { return weights_.n(); }
  std::int64_t K() const { return K_; }
  const Tau& tau() const { return tau_; }
  const EdgeWeight& weight(Vertex u, Vertex v) const { return weights_(u, v); }
  const PairTable<EdgeWeight>& weights() const { return weights_; }
  double mu(Vertex v) const { return mu_[static_cast<std::size_t>(v)]; }
  const std::vector<double>& mu() const { return mu_; }

  WeightedInstance with_mu(std::vector<double> mu) const;
  WeightedInstance with_K(std::int64_t K) const;

 private:
  PairTable<EdgeWeight> weights_;
  std::vector<double> mu_;
  std::int64_t K_;
  Tau tau_;
};

/// A partition of 0..n-1. Cluster ids are dense and numbered in order of
/// first appearance, so two clusterings compare equal iff they induce the
/// same partition.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<int> assignment);
  static Clustering from_clusters(int n, const std::vector<std::vector<Vertex>>& clusters);
  static Clustering singletons(int n);
  static Clustering one_cluster(int n);

  int n() const { return static_cast<int>(assignment_.size()); }
  int cluster_of(Vertex v) const { return assignment_[static_cast<std::size_t>(v)]; }
  int num_clusters() const { return num_clusters_; }
  const std::vector<int>& assignment() const { return assignment_; }
  bool same_cluster(Vertex u, Vertex v) const { return cluster_of(u) == cluster_of(v); }

  /// Clusters in id order, each listing its vertices in increasing order.
  std::vector<std::vector<Vertex>> clusters() const;
  std::vector<int> cluster_sizes() const;
  int max_cluster_size() const;

  bool operator==(const Clustering&) const = default;

 private:
  std::vector<int> assignment_;
  int num_clusters_ = 0;
};

struct CostBreakdown {
  double positive_cost = 0.0;  // w+ over pairs split across clusters
  double negative_cost = 0.0;  // w- over pairs inside a cluster
  double penalty_cost = 0.0;   // size-bound penalties
  double total = 0.0;
};

enum class ConstraintKind {
  kPlusAtMostOne,
  kMinusAtMostTau,
  kSumAtLeastOne,
  kUnweightedEdge,
  kUnitPenalty,
};

struct Violation {
  ConstraintKind kind;
  Vertex u = -1;  // -1 for vertex-level violations
  Vertex v = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 5) const;
};

/// Checks w+ <= 1, w- <= tau (skipped for infinite tau) and w+ + w- >= 1.
ValidationReport validate_weighted(const WeightedInstance& instance);

/// Every pair is exactly (1,0) or (0,1) and every mu_v == 1.
ValidationReport validate_unweighted(const WeightedInstance& instance);

CostBreakdown clustering_cost(const WeightedInstance& instance, const Clustering& clustering);

/// Cuts every cluster larger than K+1 into consecutive runs of K+1 vertices
/// (by increasing id) plus one remainder cluster.
Clustering split_oversized(const WeightedInstance& instance, const Clustering& clustering);

/// max over u != v of mu_u + mu_v.
double mu_star(const WeightedInstance& instance);

}  // namespace corrclust
