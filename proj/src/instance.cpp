#include "corrclust/instance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace corrclust {

Tau Tau::finite(double value) {
  if (!std::isfinite(value) || value < 1.0)
    throw InvalidArgument("tau must be a finite value >= 1 or INF, got " + std::to_string(value));
  Tau t;
  t.infinite_ = false;
  t.value_ = value;
  return t;
}

std::string Tau::to_string() const {
  if (infinite_) return "INF";
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

WeightedInstance::WeightedInstance(PairTable<EdgeWeight> weights, std::vector<double> mu,
                                   std::int64_t K, Tau tau)
    : weights_(std::move(weights)), mu_(std::move(mu)), K_(K), tau_(tau) {
  if (weights_.n() < 0) throw InvalidArgument("negative vertex count");
  if (mu_.size() != static_cast<std::size_t>(weights_.n()))
    throw InvalidArgument("mu has " + std::to_string(mu_.size()) + " entries, expected " +
                          std::to_string(weights_.n()));
  if (K_ < 0) throw InvalidArgument("K must be nonnegative");
  for (double m : mu_)
    if (!std::isfinite(m) || m < 0) throw InvalidArgument("mu values must be finite and nonnegative");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const EdgeWeight& w = weights_.at_slot(i);
    if (!std::isfinite(w.plus) || !std::isfinite(w.minus))
      throw InvalidArgument("edge weights must be finite; encode forbidden pairs with a large finite w-");
    if (w.plus < 0 || w.minus < 0) throw InvalidArgument("edge weights must be nonnegative");
  }
}

WeightedInstance WeightedInstance::with_mu(std::vector<double> mu) const {
  return WeightedInstance(weights_, std::move(mu), K_, tau_);
}

WeightedInstance WeightedInstance::with_K(std::int64_t K) const {
  return WeightedInstance(weights_, mu_, K, tau_);
}

Clustering::Clustering(std::vector<int> assignment) : assignment_(std::move(assignment)) {
  std::vector<int> relabel;
  for (int& c : assignment_) {
    if (c < 0) throw InvalidArgument("cluster ids must be nonnegative");
    if (static_cast<std::size_t>(c) >= relabel.size()) relabel.resize(static_cast<std::size_t>(c) + 1, -1);
    int& r = relabel[static_cast<std::size_t>(c)];
    if (r < 0) r = num_clusters_++;
    c = r;
  }
}

Clustering Clustering::from_clusters(int n, const std::vector<std::vector<Vertex>>& clusters) {
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  int id = 0;
  for (const auto& cluster : clusters) {
    if (cluster.empty()) throw InvalidArgument("empty cluster");
    for (Vertex v : cluster) {
      if (v < 0 || v >= n) throw InvalidArgument("vertex out of range: " + std::to_string(v));
      if (assignment[static_cast<std::size_t>(v)] >= 0)
        throw InvalidArgument("vertex in two clusters: " + std::to_string(v));
      assignment[static_cast<std::size_t>(v)] = id;
    }
    ++id;
  }
  for (int v = 0; v < n; ++v)
    if (assignment[static_cast<std::size_t>(v)] < 0)
      throw InvalidArgument("vertex not covered: " + std::to_string(v));
  return Clustering(std::move(assignment));
}

Clustering Clustering::singletons(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) a[static_cast<std::size_t>(v)] = v;
  return Clustering(std::move(a));
}

Clustering Clustering::one_cluster(int n) { return Clustering(std::vector<int>(static_cast<std::size_t>(n), 0)); }

std::vector<std::vector<Vertex>> Clustering::clusters() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(num_clusters_));
  for (int v = 0; v < n(); ++v) out[static_cast<std::size_t>(cluster_of(v))].push_back(v);
  return out;
}

std::vector<int> Clustering::cluster_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(num_clusters_), 0);
  for (int c : assignment_) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

int Clustering::max_cluster_size() const {
  auto sizes = cluster_sizes();
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

std::string ValidationReport::summary(std::size_t max_items) const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) os << "; " << violations[i].message;
  if (violations.size() > max_items) os << "; ...";
  return os.str();
}

namespace {

std::string pair_name(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

ValidationReport validate_weighted(const WeightedInstance& instance) {
  ValidationReport report;
  for_each_pair(instance.n(), [&](Vertex u, Vertex v) {
    const EdgeWeight& w = instance.weight(u, v);
    if (w.plus > 1.0)
      report.violations.push_back({ConstraintKind::kPlusAtMostOne, u, v,
                                   "w+ <= 1 fails at " + pair_name(u, v) + " (w+=" + fmt(w.plus) + ")"});
    if (!instance.tau().is_infinite() && w.minus > instance.tau().value())
      report.violations.push_back({ConstraintKind::kMinusAtMostTau, u, v,
                                   "w- <= tau fails at " + pair_name(u, v) + " (w-=" + fmt(w.minus) +
                                       ", tau=" + instance.tau().to_string() + ")"});
    if (w.plus + w.minus < 1.0)
      report.violations.push_back({ConstraintKind::kSumAtLeastOne, u, v,
                                   "w+ + w- >= 1 fails at " + pair_name(u, v) + " (sum=" +
                                       fmt(w.plus + w.minus) + ")"});
  });
  return report;
}

ValidationReport validate_unweighted(const WeightedInstance& instance) {
  ValidationReport report;
  for_each_pair(instance.n(), [&](Vertex u, Vertex v) {
    const EdgeWeight& w = instance.weight(u, v);
    bool positive = w.plus == 1.0 && w.minus == 0.0;
    bool negative = w.plus == 0.0 && w.minus == 1.0;
    if (!positive && !negative)
      report.violations.push_back({ConstraintKind::kUnweightedEdge, u, v,
                                   "edge " + pair_name(u, v) + " is neither (1,0) nor (0,1)"});
  });
  for (Vertex v = 0; v < instance.n(); ++v)
    if (instance.mu(v) != 1.0)
      report.violations.push_back({ConstraintKind::kUnitPenalty, v, -1,
                                   "mu_v = 1 required at vertex " + std::to_string(v)});
  return report;
}

CostBreakdown clustering_cost(const WeightedInstance& instance, const Clustering& clustering) {
  if (clustering.n() != instance.n())
    throw InvalidArgument("clustering covers " + std::to_string(clustering.n()) +
                          " vertices, instance has " + std::to_string(instance.n()));
  CostBreakdown cost;
  for_each_pair(instance.n(), [&](Vertex u, Vertex v) {
    if (clustering.same_cluster(u, v))
      cost.negative_cost += instance.weight(u, v).minus;
    else
      cost.positive_cost += instance.weight(u, v).plus;
  });
  const std::int64_t free_size = instance.K() + 1;
  std::vector<double> mu_sum(static_cast<std::size_t>(clustering.num_clusters()), 0.0);
  for (Vertex v = 0; v < instance.n(); ++v) mu_sum[static_cast<std::size_t>(clustering.cluster_of(v))] += instance.mu(v);
  auto sizes = clustering.cluster_sizes();
  for (std::size_t c = 0; c < sizes.size(); ++c)
    if (sizes[c] > free_size) cost.penalty_cost += static_cast<double>(sizes[c] - free_size) * mu_sum[c];
  cost.total = cost.positive_cost + cost.negative_cost + cost.penalty_cost;
  return cost;
}

Clustering split_oversized(const WeightedInstance& instance, const Clustering& clustering) {
  const std::int64_t cap = instance.K() + 1;
  std::vector<std::vector<Vertex>> out;
  for (auto& cluster : clustering.clusters()) {
    if (static_cast<std::int64_t>(cluster.size()) <= cap) {
      out.push_back(std::move(cluster));
      continue;
    }
    for (std::size_t start = 0; start < cluster.size(); start += static_cast<std::size_t>(cap)) {
      auto stop = std::min(cluster.size(), start + static_cast<std::size_t>(cap));
      out.emplace_back(cluster.begin() + static_cast<std::ptrdiff_t>(start),
                       cluster.begin() + static_cast<std::ptrdiff_t>(stop));
    }
  }
  return Clustering::from_clusters(clustering.n(), out);
}

double mu_star(const WeightedInstance& instance) {
  if (instance.n() < 2) throw InvalidArgument("mu* needs at least two vertices");
  std::vector<double> mu = instance.mu();
  std::partial_sort(mu.begin(), mu.begin() + 2, mu.end(), std::greater<>());
  return mu[0] + mu[1];
}

}  // namespace corrclust
