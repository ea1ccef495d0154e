#include "corrclust/pivot.hpp"

#include <algorithm>
#include <numeric>

#include "corrclust/rng.hpp"

namespace corrclust {

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.first == e.second) throw InvalidArgument("edge endpoints must differ");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

SignedGraph::SignedGraph(PairTable<bool> positive) : positive_(std::move(positive)) {
  adjacency_.resize(static_cast<std::size_t>(n()));
  for_each_pair(n(), [&](Vertex u, Vertex v) {
    if (positive_(u, v)) {
      adjacency_[static_cast<std::size_t>(u)].push_back(v);
      adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
  });
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

SignedGraph SignedGraph::from_instance(const WeightedInstance& instance) {
  PairTable<bool> positive(instance.n(), false);
  for_each_pair(instance.n(), [&](Vertex u, Vertex v) {
    const EdgeWeight& w = instance.weight(u, v);
    if (w.plus == 1.0 && w.minus == 0.0)
      positive(u, v) = true;
    else if (!(w.plus == 0.0 && w.minus == 1.0))
      throw InvalidArgument("pair {" + std::to_string(u) + "," + std::to_string(v) +
                            "} is neither (1,0) nor (0,1); pivot algorithms need an unweighted instance");
  });
  return SignedGraph(std::move(positive));
}

int SignedGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t SignedGraph::num_positive_edges() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

std::vector<Edge> SignedGraph::positive_edges() const {
  std::vector<Edge> out;
  for_each_pair(n(), [&](Vertex u, Vertex v) {
    if (positive_(u, v)) out.emplace_back(u, v);
  });
  return out;
}

SignedGraph SignedGraph::without(const EdgeSet& flip) const {
  PairTable<bool> positive = positive_;
  for (auto [u, v] : flip) positive(u, v) = false;
  return SignedGraph(std::move(positive));
}

WeightedInstance SignedGraph::to_instance(std::int64_t K) const {
  PairTable<EdgeWeight> weights(n());
  for_each_pair(n(), [&](Vertex u, Vertex v) {
    weights(u, v) = positive_(u, v) ? EdgeWeight{1.0, 0.0} : EdgeWeight{0.0, 1.0};
  });
  return WeightedInstance(std::move(weights), std::vector<double>(static_cast<std::size_t>(n()), 1.0), K,
                          Tau::finite(1.0));
}

Clustering cc_pivot(const SignedGraph& graph, const PivotOrder& order) {
  const int n = graph.n();
  if (order.kind() == PivotOrder::Kind::kExplicit) require_permutation(order.sequence(), n);
  Rng rng(order.seed());
  std::vector<Vertex> live(static_cast<std::size_t>(n));
  std::iota(live.begin(), live.end(), 0);
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  std::size_t next_in_sequence = 0;
  int cluster = 0;
  while (!live.empty()) {
    Vertex v = 0;
    switch (order.kind()) {
      case PivotOrder::Kind::kLowestId:
        v = live.front();
        break;
      case PivotOrder::Kind::kSeededRandom:
        v = live[rng.below(live.size())];
        break;
      case PivotOrder::Kind::kExplicit:
        while (assignment[static_cast<std::size_t>(order.sequence()[next_in_sequence])] >= 0) ++next_in_sequence;
        v = order.sequence()[next_in_sequence];
        break;
    }
    assignment[static_cast<std::size_t>(v)] = cluster;
    for (Vertex w : graph.neighbors(v))
      if (assignment[static_cast<std::size_t>(w)] < 0) assignment[static_cast<std::size_t>(w)] = cluster;
    ++cluster;
    std::erase_if(live, [&](Vertex w) { return assignment[static_cast<std::size_t>(w)] >= 0; });
  }
  return Clustering(std::move(assignment));
}

namespace {

class ExactRemovalSearch {
 public:
  ExactRemovalSearch(std::vector<Edge> candidates, std::vector<std::int64_t> excess)
      : candidates_(std::move(candidates)), excess_(std::move(excess)), incident_left_(excess_.size(), 0) {
    for (auto [u, v] : candidates_) {
      ++incident_left_[static_cast<std::size_t>(u)];
      ++incident_left_[static_cast<std::size_t>(v)];
    }
    for (std::int64_t e : excess_) total_excess_ += e;
  }

  /// Lexicographically first feasible selection of exactly `k` candidates.
  bool search(std::size_t k) {
    chosen_.clear();
    return dfs(0, k);
  }

  std::vector<Edge> selection() const {
    std::vector<Edge> out;
    for (std::size_t i : chosen_) out.push_back(candidates_[i]);
    return out;
  }

 private:
  bool dfs(std::size_t pos, std::size_t picks_left) {
    if (total_excess_ == 0) return true;
    if (pos == candidates_.size() || picks_left == 0) return false;
    if (total_excess_ > 2 * static_cast<std::int64_t>(picks_left)) return false;

    auto [u, v] = candidates_[pos];
    auto& eu = excess_[static_cast<std::size_t>(u)];
    auto& ev = excess_[static_cast<std::size_t>(v)];
    auto& lu = incident_left_[static_cast<std::size_t>(u)];
    auto& lv = incident_left_[static_cast<std::size_t>(v)];
    --lu;
    --lv;

    bool found = false;
    if (eu > 0 || ev > 0) {
      std::int64_t du = eu > 0 ? 1 : 0, dv = ev > 0 ? 1 : 0;
      eu -= du;
      ev -= dv;
      total_excess_ -= du + dv;
      chosen_.push_back(pos);
      found = dfs(pos + 1, picks_left - 1);
      if (!found) {
        chosen_.pop_back();
        eu += du;
        ev += dv;
        total_excess_ += du + dv;
      }
    }
    // Skipping this edge is only viable if both endpoints can still be relieved.
    if (!found && eu <= lu && ev <= lv) found = dfs(pos + 1, picks_left);

    ++lu;
    ++lv;
    return found;
  }

  std::vector<Edge> candidates_;
  std::vector<std::int64_t> excess_;
  std::vector<std::int64_t> incident_left_;
  std::int64_t total_excess_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

EdgeSet bounded_edge_removal_exact(const SignedGraph& graph, std::int64_t K, std::size_t guard) {
  if (K < 0) throw InvalidArgument("K must be nonnegative");
  const int n = graph.n();
  std::vector<std::int64_t> excess(static_cast<std::size_t>(n), 0);
  std::int64_t total = 0, largest = 0;
  for (Vertex v = 0; v < n; ++v) {
    excess[static_cast<std::size_t>(v)] = std::max<std::int64_t>(0, graph.degree(v) - K);
    total += excess[static_cast<std::size_t>(v)];
    largest = std::max(largest, excess[static_cast<std::size_t>(v)]);
  }
  if (total == 0) return EdgeSet{};

  std::vector<Edge> candidates;
  for (auto [u, v] : graph.positive_edges())
    if (excess[static_cast<std::size_t>(u)] > 0 || excess[static_cast<std::size_t>(v)] > 0) candidates.emplace_back(u, v);
  if (candidates.size() > guard)
    throw GuardExceeded("exact edge removal: " + std::to_string(candidates.size()) +
                        " candidate edges exceed the guard of " + std::to_string(guard) + "; use greedy removal");

  ExactRemovalSearch search(candidates, excess);
  auto k = static_cast<std::size_t>(std::max((total + 1) / 2, largest));
  for (; k <= candidates.size(); ++k)
    if (search.search(k)) return EdgeSet(search.selection());
  // Removing every candidate always works, so the loop above returns.
  return EdgeSet(candidates);
}

EdgeSet bounded_edge_removal_greedy(const SignedGraph& graph, std::int64_t K, KeepRule rule, std::uint64_t seed) {
  if (K < 0) throw InvalidArgument("K must be nonnegative");
  const int n = graph.n();
  PairTable<int> keep_votes(n, 0);
  Rng base(seed);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> choice = graph.neighbors(v);
    if (rule == KeepRule::kSeededRandom) {
      Rng rng = base.split(static_cast<std::uint64_t>(v));
      for (std::size_t i = choice.size(); i > 1; --i) std::swap(choice[i - 1], choice[rng.below(i)]);
    }
    auto keep = std::min<std::size_t>(choice.size(), static_cast<std::size_t>(K));
    for (std::size_t i = 0; i < keep; ++i) ++keep_votes(v, choice[i]);
  }
  std::vector<Edge> removed;
  for (auto [u, v] : graph.positive_edges())
    if (keep_votes(u, v) < 2) removed.emplace_back(u, v);
  return EdgeSet(std::move(removed));
}

BoundedPivotResult bounded_cc_pivot(const SignedGraph& graph, std::int64_t K, const EdgeSet& removed,
                                    const PivotOrder& order) {
  SignedGraph reduced = graph.without(removed);
  if (reduced.max_degree() > K) throw InvalidArgument("removal set leaves a vertex with more than K positive edges");
  BoundedPivotResult result{cc_pivot(reduced, order), removed};
  if (result.clustering.max_cluster_size() > K + 1)
    throw std::logic_error("bounded pivot emitted a cluster larger than K+1");
  return result;
}

BoundedPivotResult bounded_cc_pivot(const SignedGraph& graph, std::int64_t K, RemovalMethod removal,
                                    const PivotOrder& order) {
  EdgeSet removed = removal == RemovalMethod::kExact ? bounded_edge_removal_exact(graph, K)
                                                     : bounded_edge_removal_greedy(graph, K);
  return bounded_cc_pivot(graph, K, removed, order);
}

std::int64_t disagreements(const SignedGraph& graph, const Clustering& clustering) {
  if (clustering.n() != graph.n()) throw InvalidArgument("clustering does not cover the graph");
  std::int64_t count = 0;
  for_each_pair(graph.n(), [&](Vertex u, Vertex v) {
    if (graph.positive(u, v) != clustering.same_cluster(u, v)) ++count;
  });
  return count;
}

}  // namespace corrclust
