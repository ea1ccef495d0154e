#include "corrclust/oracle.hpp"

#include <limits>
#include <string>
#include <vector>

#include "corrclust/pivot.hpp"

namespace corrclust {
namespace {

// Depth-first walk over restricted growth strings. Vertex i joins one of the
// blocks opened by vertices 0..i-1 or opens the next one; the cost of pairs
// (j, i), j < i, is added as soon as i is placed.
class PartitionWalker {
 public:
  PartitionWalker(const WeightedInstance& instance, const OracleOptions& options)
      : n_(instance.n()),
        hard_(options.hard_bound),
        cap_(instance.K() + 1),
        plus_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0),
        minus_(plus_.size(), 0.0),
        mu_(instance.mu()) {
    for_each_pair(n_, [&](Vertex u, Vertex v) {
      const EdgeWeight& w = instance.weight(u, v);
      plus_[idx(u, v)] = plus_[idx(v, u)] = w.plus;
      minus_[idx(u, v)] = minus_[idx(v, u)] = w.minus;
    });
  }

  struct Frame {
    std::vector<int> rgs;
    std::vector<std::int64_t> block_size;
    std::vector<double> block_mu;
    int blocks = 0;
    double edge_cost = 0.0;
  };

  struct Best {
    double cost = std::numeric_limits<double>::infinity();
    std::vector<int> rgs;
    std::uint64_t examined = 0;
  };

  Frame root() const {
    Frame f;
    f.rgs.assign(static_cast<std::size_t>(n_), -1);
    f.block_size.assign(static_cast<std::size_t>(n_) + 1, 0);
    f.block_mu.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    return f;
  }

  /// Collects every admissible frame with the first `depth` vertices placed, in lexicographic order.
  void prefixes(Frame& f, int i, int depth, std::vector<Frame>& out) const {
    if (i == depth) {
      out.push_back(f);
      return;
    }
    for_each_choice(f, i, [&] { prefixes(f, i + 1, depth, out); });
  }

  void complete(Frame& f, int i, Best& best) const {
    if (i == n_) {
      ++best.examined;
      double total = f.edge_cost;
      if (!hard_)
        for (int b = 0; b < f.blocks; ++b)
          if (f.block_size[static_cast<std::size_t>(b)] > cap_)
            total += static_cast<double>(f.block_size[static_cast<std::size_t>(b)] - cap_) * f.block_mu[static_cast<std::size_t>(b)];
      if (total < best.cost) {
        best.cost = total;
        best.rgs = f.rgs;
      }
      return;
    }
    for_each_choice(f, i, [&] { complete(f, i + 1, best); });
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v); }

  template <class Next>
  void for_each_choice(Frame& f, int i, Next&& next) const {
    const int open = f.blocks;
    for (int b = 0; b <= open; ++b) {
      auto& size = f.block_size[static_cast<std::size_t>(b)];
      if (hard_ && size >= cap_) continue;
      double delta = 0.0;
      for (Vertex j = 0; j < i; ++j)
        delta += f.rgs[static_cast<std::size_t>(j)] == b ? minus_[idx(j, i)] : plus_[idx(j, i)];
      const double saved_cost = f.edge_cost;
      const double saved_mu = f.block_mu[static_cast<std::size_t>(b)];
      f.rgs[static_cast<std::size_t>(i)] = b;
      f.edge_cost += delta;
      ++size;
      f.block_mu[static_cast<std::size_t>(b)] += mu_[static_cast<std::size_t>(i)];
      if (b == open) ++f.blocks;
      next();
      if (b == open) --f.blocks;
      f.block_mu[static_cast<std::size_t>(b)] = saved_mu;
      --size;
      f.edge_cost = saved_cost;
      f.rgs[static_cast<std::size_t>(i)] = -1;
    }
  }

  int n_;
  bool hard_;
  std::int64_t cap_;
  std::vector<double> plus_, minus_;
  std::vector<double> mu_;
};

void check_guard(const WeightedInstance& instance, const OracleOptions& options) {
  if (instance.n() > options.guard_n)
    throw GuardExceeded("exact oracle limited to n <= " + std::to_string(options.guard_n) + " (got n = " +
                        std::to_string(instance.n()) + ")");
}

OracleResult finish(const WeightedInstance& instance, const std::vector<int>& rgs, std::uint64_t examined) {
  OracleResult result;
  result.best_clustering = Clustering(rgs);
  result.best_cost = clustering_cost(instance, result.best_clustering);
  result.partitions_examined = examined;
  return result;
}

}  // namespace

OracleResult optimal_clustering_serial(const WeightedInstance& instance, const OracleOptions& options) {
  check_guard(instance, options);
  PartitionWalker walker(instance, options);
  auto frame = walker.root();
  PartitionWalker::Best best;
  walker.complete(frame, 0, best);
  return finish(instance, best.rgs, best.examined);
}

OracleResult optimal_clustering(const WeightedInstance& instance, const OracleOptions& options) {
  check_guard(instance, options);
  const int depth = std::min(instance.n(), 6);
  PartitionWalker walker(instance, options);
  auto frame = walker.root();
  std::vector<PartitionWalker::Frame> work;
  walker.prefixes(frame, 0, depth, work);

  std::vector<PartitionWalker::Best> partial(work.size());
  const auto count = static_cast<std::ptrdiff_t>(work.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k)
    walker.complete(work[static_cast<std::size_t>(k)], depth, partial[static_cast<std::size_t>(k)]);

  // Prefixes are in lexicographic order, so a strict comparison keeps the
  // lexicographically first minimum.
  PartitionWalker::Best best;
  for (const auto& p : partial) {
    best.examined += p.examined;
    if (p.cost < best.cost) {
      best.cost = p.cost;
      best.rgs = p.rgs;
    }
  }
  return finish(instance, best.rgs, best.examined);
}

}  // namespace corrclust
