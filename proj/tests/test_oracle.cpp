#include <cmath>

#include "corrclust/experiment.hpp"
#include "corrclust/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace corrclust;
using namespace corrclust::testing;

TEST_CASE("oracle examples") {
  auto tri = optimal_clustering(make_triangle(2, 0.0));
  CHECK(tri.best_cost.total == 1.0);
  CHECK(tri.best_clustering == Clustering::one_cluster(3));  // first in RGS order
  CHECK(tri.partitions_examined == 5);

  auto k4 = optimal_clustering(make_complete_positive(4, 1, 1.0));
  CHECK(k4.best_cost.total == 4.0);
  CHECK(k4.best_clustering.max_cluster_size() == 2);
  CHECK(k4.partitions_examined == 15);

  auto one = optimal_clustering(make_complete_positive(1, 0, 1.0));
  CHECK(one.best_cost.total == 0.0);
  CHECK(one.best_clustering.n() == 1);

  auto hard = optimal_clustering(make_complete_positive(4, 1, 0.0), {.hard_bound = true});
  CHECK(hard.best_cost.total == 4.0);
  CHECK(hard.partitions_examined < 15);

  CHECK_THROWS_AS(optimal_clustering(make_complete_positive(13, 1, 0.0)), GuardExceeded);
  CHECK_THROWS_AS(optimal_clustering_serial(make_complete_positive(5, 1, 0.0), {.guard_n = 4}), GuardExceeded);
}

TEST_CASE("oracle agrees with brute force and with its serial form") {
  Engine rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    int n = uniform_int(rng, 1, 7);
    std::vector<double> mu(static_cast<std::size_t>(n));
    for (auto& m : mu) m = uniform(rng, 0.0, 1.5);
    const Tau taus[] = {Tau::finite(1.0), Tau::finite(2.0), Tau::infinite()};
    auto inst = random_weighted_instance(rng, n, taus[trial % 3], mu, uniform_int(rng, 0, n));
    CAPTURE(trial);
    for (bool hard : {false, true}) {
      auto par = optimal_clustering(inst, {.hard_bound = hard});
      auto ser = optimal_clustering_serial(inst, {.hard_bound = hard});
      CHECK(par.best_clustering == ser.best_clustering);
      CHECK(par.best_cost.total == ser.best_cost.total);
      CHECK(par.partitions_examined == ser.partitions_examined);
      CHECK(std::abs(par.best_cost.total - brute_force_opt(inst, hard)) <= 1e-9);
      CHECK(par.best_cost.total == clustering_cost(inst, par.best_clustering).total);
      if (hard) CHECK(par.best_clustering.max_cluster_size() <= inst.K() + 1);
    }
  }
}

TEST_CASE("heavy penalties make the soft optimum respect the bound") {
  Engine rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    int n = uniform_int(rng, 2, 8);
    auto g = random_signed_graph(rng, n, 0.6);
    std::int64_t K = uniform_int(rng, 1, 2);
    auto inst = g.to_instance(K).with_mu(std::vector<double>(static_cast<std::size_t>(n), 1e3));
    auto soft = optimal_clustering(inst);
    auto hard = optimal_clustering(inst, {.hard_bound = true});
    CHECK(soft.best_cost.total == hard.best_cost.total);
    CHECK(soft.best_cost.penalty_cost == 0.0);
  }
}

TEST_CASE("algorithm names") {
  CHECK(AlgorithmSpec::parse("cc_pivot").kind == AlgorithmSpec::Kind::kCcPivot);
  CHECK(AlgorithmSpec::parse("bounded_cc_pivot:exact").bounded());
  CHECK(AlgorithmSpec::parse("bounded_cc_pivot:greedy").name() == "bounded_cc_pivot:greedy");
  CHECK_THROWS_AS(AlgorithmSpec::parse("pivot"), InvalidArgument);
}

TEST_CASE("empirical ratio examples") {
  auto tri = SignedGraph::from_instance(make_triangle(2, 1.0)).to_instance(2);
  auto stats = empirical_ratio(AlgorithmSpec::parse("cc_pivot"), tri, 500, 7);
  CHECK(stats.mean_cost == 1.0);
  CHECK(stats.opt_cost == 1.0);
  CHECK(stats.mean_ratio == 1.0);
  CHECK(stats.trial_costs.size() == 500);

  PairTable<bool> all(3, true);
  auto k3 = SignedGraph(std::move(all)).to_instance(2);
  auto k3_stats = empirical_ratio(AlgorithmSpec::parse("cc_pivot"), k3, 100, 1);
  CHECK(k3_stats.opt_cost == 0.0);
  CHECK(k3_stats.mean_ratio == 1.0);
  CHECK(k3_stats.max_cluster_size == 3);

  CHECK_THROWS_AS(empirical_ratio(AlgorithmSpec::parse("cc_pivot"), make_complete_positive(3, 1, 1.0).with_mu({1, 1, 1}),
                                  10, 0, {.guard_n = 2}),
                  GuardExceeded);
}

TEST_CASE("empirical ratio: parallel equals serial and bounded sizes hold") {
  Engine rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    int n = uniform_int(rng, 3, 7);
    auto g = random_signed_graph(rng, n, 0.5);
    std::int64_t K = uniform_int(rng, 1, 2);
    auto inst = g.to_instance(K);
    for (const char* name : {"cc_pivot", "bounded_cc_pivot:exact", "bounded_cc_pivot:greedy"}) {
      CAPTURE(name);
      auto spec = AlgorithmSpec::parse(name);
      auto seed = rng();
      auto par = empirical_ratio(spec, inst, 64, seed);
      auto ser = empirical_ratio_serial(spec, inst, 64, seed);
      CHECK(par.trial_costs == ser.trial_costs);
      CHECK(par.mean_cost == ser.mean_cost);
      CHECK(par.max_cluster_size == ser.max_cluster_size);
      CHECK(par.removed_edges == ser.removed_edges);
      CHECK(par.min_cost <= par.mean_cost);
      CHECK(par.mean_cost <= par.max_cost);
      if (spec.bounded()) CHECK(par.max_cluster_size <= K + 1);
      CHECK(par.opt_cost == optimal_clustering(spec.bounded() ? inst : inst.with_mu(std::vector<double>(
                                                                                    static_cast<std::size_t>(n), 0.0)),
                                               {.hard_bound = spec.bounded()})
                                .best_cost.total);
    }
  }
}
