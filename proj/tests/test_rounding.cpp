#include <cmath>

#include "corrclust/alpha.hpp"
#include "corrclust/instance_io.hpp"
#include "corrclust/rounding.hpp"
#include "corrclust/simplex.hpp"
#include "corrclust/table1.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace corrclust;
using namespace corrclust::testing;

TEST_CASE("c_alpha reference values") {
  CHECK(c_alpha(Tau::finite(1.0), 0.0, 0.5) == 4.0);
  CHECK(c_alpha(Tau::finite(1.0), 2.0, 1.0 / 3.0) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(c_alpha(Tau::infinite(), 0.0, 0.4) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(c_alpha(Tau::finite(1.0), 0.0, 0.4) == doctest::Approx(5.0).epsilon(1e-12));
  // mu* dominates once it exceeds 2 / alpha.
  CHECK(c_alpha(Tau::infinite(), 12.0, 0.01) == doctest::Approx(200.0));
  CHECK(c_alpha(Tau::infinite(), 12.0, 0.45) == doctest::Approx(2 * 0.45 * 12 / 0.1 + 10.0));
}

TEST_CASE("c_alpha domain") {
  CHECK_THROWS_AS(c_alpha(Tau::finite(1.0), 1.0, 0.5), AlphaDomainError);
  CHECK_THROWS_AS(c_alpha(Tau::finite(1.0), 0.0, 0.0), AlphaDomainError);
  CHECK_THROWS_AS(c_alpha(Tau::finite(1.0), 0.0, 0.6), AlphaDomainError);
  CHECK_THROWS_AS(c_alpha(Tau::finite(1.0), -1.0, 0.3), AlphaDomainError);
  CHECK_NOTHROW(c_alpha(Tau::finite(1.0), 7.0, 0.3));
}

TEST_CASE("optimal_alpha special cases") {
  auto p = optimal_alpha(Tau::finite(1.0), 0.0);
  CHECK(p.alpha == 0.5);
  CHECK(p.c_alpha == 4.0);
  CHECK(p.gamma() == 0.375);

  auto q = optimal_alpha(Tau::infinite(), 2.0);
  CHECK(q.alpha == doctest::Approx((-5.0 + std::sqrt(57.0)) / 8.0).epsilon(1e-14));
  CHECK(q.alpha == doctest::Approx(0.318729).epsilon(1e-6));
  CHECK(std::abs(q.c_alpha - 6.2749) < 1e-4);
  CHECK(q.gamma() == q.alpha);

  auto r = optimal_alpha(Tau::finite(1.0), 2.0);
  CHECK(std::abs(r.alpha - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(r.c_alpha - 6.0) < 1e-9);

  auto s = optimal_alpha(Tau::finite(2.0), 0.0);
  CHECK(s.c_alpha == 4.5);
  CHECK(s.alpha == doctest::Approx(4.0 / 9.0));

  CHECK_THROWS_AS(optimal_alpha(Tau::finite(1.0), 5.0), AlphaDomainError);
  CHECK_NOTHROW(optimal_alpha(Tau::finite(1.0), 4.0));
}

TEST_CASE("optimal alpha balances the dominant terms and its root is unique") {
  const Tau taus[] = {Tau::finite(1.0), Tau::finite(1.5), Tau::finite(3.0), Tau::finite(50.0), Tau::infinite()};
  const double mus[] = {0.05, 0.5, 1.0, 2.0, 3.0, 4.0};
  for (const Tau& tau : taus)
    for (double mu : mus) {
      CAPTURE(tau.to_string());
      CAPTURE(mu);
      auto plan = optimal_alpha(tau, mu);
      CHECK(plan.alpha > 0.0);
      CHECK(plan.alpha < 0.5);
      CHECK(std::abs(plan.c_alpha - 2.0 / plan.alpha) <= 1e-9);
      CHECK(std::abs(c_alpha(tau, mu, plan.alpha) - 2.0 / plan.alpha) <= 1e-9);
      CHECK(plan.gamma() >= 0.75 * plan.alpha);
      CHECK(plan.gamma() <= plan.alpha);

      // Residual changes sign exactly once on a 1000-point grid.
      int crossings = 0;
      double prev = alpha_residual(tau, mu, 0.5 / 1001.0);
      for (int k = 2; k <= 1000; ++k) {
        double cur = alpha_residual(tau, mu, 0.5 * k / 1001.0);
        CHECK(cur > prev);
        if ((prev < 0) != (cur < 0)) ++crossings;
        prev = cur;
      }
      CHECK(crossings == 1);

      // No threshold on a fine grid does better.
      for (int k = 1; k < 500; ++k) CHECK(c_alpha(tau, mu, k / 1000.0) >= plan.c_alpha - 1e-9);
    }
}

TEST_CASE("ratio table") {
  auto table = ratio_table();
  int grid = 0;
  for (const auto& e : table) {
    CAPTURE(e.cell);
    CHECK(std::abs(c_alpha(e.tau, e.mu_star, e.alpha) - e.ratio) <= 1e-9);
    if (e.reference) CHECK(std::abs(e.ratio - *e.reference) <= 1e-9);
    if (e.cell == "tau=INF,mu*<2") ++grid;
  }
  CHECK(grid == 20);
  // mu* = 1 at infinite tau: 8 / (-5 + sqrt(41)), cross-checked by bisection.
  double closed = 8.0 / (-5.0 + std::sqrt(41.0));
  CHECK(closed == doctest::Approx(5.7016).epsilon(1e-4));
  CHECK(std::abs(optimal_alpha(Tau::infinite(), 1.0).c_alpha - closed) <= 1e-9);
  double lo = 1e-9, hi = 0.5 - 1e-9;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (alpha_residual(Tau::infinite(), 1.0, mid) < 0 ? lo : hi) = mid;
  }
  CHECK(std::abs(2.0 / lo - closed) <= 1e-9);
}

TEST_CASE("rounding recovers perfect clusterings") {
  Engine rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = uniform_int(rng, 1, 9);
    auto truth = random_clustering(rng, n, uniform_int(rng, 1, n));
    auto inst = make_complete_positive(n, n, 0.0);  // weights are irrelevant here
    auto emb = integer_solution_from_clustering(inst, truth);
    double alpha = uniform(rng, 0.01, 0.5);
    CHECK(round_lp_solution(inst, emb, alpha, PivotOrder::lowest_id()) == truth);
    CHECK(round_lp_solution(inst, emb, alpha, PivotOrder::seeded(rng())) == truth);
    CHECK(round_lp_solution(inst, emb, alpha, PivotOrder::explicit_sequence(random_permutation(rng, n))) == truth);
  }
}

TEST_CASE("rounding hand traces") {
  auto tri = make_triangle(2, 0.0);
  SUBCASE("cluster branch") {
    // x_01 = 0, x_12 = 1, x_02 = 1 is feasible; pivot 0 grabs 1.
    LpSolution s{PairTable<double>(3, 1.0), {0, 0, 0}, 0, 0};
    s.x(0, 1) = 0.0;
    auto c = round_lp_solution(tri, s, 0.4, PivotOrder::explicit_sequence({0, 1, 2}), {.check_feasibility = true});
    CHECK(c.clusters() == std::vector<std::vector<Vertex>>{{0, 1}, {2}});
    CHECK(clustering_cost(tri, c).total == 1.0);
  }
  SUBCASE("singleton branch") {
    LpSolution s{PairTable<double>(3, 0.0), {0, 0, 0}, 0, 0};
    s.x(0, 1) = 0.35;
    s.x(0, 2) = 0.35;
    s.x(1, 2) = 0.0;
    // T = {1, 2}, sum 0.7 >= 0.4 * 2 / 2: vertex 0 leaves alone, then {1, 2}.
    auto c = round_lp_solution(tri, s, 0.4, PivotOrder::lowest_id());
    CHECK(c.clusters() == std::vector<std::vector<Vertex>>{{0}, {1, 2}});
    CHECK(c.cluster_of(0) == 0);
  }
  SUBCASE("threshold comparisons are inclusive") {
    LpSolution s{PairTable<double>(3, 1.0), {0, 0, 0}, 0, 0};
    s.x(0, 1) = 0.25;  // exactly alpha: joins T; sum 0.25 >= 0.25 / 2 -> singleton
    auto c = round_lp_solution(tri, s, 0.25, PivotOrder::lowest_id());
    CHECK(c.num_clusters() == 3);
    s.x(0, 1) = 0.125;  // sum equals alpha |T| / 2 exactly -> still singleton
    CHECK(round_lp_solution(tri, s, 0.25, PivotOrder::lowest_id()).num_clusters() == 3);
    s.x(0, 1) = 0.0625;
    CHECK(round_lp_solution(tri, s, 0.25, PivotOrder::lowest_id()).num_clusters() == 2);
  }
  SUBCASE("errors") {
    LpSolution s{PairTable<double>(3, 1.0), {0, 0, 0}, 0, 0};
    CHECK_THROWS_AS(round_lp_solution(tri, s, 0.0, PivotOrder::lowest_id()), InvalidArgument);
    CHECK_THROWS_AS(round_lp_solution(tri, s, 0.51, PivotOrder::lowest_id()), InvalidArgument);
    CHECK_THROWS_AS(round_lp_solution(tri, s, 0.4, PivotOrder::explicit_sequence({0, 0, 1})), InvalidArgument);
    s.x(0, 1) = 0.1;
    s.x(1, 2) = 0.1;
    CHECK_THROWS_AS(round_lp_solution(tri, s, 0.4, PivotOrder::lowest_id(), {.check_feasibility = true}),
                    InvalidArgument);
  }
}

TEST_CASE("rounding output is a partition with nonempty clusters") {
  Engine rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    int n = uniform_int(rng, 1, 7);
    auto inst = random_weighted_instance(rng, n, Tau::finite(2.0), std::vector<double>(static_cast<std::size_t>(n), 1.0), 1);
    auto sol = solve(build_lp(inst));
    auto c = round_lp_solution(inst, sol, uniform(rng, 0.05, 0.5), PivotOrder::seeded(rng()));
    CHECK(c.n() == n);
    for (int size : c.cluster_sizes()) CHECK(size > 0);
  }
}

TEST_CASE("rcost_lower_bound examples") {
  PairTable<EdgeWeight> w(3);
  w(0, 1) = {1, 0};
  w(0, 2) = {1, 0};
  w(1, 2) = {1, 0};
  WeightedInstance inst(w, {0, 0, 0}, 2, Tau::finite(1.0));
  PairTable<double> x(3, 0.0);
  // u = 0, v = 1, z = 2.
  x(0, 1) = 0.1;
  x(0, 2) = 0.5;
  x(1, 2) = 0.45;
  const Vertex R[] = {1};
  CHECK(rcost_lower_bound(inst, x, 0, 2, R, 0.4, 0.4) == doctest::Approx(0.3));
  CHECK(rcost_lower_bound(inst, x, 0, 2, {}, 0.4, 0.4) == 0.0);

  PairTable<EdgeWeight> neg(3, EdgeWeight{0, 1});
  WeightedInstance negative(neg, {0, 0, 0}, 2, Tau::finite(1.0));
  PairTable<double> zero(3, 0.0);
  CHECK(rcost_lower_bound(negative, zero, 0, 2, R, 0.0, 0.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(rcost_lower_bound(inst, x, 0, 2, R, 0.05, 0.4), InvalidArgument);  // x_01 > zeta
  CHECK_THROWS_AS(rcost_lower_bound(inst, x, 0, 2, R, 0.4, 0.1), InvalidArgument);   // average too large
  const Vertex with_z[] = {1, 2};
  CHECK_THROWS_AS(rcost_lower_bound(inst, x, 0, 2, with_z, 0.6, 0.4), InvalidArgument);
  CHECK_THROWS_AS(rcost_lower_bound(inst, x, 0, 2, R, 1.5, 0.4), InvalidArgument);
}
