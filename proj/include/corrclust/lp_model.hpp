#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "corrclust/instance.hpp"

namespace corrclust {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

/// minimize objective . v + objective_constant subject to rows and bounds.
/// Generic enough for hand-written test problems; build_lp() additionally
/// fills the pair/vertex index maps.
struct LpProblem {
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  int num_vars = 0;
  std::vector<double> objective;
  double objective_constant = 0.0;
  std::vector<LpRow> rows;
  std::vector<double> lower;
  std::vector<double> upper;  // kInfinity when unbounded above

  // Correlation-clustering layout; empty for generic problems.
  int n = 0;
  PairTable<int> x_index;
  std::vector<int> y_index;
  std::size_t num_triangle_rows = 0;
  std::size_t num_size_rows = 0;

  int add_var(double cost, double lo = 0.0, double hi = kInfinity);
  void add_row(std::vector<std::pair<int, double>> coeffs, Relation rel, double rhs);
};

struct LpSolution {
  PairTable<double> x;    // x_uv: 0 = same cluster, 1 = separated
  std::vector<double> y;  // per-vertex overflow beyond K
  double objective = 0.0;
  long iterations = 0;
};

/// Materializes the full LP: 3 triangle rows per triple (one per middle
/// vertex), one size row per vertex, x in [0,1], y >= 0. Throws
/// InvalidArgument if the instance fails validate_weighted().
LpProblem build_lp(const WeightedInstance& instance);

/// sum_e (w+ x_e + w- (1 - x_e)) + sum_v mu_v y_v
double lp_objective(const WeightedInstance& instance, const PairTable<double>& x, const std::vector<double>& y);

inline double lp_cost_of_edge(const WeightedInstance& instance, const LpSolution& solution, Vertex u, Vertex v) {
  const EdgeWeight& w = instance.weight(u, v);
  double xe = solution.x(u, v);
  return w.plus * xe + w.minus * (1.0 - xe);
}

struct FeasibilityReport {
  bool feasible = true;
  double max_violation = 0.0;
  std::vector<std::string> violations;  // capped at a handful of entries
};

inline constexpr double kDefaultFeasibilityEps = 1e-7;

FeasibilityReport check_feasible(const WeightedInstance& instance, const LpSolution& solution,
                                 double eps = kDefaultFeasibilityEps);

/// x_uv = 0 iff u, v share a cluster; y_u = max(0, |C(u)| - 1 - K).
LpSolution integer_solution_from_clustering(const WeightedInstance& instance, const Clustering& clustering);

/// Smallest feasible y for the given x: y_u = max(0, sum_{v != u}(1 - x_uv) - K).
std::vector<double> minimal_overflow(const WeightedInstance& instance, const PairTable<double>& x);

/// Plain-text dump, one row per line, variables named x_u_v / y_u.
void write_lp(std::ostream& out, const LpProblem& problem);

}  // namespace corrclust
