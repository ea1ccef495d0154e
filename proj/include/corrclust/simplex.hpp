#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "corrclust/lp_model.hpp"

namespace corrclust {

/// Pivoting is always Bland's rule (lowest eligible index enters, ratio ties
/// leave by lowest basic index).
struct SimplexConfig {
  long max_iterations = 200000;
  double eps_pivot = 1e-9;
  double eps_feas = 1e-7;
  /// Tableaus with at least this many entries eliminate rows in parallel.
  std::size_t parallel_threshold = std::size_t{1} << 16;

  void validate() const;
};

class SimplexError : public std::runtime_error {
 public:
  enum class Kind { kIterationLimit, kInfeasible, kUnbounded };
  SimplexError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct SimplexResult {
  std::vector<double> values;  // one per LpProblem variable
  double objective = 0.0;      // includes objective_constant
  long iterations = 0;
};

/// Two-phase primal simplex on a dense tableau.
SimplexResult solve_dense(const LpProblem& problem, const SimplexConfig& config = {});

/// Solves an LP produced by build_lp() and maps the values back to x / y.
/// Values are clamped into their bounds; the objective is recomputed from the
/// clamped point.
LpSolution solve(const LpProblem& problem, const SimplexConfig& config = {});

namespace kernels {

/// Row elimination around a pivot: for every row i != pivot_row,
/// row_i -= row_i[pivot_col] * pivot_row_values, restricted to the columns in
/// `nonzero_cols`. The pivot row must already be scaled to 1 at pivot_col.
void eliminate_serial(std::span<double> tableau, std::size_t rows, std::size_t stride, std::size_t pivot_row,
                      std::size_t pivot_col, std::span<const std::size_t> nonzero_cols);

/// OpenMP version of eliminate_serial; rows are independent, so results are
/// bit-identical to the serial kernel.
void eliminate_parallel(std::span<double> tableau, std::size_t rows, std::size_t stride, std::size_t pivot_row,
                        std::size_t pivot_col, std::span<const std::size_t> nonzero_cols);

}  // namespace kernels

}  // namespace corrclust
