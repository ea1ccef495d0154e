#include "corrclust/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace corrclust {

void SimplexConfig::validate() const {
  if (max_iterations <= 0) throw InvalidArgument("max_iterations must be positive");
  if (!(eps_pivot > 0) || !(eps_feas > 0)) throw InvalidArgument("simplex tolerances must be positive");
}

namespace kernels {

void eliminate_serial(std::span<double> tableau, std::size_t rows, std::size_t stride, std::size_t pivot_row,
                      std::size_t pivot_col, std::span<const std::size_t> nonzero_cols) {
  const double* prow = tableau.data() + pivot_row * stride;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == pivot_row) continue;
    double* row = tableau.data() + i * stride;
    const double f = row[pivot_col];
    if (f == 0.0) continue;
    for (std::size_t c : nonzero_cols) row[c] -= f * prow[c];
    row[pivot_col] = 0.0;
  }
}

void eliminate_parallel(std::span<double> tableau, std::size_t rows, std::size_t stride, std::size_t pivot_row,
                        std::size_t pivot_col, std::span<const std::size_t> nonzero_cols) {
  const double* prow = tableau.data() + pivot_row * stride;
  const auto count = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i == pivot_row) continue;
    double* row = tableau.data() + i * stride;
    const double f = row[pivot_col];
    if (f == 0.0) continue;
    for (std::size_t c : nonzero_cols) row[c] -= f * prow[c];
    row[pivot_col] = 0.0;
  }
}

}  // namespace kernels

namespace {

// Standard-form row after shifting variables by their lower bounds and
// flipping signs so that rhs >= 0.
struct StdRow {
  std::vector<std::pair<int, double>> coeffs;
  Relation relation;
  double rhs;
};

class Tableau {
 public:
  Tableau(const LpProblem& lp, const SimplexConfig& config) : config_(config), nv_(static_cast<std::size_t>(lp.num_vars)) {
    std::vector<StdRow> rows;
    double shift_constant = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) {
      double lo = lp.lower[static_cast<std::size_t>(j)];
      if (!std::isfinite(lo)) throw InvalidArgument("simplex requires finite lower bounds");
      shift_constant += lp.objective[static_cast<std::size_t>(j)] * lo;
    }
    for (const LpRow& r : lp.rows) {
      double rhs = r.rhs;
      for (auto [j, a] : r.coeffs) rhs -= a * lp.lower[static_cast<std::size_t>(j)];
      rows.push_back(StdRow{r.coeffs, r.relation, rhs});
    }
    for (int j = 0; j < lp.num_vars; ++j) {
      double hi = lp.upper[static_cast<std::size_t>(j)];
      if (std::isfinite(hi))
        rows.push_back(StdRow{{{j, 1.0}}, Relation::kLessEqual, hi - lp.lower[static_cast<std::size_t>(j)]});
    }
    for (StdRow& r : rows) {
      if (r.rhs < 0) {
        r.rhs = -r.rhs;
        for (auto& c : r.coeffs) c.second = -c.second;
        if (r.relation == Relation::kLessEqual)
          r.relation = Relation::kGreaterEqual;
        else if (r.relation == Relation::kGreaterEqual)
          r.relation = Relation::kLessEqual;
      }
    }

    m_ = rows.size();
    std::size_t slack_count = 0, art_count = 0;
    for (const StdRow& r : rows) {
      if (r.relation != Relation::kEqual) ++slack_count;
      if (r.relation != Relation::kLessEqual) ++art_count;
    }
    art_begin_ = nv_ + slack_count;
    ncols_ = art_begin_ + art_count;
    stride_ = ncols_ + 1;
    data_.assign((m_ + 2) * stride_, 0.0);
    basis_.assign(m_, 0);

    std::size_t next_slack = nv_, next_art = art_begin_;
    for (std::size_t i = 0; i < m_; ++i) {
      const StdRow& r = rows[i];
      for (auto [j, a] : r.coeffs) at(i, static_cast<std::size_t>(j)) += a;
      rhs(i) = r.rhs;
      if (r.relation == Relation::kLessEqual) {
        at(i, next_slack) = 1.0;
        basis_[i] = next_slack++;
      } else {
        if (r.relation == Relation::kGreaterEqual) at(i, next_slack++) = -1.0;
        at(i, next_art) = 1.0;
        basis_[i] = next_art++;
      }
    }

    // Phase-2 objective row: original costs; the constant sits in the rhs
    // cell as -(constant) so that -rhs is always the current objective.
    for (std::size_t j = 0; j < nv_; ++j) at(phase2_row(), j) = lp.objective[j];
    rhs(phase2_row()) = -(lp.objective_constant + shift_constant);

    // Phase-1 objective: sum of artificials, priced out against their rows.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t c = 0; c < stride_; ++c)
        if (c < art_begin_ || c == ncols_) at(phase1_row(), c) -= at(i, c);
    }
  }

  void run() {
    if (art_begin_ < ncols_) {
      optimize(phase1_row(), /*allow_artificial=*/true);
      if (-rhs(phase1_row()) > config_.eps_feas)
        throw SimplexError(SimplexError::Kind::kInfeasible, "LP is infeasible");
      drive_out_artificials();
    }
    optimize(phase2_row(), /*allow_artificial=*/false);
  }

  std::vector<double> values(const LpProblem& lp) const {
    std::vector<double> v(nv_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < nv_) v[basis_[i]] = rhs(i);
    for (std::size_t j = 0; j < nv_; ++j) v[j] += lp.lower[j];
    return v;
  }

  long iterations() const { return iterations_; }

 private:
  double& at(std::size_t i, std::size_t j) { return data_[i * stride_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * stride_ + j]; }
  double& rhs(std::size_t i) { return data_[i * stride_ + ncols_]; }
  double rhs(std::size_t i) const { return data_[i * stride_ + ncols_]; }
  std::size_t phase1_row() const { return m_; }
  std::size_t phase2_row() const { return m_ + 1; }

  void optimize(std::size_t obj_row, bool allow_artificial) {
    const std::size_t limit = allow_artificial ? ncols_ : art_begin_;
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (at(obj_row, j) < -config_.eps_pivot) {
          enter = j;
          break;
        }
      if (enter == limit) return;

      std::size_t leave = m_;
      double best = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        double a = at(i, enter);
        if (a <= config_.eps_pivot) continue;
        double ratio = std::max(rhs(i), 0.0) / a;
        if (leave == m_ || ratio < best - config_.eps_pivot ||
            (ratio <= best + config_.eps_pivot && basis_[i] < basis_[leave])) {
          if (leave == m_ || ratio < best - config_.eps_pivot) best = ratio;
          leave = i;
        }
      }
      if (leave == m_) throw SimplexError(SimplexError::Kind::kUnbounded, "LP is unbounded");
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (std::abs(at(i, j)) > config_.eps_pivot) {
          pivot(i, j);
          break;
        }
      // Otherwise the row is redundant; its artificial stays basic at zero.
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    if (++iterations_ > config_.max_iterations)
      throw SimplexError(SimplexError::Kind::kIterationLimit,
                         "simplex exceeded " + std::to_string(config_.max_iterations) + " iterations");
    double* prow = data_.data() + r * stride_;
    const double inv = 1.0 / prow[q];
    nonzero_.clear();
    for (std::size_t c = 0; c < stride_; ++c) {
      if (prow[c] == 0.0) continue;
      prow[c] *= inv;
      nonzero_.push_back(c);
    }
    prow[q] = 1.0;
    const std::size_t rows = m_ + 2;
    if (rows * stride_ >= config_.parallel_threshold)
      kernels::eliminate_parallel(data_, rows, stride_, r, q, nonzero_);
    else
      kernels::eliminate_serial(data_, rows, stride_, r, q, nonzero_);
    basis_[r] = q;
  }

  const SimplexConfig& config_;
  std::size_t nv_;
  std::size_t m_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t ncols_ = 0;
  std::size_t stride_ = 0;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
  long iterations_ = 0;
};

}  // namespace

SimplexResult solve_dense(const LpProblem& problem, const SimplexConfig& config) {
  config.validate();
  if (problem.objective.size() != static_cast<std::size_t>(problem.num_vars) ||
      problem.lower.size() != problem.objective.size() || problem.upper.size() != problem.objective.size())
    throw InvalidArgument("malformed LpProblem: per-variable vectors have inconsistent sizes");
  for (const LpRow& row : problem.rows)
    for (auto [j, a] : row.coeffs) {
      (void)a;
      if (j < 0 || j >= problem.num_vars) throw InvalidArgument("malformed LpProblem: variable index out of range");
    }

  Tableau tableau(problem, config);
  tableau.run();
  SimplexResult result;
  result.values = tableau.values(problem);
  result.iterations = tableau.iterations();
  result.objective = problem.objective_constant;
  for (std::size_t j = 0; j < result.values.size(); ++j) result.objective += problem.objective[j] * result.values[j];
  return result;
}

LpSolution solve(const LpProblem& problem, const SimplexConfig& config) {
  if (problem.y_index.size() != static_cast<std::size_t>(problem.n) || problem.x_index.n() != problem.n)
    throw InvalidArgument("solve() expects an LpProblem produced by build_lp()");
  SimplexResult raw = solve_dense(problem, config);
  const int n = problem.n;
  LpSolution sol;
  sol.iterations = raw.iterations;
  sol.x = PairTable<double>(n, 0.0);
  for (std::size_t s = 0; s < sol.x.size(); ++s) {
    double v = raw.values[static_cast<std::size_t>(problem.x_index.at_slot(s))];
    sol.x.at_slot(s) = std::clamp(v, 0.0, 1.0);
  }
  sol.y.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    sol.y[static_cast<std::size_t>(v)] = std::max(0.0, raw.values[static_cast<std::size_t>(problem.y_index[static_cast<std::size_t>(v)])]);
  // Objective in the same form as lp_objective(): constant + sum c_j v_j.
  sol.objective = problem.objective_constant;
  for (std::size_t s = 0; s < sol.x.size(); ++s)
    sol.objective += problem.objective[static_cast<std::size_t>(problem.x_index.at_slot(s))] * sol.x.at_slot(s);
  for (Vertex v = 0; v < n; ++v)
    sol.objective += problem.objective[static_cast<std::size_t>(problem.y_index[static_cast<std::size_t>(v)])] *
                     sol.y[static_cast<std::size_t>(v)];
  return sol;
}

}  // namespace corrclust
