#include "corrclust/lp_model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace corrclust {

int LpProblem::add_var(double cost, double lo, double hi) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  return num_vars++;
}

void LpProblem::add_row(std::vector<std::pair<int, double>> coeffs, Relation rel, double rhs) {
  rows.push_back(LpRow{std::move(coeffs), rel, rhs});
}

LpProblem build_lp(const WeightedInstance& instance) {
  auto report = validate_weighted(instance);
  if (!report.ok()) throw InvalidArgument("instance violates weight assumptions: " + report.summary());

  const int n = instance.n();
  LpProblem lp;
  lp.n = n;
  lp.x_index = PairTable<int>(n, -1);
  // w+ x + w- (1 - x) = w- + (w+ - w-) x; the w- sum goes into the constant.
  for_each_pair(n, [&](Vertex u, Vertex v) {
    const EdgeWeight& w = instance.weight(u, v);
    lp.x_index(u, v) = lp.add_var(w.plus - w.minus, 0.0, 1.0);
    lp.objective_constant += w.minus;
  });
  for (Vertex v = 0; v < n; ++v) lp.y_index.push_back(lp.add_var(instance.mu(v), 0.0, LpProblem::kInfinity));

  // x_ab <= x_az + x_zb for every triple and each choice of middle vertex z.
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const Vertex tri[3] = {a, b, c};
        for (int mid = 0; mid < 3; ++mid) {
          Vertex z = tri[mid], u = tri[(mid + 1) % 3], v = tri[(mid + 2) % 3];
          lp.add_row({{lp.x_index(u, v), 1.0}, {lp.x_index(u, z), -1.0}, {lp.x_index(z, v), -1.0}},
                     Relation::kLessEqual, 0.0);
        }
      }
  lp.num_triangle_rows = lp.rows.size();

  // sum_{v != u} (1 - x_uv) <= K + y_u  <=>  -sum x_uv - y_u <= K - (n - 1)
  for (Vertex u = 0; u < n; ++u) {
    std::vector<std::pair<int, double>> coeffs;
    for (Vertex v = 0; v < n; ++v)
      if (v != u) coeffs.emplace_back(lp.x_index(u, v), -1.0);
    coeffs.emplace_back(lp.y_index[static_cast<std::size_t>(u)], -1.0);
    lp.add_row(std::move(coeffs), Relation::kLessEqual,
               static_cast<double>(instance.K()) - static_cast<double>(n - 1));
  }
  lp.num_size_rows = static_cast<std::size_t>(n);
  return lp;
}

double lp_objective(const WeightedInstance& instance, const PairTable<double>& x, const std::vector<double>& y) {
  double total = 0.0;
  for_each_pair(instance.n(), [&](Vertex u, Vertex v) {
    const EdgeWeight& w = instance.weight(u, v);
    total += w.plus * x(u, v) + w.minus * (1.0 - x(u, v));
  });
  for (Vertex v = 0; v < instance.n(); ++v) total += instance.mu(v) * y[static_cast<std::size_t>(v)];
  return total;
}

FeasibilityReport check_feasible(const WeightedInstance& instance, const LpSolution& solution, double eps) {
  FeasibilityReport report;
  const int n = instance.n();
  auto note = [&](double amount, auto&& describe) {
    report.max_violation = std::max(report.max_violation, amount);
    if (amount > eps) {
      report.feasible = false;
      if (report.violations.size() < 8) report.violations.push_back(describe());
    }
  };
  if (solution.x.n() != n || solution.y.size() != static_cast<std::size_t>(n)) {
    report.feasible = false;
    report.violations.push_back("solution dimensions do not match instance");
    return report;
  }
  for_each_pair(n, [&](Vertex u, Vertex v) {
    double xe = solution.x(u, v);
    note(std::max(-xe, xe - 1.0), [&] {
      return "bound 0 <= x_" + std::to_string(u) + "_" + std::to_string(v) + " <= 1";
    });
  });
  for (Vertex v = 0; v < n; ++v)
    note(-solution.y[static_cast<std::size_t>(v)], [&] { return "bound y_" + std::to_string(v) + " >= 0"; });

  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const Vertex tri[3] = {a, b, c};
        for (int mid = 0; mid < 3; ++mid) {
          Vertex z = tri[mid], u = tri[(mid + 1) % 3], v = tri[(mid + 2) % 3];
          double excess = solution.x(u, v) - solution.x(u, z) - solution.x(z, v);
          note(excess, [&] {
            std::ostringstream os;
            os << "triangle x_" << u << "_" << v << " <= x_" << u << "_" << z << " + x_" << z << "_" << v
               << " (excess " << excess << ")";
            return os.str();
          });
        }
      }

  for (Vertex u = 0; u < n; ++u) {
    double together = 0.0;
    for (Vertex v = 0; v < n; ++v)
      if (v != u) together += 1.0 - solution.x(u, v);
    double excess = together - static_cast<double>(instance.K()) - solution.y[static_cast<std::size_t>(u)];
    note(excess, [&] { return "size row at vertex " + std::to_string(u); });
  }
  return report;
}

LpSolution integer_solution_from_clustering(const WeightedInstance& instance, const Clustering& clustering) {
  if (clustering.n() != instance.n()) throw InvalidArgument("clustering does not cover the instance");
  const int n = instance.n();
  LpSolution sol;
  sol.x = PairTable<double>(n, 1.0);
  for_each_pair(n, [&](Vertex u, Vertex v) {
    if (clustering.same_cluster(u, v)) sol.x(u, v) = 0.0;
  });
  auto sizes = clustering.cluster_sizes();
  sol.y.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto over = static_cast<std::int64_t>(sizes[static_cast<std::size_t>(clustering.cluster_of(v))]) - 1 - instance.K();
    sol.y[static_cast<std::size_t>(v)] = static_cast<double>(std::max<std::int64_t>(0, over));
  }
  sol.objective = lp_objective(instance, sol.x, sol.y);
  return sol;
}

std::vector<double> minimal_overflow(const WeightedInstance& instance, const PairTable<double>& x) {
  const int n = instance.n();
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  for (Vertex u = 0; u < n; ++u) {
    double together = 0.0;
    for (Vertex v = 0; v < n; ++v)
      if (v != u) together += 1.0 - x(u, v);
    y[static_cast<std::size_t>(u)] = std::max(0.0, together - static_cast<double>(instance.K()));
  }
  return y;
}

namespace {

std::string var_name(const LpProblem& lp, int var) {
  if (lp.n > 0) {
    for (Vertex u = 0; u < lp.n; ++u)
      if (lp.y_index[static_cast<std::size_t>(u)] == var) return "y_" + std::to_string(u);
    for (Vertex u = 0; u < lp.n; ++u)
      for (Vertex v = u + 1; v < lp.n; ++v)
        if (lp.x_index(u, v) == var) return "x_" + std::to_string(u) + "_" + std::to_string(v);
  }
  return "v" + std::to_string(var);
}

}  // namespace

void write_lp(std::ostream& out, const LpProblem& problem) {
  std::vector<std::string> names;
  for (int j = 0; j < problem.num_vars; ++j) names.push_back(var_name(problem, j));
  auto old_precision = out.precision(17);
  out << "minimize";
  for (int j = 0; j < problem.num_vars; ++j)
    if (problem.objective[static_cast<std::size_t>(j)] != 0.0)
      out << ' ' << problem.objective[static_cast<std::size_t>(j)] << ' ' << names[static_cast<std::size_t>(j)];
  out << " + " << problem.objective_constant << "\n";
  for (const LpRow& row : problem.rows) {
    out << "row";
    for (auto [j, a] : row.coeffs) out << ' ' << a << ' ' << names[static_cast<std::size_t>(j)];
    out << (row.relation == Relation::kLessEqual ? " <= " : row.relation == Relation::kGreaterEqual ? " >= " : " = ")
        << row.rhs << "\n";
  }
  for (int j = 0; j < problem.num_vars; ++j) {
    out << "bound " << names[static_cast<std::size_t>(j)] << ' ' << problem.lower[static_cast<std::size_t>(j)] << ' ';
    if (std::isinf(problem.upper[static_cast<std::size_t>(j)]))
      out << "INF";
    else
      out << problem.upper[static_cast<std::size_t>(j)];
    out << "\n";
  }
  out.precision(old_precision);
}

}  // namespace corrclust
