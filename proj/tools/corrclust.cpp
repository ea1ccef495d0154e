#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "corrclust/alpha.hpp"
#include "corrclust/experiment.hpp"
#include "corrclust/instance_io.hpp"
#include "corrclust/lp_model.hpp"
#include "corrclust/pivot.hpp"
#include "corrclust/rounding.hpp"
#include "corrclust/simplex.hpp"
#include "corrclust/table1.hpp"
#include "json.hpp"

using namespace corrclust;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 2, kValidation = 3, kGuard = 4 };

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json tau_json(const Tau& tau) { return tau.is_infinite() ? json("INF") : json(tau.value()); }

double instance_mu_star(const WeightedInstance& inst) { return inst.n() < 2 ? 0.0 : mu_star(inst); }

json digest(const WeightedInstance& inst) {
  return {{"n", inst.n()}, {"K", inst.K()}, {"tau", tau_json(inst.tau())}, {"mu_star", instance_mu_star(inst)}};
}

json cost_json(const CostBreakdown& c) {
  return {{"positive", c.positive_cost}, {"negative", c.negative_cost}, {"penalty", c.penalty_cost}, {"total", c.total}};
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void emit(const json& line) { std::cout << line.dump() << '\n'; }

WeightedInstance load_weighted(const std::string& path) {
  auto inst = load_instance(path);
  auto report = validate_weighted(inst);
  if (!report.ok()) throw ValidationFailure(report.summary());
  return inst;
}

LpSolution solve_instance(const WeightedInstance& inst, std::optional<double> eps, const std::string& dump_path) {
  auto problem = build_lp(inst);
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw std::runtime_error("cannot write " + dump_path);
    write_lp(out, problem);
  }
  SimplexConfig cfg;
  if (eps) cfg.eps_feas = *eps;
  cfg.validate();
  return solve(problem, cfg);
}

int cmd_solve_lp(const std::string& path, std::optional<double> eps, const std::string& dump_path) {
  Stopwatch clock;
  auto inst = load_weighted(path);
  auto sol = solve_instance(inst, eps, dump_path);
  json x = json::array();
  std::size_t fractional = 0;
  for_each_pair(inst.n(), [&](Vertex u, Vertex v) {
    double value = sol.x(u, v);
    if (value > 1e-9 && value < 1 - 1e-9) ++fractional;
    x.push_back({u, v, value});
  });
  emit({{"command", "solve-lp"},
        {"instance", digest(inst)},
        {"lp_objective", sol.objective},
        {"iterations", sol.iterations},
        {"fractional_pairs", fractional},
        {"x", x},
        {"y", sol.y},
        {"wall_ms", clock.ms()}});
  std::cerr << "LP objective " << sol.objective << " after " << sol.iterations << " pivots, " << fractional
            << " fractional pairs\n";
  return kOk;
}

PivotOrder parse_pivot(const std::string& text, json& description) {
  if (text == "lowest") {
    description = "lowest";
    return PivotOrder::lowest_id();
  }
  if (text.rfind("seed:", 0) == 0) {
    std::size_t used = 0;
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(text.substr(5), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - 5) throw InvalidArgument("bad --pivot seed: " + text);
    description = {{"rule", "seeded"}, {"seed", seed}};
    return PivotOrder::seeded(seed);
  }
  throw InvalidArgument("--pivot must be lowest or seed:N, got " + text);
}

int cmd_round(const std::string& path, const std::string& alpha_text, const std::string& pivot_text,
              std::optional<double> eps) {
  Stopwatch clock;
  auto inst = load_weighted(path);
  const double mu = instance_mu_star(inst);
  json pivot_json;
  auto order = parse_pivot(pivot_text, pivot_json);

  AlphaPlan plan;
  if (alpha_text == "auto") {
    if (mu > 4.0)
      throw AlphaDomainError("--alpha auto needs mu* <= 4 (mu* = " + std::to_string(mu) +
                             "); pass an explicit --alpha instead");
    plan = optimal_alpha(inst.tau(), mu);
  } else {
    std::size_t used = 0;
    try {
      plan.alpha = std::stod(alpha_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != alpha_text.size()) throw InvalidArgument("--alpha must be auto or a number");
    plan.tau = inst.tau();
    plan.mu_star = mu;
    plan.c_alpha = c_alpha(inst.tau(), mu, plan.alpha);
  }

  auto sol = solve_instance(inst, eps, "");
  auto clustering = round_lp_solution(inst, sol, plan.alpha, order);
  auto cost = clustering_cost(inst, clustering);
  const double bound = plan.c_alpha * sol.objective + 1e-6;
  const bool within = cost.total <= bound;

  emit({{"command", "round"},
        {"instance", digest(inst)},
        {"algorithm", "lp_round"},
        {"alpha", plan.alpha},
        {"alpha_mode", alpha_text == "auto" ? "auto" : "manual"},
        {"pivot", pivot_json},
        {"clusters", clustering.clusters()},
        {"cost", cost_json(cost)},
        {"lp_objective", sol.objective},
        {"c_alpha", plan.c_alpha},
        {"within_guarantee", within},
        {"wall_ms", clock.ms()}});
  std::cerr << clustering.num_clusters() << " clusters, cost " << cost.total << ", LP " << sol.objective
            << ", alpha " << plan.alpha << ", c_alpha " << plan.c_alpha << '\n';
  if (!within) {
    std::cerr << "error: cost exceeds c_alpha * LP\n";
    return kGuard;
  }
  return kOk;
}

struct PivotFlags {
  std::optional<std::int64_t> bounded;
  std::string removal = "exact";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  int guard_n = kOracleGuardN;
};

int cmd_pivot(const std::string& path, const PivotFlags& flags) {
  Stopwatch clock;
  auto raw = load_instance(path);
  ValidationReport report = validate_unweighted(raw);
  std::erase_if(report.violations, [](const Violation& v) { return v.kind == ConstraintKind::kUnitPenalty; });
  if (!report.ok()) throw ValidationFailure(report.summary());
  if (flags.removal != "exact" && flags.removal != "greedy")
    throw InvalidArgument("--removal must be exact or greedy");
  if (flags.trials == 0) throw InvalidArgument("--trials must be positive");
  if (flags.bounded && *flags.bounded < 0) throw InvalidArgument("--bounded must be non-negative");

  auto graph = SignedGraph::from_instance(raw);
  const std::int64_t K = flags.bounded.value_or(raw.K());
  auto inst = graph.to_instance(K);
  auto spec = AlgorithmSpec::parse(flags.bounded ? "bounded_cc_pivot:" + flags.removal : std::string("cc_pivot"));

  auto stats = empirical_ratio(spec, inst, flags.trials, flags.seed, {.guard_n = flags.guard_n, .opt_cost = std::nullopt});
  for (std::uint64_t i = 0; i < flags.trials; ++i)
    emit({{"command", "pivot"}, {"type", "trial"}, {"trial", i}, {"seed", flags.seed + i},
          {"cost", stats.trial_costs[i]}});

  json summary = {{"command", "pivot"},
                  {"type", "summary"},
                  {"instance", digest(inst)},
                  {"algorithm", stats.algorithm},
                  {"seed", flags.seed},
                  {"trials", stats.trials},
                  {"mean_cost", stats.mean_cost},
                  {"min_cost", stats.min_cost},
                  {"max_cost", stats.max_cost},
                  {"opt_cost", stats.opt_cost},
                  {"mean_ratio", number_or_null(stats.mean_ratio)},
                  {"max_ratio", number_or_null(stats.max_ratio)},
                  {"max_cluster_size", stats.max_cluster_size}};
  if (flags.bounded) {
    summary["K"] = K;
    summary["removal"] = flags.removal;
    summary["removed_edges"] = stats.removed_edges;
    summary["cluster_bound_ok"] = stats.max_cluster_size <= K + 1;
  }
  if (flags.trials == 1) {
    auto order = PivotOrder::seeded(flags.seed);
    Clustering c = flags.bounded ? bounded_cc_pivot(graph, K,
                                                    flags.removal == "exact" ? RemovalMethod::kExact
                                                                             : RemovalMethod::kGreedy,
                                                    order)
                                       .clustering
                                 : cc_pivot(graph, order);
    summary["clusters"] = c.clusters();
  }
  summary["wall_ms"] = clock.ms();
  emit(summary);
  std::cerr << stats.algorithm << ": " << stats.trials << " trials, mean cost " << stats.mean_cost << ", opt "
            << stats.opt_cost << ", max cluster " << stats.max_cluster_size << '\n';
  if (flags.bounded && stats.max_cluster_size > K + 1) {
    std::cerr << "error: cluster larger than K+1\n";
    return kGuard;
  }
  return kOk;
}

int cmd_table1() {
  Stopwatch clock;
  for (const auto& e : ratio_table()) {
    json line = {{"command", "table1"}, {"cell", e.cell},     {"tau", tau_json(e.tau)}, {"mu_star", e.mu_star},
                 {"alpha", e.alpha},    {"ratio", e.ratio},   {"method", e.method}};
    line["reference"] = e.reference ? json(*e.reference) : json(nullptr);
    emit(line);
    std::cerr << e.cell << "  tau=" << e.tau.to_string() << " mu*=" << e.mu_star << "  ratio " << e.ratio << '\n';
  }
  std::cerr << "table computed in " << clock.ms() << " ms\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation clustering with cluster-size bounds"};
  app.require_subcommand(1);

  std::string path, alpha = "auto", pivot = "lowest", dump_path;
  std::optional<double> eps;
  PivotFlags pf;

  auto* solve_cmd = app.add_subcommand("solve-lp", "Solve the LP relaxation");
  solve_cmd->add_option("instance", path, "CORRCLUST 1 instance file")->required();
  solve_cmd->add_option("--eps", eps, "Solver feasibility tolerance");
  solve_cmd->add_option("--dump-lp", dump_path, "Write the LP in text form to this file");

  auto* round_cmd = app.add_subcommand("round", "Solve the LP and round it to a clustering");
  round_cmd->add_option("instance", path, "CORRCLUST 1 instance file")->required();
  round_cmd->add_option("--alpha", alpha, "auto or a threshold in (0, 1/2]");
  round_cmd->add_option("--pivot", pivot, "lowest or seed:N");
  round_cmd->add_option("--eps", eps, "Solver feasibility tolerance");

  auto* pivot_cmd = app.add_subcommand("pivot", "Run pivot algorithms and compare with the exact optimum");
  pivot_cmd->add_option("instance", path, "CORRCLUST 1 instance with (1,0)/(0,1) pairs")->required();
  pivot_cmd->add_option("--bounded", pf.bounded, "Cluster size bound K (clusters of at most K+1)");
  pivot_cmd->add_option("--removal", pf.removal, "exact or greedy degree reduction");
  pivot_cmd->add_option("--seed", pf.seed, "Seed of trial 0; trial i uses seed + i");
  pivot_cmd->add_option("--trials", pf.trials, "Number of trials");
  pivot_cmd->add_option("--guard-n", pf.guard_n, "Largest n the exact oracle accepts");

  auto* table_cmd = app.add_subcommand("table1", "Print approximation ratios for special parameter values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*solve_cmd) return cmd_solve_lp(path, eps, dump_path);
    if (*round_cmd) return cmd_round(path, alpha, pivot, eps);
    if (*pivot_cmd) return cmd_pivot(path, pf);
    if (*table_cmd) return cmd_table1();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationFailure& e) {
    std::cerr << "invalid instance: " << e.what() << '\n';
    return kValidation;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kValidation;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const SimplexError& e) {
    std::cerr << "solver: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGuard;
  }
  return kOk;
}
