#include "corrclust/table1.hpp"

#include <cmath>

namespace corrclust {
namespace {

RatioTableEntry entry(std::string cell, Tau tau, double mu_star) {
  AlphaPlan plan = optimal_alpha(tau, mu_star);
  RatioTableEntry e;
  e.cell = std::move(cell);
  e.tau = tau;
  e.mu_star = mu_star;
  e.alpha = plan.alpha;
  e.ratio = plan.c_alpha;
  e.method = (mu_star == 0.0 || tau.is_infinite()) ? "closed-form" : "bisection";
  if (mu_star == 0.0)
    e.reference = tau.is_infinite() ? 5.0 : 5.0 - 1.0 / tau.value();
  else if (tau.is_infinite())
    e.reference = 8.0 * mu_star / (-5.0 + std::sqrt(25.0 + 16.0 * mu_star));
  return e;
}

}  // namespace

std::vector<RatioTableEntry> ratio_table() {
  const Tau one = Tau::finite(1.0), two = Tau::finite(2.0), inf = Tau::infinite();
  std::vector<RatioTableEntry> out;
  out.push_back(entry("tau=1,mu*=0", one, 0.0));
  for (double t : {1.0, 2.0, 4.0}) out.push_back(entry("tau,mu*=0", Tau::finite(t), 0.0));
  out.push_back(entry("tau=INF,mu*=0", inf, 0.0));
  for (int k = 1; k <= 20; ++k) out.push_back(entry("tau=INF,mu*<2", inf, 2.0 * k / 21.0));
  for (double m : {0.5, 1.0, 1.5}) out.push_back(entry("tau=1,mu*<2", one, m));
  for (double m : {0.5, 1.0, 1.5}) out.push_back(entry("tau,mu*<2", two, m));
  out.push_back(entry("tau=1,mu*=2", one, 2.0));
  out.push_back(entry("tau,mu*=2", two, 2.0));
  out.push_back(entry("tau=INF,mu*=2", inf, 2.0));
  return out;
}

}  // namespace corrclust
