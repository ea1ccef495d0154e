#include "corrclust/alpha.hpp"

#include <cmath>
#include <string>

namespace corrclust {
namespace {

// alpha / (2 tau), with the infinite-tau limit taken exactly.
double tau_term(const Tau& tau, double alpha) { return tau.is_infinite() ? 0.0 : alpha / (2.0 * tau.value()); }

void check_alpha(double mu_star, double alpha) {
  if (!(mu_star >= 0.0) || !std::isfinite(mu_star))
    throw AlphaDomainError("mu* must be finite and nonnegative");
  if (alpha == 0.5 && mu_star == 0.0) return;
  if (!(alpha > 0.0 && alpha < 0.5))
    throw AlphaDomainError("alpha must lie in (0, 1/2) (1/2 only when mu* = 0), got " + std::to_string(alpha));
}

}  // namespace

double AlphaPlan::gamma() const { return tau.is_infinite() ? alpha : alpha - alpha / (4.0 * tau.value()); }

double c_alpha(const Tau& tau, double mu_star, double alpha) {
  check_alpha(mu_star, alpha);
  double middle = 1.0 / (1.0 - 2.0 * alpha + tau_term(tau, alpha));
  if (mu_star > 0.0) middle += 2.0 * alpha * mu_star / (1.0 - 2.0 * alpha);
  double ratio = std::max(middle, 2.0 / alpha);
  return mu_star > 0.0 ? std::max(mu_star, ratio) : ratio;
}

double alpha_residual(const Tau& tau, double mu_star, double alpha) {
  return 2.0 * alpha * mu_star / (1.0 - 2.0 * alpha) + 1.0 / (1.0 - 2.0 * alpha + tau_term(tau, alpha)) - 2.0 / alpha;
}

AlphaPlan optimal_alpha(const Tau& tau, double mu_star) {
  if (!(mu_star >= 0.0 && mu_star <= 4.0))
    throw AlphaDomainError("automatic alpha needs mu* in [0, 4] (got " + std::to_string(mu_star) +
                           "); above 4 the mu* term dominates c_alpha and no balancing threshold exists. "
                           "Pass an explicit alpha instead.");
  AlphaPlan plan;
  plan.tau = tau;
  plan.mu_star = mu_star;

  if (mu_star == 0.0) {
    // 1 / (1 - 2a + a / (2 tau)) = 2 / a  =>  a = 2 tau / (5 tau - 1), ratio 5 - 1/tau.
    if (tau.is_infinite()) {
      plan.alpha = 0.4;
      plan.c_alpha = 5.0;
    } else {
      plan.alpha = 2.0 * tau.value() / (5.0 * tau.value() - 1.0);
      plan.c_alpha = 5.0 - 1.0 / tau.value();
    }
    return plan;
  }

  if (tau.is_infinite()) {
    // Root of 2 mu a^2 + 5 a - 2 = 0, i.e. (-5 + sqrt(25 + 16 mu)) / (4 mu),
    // written without the cancellation.
    const double root = std::sqrt(25.0 + 16.0 * mu_star);
    plan.alpha = 4.0 / (5.0 + root);
    plan.c_alpha = (5.0 + root) / 2.0;
    return plan;
  }

  double lo = 0.0, hi = 0.5;
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    if (alpha_residual(tau, mu_star, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  plan.alpha = 0.5 * (lo + hi);
  plan.c_alpha = c_alpha(tau, mu_star, plan.alpha);
  return plan;
}

}  // namespace corrclust
