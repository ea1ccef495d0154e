#pragma once

#include "corrclust/instance.hpp"

namespace corrclust {

class AlphaDomainError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Rounding threshold together with the approximation ratio it guarantees.
struct AlphaPlan {
  Tau tau = Tau::infinite();
  double mu_star = 0.0;
  double alpha = 0.0;
  double c_alpha = 0.0;

  /// alpha - alpha / (4 tau); equals alpha when tau is infinite.
  double gamma() const;
};

/// Guaranteed ratio of the region-growing rounding for threshold alpha:
///   max{ mu*, 2 alpha mu* / (1 - 2 alpha) + 1 / (1 - 2 alpha + alpha / (2 tau)), 2 / alpha }.
/// alpha must lie in (0, 1/2); alpha = 1/2 is accepted only when mu* = 0.
/// Throws AlphaDomainError otherwise.
double c_alpha(const Tau& tau, double mu_star, double alpha);

/// 2 alpha mu* / (1 - 2 alpha) + 1 / (1 - 2 alpha + alpha / (2 tau)) - 2 / alpha.
/// Strictly increasing on (0, 1/2) for mu* > 0; its root balances the two
/// dominant terms of c_alpha.
double alpha_residual(const Tau& tau, double mu_star, double alpha);

/// Threshold minimizing c_alpha. Closed forms for mu* = 0 and for infinite
/// tau; bisection to 1e-12 otherwise. Requires mu* in [0, 4]
/// (AlphaDomainError outside it; c_alpha() still works with a manual alpha).
AlphaPlan optimal_alpha(const Tau& tau, double mu_star);

}  // namespace corrclust
