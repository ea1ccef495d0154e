#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corrclust/alpha.hpp"

namespace corrclust {

/// One sampled entry of the ratio table for special (tau, mu*) regimes.
struct RatioTableEntry {
  std::string cell;     // regime label, e.g. "tau=INF,mu*=2"
  Tau tau = Tau::infinite();
  double mu_star = 0.0;
  double alpha = 0.0;
  double ratio = 0.0;   // c_alpha at the optimal alpha
  std::string method;   // "closed-form" or "bisection"
  /// Independent closed-form value where one exists (5 - 1/tau, or
  /// 8 mu* / (-5 + sqrt(25 + 16 mu*)) for infinite tau).
  std::optional<double> reference;
};

/// Samples every regime: mu* = 0 at tau in {1, 2, 4, INF}; mu* in (0, 2) on a
/// 20-point grid at tau = INF plus bisection samples at tau = 1 and tau = 2;
/// mu* = 2 at tau in {1, 2, INF}.
std::vector<RatioTableEntry> ratio_table();

}  // namespace corrclust
