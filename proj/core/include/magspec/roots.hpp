#pragma once

#include <functional>

namespace magspec {

struct RootResult {
  double root = 0.0;
  double lo = 0.0;  // final bracket
  double hi = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Hybrid bisection / secant / inverse-quadratic root finder on a bracket
/// where f(lo) and f(hi) have opposite signs. Stops once the bracket is
/// narrower than 2 * x_tol or max_iter steps were taken.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double f_lo, double f_hi, double x_tol, int max_iter = 200);

}  // namespace magspec
