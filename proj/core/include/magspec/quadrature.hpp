#pragma once

#include <functional>
#include <span>

namespace magspec::quad {

struct Options {
  double abs_tol = 0.0;
  double rel_tol = 1e-13;
  int max_intervals = 4000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod integration on [a, b]. The
/// interval with the largest error estimate is bisected until the summed
/// estimate meets max(abs_tol, rel_tol * |value|) or round-off dominates.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Same, seeded with an initial partition at `breakpoints` (sorted, >= 2).
Result integrate(const Integrand& f, std::span<const double> breakpoints,
                 const Options& opts = {});

/// Integral over [a, inf) through t = a + scale * u / (1 - u), u in [0, 1).
/// `scale` should be the length over which f decays.
Result integrate_to_infinity(const Integrand& f, double a, double scale,
                             const Options& opts = {});

}  // namespace magspec::quad
