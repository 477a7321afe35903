#pragma once

#include <array>
#include <cmath>

#include "magspec/fibre.hpp"

// Field strength at which the gap b - lambda_1^(m)(b) closes, extrapolated
// from three brackets just below b = 2m by the interpolating quadratic.
inline double extrapolated_landau_crossing(int m) {
  const std::array<double, 3> d = {0.02, 0.01, 0.005};
  std::array<double, 3> b{}, g{};
  for (std::size_t i = 0; i < 3; ++i) {
    b[i] = 2.0 * m - d[i];
    g[i] = b[i] - magspec::fibre::solve_band(m, b[i]);
  }
  auto q = [&](double x) {
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      double l = 1.0;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) l *= (x - b[j]) / (b[i] - b[j]);
      }
      s += g[i] * l;
    }
    return s;
  };
  double x = b[2] - g[2] * (b[2] - b[1]) / (g[2] - g[1]);
  for (int it = 0; it < 30; ++it) {
    const double h = 1e-7;
    const double step = q(x) / ((q(x + h) - q(x - h)) / (2 * h));
    x -= step;
    if (std::abs(step) < 1e-14) break;
  }
  return x;
}
