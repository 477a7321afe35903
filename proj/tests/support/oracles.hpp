#pragma once

// Reference computations that share no code with the library: Boost's
// hypergeometric and quadrature routines, long double arithmetic, and plain
// finite differences.

#include <cmath>
#include <functional>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

namespace oracle {

inline long double kummer_m(long double a, long double c, long double z) {
  return boost::math::hypergeometric_1F1(a, c, z);
}

// Connection formula
//   U = G(1-c)/G(a-c+1) M(a,c,z) + G(c-1)/G(a) z^{1-c} M(a-c+1,2-c,z),
// singular at integer c; there the symmetric average over c +- d removes the
// O(d) error, and Richardson over d, 2d removes the O(d^2) one.
inline long double rgamma(long double x) {
  if (x <= 0 && x == std::round(x)) return 0.0L;
  return 1.0L / boost::math::tgamma(x);
}

inline long double tricomi_u_direct(long double a, long double c, long double z) {
  using boost::math::tgamma;
  const long double t1 = tgamma(1.0L - c) * rgamma(a - c + 1.0L) * kummer_m(a, c, z);
  const long double t2 =
      tgamma(c - 1.0L) * rgamma(a) * std::pow(z, 1.0L - c) * kummer_m(a - c + 1.0L, 2.0L - c, z);
  return t1 + t2;
}

inline double tricomi_u(double a, double c, double z, double delta = 1e-3) {
  const long double cl = c;
  if (std::abs(c - std::round(c)) > 0.05) return static_cast<double>(tricomi_u_direct(a, cl, z));
  auto sym = [&](long double d) {
    return 0.5L * (tricomi_u_direct(a, cl + d, z) + tricomi_u_direct(a, cl - d, z));
  };
  const long double s1 = sym(delta);
  const long double s2 = sym(2.0L * delta);
  return static_cast<double>((4.0L * s1 - s2) / 3.0L);
}

inline double whittaker_w(double kappa, double mu, double z) {
  const double a = mu - kappa + 0.5;
  return std::exp(-z / 2) * std::pow(z, mu + 0.5) * tricomi_u(a, 1.0 + 2.0 * mu, z);
}

inline double whittaker_m(double kappa, double mu, double z) {
  const long double a = mu - kappa + 0.5;
  return static_cast<double>(std::exp(-z / 2.0L) * std::pow(static_cast<long double>(z), mu + 0.5L) *
                             kummer_m(a, 1.0L + 2.0L * mu, z));
}

// Fourth-order central difference.
inline double derivative(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

inline double second_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}

// int_0^{2pi} int_{rho(theta)}^inf g(r) r dr dtheta by nested adaptive
// quadrature (Gauss-Kronrod outside, exp-sinh inside).
inline double exterior_integral(const std::function<double(double)>& rho,
                                const std::function<double(double)>& g) {
  boost::math::quadrature::exp_sinh<double> inner;
  auto radial = [&](double theta) {
    const double r0 = rho(theta);
    return inner.integrate([&](double t) { return g(r0 + t) * (r0 + t); }, 1e-13);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(radial, 0.0,
                                                                       2.0 * M_PI, 12, 1e-12);
}

}  // namespace oracle
