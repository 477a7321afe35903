#include "magspec/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace magspec::quad {
namespace {

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;  // integral of |f|, used for the round-off floor
};

bool operator<(const Segment& lhs, const Segment& rhs) {
  return lhs.error < rhs.error;
}

// One 21-point Kronrod rule with the embedded 10-point Gauss rule; error
// estimate scaled as in QUADPACK's qk21.
Segment kronrod21(const Integrand& f, double a, double b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& xk = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 21> fv{};
  fv[0] = f(center);
  double res_k = fv[0] * wk[0];
  double res_g = 0.0;
  double res_abs = std::abs(res_k);
  for (std::size_t j = 1; j < xk.size(); ++j) {
    const double dx = half * xk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[2 * j - 1] = f1;
    fv[2 * j] = f2;
    res_k += wk[j] * (f1 + f2);
    res_abs += wk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) res_g += wg[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * res_k;
  double res_asc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t j = 1; j < xk.size(); ++j) {
    res_asc += wk[j] * (std::abs(fv[2 * j - 1] - mean) + std::abs(fv[2 * j] - mean));
  }

  const double scale = std::abs(half);
  const double value = res_k * half;
  res_abs *= scale;
  res_asc *= scale;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  if (!std::isfinite(value)) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err, res_abs};
}

}  // namespace

Result integrate(const Integrand& f, std::span<const double> breakpoints,
                 const Options& opts) {
  Result result;
  if (breakpoints.size() < 2) return result;

  std::vector<Segment> heap;
  heap.reserve(static_cast<std::size_t>(opts.max_intervals) + 2);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] == breakpoints[i]) continue;
    heap.push_back(kronrod21(f, breakpoints[i], breakpoints[i + 1]));
    result.evaluations += 21;
  }
  std::make_heap(heap.begin(), heap.end());

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (;;) {
    long double total = 0.0L;
    long double total_err = 0.0L;
    long double total_abs = 0.0L;
    for (const auto& s : heap) {
      total += s.value;
      total_err += s.error;
      total_abs += s.abs_value;
    }
    result.value = static_cast<double>(total);
    result.error = static_cast<double>(total_err);

    const double target = std::max({opts.abs_tol, opts.rel_tol * std::abs(result.value),
                                    100.0 * eps * static_cast<double>(total_abs)});
    if (result.error <= target) {
      result.converged = true;
      return result;
    }
    if (!std::isfinite(result.value) || static_cast<int>(heap.size()) >= opts.max_intervals) {
      return result;
    }

    std::pop_heap(heap.begin(), heap.end());
    const Segment worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      // Interval cannot be split further in double precision.
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end());
      return result;
    }
    heap.push_back(kronrod21(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(kronrod21(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end());
    result.evaluations += 42;
  }
}

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
  const double points[] = {a, b};
  return integrate(f, std::span<const double>(points), opts);
}

Result integrate_to_infinity(const Integrand& f, double a, double scale,
                             const Options& opts) {
  const auto mapped = [&](double u) {
    const double one_minus = 1.0 - u;
    const double t = a + scale * u / one_minus;
    if (!std::isfinite(t)) return 0.0;
    return f(t) * scale / (one_minus * one_minus);
  };
  const double points[] = {0.0, 0.5, 0.75, 0.875, 0.9375, 1.0};
  return integrate(mapped, std::span<const double>(points), opts);
}

}  // namespace magspec::quad
