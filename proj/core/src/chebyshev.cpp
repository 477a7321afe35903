#include "magspec/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace magspec {

ChebyshevSeries::ChebyshevSeries(double lo, double hi, std::vector<double> coeffs)
    : lo_(lo), hi_(hi), coeffs_(std::move(coeffs)) {}

std::vector<double> ChebyshevSeries::lobatto_points(double lo, double hi, int degree) {
  std::vector<double> x(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    const double t = std::cos(std::numbers::pi * k / degree);
    x[static_cast<std::size_t>(k)] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
  }
  return x;
}

ChebyshevSeries ChebyshevSeries::from_lobatto_values(double lo, double hi,
                                                     const std::vector<double>& values) {
  const int n = static_cast<int>(values.size()) - 1;
  std::vector<double> c(values.size(), 0.0);
  for (int j = 0; j <= n; ++j) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      double term = values[static_cast<std::size_t>(k)] *
                    std::cos(std::numbers::pi * static_cast<double>(j) * k / n);
      if (k == 0 || k == n) term *= 0.5;
      sum += term;
    }
    double cj = 2.0 * sum / n;
    if (j == 0 || j == n) cj *= 0.5;
    c[static_cast<std::size_t>(j)] = cj;
  }
  return {lo, hi, std::move(c)};
}

double ChebyshevSeries::operator()(double x) const {
  if (coeffs_.empty()) return 0.0;
  const double t = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    const double b0 = coeffs_[k] + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + t * b1 - b2;
}

ChebyshevSeries ChebyshevSeries::derivative() const {
  const std::size_t n = coeffs_.size();
  if (n <= 1) return {lo_, hi_, {0.0}};
  std::vector<double> d(n + 1, 0.0);
  for (std::size_t k = n - 1; k >= 1; --k) {
    d[k - 1] = d[k + 1] + 2.0 * static_cast<double>(k) * coeffs_[k];
  }
  d[0] *= 0.5;
  d.resize(n - 1);
  const double scale = 2.0 / (hi_ - lo_);
  for (auto& v : d) v *= scale;
  return {lo_, hi_, std::move(d)};
}

ChebyshevSeries ChebyshevSeries::antiderivative() const {
  const std::size_t n = coeffs_.size();
  std::vector<double> a(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double c = coeffs_[j];
    if (j == 0) {
      a[1] += c;
    } else if (j == 1) {
      a[2] += 0.25 * c;
      a[0] += 0.25 * c;
    } else {
      a[j + 1] += c / (2.0 * static_cast<double>(j + 1));
      a[j - 1] -= c / (2.0 * static_cast<double>(j - 1));
    }
  }
  const double scale = 0.5 * (hi_ - lo_);
  for (auto& v : a) v *= scale;
  double at_lo = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) at_lo += (j % 2 == 0 ? a[j] : -a[j]);
  a[0] -= at_lo;
  return {lo_, hi_, std::move(a)};
}

double ChebyshevSeries::relative_tail() const {
  if (coeffs_.size() < 3) return 1.0;
  double peak = 0.0;
  for (double c : coeffs_) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return 0.0;
  const std::size_t n = coeffs_.size();
  return (std::abs(coeffs_[n - 1]) + std::abs(coeffs_[n - 2])) / peak;
}

}  // namespace magspec
