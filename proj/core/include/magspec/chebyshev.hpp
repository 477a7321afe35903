#pragma once

#include <vector>

namespace magspec {

/// Finite Chebyshev expansion sum_j c_j T_j(x) on [lo, hi].
class ChebyshevSeries {
 public:
  ChebyshevSeries() = default;
  ChebyshevSeries(double lo, double hi, std::vector<double> coeffs);

  /// Lobatto points cos(pi k / degree), k = 0..degree, mapped to [lo, hi].
  static std::vector<double> lobatto_points(double lo, double hi, int degree);

  /// Interpolant through values sampled at lobatto_points(lo, hi, degree).
  static ChebyshevSeries from_lobatto_values(double lo, double hi,
                                             const std::vector<double>& values);

  double operator()(double x) const;
  ChebyshevSeries derivative() const;
  /// Antiderivative vanishing at lo.
  ChebyshevSeries antiderivative() const;

  double lower() const { return lo_; }
  double upper() const { return hi_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// Size of the last two coefficients relative to the largest one.
  double relative_tail() const;

 private:
  double lo_ = -1.0;
  double hi_ = 1.0;
  std::vector<double> coeffs_;
};

}  // namespace magspec
