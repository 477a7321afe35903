#pragma once

#include <span>
#include <string>
#include <vector>

namespace magspec::fibre {

enum class Side { Interior, Exterior };

struct FibreProblem {
  int m;
  double b;
  Side side = Side::Exterior;
};

/// Lambda = (m b + lambda) / (2 b), the first Whittaker parameter.
double landau_parameter(int m, double b, double lambda);

struct SecularPoint {
  double lambda;
  double Lambda;
  double residual;
  double recurrence_cancellation = 1.0;  // exterior Neumann only
  bool cancellation_flag = false;        // more than 6 digits lost
};

/// Exterior Neumann condition u'(1) = 0 for u = W(Lambda, m/2, b r^2/2)/r,
/// 0 < lambda < b. The residual is
///   (lambda/b + m + 1 - b/2) W(Lambda) + 2 W(Lambda + 1)
/// divided by W(Lambda) > 0, so it is dimensionless; the sign and the
/// zeros are those of the unscaled expression.
SecularPoint secular_exterior_neumann_point(const FibreProblem& p, double lambda);
double secular_exterior_neumann(const FibreProblem& p, double lambda);

/// Exterior Dirichlet condition: W(Lambda, m/2, b/2).
double secular_exterior_dirichlet(const FibreProblem& p, double lambda);

/// Interior Neumann condition
///   (b^2 - 2b(m+1) - 2 lambda) M(Lambda) + 2(b + 2bm + lambda) M(Lambda + 1)
/// with the common positive factor e^{-b/4} (b/2)^{(m+1)/2} removed.
double secular_interior_neumann(const FibreProblem& p, double lambda);

struct BandSolution {
  double lambda;
  double bracket_lo;
  double bracket_hi;
  int iterations;
};

/// Lowest Neumann eigenvalue of the fibre operator. Exterior: m >= 1 and
/// b <= 2m; the root lies in (0, b) and equals b at b = 2m. Interior: m >= 0.
BandSolution solve_band_detailed(int m, double b, Side side = Side::Exterior);
double solve_band(int m, double b, Side side = Side::Exterior);

struct BandSample {
  double b;
  double lambda = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool ok = false;
  std::string error;
};

struct BandCurve {
  int m;
  Side side;
  std::vector<BandSample> samples;
};

/// Sweep over an ascending grid; failures are recorded per sample.
BandCurve band_scan(int m, std::span<const double> b_grid, Side side = Side::Exterior);

/// 2m + 1 - sqrt(8m + 1): below it the bands m - 1 and m cannot meet.
double ordering_threshold(int m);

/// (b/2 - m)(b/2 - m + 1), the common value of two meeting bands.
double crossing_formula(int m, double b);

/// Determinant of the linear system for the Neumann data of modes m - 1
/// and m sharing the eigenvalue lambda.
double crossing_determinant(int m, double b, double lambda);

struct Crossing {
  double b_star;
  double lambda_star;
  double formula_value;
  double abs_diff;
  double band_gap;  // |lambda^(m) - lambda^(m-1)| at b_star
};

/// Smallest b in (ordering_threshold(m), 2(m-1)) with
/// lambda^(m-1)(b) = lambda^(m)(b), located by bisection.
Crossing find_crossing(int m);

/// Positive Neumann eigenfunction f(r) = N W(Lambda, m/2, b r^2/2) / r
/// normalised by int_1^inf f^2 r dr = 1, defined for every r > 0.
class RadialEigenfunction {
 public:
  RadialEigenfunction(int m, double b, double lambda);

  struct Value {
    double f;
    double f_prime;
  };

  Value operator()(double r) const;
  double value(double r) const;

  int m() const { return m_; }
  double b() const { return b_; }
  double lambda() const { return lambda_; }
  double normalization() const { return norm_; }
  /// Relative size of the discarded tail of the normalisation integral.
  double tail_estimate() const { return tail_; }
  /// int_1^inf r^2 f^2 r dr, by quadrature on each call.
  double moment_r2() const;

 private:
  double whittaker(double z) const;
  double z_max() const;

  int m_;
  double b_;
  double lambda_;
  double a_;  // Kummer parameter (b - lambda) / (2b)
  double kappa_;
  double mu_;
  double norm_ = 1.0;
  double tail_ = 0.0;
};

/// d lambda / d b = -int_1^inf (m - b r^2/2) f^2 r dr for the normalised
/// eigenfunction.
double feynman_hellmann_slope(int m, double b);

}  // namespace magspec::fibre
