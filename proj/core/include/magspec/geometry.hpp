#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "magspec/chebyshev.hpp"
#include "magspec/fibre.hpp"

namespace magspec::geometry {

/// Nodes of the periodic trapezoid rule used for every theta-integral.
inline constexpr int kThetaNodes = 4096;

/// Star-shaped domain {r < rho(theta)} with
/// rho(theta) = a0 + sum_j (a_j cos j theta + b_j sin j theta).
class StarShapedDomain {
 public:
  /// cos_coeffs[j-1] = a_j, sin_coeffs[j-1] = b_j. Throws NonPositiveRadius
  /// when rho is not positive on the theta grid.
  StarShapedDomain(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

  static StarShapedDomain disk(double radius);

  double radius(double theta) const;
  double radius_derivative(double theta) const;

  double a0() const { return a0_; }
  const std::vector<double>& cos_coeffs() const { return cos_; }
  const std::vector<double>& sin_coeffs() const { return sin_; }
  int order() const { return static_cast<int>(cos_.size()); }
  bool is_disk() const;

  /// Domain with profile s * rho.
  StarShapedDomain scaled(double s) const;

  double min_radius() const { return min_; }
  double max_radius() const { return max_; }

  /// rho at theta_k = 2 pi k / kThetaNodes.
  const std::vector<double>& samples() const { return samples_; }

 private:
  double a0_;
  std::vector<double> cos_;
  std::vector<double> sin_;
  std::vector<double> samples_;
  double min_ = 0.0;
  double max_ = 0.0;
};

double area(const StarShapedDomain& d);

/// int over the exterior of |x|^{-p} dx = (1/(p-2)) int rho^{2-p} d theta.
double moment_Ip(const StarShapedDomain& d, double p);

/// Positive m = 1 Neumann eigenfunction of the unit-disk exterior at field
/// b, extended to r > 0, with Chebyshev tables of f, f' and of the radial
/// mass int_1^r f^2 s ds on an interval covering a range of radii.
class TrialProfile {
 public:
  TrialProfile(double b, double r_lo, double r_hi);

  double b() const { return b_; }
  double lambda() const { return lambda_; }
  double f(double r) const;
  double f_prime(double r) const;
  /// r f'(r) f(r).
  double F1(double r) const;
  /// int_r^inf f(s)^2 s ds.
  double tail_mass(double r) const;
  /// Largest relative Chebyshev tail across the tables.
  double table_tail() const { return table_tail_; }

  const fibre::RadialEigenfunction& eigenfunction() const { return *eig_; }

 private:
  bool in_table(double r) const;

  double b_;
  double lambda_;
  std::shared_ptr<const fibre::RadialEigenfunction> eig_;
  ChebyshevSeries f_;
  ChebyshevSeries fp_;
  ChebyshevSeries mass_;  // int_1^r f^2 s ds
  double table_tail_ = 0.0;
};

/// Profile whose tables cover every radius of d.
TrialProfile profile_for(const StarShapedDomain& d, double b);

/// int_0^{2 pi} F_1(rho(theta)) d theta.
double boundary_term(const StarShapedDomain& d, const TrialProfile& f);

/// int over the exterior of |v|^2 for v = f(r) e^{i theta}.
double exterior_norm_sq(const StarShapedDomain& d, const TrialProfile& f);

/// int over the boundary of (nu . A)|v|^2 d sigma with A = (-x2, x1)/2.
double magnetic_boundary_flux(const StarShapedDomain& d, const TrialProfile& f);

/// int over the boundary of (nu . grad v) conj(v) d sigma from the
/// gradient and normal vectors directly.
std::complex<double> boundary_flux_direct(const StarShapedDomain& d, const TrialProfile& f);

struct TrialBoundReport {
  double b;
  double disk_eigenvalue;
  double boundary_term;
  double exterior_norm_sq;
  double bound;
};

/// lambda_1(b, exterior of d) <= lambda_1(b, exterior of B_1) - boundary / norm.
/// Requires b < 5 - sqrt(17), where the disk ground state lies in mode 1.
TrialBoundReport upper_bound_minmax(const StarShapedDomain& d, double b);

/// Closed form of F_alpha''(1), F_alpha(x) = x^alpha f'(x^alpha) f(x^alpha),
/// for the m = 1 profile with f(1)^2 = f1_sq.
double f_alpha_second_derivative(double b, double lambda, double f1_sq, double alpha);

/// F_alpha(x) and its second derivative from f, f' and the radial equation.
double f_alpha(const TrialProfile& f, double alpha, double x);
double f_alpha_second_derivative_at(const TrialProfile& f, double alpha, double x);

/// 2 + (16b - 4b^2)/(4 - 8b + b^2) on 0 < b < 4 - 2 sqrt(3).
double p_star(double b);

struct ConvexityWindow {
  double x_lo;  // F_alpha'' > 0 on [x_lo, x_hi] around x = 1
  double x_hi;
  double rho_lo;  // the same window in the radial variable rho = x^alpha
  double rho_hi;
};

struct LocalOptimalityVerdict {
  double b;
  double p;
  double R;
  double p_star;
  double alpha;
  double scale;             // c with I_p(c d) = I_p(B_R)
  double moment;            // I_p of the rescaled domain
  double disk_eigenvalue;   // lambda_1(b, exterior of B_R)
  double boundary_term;     // in the unit frame
  double exterior_norm_sq;  // in the unit frame
  double bound;             // upper bound for the rescaled domain
  double jensen_rhs;        // 2 pi F_alpha(mean of rho^{2-p})
  double jensen_margin;     // boundary_term - jensen_rhs
  ConvexityWindow window;
  double rho_min;  // unit-frame radii of the rescaled domain
  double rho_max;
  bool jensen_ok;
  bool inequality_holds;
};

/// Rescales d to the p-moment of the disk of radius R, then evaluates the
/// trial bound, the Jensen step and the convexity window.
LocalOptimalityVerdict local_optimality_check(const StarShapedDomain& d, double b, double p,
                                              double R);

/// |Omega|/(2 pi) + pi/(2 I_4).
double weak_field_bound_G(const StarShapedDomain& d);

/// b - (c + (|Omega| - c^2 I_4)/(2 pi)) b^2.
double weak_field_trial_bound(const StarShapedDomain& d, double b, double c);

/// pi / I_4, the maximiser of the second-order coefficient.
double optimal_trial_parameter(const StarShapedDomain& d);

/// Radius of the disk with the same I_4: sqrt(pi / I_4).
double matched_disk_radius(const StarShapedDomain& d);

}  // namespace magspec::geometry
