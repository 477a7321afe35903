#include "magspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "magspec/errors.hpp"
#include "magspec/quadrature.hpp"

namespace magspec::geometry {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double theta_node(int k) { return kTwoPi * k / kThetaNodes; }

template <typename F>
double periodic_trapezoid(F&& integrand) {
  long double sum = 0.0L;
  for (int k = 0; k < kThetaNodes; ++k) sum += integrand(k);
  return static_cast<double>(sum) * kTwoPi / kThetaNodes;
}

// Highest admissible field for the p-moment result.
const double kConvexityFieldLimit = 4.0 - 2.0 * std::sqrt(3.0);
// Below this field the disk ground state sits in angular mode 1.
const double kModeOneFieldLimit = 5.0 - std::sqrt(17.0);

}  // namespace

StarShapedDomain::StarShapedDomain(double a0, std::vector<double> cos_coeffs,
                                   std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  const std::size_t order = std::max(cos_.size(), sin_.size());
  cos_.resize(order, 0.0);
  sin_.resize(order, 0.0);
  samples_.resize(kThetaNodes);
  min_ = std::numeric_limits<double>::infinity();
  max_ = -std::numeric_limits<double>::infinity();
  int argmin = 0;
  for (int k = 0; k < kThetaNodes; ++k) {
    const double r = radius(theta_node(k));
    if (!std::isfinite(r)) throw NonPositiveRadius("radius is not finite");
    samples_[static_cast<std::size_t>(k)] = r;
    if (r < min_) {
      min_ = r;
      argmin = k;
    }
    max_ = std::max(max_, r);
  }
  if (!(min_ > 0.0)) {
    throw NonPositiveRadius("radius " + std::to_string(min_) + " is not positive at theta = " +
                            std::to_string(theta_node(argmin)));
  }
}

StarShapedDomain StarShapedDomain::disk(double radius) { return {radius, {}, {}}; }

double StarShapedDomain::radius(double theta) const {
  double r = a0_;
  for (std::size_t j = 0; j < cos_.size(); ++j) {
    const double jt = static_cast<double>(j + 1) * theta;
    r += cos_[j] * std::cos(jt) + sin_[j] * std::sin(jt);
  }
  return r;
}

double StarShapedDomain::radius_derivative(double theta) const {
  double dr = 0.0;
  for (std::size_t j = 0; j < cos_.size(); ++j) {
    const double n = static_cast<double>(j + 1);
    dr += n * (sin_[j] * std::cos(n * theta) - cos_[j] * std::sin(n * theta));
  }
  return dr;
}

bool StarShapedDomain::is_disk() const {
  return std::all_of(cos_.begin(), cos_.end(), [](double v) { return v == 0.0; }) &&
         std::all_of(sin_.begin(), sin_.end(), [](double v) { return v == 0.0; });
}

StarShapedDomain StarShapedDomain::scaled(double s) const {
  if (!(s > 0.0)) throw DomainError("scale factor must be positive");
  std::vector<double> c = cos_;
  std::vector<double> d = sin_;
  for (auto& v : c) v *= s;
  for (auto& v : d) v *= s;
  return {a0_ * s, std::move(c), std::move(d)};
}

double area(const StarShapedDomain& d) {
  const auto& rho = d.samples();
  return 0.5 * periodic_trapezoid([&](int k) {
    const double r = rho[static_cast<std::size_t>(k)];
    return r * r;
  });
}

double moment_Ip(const StarShapedDomain& d, double p) {
  if (!(p > 2.0)) throw DomainError("moment_Ip needs p > 2");
  const auto& rho = d.samples();
  return periodic_trapezoid([&](int k) { return std::pow(rho[static_cast<std::size_t>(k)], 2.0 - p); }) /
         (p - 2.0);
}

TrialProfile::TrialProfile(double b, double r_lo, double r_hi) : b_(b) {
  if (!(r_lo > 0.0) || !(r_hi >= r_lo)) throw DomainError("profile needs 0 < r_lo <= r_hi");
  lambda_ = fibre::solve_band(1, b);
  eig_ = std::make_shared<const fibre::RadialEigenfunction>(1, b, lambda_);

  const double lo = 0.99 * std::min(r_lo, 1.0);
  const double hi = 1.01 * std::max(r_hi, 1.0);
  for (int degree = 64;; degree *= 2) {
    const auto xs = ChebyshevSeries::lobatto_points(lo, hi, degree);
    std::vector<double> fv(xs.size());
    std::vector<double> dv(xs.size());
    std::vector<double> mv(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto v = (*eig_)(xs[i]);
      fv[i] = v.f;
      dv[i] = v.f_prime;
      mv[i] = v.f * v.f * xs[i];
    }
    f_ = ChebyshevSeries::from_lobatto_values(lo, hi, fv);
    fp_ = ChebyshevSeries::from_lobatto_values(lo, hi, dv);
    mass_ = ChebyshevSeries::from_lobatto_values(lo, hi, mv).antiderivative();
    table_tail_ = std::max({f_.relative_tail(), fp_.relative_tail(),
                            ChebyshevSeries::from_lobatto_values(lo, hi, mv).relative_tail()});
    if (table_tail_ < 1e-14 || degree >= 512) break;
  }
  const double at_one = mass_(1.0);
  std::vector<double> c = mass_.coeffs();
  c[0] -= at_one;
  mass_ = ChebyshevSeries(lo, hi, std::move(c));
}

bool TrialProfile::in_table(double r) const { return r >= f_.lower() && r <= f_.upper(); }

double TrialProfile::f(double r) const { return in_table(r) ? f_(r) : eig_->value(r); }

double TrialProfile::f_prime(double r) const { return in_table(r) ? fp_(r) : (*eig_)(r).f_prime; }

double TrialProfile::F1(double r) const { return r * f_prime(r) * f(r); }

double TrialProfile::tail_mass(double r) const {
  if (in_table(r)) return 1.0 - mass_(r);
  const auto integrand = [this](double s) {
    const double v = eig_->value(s);
    return v * v * s;
  };
  quad::Options opts;
  opts.rel_tol = 1e-12;
  const quad::Result inner = quad::integrate(integrand, 1.0, r, opts);
  if (!inner.converged) throw QuadratureFailure("radial mass did not converge");
  return 1.0 - inner.value;
}

TrialProfile profile_for(const StarShapedDomain& d, double b) {
  return {b, d.min_radius(), d.max_radius()};
}

double boundary_term(const StarShapedDomain& d, const TrialProfile& f) {
  const auto& rho = d.samples();
  return periodic_trapezoid([&](int k) { return f.F1(rho[static_cast<std::size_t>(k)]); });
}

double exterior_norm_sq(const StarShapedDomain& d, const TrialProfile& f) {
  const auto& rho = d.samples();
  return periodic_trapezoid([&](int k) { return f.tail_mass(rho[static_cast<std::size_t>(k)]); });
}

namespace {

struct BoundaryPoint {
  double x, y;    // position
  double nx, ny;  // outward normal times arc length per unit theta
};

BoundaryPoint boundary_point(const StarShapedDomain& d, int k) {
  const double t = theta_node(k);
  const double r = d.samples()[static_cast<std::size_t>(k)];
  const double dr = d.radius_derivative(t);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double dx = dr * c - r * s;
  const double dy = dr * s + r * c;
  return {r * c, r * s, dy, -dx};
}

}  // namespace

double magnetic_boundary_flux(const StarShapedDomain& d, const TrialProfile& f) {
  return periodic_trapezoid([&](int k) {
    const BoundaryPoint p = boundary_point(d, k);
    const double ax = -0.5 * p.y;
    const double ay = 0.5 * p.x;
    const double v = f.f(std::hypot(p.x, p.y));
    return (ax * p.nx + ay * p.ny) * v * v;
  });
}

std::complex<double> boundary_flux_direct(const StarShapedDomain& d, const TrialProfile& f) {
  long double re = 0.0L;
  long double im = 0.0L;
  for (int k = 0; k < kThetaNodes; ++k) {
    const BoundaryPoint p = boundary_point(d, k);
    const double r = std::hypot(p.x, p.y);
    const double t = std::atan2(p.y, p.x);
    const std::complex<double> phase = std::polar(1.0, t);
    const double fr = f.f(r);
    const double fp = f.f_prime(r);
    // grad(f e^{i theta}) = f' e^{i theta} e_r + (i f / r) e^{i theta} e_theta
    const std::complex<double> gx = phase * (fp * std::cos(t) - std::complex<double>(0, 1) * fr / r * std::sin(t));
    const std::complex<double> gy = phase * (fp * std::sin(t) + std::complex<double>(0, 1) * fr / r * std::cos(t));
    const std::complex<double> value = (gx * p.nx + gy * p.ny) * std::conj(fr * phase);
    re += value.real();
    im += value.imag();
  }
  const double w = kTwoPi / kThetaNodes;
  return {static_cast<double>(re) * w, static_cast<double>(im) * w};
}

TrialBoundReport upper_bound_minmax(const StarShapedDomain& d, double b) {
  if (!(b > 0.0)) throw DomainError("field strength must be positive");
  if (!(b < kModeOneFieldLimit)) {
    throw HypothesisViolated("upper_bound_minmax needs b < 5 - sqrt(17)");
  }
  const TrialProfile f = profile_for(d, b);
  TrialBoundReport r{};
  r.b = b;
  r.disk_eigenvalue = f.lambda();
  r.boundary_term = boundary_term(d, f);
  r.exterior_norm_sq = exterior_norm_sq(d, f);
  r.bound = r.disk_eigenvalue - r.boundary_term / r.exterior_norm_sq;
  return r;
}

double f_alpha_second_derivative(double b, double lambda, double f1_sq, double alpha) {
  if (alpha == 0.0) throw DomainError("alpha must be nonzero");
  const double a2 = alpha * alpha;
  return f1_sq * ((2.0 * a2 - alpha) * (1.0 - b + 0.25 * b * b - lambda) -
                  2.0 * a2 * (1.0 - 0.25 * b * b));
}

double f_alpha(const TrialProfile& f, double alpha, double x) {
  return f.F1(std::pow(x, alpha));
}

double f_alpha_second_derivative_at(const TrialProfile& f, double alpha, double x) {
  const double b = f.b();
  const double lambda = f.lambda();
  const double s = std::pow(x, alpha);
  const double u = f.f(s);
  const double du = f.f_prime(s);
  // -(f'' + f'/s) + (V - lambda) f = 0 with V = (1/s - b s/2)^2.
  const double w = 1.0 / s - 0.5 * b * s;
  const double v = w * w;
  const double dv = 2.0 * w * (-1.0 / (s * s) - 0.5 * b);
  const double d2u = -du / s + (v - lambda) * u;
  const double d3u = du / (s * s) - d2u / s + dv * u + (v - lambda) * du;
  // G(s) = s f' f.
  const double g1 = du * u + s * (d2u * u + du * du);
  const double g2 = 2.0 * d2u * u + 2.0 * du * du + s * (d3u * u + 3.0 * du * d2u);
  return alpha * alpha * std::pow(x, 2.0 * alpha - 2.0) * g2 +
         alpha * (alpha - 1.0) * std::pow(x, alpha - 2.0) * g1;
}

double p_star(double b) {
  if (!(b > 0.0 && b < kConvexityFieldLimit)) {
    throw DomainError("p_star is defined for 0 < b < 4 - 2 sqrt(3)");
  }
  return 2.0 + (16.0 * b - 4.0 * b * b) / (4.0 - 8.0 * b + b * b);
}

namespace {

ConvexityWindow convexity_window(const TrialProfile& f, double alpha) {
  const auto positive = [&](double x) { return f_alpha_second_derivative_at(f, alpha, x) > 0.0; };
  if (!positive(1.0)) throw ConvexityWindowExceeded("F_alpha is not convex at x = 1");

  constexpr double kLo = 0.5;
  constexpr double kHi = 1.5;
  constexpr int kSteps = 500;  // per side
  const auto edge = [&](double direction_end) {
    double inside = 1.0;
    for (int i = 1; i <= kSteps; ++i) {
      const double x = 1.0 + (direction_end - 1.0) * i / kSteps;
      if (!positive(x)) {
        double outside = x;
        for (int it = 0; it < 40; ++it) {
          const double mid = 0.5 * (inside + outside);
          (positive(mid) ? inside : outside) = mid;
        }
        return inside;
      }
      inside = x;
    }
    return direction_end;
  };
  ConvexityWindow w{};
  w.x_lo = edge(kLo);
  w.x_hi = edge(kHi);
  w.rho_lo = std::pow(w.x_hi, alpha);
  w.rho_hi = std::pow(w.x_lo, alpha);
  return w;
}

}  // namespace

LocalOptimalityVerdict local_optimality_check(const StarShapedDomain& d, double b, double p,
                                              double R) {
  if (!(R > 0.0)) throw DomainError("disk radius must be positive");
  if (!(p > 2.0)) throw DomainError("moment exponent must exceed 2");
  if (!(b > 0.0)) throw DomainError("field strength must be positive");
  const double b_unit = b * R * R;
  if (!(b_unit < kConvexityFieldLimit)) {
    throw HypothesisViolated("b R^2 must lie in (0, 4 - 2 sqrt(3))");
  }
  LocalOptimalityVerdict v{};
  v.b = b;
  v.p = p;
  v.R = R;
  v.p_star = p_star(b_unit);
  if (!(p > v.p_star)) {
    throw HypothesisViolated("p = " + std::to_string(p) + " does not exceed p_star = " +
                             std::to_string(v.p_star));
  }
  v.alpha = 1.0 / (2.0 - p);

  const double disk_moment = kTwoPi * std::pow(R, 2.0 - p) / (p - 2.0);
  v.scale = std::pow(disk_moment / moment_Ip(d, p), 1.0 / (2.0 - p));
  v.moment = moment_Ip(d.scaled(v.scale), p);
  const StarShapedDomain unit = d.scaled(v.scale / R);
  v.rho_min = unit.min_radius();
  v.rho_max = unit.max_radius();

  const TrialProfile f = profile_for(unit, b_unit);
  v.boundary_term = boundary_term(unit, f);
  v.exterior_norm_sq = exterior_norm_sq(unit, f);
  v.disk_eigenvalue = f.lambda() / (R * R);
  v.bound = (f.lambda() - v.boundary_term / v.exterior_norm_sq) / (R * R);

  const double mean_x = (p - 2.0) * moment_Ip(unit, p) / kTwoPi;
  v.jensen_rhs = kTwoPi * f_alpha(f, v.alpha, mean_x);
  v.jensen_margin = v.boundary_term - v.jensen_rhs;
  v.jensen_ok = v.jensen_margin >= -1e-10;
  v.inequality_holds = v.bound <= v.disk_eigenvalue * (1.0 + 1e-12);

  v.window = convexity_window(f, v.alpha);
  if (v.rho_min < v.window.rho_lo || v.rho_max > v.window.rho_hi) {
    throw ConvexityWindowExceeded("radii [" + std::to_string(v.rho_min) + ", " +
                                  std::to_string(v.rho_max) + "] leave the convexity window [" +
                                  std::to_string(v.window.rho_lo) + ", " +
                                  std::to_string(v.window.rho_hi) + "]");
  }
  return v;
}

double weak_field_bound_G(const StarShapedDomain& d) {
  return area(d) / kTwoPi + std::numbers::pi / (2.0 * moment_Ip(d, 4.0));
}

double weak_field_trial_bound(const StarShapedDomain& d, double b, double c) {
  const double coefficient = c + (area(d) - c * c * moment_Ip(d, 4.0)) / kTwoPi;
  return b - coefficient * b * b;
}

double optimal_trial_parameter(const StarShapedDomain& d) {
  return std::numbers::pi / moment_Ip(d, 4.0);
}

double matched_disk_radius(const StarShapedDomain& d) {
  return std::sqrt(std::numbers::pi / moment_Ip(d, 4.0));
}

}  // namespace magspec::geometry
