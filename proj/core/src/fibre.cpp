#include "magspec/fibre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "magspec/errors.hpp"
#include "magspec/quadrature.hpp"
#include "magspec/roots.hpp"
#include "magspec/specfun.hpp"

namespace magspec::fibre {
namespace {

using specfun::kummer_m;
using specfun::kummer_u;

constexpr int kBracketPoints = 64;
constexpr double kExclusion = 1e-8;
constexpr double kRootTol = 1e-10;

void require_exterior(const FibreProblem& p, double lambda) {
  if (p.side != Side::Exterior) throw DomainError("expected an exterior fibre problem");
  if (p.m < 1 || !(p.b > 0.0)) throw DomainError("exterior fibre needs m >= 1 and b > 0");
  if (!(lambda > 0.0 && lambda < p.b)) {
    throw DomainError("exterior secular function is defined for 0 < lambda < b");
  }
}

// Kummer parameter of W(Lambda, m/2, .) from the gap b - lambda.
double kummer_a(double b, double lambda) { return (b - lambda) / (2.0 * b); }

double whittaker_prefactor(double mu, double z) {
  return std::exp(-0.5 * z) * std::pow(z, mu + 0.5);
}

struct SignScan {
  int changes = 0;
  double lo = 0.0, hi = 0.0;
  double f_lo = 0.0, f_hi = 0.0;
};

SignScan scan_signs(const std::vector<double>& xs, const std::vector<double>& fs,
                    bool stop_at_first) {
  SignScan s;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if ((fs[i] > 0.0) != (fs[i + 1] > 0.0)) {
      if (s.changes == 0) {
        s.lo = xs[i];
        s.hi = xs[i + 1];
        s.f_lo = fs[i];
        s.f_hi = fs[i + 1];
      }
      ++s.changes;
      if (stop_at_first) break;
    }
  }
  return s;
}

BandSolution solve_exterior(int m, double b) {
  if (m < 1) throw DomainError("exterior band needs m >= 1");
  if (!(b > 0.0)) throw DomainError("field strength must be positive");
  const double landau = 2.0 * m;
  if (std::abs(b - landau) <= 1e-14 * landau) return {b, b, b, 0};
  if (b > landau) {
    throw NoRootBelowLandau("no Neumann eigenvalue below b for b > 2m");
  }

  const FibreProblem problem{m, b, Side::Exterior};
  const auto f = [&](double lambda) { return secular_exterior_neumann(problem, lambda); };

  const double lo = kExclusion * b;
  const double hi = b * (1.0 - kExclusion);
  std::vector<double> xs(kBracketPoints);
  std::vector<double> fs(kBracketPoints);
  for (int i = 0; i < kBracketPoints; ++i) {
    const double t = static_cast<double>(i) / (kBracketPoints - 1);
    xs[static_cast<std::size_t>(i)] = i == kBracketPoints - 1 ? hi : lo * std::pow(hi / lo, t);
    fs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }
  const SignScan s = scan_signs(xs, fs, false);
  if (s.changes == 0) {
    throw NoRootBelowLandau("secular function keeps one sign on (0, b)");
  }
  if (s.changes > 1) {
    throw BracketAmbiguous("secular function changes sign " + std::to_string(s.changes) +
                           " times below b");
  }
  const RootResult r = find_root(f, s.lo, s.hi, s.f_lo, s.f_hi, kRootTol * b);
  if (!r.converged) throw BisectionStall("band root did not converge in 200 steps");
  return {r.root, s.lo, s.hi, r.iterations};
}

BandSolution solve_interior(int m, double b) {
  if (m < 0) throw DomainError("interior band needs m >= 0");
  if (!(b > 0.0)) throw DomainError("field strength must be positive");
  // Rayleigh quotient of r^m bounds the lowest eigenvalue from above.
  const double mm = m;
  const double rayleigh =
      (2.0 * mm + 2.0) * mm - mm * b + b * b * (2.0 * mm + 2.0) / (8.0 * mm + 16.0);
  const double upper = 1.01 * rayleigh + 1e-300;

  const FibreProblem problem{m, b, Side::Interior};
  const auto f = [&](double lambda) { return secular_interior_neumann(problem, lambda); };
  constexpr int kPoints = 256;
  std::vector<double> xs(kPoints + 1);
  std::vector<double> fs(kPoints + 1);
  for (int i = 0; i <= kPoints; ++i) {
    xs[static_cast<std::size_t>(i)] = upper * i / kPoints;
    fs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }
  const SignScan s = scan_signs(xs, fs, true);
  if (s.changes == 0) throw NoCrossingInRange("no interior root below the Rayleigh bound");
  const RootResult r = find_root(f, s.lo, s.hi, s.f_lo, s.f_hi, 1e-13 * upper);
  if (!r.converged) throw BisectionStall("interior root did not converge in 200 steps");
  return {r.root, s.lo, s.hi, r.iterations};
}

}  // namespace

double landau_parameter(int m, double b, double lambda) { return (m * b + lambda) / (2.0 * b); }

SecularPoint secular_exterior_neumann_point(const FibreProblem& p, double lambda) {
  require_exterior(p, lambda);
  const double mu = 0.5 * p.m;
  const double z = 0.5 * p.b;
  const double c = p.m + 1.0;
  const double a = kummer_a(p.b, lambda);
  const double Lambda = landau_parameter(p.m, p.b, lambda);

  // Common factor e^{-z/2} z^{mu+1/2} is dropped from every W.
  const double w = kummer_u({a, c, z});
  const double w_below = kummer_u({a + 1.0, c, z});
  const specfun::RecurrenceStep above = specfun::raise_w(Lambda, mu, z, w, w_below);

  SecularPoint out;
  out.lambda = lambda;
  out.Lambda = Lambda;
  out.residual = (lambda / p.b + p.m + 1.0 - 0.5 * p.b) + 2.0 * above.value / w;
  out.recurrence_cancellation = above.cancellation;
  out.cancellation_flag = above.cancellation > 1e6;
  return out;
}

double secular_exterior_neumann(const FibreProblem& p, double lambda) {
  return secular_exterior_neumann_point(p, lambda).residual;
}

double secular_exterior_dirichlet(const FibreProblem& p, double lambda) {
  require_exterior(p, lambda);
  const double z = 0.5 * p.b;
  return whittaker_prefactor(0.5 * p.m, z) * kummer_u({kummer_a(p.b, lambda), p.m + 1.0, z});
}

double secular_interior_neumann(const FibreProblem& p, double lambda) {
  if (p.side != Side::Interior) throw DomainError("expected an interior fibre problem");
  if (p.m < 0 || !(p.b > 0.0)) throw DomainError("interior fibre needs m >= 0 and b > 0");
  const double b = p.b;
  const double m = p.m;
  const double a = kummer_a(b, lambda);
  const double z = 0.5 * b;
  const double m0 = kummer_m({a, m + 1.0, z});
  const double m1 = kummer_m({a - 1.0, m + 1.0, z});
  return (b * b - 2.0 * b * (m + 1.0) - 2.0 * lambda) * m0 +
         2.0 * (b + 2.0 * b * m + lambda) * m1;
}

BandSolution solve_band_detailed(int m, double b, Side side) {
  return side == Side::Exterior ? solve_exterior(m, b) : solve_interior(m, b);
}

double solve_band(int m, double b, Side side) { return solve_band_detailed(m, b, side).lambda; }

BandCurve band_scan(int m, std::span<const double> b_grid, Side side) {
  if (!std::is_sorted(b_grid.begin(), b_grid.end())) {
    throw DomainError("band_scan: grid must be sorted ascending");
  }
  BandCurve curve{m, side, {}};
  for (double b : b_grid) {
    BandSample sample;
    sample.b = b;
    try {
      const BandSolution s = solve_band_detailed(m, b, side);
      sample.lambda = s.lambda;
      sample.bracket_lo = s.bracket_lo;
      sample.bracket_hi = s.bracket_hi;
      sample.ok = true;
    } catch (const Error& e) {
      sample.error = e.what();
    }
    curve.samples.push_back(std::move(sample));
  }
  return curve;
}

double ordering_threshold(int m) {
  if (m < 2) throw DomainError("ordering_threshold needs m >= 2");
  return 2.0 * m + 1.0 - std::sqrt(8.0 * m + 1.0);
}

double crossing_formula(int m, double b) { return (0.5 * b - m) * (0.5 * b - m + 1.0); }

double crossing_determinant(int m, double b, double lambda) {
  return -4.0 * b * (lambda - crossing_formula(m, b));
}

Crossing find_crossing(int m) {
  if (m < 2) throw DomainError("find_crossing needs m >= 2");
  const auto gap = [m](double b) { return solve_band(m, b) - solve_band(m - 1, b); };

  const double lo = ordering_threshold(m);
  const double hi = 2.0 * (m - 1) * (1.0 - 1e-4);
  if (!(hi > lo)) throw NoCrossingInRange("empty search interval for the crossing");

  constexpr int kPoints = 24;
  double b0 = lo;
  double g0 = gap(b0);
  double b1 = b0;
  double g1 = g0;
  bool found = false;
  for (int i = 1; i <= kPoints; ++i) {
    b1 = lo + (hi - lo) * i / kPoints;
    g1 = gap(b1);
    if ((g0 > 0.0) != (g1 > 0.0)) {
      found = true;
      break;
    }
    b0 = b1;
    g0 = g1;
  }
  if (!found) throw NoCrossingInRange("bands m-1 and m do not meet below 2(m-1)");

  for (int iter = 0; iter < 200 && b1 - b0 > 1e-12 * b1; ++iter) {
    const double mid = 0.5 * (b0 + b1);
    const double gm = gap(mid);
    if ((gm > 0.0) == (g0 > 0.0)) {
      b0 = mid;
      g0 = gm;
    } else {
      b1 = mid;
      g1 = gm;
    }
  }
  const double b_star = std::abs(g0) < std::abs(g1) ? b0 : b1;
  const double upper = solve_band(m, b_star);
  const double lower = solve_band(m - 1, b_star);
  Crossing c;
  c.b_star = b_star;
  c.lambda_star = 0.5 * (upper + lower);
  c.formula_value = crossing_formula(m, b_star);
  c.abs_diff = std::abs(c.lambda_star - c.formula_value);
  c.band_gap = std::abs(upper - lower);
  if (c.abs_diff > 1e-6) {
    throw PrecisionLoss("crossing eigenvalue disagrees with the closed form by " +
                        std::to_string(c.abs_diff));
  }
  return c;
}

RadialEigenfunction::RadialEigenfunction(int m, double b, double lambda)
    : m_(m),
      b_(b),
      lambda_(lambda),
      a_(kummer_a(b, lambda)),
      kappa_(landau_parameter(m, b, lambda)),
      mu_(0.5 * m) {
  if (m < 1 || !(b > 0.0) || !(lambda > 0.0) || lambda > b) {
    throw DomainError("eigenfunction needs m >= 1, b > 0 and 0 < lambda <= b");
  }
  const double z_lo = 0.5 * b;
  const double z_hi = z_max();
  const auto integrand = [this](double z) {
    const double w = whittaker(z);
    return w * w / (2.0 * z);
  };
  std::vector<double> points{z_lo};
  for (double z = 2.0 * z_lo; z < 1.0; z *= 2.0) points.push_back(z);
  for (double z = std::max(1.0, 2.0 * z_lo); z < z_hi; z *= 2.0) points.push_back(z);
  points.push_back(z_hi);
  quad::Options opts;
  opts.rel_tol = 1e-12;
  const quad::Result r = quad::integrate(integrand, points, opts);
  if (!r.converged) throw QuadratureFailure("eigenfunction normalisation did not converge");
  norm_ = 1.0 / std::sqrt(r.value);
  const double decay = 1.0 - std::max(0.0, 2.0 * kappa_ - 1.0) / z_hi;
  tail_ = integrand(z_hi) / std::max(decay, 1e-3) / r.value;
}

double RadialEigenfunction::z_max() const {
  // W(z)^2 / (2z) ~ e^{-z} z^{2 kappa - 1}; go until it is 1e-17 below its peak.
  const double power = 2.0 * kappa_ - 1.0;
  const double z_lo = 0.5 * b_;
  const double z_peak = std::max(z_lo, power);
  const double log_peak = power * std::log(z_peak) - z_peak;
  const double target = log_peak + std::log(1e-17);
  double z = std::max(z_peak, z_lo) + 1.0;
  while (power * std::log(z) - z > target) z += 1.0;
  return z;
}

double RadialEigenfunction::whittaker(double z) const {
  if (a_ > 0.0) return whittaker_prefactor(mu_, z) * kummer_u({a_, m_ + 1.0, z});
  return specfun::whittaker_w_general({kappa_, mu_, z});
}

RadialEigenfunction::Value RadialEigenfunction::operator()(double r) const {
  if (!(r > 0.0)) throw DomainError("eigenfunction evaluated at r <= 0");
  const double z = 0.5 * b_ * r * r;
  double w;
  double w_above;
  if (a_ > 0.0) {
    const double pre = whittaker_prefactor(mu_, z);
    const double u0 = kummer_u({a_, m_ + 1.0, z});
    const double u1 = kummer_u({a_ + 1.0, m_ + 1.0, z});
    w = pre * u0;
    w_above = pre * specfun::raise_w(kappa_, mu_, z, u0, u1).value;
  } else {
    w = specfun::whittaker_w_general({kappa_, mu_, z});
    w_above = specfun::whittaker_w_general({kappa_ + 1.0, mu_, z});
  }
  const double dw = (0.5 - kappa_ / z) * w - w_above / z;
  return {norm_ * w / r, norm_ * (b_ * dw - w / (r * r))};
}

double RadialEigenfunction::value(double r) const {
  if (!(r > 0.0)) throw DomainError("eigenfunction evaluated at r <= 0");
  return norm_ * whittaker(0.5 * b_ * r * r) / r;
}

double RadialEigenfunction::moment_r2() const {
  // r^2 f^2 r dr = N^2 W^2 dz / b in z = b r^2 / 2.
  const double z_lo = 0.5 * b_;
  const double z_hi = z_max();
  std::vector<double> points{z_lo};
  for (double z = std::max(1.0, 2.0 * z_lo); z < z_hi; z *= 2.0) points.push_back(z);
  points.push_back(z_hi);
  quad::Options opts;
  opts.rel_tol = 1e-12;
  const quad::Result r = quad::integrate(
      [this](double z) {
        const double w = whittaker(z);
        return w * w;
      },
      points, opts);
  if (!r.converged) throw QuadratureFailure("second moment did not converge");
  return norm_ * norm_ * r.value / b_;
}

double feynman_hellmann_slope(int m, double b) {
  const double lambda = solve_band(m, b);
  const RadialEigenfunction f(m, b, lambda);
  return -m + 0.5 * b * f.moment_r2();
}

}  // namespace magspec::fibre
