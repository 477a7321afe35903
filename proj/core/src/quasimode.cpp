#include "magspec/quasimode.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "magspec/discretize.hpp"
#include "magspec/errors.hpp"
#include "magspec/fibre.hpp"
#include "magspec/quadrature.hpp"
#include "magspec/specfun.hpp"

namespace magspec::quasimode {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

TempleReport assemble_report(const Quasimode& q, double beta) {
  TempleReport t{};
  t.m = q.m();
  t.b = q.b();
  t.norm_sq = quasimode_norm_sq(q);
  t.inner_product = temple_inner_product(q);
  t.eta = t.inner_product / t.norm_sq;
  const double res = residual_norm_sq(q) / t.norm_sq;
  t.eps_sq = res - t.eta * t.eta;
  if (t.eps_sq < -1e-12 * std::max(res, 1e-300)) {
    throw TempleInvalid(ErrorKind::Numerical,
                        "negative residual variance " + std::to_string(t.eps_sq));
  }
  t.eps_sq = std::max(t.eps_sq, 0.0);
  t.beta = beta;
  t.beta_nominal = 2.0 * q.b();
  if (!(beta > t.eta)) {
    throw TempleInvalid(ErrorKind::Hypothesis, "gap parameter does not exceed eta");
  }
  t.lower = t.eta - t.eps_sq / (beta - t.eta);
  t.upper = t.eta;
  return t;
}

}  // namespace

Quasimode::Quasimode(int m, double b) : m_(m), b_(b), B_((m - 0.5 * b) / (m + 0.5 * b)) {
  if (m < 1) throw DomainError("quasimode needs m >= 1");
  if (!(b > 0.0 && b < 2.0 * m)) throw DomainError("quasimode needs 0 < b < 2m");
}

double Quasimode::chi(double r) const { return 1.0 + B_ * std::pow(r, -2.0 * m_); }

double Quasimode::f(double r) const { return std::pow(r, m_) * std::exp(-0.25 * b_ * r * r); }

double Quasimode::psi(double r) const { return chi(r) * f(r); }

double Quasimode::psi_prime(double r) const {
  // Psi = (r^m + B r^{-m}) e^{-b r^2/4}.
  const double g = std::pow(r, m_) + B_ * std::pow(r, -m_);
  const double dg = m_ * (std::pow(r, m_ - 1) - B_ * std::pow(r, -m_ - 1));
  return (dg - 0.5 * b_ * r * g) * std::exp(-0.25 * b_ * r * r);
}

double Quasimode::residual(double r) const {
  return -2.0 * b_ * m_ * B_ * std::pow(r, -m_) * std::exp(-0.25 * b_ * r * r);
}

double inverse_power_integral(int m, double b) {
  const auto integrand = [m, b](double r) {
    return std::pow(r, 1.0 - 2.0 * m) * std::exp(-0.5 * b * r * r);
  };
  // Truncate where the integrand has fallen 1e-18 below its value at r = 1.
  const double log_peak = -0.5 * b;
  const double target = log_peak + std::log(1e-18);
  double r_cut = 2.0;
  while ((1.0 - 2.0 * m) * std::log(r_cut) - 0.5 * b * r_cut * r_cut > target) r_cut *= 1.5;
  std::vector<double> points{1.0};
  for (double r = 2.0; r < r_cut; r *= 2.0) points.push_back(r);
  points.push_back(r_cut);
  quad::Options opts;
  opts.rel_tol = 1e-13;
  const quad::Result res = quad::integrate(integrand, points, opts);
  if (!res.converged) throw QuadratureFailure("inverse-power integral did not converge");
  return res.value;
}

NormTerms quasimode_norm_terms(const Quasimode& q) {
  const int m = q.m();
  const double b = q.b();
  const double B = q.B();
  NormTerms t{};
  t.a1 = std::pow(2.0, m) / std::pow(b, m + 1) * specfun::upper_incomplete_gamma(m + 1, 0.5 * b);
  t.a2 = B * B * inverse_power_integral(m, b);
  t.a3 = 2.0 * B * std::exp(-0.5 * b) / b;
  return t;
}

double quasimode_norm_sq(const Quasimode& q) { return quasimode_norm_terms(q).total(); }

double residual_norm_sq(const Quasimode& q) {
  const double k = 2.0 * q.b() * q.m() * q.B();
  return k * k * inverse_power_integral(q.m(), q.b());
}

double temple_inner_product(const Quasimode& q) {
  // int chi e^{-b r^2/2} r dr = e^{-b/2}/b + B K.
  const double b = q.b();
  const double chi_integral = std::exp(-0.5 * b) / b + q.B() * inverse_power_integral(q.m(), b);
  return -2.0 * b * q.m() * q.B() * chi_integral;
}

TempleReport temple_bounds(int m, double b) {
  const Quasimode q(m, b);
  const auto second = discretize::lowest_eigenvalues(discretize::exterior_fibre_spec(m, b), 2)[1];
  const double certified_gap = second.value - second.error - b;
  const double beta = std::min(2.0 * b, certified_gap);
  TempleReport t = assemble_report(q, beta);
  t.gap_fd = certified_gap;
  t.gap_verified = second.value + second.error >= 3.0 * b;
  return t;
}

TempleReport temple_bounds(int m, double b, double beta) {
  TempleReport t = assemble_report(Quasimode(m, b), beta);
  t.gap_fd = beta;
  t.gap_verified = false;
  return t;
}

double asymptotic_prediction(int k, double R, double b) {
  if (k < 1 || !(R > 0.0) || !(b > 0.0)) throw DomainError("asymptotic_prediction arguments");
  return b - std::pow(R, 2 * k) * std::pow(b, k + 1) / (std::pow(2.0, k - 1) * factorial(k - 1));
}

double scaled_disk_eigenvalue(int k, double R, double b) {
  if (!(R > 0.0)) throw DomainError("disk radius must be positive");
  return fibre::solve_band(k, b * R * R) / (R * R);
}

}  // namespace magspec::quasimode
