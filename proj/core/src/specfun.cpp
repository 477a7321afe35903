#include "magspec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magspec/errors.hpp"
#include "magspec/quadrature.hpp"

namespace magspec::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

std::string args_text(const KummerArgs& k) {
  return "(a=" + std::to_string(k.a) + ", c=" + std::to_string(k.c) +
         ", z=" + std::to_string(k.z) + ")";
}

double whittaker_prefactor(double mu, double z) {
  return std::exp(-0.5 * z) * std::pow(z, mu + 0.5);
}

}  // namespace

SeriesValue kummer_m_series(const KummerArgs& args) {
  const auto [a, c, z] = args;
  if (is_nonpositive_integer(c)) {
    throw DomainError("kummer_m: c is a non-positive integer " + args_text(args));
  }
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw DomainError("kummer_m: z must be finite and non-negative " + args_text(args));
  }

  // Neumaier summation.
  double sum = 1.0;
  double comp = 0.0;
  double term = 1.0;
  double max_term = 1.0;
  int k = 0;
  int small_in_a_row = 0;
  constexpr int kMaxTerms = 20000;
  while (k < kMaxTerms) {
    term *= (a + k) * z / ((c + k) * (k + 1.0));
    ++k;
    if (term == 0.0) break;
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    max_term = std::max(max_term, std::abs(term));
    // Stop only once the terms are decreasing geometrically.
    const double ratio = std::abs((a + k) * z / ((c + k) * (k + 1.0)));
    if (ratio < 1.0 && std::abs(term) <= 0.5 * kEps * std::abs(sum + comp)) {
      if (++small_in_a_row >= 2) break;
    } else {
      small_in_a_row = 0;
    }
  }
  const double value = sum + comp;
  const double cancellation =
      value != 0.0 ? kEps * max_term / std::abs(value) : std::numeric_limits<double>::infinity();
  return {value, cancellation, k + 1};
}

double kummer_m(const KummerArgs& args) {
  const SeriesValue s = kummer_m_series(args);
  if (s.cancellation > 1e-8) {
    throw PrecisionLoss("kummer_m: series cancellation estimate " +
                        std::to_string(s.cancellation) + " at " + args_text(args));
  }
  return s.value;
}

double kummer_u(const KummerArgs& args) {
  const auto [a, c, z] = args;
  if (!(a > 0.0) || !(z > 0.0) || !std::isfinite(a) || !std::isfinite(c) ||
      !std::isfinite(z)) {
    throw DomainError("kummer_u: requires a > 0 and z > 0 " + args_text(args));
  }
  const double split = std::min(1.0, 1.0 / z);
  const double power = c - a - 1.0;

  quad::Options opts;
  opts.rel_tol = 1e-13;

  // Near the origin the leading t^{a-1} behaviour is integrated exactly:
  // int_0^T t^{a-1} g dt = T^a / a + int_0^T t^{a-1} (g - 1) dt, and the
  // remaining integrand vanishes like t^a.
  const auto head_integrand = [&](double t) {
    return std::pow(t, a - 1.0) * std::expm1(-z * t + power * std::log1p(t));
  };
  const quad::Result head = quad::integrate(head_integrand, 0.0, split, opts);

  const double log_gamma_a = std::lgamma(a);
  const auto tail_integrand = [&](double t) {
    return std::exp((a - 1.0) * std::log(t) - z * t + power * std::log1p(t) - log_gamma_a);
  };
  const double decay_scale = std::max(1.0, c - a) / z;
  const quad::Result tail = quad::integrate_to_infinity(tail_integrand, split, decay_scale, opts);

  if (!head.converged || !tail.converged) {
    throw QuadratureFailure("kummer_u: quadrature did not converge at " + args_text(args));
  }
  return std::pow(split, a) / std::tgamma(a + 1.0) + head.value / std::tgamma(a) + tail.value;
}

double whittaker_m(const WhittakerArgs& args) {
  if (!(args.z > 0.0)) throw DomainError("whittaker_m: z must be positive");
  return whittaker_prefactor(args.mu, args.z) * kummer_m(to_kummer(args));
}

double whittaker_w(const WhittakerArgs& args) {
  if (!(args.z > 0.0)) throw DomainError("whittaker_w: z must be positive");
  return whittaker_prefactor(args.mu, args.z) * kummer_u(to_kummer(args));
}

RecurrenceStep raise_w(double kappa, double mu, double z, double w_kappa,
                       double w_kappa_minus_one) {
  const double t1 = -(2.0 * kappa - z) * w_kappa;
  const double t2 = -(kappa - mu - 0.5) * (kappa + mu - 0.5) * w_kappa_minus_one;
  const double value = t1 + t2;
  const double largest = std::max(std::abs(t1), std::abs(t2));
  const double cancellation =
      value != 0.0 ? largest / std::abs(value) : std::numeric_limits<double>::infinity();
  return {value, cancellation};
}

double whittaker_w_general(const WhittakerArgs& args) {
  const double a = args.mu - args.kappa + 0.5;
  if (a > 0.0) return whittaker_w(args);
  if (!(args.z > 0.0)) throw DomainError("whittaker_w: z must be positive");
  // Shift to a0 = a + n in (0, 1], then climb n steps in kappa.
  const int n = static_cast<int>(std::floor(-a)) + 1;
  const double kappa0 = args.kappa - n;
  const double pre = whittaker_prefactor(args.mu, args.z);
  const double a0 = a + n;
  double lower = pre * kummer_u({a0 + 1.0, 1.0 + 2.0 * args.mu, args.z});
  double current = pre * kummer_u({a0, 1.0 + 2.0 * args.mu, args.z});
  for (int i = 0; i < n; ++i) {
    const double next = raise_w(kappa0 + i, args.mu, args.z, current, lower).value;
    lower = current;
    current = next;
  }
  return current;
}

double whittaker_m_deriv(const WhittakerArgs& args) {
  const auto [kappa, mu, z] = args;
  const double m0 = whittaker_m(args);
  const double m1 = whittaker_m({kappa + 1.0, mu, z});
  return (0.5 - kappa / z) * m0 + (1.0 + 2.0 * kappa + 2.0 * mu) / (2.0 * z) * m1;
}

double whittaker_w_deriv(const WhittakerArgs& args) {
  const auto [kappa, mu, z] = args;
  const double w0 = whittaker_w_general(args);
  const double w1 = whittaker_w_general({kappa + 1.0, mu, z});
  return (0.5 - kappa / z) * w0 - w1 / z;
}

Residual contiguous_m(const WhittakerArgs& args, Relation relation) {
  const auto [kappa, mu, z] = args;
  if (relation == Relation::HalfArgument) {
    if (!(mu > 0.0)) throw DomainError("contiguous_m: half-argument relation needs mu > 0");
    const double lhs = whittaker_m(args);
    const double factor = 2.0 * mu / std::sqrt(z);
    const double r1 = factor * whittaker_m({kappa - 0.5, mu - 0.5, z});
    const double r2 = factor * whittaker_m({kappa + 0.5, mu - 0.5, z});
    return {std::abs(lhs - (r1 - r2)), std::max({std::abs(lhs), std::abs(r1), std::abs(r2)})};
  }
  const double up = (kappa + mu + 0.5) * whittaker_m({kappa + 1.0, mu, z});
  const double down = (mu - kappa + 0.5) * whittaker_m({kappa - 1.0, mu, z});
  const double mid = (2.0 * kappa - z) * whittaker_m(args);
  return {std::abs(up - down - mid), std::max({std::abs(up), std::abs(down), std::abs(mid)})};
}

Residual contiguous_w(const WhittakerArgs& args, Relation relation) {
  const auto [kappa, mu, z] = args;
  if (!(mu - kappa + 0.5 > 1.0)) {
    throw DomainError("contiguous_w: needs mu - kappa + 1/2 > 1 so every W is direct");
  }
  if (relation == Relation::HalfArgument) {
    if (!(mu >= 0.5)) throw DomainError("contiguous_w: half-argument relation needs mu >= 1/2");
    const double lhs = whittaker_w(args);
    const double scale = 1.0 / std::sqrt(z);
    const double r1 = scale * whittaker_w({kappa + 0.5, mu - 0.5, z});
    const double r2 = scale * (kappa + mu - 0.5) * whittaker_w({kappa - 0.5, mu - 0.5, z});
    return {std::abs(lhs - r1 - r2), std::max({std::abs(lhs), std::abs(r1), std::abs(r2)})};
  }
  const double up = whittaker_w({kappa + 1.0, mu, z});
  const double mid = (2.0 * kappa - z) * whittaker_w(args);
  const double down = (kappa - mu - 0.5) * (kappa + mu - 0.5) * whittaker_w({kappa - 1.0, mu, z});
  return {std::abs(up + mid + down), std::max({std::abs(up), std::abs(mid), std::abs(down)})};
}

double upper_incomplete_gamma(int s, double x) {
  if (s < 1) throw DomainError("upper_incomplete_gamma: s must be a positive integer");
  double term = 1.0;
  double sum = 1.0;
  double factorial = 1.0;
  for (int k = 1; k < s; ++k) {
    term *= x / k;
    sum += term;
    factorial *= k;
  }
  return factorial * std::exp(-x) * sum;
}

}  // namespace magspec::specfun
