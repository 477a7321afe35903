// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is non-zero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "magspec/discretize.hpp"
#include "magspec/fibre.hpp"
#include "magspec/geometry.hpp"
#include "magspec/quasimode.hpp"
#include "magspec/specfun.hpp"
#include "landau.hpp"
#include "oracles.hpp"

namespace {

namespace fd = magspec::discretize;
namespace fibre = magspec::fibre;
namespace geo = magspec::geometry;
namespace qm = magspec::quasimode;
namespace sf = magspec::specfun;
constexpr double kPi = std::numbers::pi;

struct Verdict {
  Verdict() { detail.precision(10); }

  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[violated: " << what << "] ";
    }
  }
};

geo::StarShapedDomain flower(double eps) { return {1.0, {0.0, 0.0, eps}, {}}; }

void oracle_equivalence(Verdict& v) {
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m) {
    for (double b : {0.1, 0.3, 0.5}) {
      if (b >= 2 * m) continue;
      const double lambda = fibre::solve_band(m, b);
      const auto ref = fd::lowest_eigenvalues(fd::exterior_fibre_spec(m, b), 1)[0];
      const double diff = std::abs(lambda - ref.value);
      worst = std::max(worst, diff - ref.error);
      v.require(diff <= ref.error + 1e-6, "m=" + std::to_string(m) + " b=" + std::to_string(b));
    }
  }
  v.detail << "max(|secular - fd| - fd_err) = " << worst;
}

void two_term_asymptotics(Verdict& v) {
  auto gap = [](int m, double b) { return b - fibre::solve_band(m, b); };
  const double r1 = gap(1, 0.05) / (0.05 * 0.05);
  const double r2 = gap(1, 0.01) / (0.01 * 0.01);
  const double r3 = gap(2, 0.05) / (0.05 * 0.05 * 0.05 / 2);
  v.require(r1 >= 0.9 && r1 <= 1.1, "m=1 b=0.05");
  v.require(r2 >= 0.97 && r2 <= 1.03, "m=1 b=0.01");
  v.require(r3 >= 0.85 && r3 <= 1.15, "m=2 b=0.05");
  v.detail << "ratios " << r1 << ", " << r2 << ", " << r3;
}

void temple_sandwich(Verdict& v) {
  for (int m : {1, 2}) {
    for (double b : {0.02, 0.05, 0.1 * m}) {
      const auto t = qm::temple_bounds(m, b);
      const double shift = fibre::solve_band(m, b) - b;
      v.require(t.lower <= shift && shift <= t.upper,
                "sandwich m=" + std::to_string(m) + " b=" + std::to_string(b));
    }
    const double b = 0.02;
    const double c = qm::temple_bounds(m, b).eta * std::pow(2.0, m - 1) * std::tgamma(m) /
                     std::pow(b, m + 1);
    v.require(c >= -1.2 && c <= -0.8, "leading coefficient m=" + std::to_string(m));
    v.detail << "m=" << m << " scaled eta " << c << "; ";
  }
}

void landau_crossing(Verdict& v) {
  for (int m : {1, 2}) {
    const double b_zero = extrapolated_landau_crossing(m);
    const double slope = fibre::feynman_hellmann_slope(m, 2.0 * m);
    v.require(std::abs(b_zero - 2 * m) <= 1e-4, "extrapolated crossing m=" + std::to_string(m));
    v.require(fibre::solve_band(m, 2.0 * m) == 2.0 * m, "root at b = 2m");
    v.require(slope > 1.0, "slope m=" + std::to_string(m));
    v.detail << "m=" << m << " crossing " << b_zero << " slope " << slope << "; ";
  }
}

void crossing_formula(Verdict& v) {
  const auto c = fibre::find_crossing(2);
  const double formula = (c.b_star / 2 - 2) * (c.b_star / 2 - 1);
  v.require(c.b_star > 5 - std::sqrt(17.0), "b_star above threshold");
  v.require(std::abs(c.lambda_star - formula) <= 1e-6, "formula");
  v.detail << "b_star " << c.b_star << " lambda_star " << c.lambda_star << " |diff| "
           << std::abs(c.lambda_star - formula);
}

void effective_operator(Verdict& v) {
  for (int m : {1, 2, 3}) {
    const auto mu = fd::lowest_eigenvalues(fd::effective_star_spec(m), 2);
    v.require(std::abs(mu[0].value - 2.0) <= 5e-4, "mu1 m=" + std::to_string(m));
    v.require(mu[1].value >= 6.0 - 1e-3, "mu2 m=" + std::to_string(m));
    v.detail << "m=" << m << " mu1 " << mu[0].value << " mu2 " << mu[1].value << "; ";
  }
  const double b = 0.2;
  const auto mu = fd::lowest_eigenvalues(fd::effective_operator_spec(1, b), 1)[0];
  const double lambda = fibre::solve_band(1, b);
  const double diff = std::abs(0.5 * b * mu.value - lambda);
  v.require(diff <= 0.5 * b * mu.error + 1e-10 * b + 1e-9, "scaling identity");
  v.detail << "scaling |diff| " << diff;
}

void special_functions(Verdict& v) {
  std::mt19937 gen(20240611);
  std::uniform_real_distribution<double> kd(-2.0, 2.0), zd(0.1, 10.0);
  constexpr std::array<double, 4> mus = {0.0, 0.5, 1.0, 1.5};
  double rel_max = 0.0, deriv_max = 0.0;
  for (int i = 0; i < 100; ++i) {
    const sf::WhittakerArgs a{kd(gen), mus[static_cast<std::size_t>(i % 4)], zd(gen)};
    rel_max = std::max(rel_max, sf::contiguous_m(a, sf::Relation::ThreeTerm).relative());
    if (a.mu > 0) rel_max = std::max(rel_max, sf::contiguous_m(a, sf::Relation::HalfArgument).relative());
    if (a.mu - a.kappa + 0.5 > 1.0) {
      rel_max = std::max(rel_max, sf::contiguous_w(a, sf::Relation::ThreeTerm).relative());
      if (a.mu >= 0.5) {
        rel_max = std::max(rel_max, sf::contiguous_w(a, sf::Relation::HalfArgument).relative());
      }
    }
    auto m = [&](double z) { return sf::whittaker_m({a.kappa, a.mu, z}); };
    auto w = [&](double z) { return sf::whittaker_w_general({a.kappa, a.mu, z}); };
    const double h = 1e-3 * a.z;
    const double dm = oracle::derivative(m, a.z, h), dw = oracle::derivative(w, a.z, h);
    deriv_max = std::max(deriv_max, std::abs(sf::whittaker_m_deriv(a) - dm) /
                                        std::max(std::abs(dm), std::abs(m(a.z)) / a.z));
    deriv_max = std::max(deriv_max, std::abs(sf::whittaker_w_deriv(a) - dw) /
                                        std::max(std::abs(dw), std::abs(w(a.z)) / a.z));
  }
  double u_max = 0.0;
  std::uniform_real_distribution<double> ad(0.01, 1.5);
  constexpr std::array<double, 5> cs = {1.0, 2.0, 2.5, 3.0, 4.0};
  for (int i = 0; i < 100; ++i) {
    const double a = ad(gen), c = cs[static_cast<std::size_t>(i % 5)], z = zd(gen);
    const double ref = oracle::tricomi_u(a, c, z);
    u_max = std::max(u_max, std::abs(sf::kummer_u({a, c, z}) - ref) / std::abs(ref));
  }
  v.require(rel_max <= 1e-9, "contiguous relations");
  v.require(deriv_max <= 1e-7, "derivatives");
  v.require(u_max <= 1e-8, "U vs connection formula");
  v.detail << "relations " << rel_max << " derivatives " << deriv_max << " U " << u_max;
}

void geometry_identities(Verdict& v) {
  const double i4 = geo::moment_Ip(geo::StarShapedDomain::disk(1.0), 4.0);
  v.require(std::abs(i4 - kPi) <= 1e-12, "I4 of unit disk");
  for (double R : {0.5, 1.0, 2.0}) {
    v.require(std::abs(geo::weak_field_bound_G(geo::StarShapedDomain::disk(R)) - R * R) <= 1e-12,
              "G of disk");
  }
  const auto d = flower(0.1);
  const double holder = geo::area(d) * geo::moment_Ip(d, 4.0) - kPi * kPi;
  v.require(holder > 1e-6, "strict Hoelder");
  const double b = 0.3, alpha = -2.0;
  const geo::TrialProfile f(b, 0.5, 2.0);
  auto F = [&](double x) { return geo::f_alpha(f, alpha, x); };
  const double numeric = oracle::second_difference(F, 1.0, 1e-3);
  const double closed = geo::f_alpha_second_derivative(b, f.lambda(), f.f(1.0) * f.f(1.0), alpha);
  const double rel = std::abs(numeric - closed) / std::abs(closed);
  v.require(rel <= 1e-4, "F_alpha''(1)");
  v.detail << "Hoelder margin " << holder << " F'' rel " << rel;
}

void local_optimality(Verdict& v) {
  const double b = 0.3, p = 5.0, R = 1.0;
  v.require(p > geo::p_star(b), "p above p_star");
  const double disk = fibre::solve_band(1, b);
  for (double eps : {0.01, 0.03, 0.05}) {
    const auto r = geo::local_optimality_check(flower(eps), b, p, R);
    v.require(r.jensen_margin >= -1e-10, "Jensen margin eps=" + std::to_string(eps));
    v.require(r.bound <= disk, "bound eps=" + std::to_string(eps));
    v.detail << "eps=" << eps << " margin " << r.jensen_margin << " bound-disk " << r.bound - disk
             << "; ";
  }
}

void weak_field(Verdict& v) {
  const auto d = flower(0.1);
  const double i4 = geo::moment_Ip(d, 4.0);
  const double r_star = std::sqrt(kPi / i4);
  const double margin = geo::weak_field_bound_G(d) - r_star * r_star;
  v.require(margin > 1e-8, "G above matched disk");
  v.require(geo::optimal_trial_parameter(d) == kPi / i4, "closed-form optimum");
  const double b = 0.05;
  auto coeff = [&](double c) { return (b - geo::weak_field_trial_bound(d, b, c)) / (b * b); };
  const double c0 = 0.6, c1 = 1.0, c2 = 1.4;
  const double y0 = coeff(c0), y1 = coeff(c1), y2 = coeff(c2);
  const double vertex =
      c1 - 0.5 * ((c1 - c0) * (c1 - c0) * (y1 - y2) - (c1 - c2) * (c1 - c2) * (y1 - y0)) /
               ((c1 - c0) * (y1 - y2) - (c1 - c2) * (y1 - y0));
  v.require(std::abs(vertex - kPi / i4) <= 1e-9, "parabola vertex");
  v.detail << "G margin " << margin << " vertex " << vertex << " pi/I4 " << kPi / i4;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"oracle-equivalence", oracle_equivalence},
      {"two-term-asymptotics", two_term_asymptotics},
      {"temple-sandwich", temple_sandwich},
      {"landau-crossing", landau_crossing},
      {"crossing-formula", crossing_formula},
      {"effective-operator", effective_operator},
      {"special-functions", special_functions},
      {"geometry-identities", geometry_identities},
      {"local-optimality", local_optimality},
      {"weak-field-G", weak_field},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-22s %.2fs  %s\n", v.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, v.detail.str().c_str());
    if (!v.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
