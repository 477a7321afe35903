#include "selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "magspec/errors.hpp"
#include "magspec/specfun.hpp"

namespace magspec::cli {
namespace {

using specfun::Relation;
using specfun::WhittakerArgs;

std::vector<WhittakerArgs> sample_grid() {
  std::mt19937 gen(20240611u);
  std::uniform_real_distribution<double> kappa(-2.0, 2.0);
  std::uniform_real_distribution<double> z(0.1, 10.0);
  constexpr std::array<double, 4> kMu{0.0, 0.5, 1.0, 1.5};
  std::vector<WhittakerArgs> grid;
  for (int i = 0; i < 100; ++i) {
    const double k = kappa(gen);
    const double zz = z(gen);
    grid.push_back({k, kMu[static_cast<std::size_t>(i) % kMu.size()], zz});
  }
  return grid;
}

// Five-point central difference with step h; error O(h^4).
double five_point(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

struct Tally {
  int points = 0;
  double worst = 0.0;
  void add(double v) {
    ++points;
    worst = std::max(worst, v);
  }
};

}  // namespace

Report specfun_selftest() {
  Report report;
  report.columns = {"check", "points", "max_relative", "tolerance", "pass"};
  const auto grid = sample_grid();
  const auto add = [&](const char* name, const Tally& t, double tol) {
    report.add_row({std::string(name), static_cast<long long>(t.points), t.worst, tol,
                    t.points > 0 && t.worst <= tol});
  };

  Tally m_three, m_half, w_three, w_half, m_deriv, w_deriv;
  for (const auto& g : grid) {
    const double a = g.mu - g.kappa + 0.5;
    m_three.add(specfun::contiguous_m(g, Relation::ThreeTerm).relative());
    if (g.mu > 0.0) m_half.add(specfun::contiguous_m(g, Relation::HalfArgument).relative());
    if (a > 1.0) {
      w_three.add(specfun::contiguous_w(g, Relation::ThreeTerm).relative());
      if (g.mu >= 0.5) w_half.add(specfun::contiguous_w(g, Relation::HalfArgument).relative());
    }

    const double h = 1e-3;
    {
      const auto f = [&](double z) { return specfun::whittaker_m({g.kappa, g.mu, z}); };
      const double d = specfun::whittaker_m_deriv(g);
      const double scale = std::max({std::abs(d), std::abs((0.5 - g.kappa / g.z) * f(g.z)),
                                     std::abs(f(g.z) / g.z)});
      m_deriv.add(std::abs(d - five_point(f, g.z, h)) / scale);
    }
    {
      const auto f = [&](double z) { return specfun::whittaker_w_general({g.kappa, g.mu, z}); };
      const double d = specfun::whittaker_w_deriv(g);
      const double scale = std::max({std::abs(d), std::abs((0.5 - g.kappa / g.z) * f(g.z)),
                                     std::abs(f(g.z) / g.z)});
      w_deriv.add(std::abs(d - five_point(f, g.z, h)) / scale);
    }
  }
  add("m_three_term", m_three, 1e-9);
  add("m_half_argument", m_half, 1e-9);
  add("w_three_term", w_three, 1e-9);
  add("w_half_argument", w_half, 1e-9);
  add("m_derivative", m_deriv, 1e-7);
  add("w_derivative", w_deriv, 1e-7);

  // Closed forms: U(a, a+1, z) = z^{-a}, M(a, a, z) = e^z.
  Tally closed;
  for (const auto& g : grid) {
    const double a = 0.1 + std::abs(g.kappa);
    closed.add(std::abs(specfun::kummer_u({a, a + 1.0, g.z}) * std::pow(g.z, a) - 1.0));
    closed.add(std::abs(specfun::kummer_m({a, a, g.z}) * std::exp(-g.z) - 1.0));
  }
  add("closed_forms", closed, 1e-10);
  return report;
}

}  // namespace magspec::cli
