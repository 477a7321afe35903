#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "magspec/discretize.hpp"
#include "magspec/errors.hpp"
#include "magspec/fibre.hpp"

namespace {

using namespace magspec::discretize;

SturmLiouvilleSpec oscillator() {
  SturmLiouvilleSpec s;
  s.potential = [](double r) { return r * r; };
  return s;
}

// (e_n - e_2n) / (e_2n - e_4n) for the lowest eigenvalue.
double convergence_factor(const Problem& p) {
  const auto first = lowest_eigenvalues(p.spec, p.grid, 1)[0];
  const auto second = lowest_eigenvalues(p.spec, p.grid.refined(), 1)[0];
  return (first.coarse - first.fine) / (second.coarse - second.fine);
}

TEST(SturmCount, DiagonalMatrix) {
  SymmetricTridiagonal t{{1.0, 2.0, 3.0, 4.0}, {0.0, 0.0, 0.0}};
  EXPECT_EQ(sturm_count(t, 0.5), 0);
  EXPECT_EQ(sturm_count(t, 2.5), 2);
  EXPECT_EQ(sturm_count(t, 10.0), 4);
  const auto ev = smallest_eigenvalues(t, 3, 1e-12);
  EXPECT_NEAR(ev[0], 1.0, 1e-11);
  EXPECT_NEAR(ev[2], 3.0, 1e-11);
}

TEST(SturmCount, DiscreteLaplacianSpectrum) {
  // -u'' on (0, pi) with Dirichlet ends: eigenvalues (2 - 2 cos(k h)) / h^2.
  SturmLiouvilleSpec s;
  s.potential = [](double) { return 0.0; };
  const Grid1D g{0.0, M_PI, 101};
  const auto ev = smallest_eigenvalues(assemble(s, g), 3, 1e-13);
  const double h = g.h();
  for (int k = 1; k <= 3; ++k) {
    EXPECT_NEAR(ev[static_cast<std::size_t>(k - 1)], (2 - 2 * std::cos(k * h)) / (h * h), 1e-10);
  }
}

TEST(LowestEigenvalues, HalfOscillator) {
  const auto ev = lowest_eigenvalues(oscillator(), Grid1D{0.0, 12.0, 4096}, 2);
  EXPECT_NEAR(ev[0].value, 3.0, 1e-6);
  EXPECT_NEAR(ev[1].value, 7.0, 1e-6);
  EXPECT_LE(std::abs(ev[0].value - 3.0), ev[0].error + 1e-9);
}

TEST(LowestEigenvalues, NeumannOscillator) {
  SturmLiouvilleSpec s = oscillator();
  s.left = Boundary::neumann();
  const auto ev = lowest_eigenvalues(s, Grid1D{0.0, 12.0, 4096}, 2);
  EXPECT_NEAR(ev[0].value, 1.0, 1e-6);
  EXPECT_NEAR(ev[1].value, 5.0, 1e-6);
}

TEST(LowestEigenvalues, RobinEndMatchesTranscendentalEquation) {
  // -u'' on (0, 1), u'(0) = g u(0), u(1) = 0: sqrt(E) = -g tan(sqrt(E)).
  SturmLiouvilleSpec s;
  s.potential = [](double) { return 0.0; };
  s.left = Boundary::robin(1.0);
  const double e = lowest_eigenvalues(s, Grid1D{0.0, 1.0, 2048}, 1)[0].value;
  const double k = std::sqrt(e);
  EXPECT_NEAR(k + std::tan(k), 0.0, 1e-6);
}

TEST(LowestEigenvalues, RejectsBadInput) {
  EXPECT_THROW(lowest_eigenvalues(oscillator(), Grid1D{0.0, 1.0, 100}, 11), magspec::DomainError);
  EXPECT_THROW(assemble(oscillator(), Grid1D{0.0, 1.0, 10}), magspec::DomainError);
  SturmLiouvilleSpec bad;
  bad.potential = [](double r) { return 1.0 / (r - 0.5); };
  bad.left = Boundary::neumann();
  EXPECT_THROW(assemble(bad, Grid1D{0.0, 1.0, 65}), magspec::IndefiniteAssembly);
}

TEST(ExteriorSpec, ModeOneAgreesWithSecularRoot) {
  const auto ev = lowest_eigenvalues(exterior_fibre_spec(1, 0.3), 2);
  EXPECT_GT(ev[0].value, 0.0);
  EXPECT_LT(ev[0].value, 0.3);
  EXPECT_LE(std::abs(ev[0].value - magspec::fibre::solve_band(1, 0.3)), ev[0].error + 1e-6);
  EXPECT_GT(ev[1].value, 0.3);
}

TEST(ExteriorSpec, NonPositiveModesStayAboveLandauLevel) {
  EXPECT_GT(lowest_eigenvalues(exterior_fibre_spec(0, 0.5), 1)[0].value, 0.5);
  EXPECT_GE(lowest_eigenvalues(exterior_fibre_spec(-1, 0.5), 1)[0].value, 1.0 - 1e-9);
}

TEST(ExteriorSpec, OracleAgreementGrid) {
  for (int m : {1, 2, 3}) {
    for (double b : {0.1, 0.3, 0.5}) {
      const auto ev = lowest_eigenvalues(exterior_fibre_spec(m, b), 1)[0];
      EXPECT_LE(std::abs(ev.value - magspec::fibre::solve_band(m, b)), ev.error + 1e-6)
          << m << ' ' << b;
    }
  }
}

TEST(ExteriorSpec, TruncationRadiusIsLargeEnough) {
  for (int m : {1, 3}) {
    for (double b : {0.1, 0.5}) {
      const auto base = exterior_fibre_spec(m, b);
      const double h = base.grid.h();
      const int n = static_cast<int>(std::lround(1.5 * (base.grid.n - 1))) + 1;
      const auto wide = exterior_fibre_spec(m, b, 1.0 + (n - 1) * h, n);
      const double e0 = lowest_eigenvalues(base, 1)[0].coarse;
      const double e1 = lowest_eigenvalues(wide, 1)[0].coarse;
      EXPECT_LT(std::abs(e0 - e1), 1e-9) << m << ' ' << b;
    }
  }
}

TEST(Convergence, SecondOrderForEveryFamily) {
  const std::vector<Problem> problems = {
      exterior_fibre_spec(1, 0.3, 0.0, 1024),
      exterior_fibre_spec(2, 1.0, 0.0, 1024),
      effective_operator_spec(1, 0.2, 10.0, 1024),
      effective_star_spec(2, 10.0, 1024),
      interior_fibre_spec(1, 1.0, 1024),
  };
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const double factor = convergence_factor(problems[i]);
    EXPECT_GT(factor, 3.2) << i;
    EXPECT_LT(factor, 4.8) << i;
  }
}

TEST(EffectiveStar, GroundEnergyIsTwoAndGapIsFour) {
  for (int m : {1, 2, 3}) {
    const auto ev = lowest_eigenvalues(effective_star_spec(m), 2);
    EXPECT_NEAR(ev[0].value, 2.0, std::max(5e-4, 3 * ev[0].error)) << m;
    EXPECT_GE(ev[1].value, 6.0 - 1e-3) << m;
  }
}

TEST(EffectiveStar, ExplicitGroundStateHasEnergyTwo) {
  // Discrete Rayleigh quotient of r^{m+1/2} e^{-r^2/2} tends to 2 at second order.
  auto defect = [](int m, int n) {
    const auto p = effective_star_spec(m, 10.0, n);
    const auto t = assemble(p.spec, p.grid);
    std::vector<double> u;
    for (int i = 1; i <= p.grid.n - 2; ++i) {
      const double r = p.grid.node(i);
      u.push_back(std::pow(r, m + 0.5) * std::exp(-r * r / 2));
    }
    double num = 0, den = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      double tu = t.diag[i] * u[i];
      if (i > 0) tu += t.off[i - 1] * u[i - 1];
      if (i + 1 < u.size()) tu += t.off[i] * u[i + 1];
      num += u[i] * tu;
      den += u[i] * u[i];
    }
    return num / den - 2.0;
  };
  for (int m : {2, 3}) {
    const double d1 = defect(m, 1001), d2 = defect(m, 2001);
    EXPECT_LT(std::abs(d1), 1e-4);
    EXPECT_NEAR(d1 / d2, 4.0, 0.8) << m;
  }
}

TEST(EffectiveOperator, ScalingIdentity) {
  const double b = 0.2;
  const auto mu = lowest_eigenvalues(effective_operator_spec(1, b), 1)[0];
  const double lambda = magspec::fibre::solve_band(1, b);
  EXPECT_LE(std::abs(0.5 * b * mu.value - lambda), 0.5 * b * mu.error + 1e-6);
}

TEST(EffectiveOperator, ApproachesStarLimitMonotonically) {
  double prev = 1e9;
  for (double b : {0.4, 0.2, 0.1, 0.05}) {
    const double gap = std::abs(lowest_eigenvalues(effective_operator_spec(1, b), 1)[0].value - 2.0);
    EXPECT_LT(gap, prev) << b;
    prev = gap;
  }
}

TEST(InteriorSpec, ModeZeroIsFiniteAtOrigin) {
  const auto ev = lowest_eigenvalues(interior_fibre_spec(0, 1.0), 1)[0];
  EXPECT_TRUE(std::isfinite(ev.value));
  EXPECT_GT(ev.value, 0.0);
}

}  // namespace
