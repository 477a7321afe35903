#include "magspec/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magspec/errors.hpp"

namespace magspec::discretize {
namespace {

double potential_at(const SturmLiouvilleSpec& spec, double r) {
  const double q = spec.potential(r);
  if (!std::isfinite(q)) {
    throw IndefiniteAssembly("potential is not finite at r = " + std::to_string(r));
  }
  return q;
}

SymmetricTridiagonal assemble_flat(const SturmLiouvilleSpec& spec, const Grid1D& grid) {
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  const int first = spec.left.kind == BoundaryKind::Dirichlet ? 1 : 0;
  const int last = spec.right.kind == BoundaryKind::Dirichlet ? grid.n - 2 : grid.n - 1;
  if (spec.right.kind == BoundaryKind::Robin) {
    throw DomainError("Robin rows are supported at the left end only");
  }

  SymmetricTridiagonal t;
  for (int i = first; i <= last; ++i) {
    t.diag.push_back(2.0 * inv_h2 + potential_at(spec, grid.node(i)));
  }
  t.off.assign(t.diag.size() - 1, -inv_h2);

  // Ghost-node rows: the row touching the boundary carries twice the
  // neighbour coupling; the diagonal scaling diag(1/sqrt2, 1, ...) restores
  // symmetry without changing the spectrum.
  if (first == 0) {
    const double gamma = spec.left.kind == BoundaryKind::Robin ? spec.left.coefficient : 0.0;
    t.diag.front() += 2.0 * h * gamma * inv_h2;
    t.off.front() = -std::sqrt(2.0) * inv_h2;
  }
  if (last == grid.n - 1) {
    t.off.back() = -std::sqrt(2.0) * inv_h2;
  }
  return t;
}

// Vertex-centred finite volumes for -(1/r)(r u')' + q u with weight r.
SymmetricTridiagonal assemble_radial(const SturmLiouvilleSpec& spec, const Grid1D& grid) {
  if (spec.left.kind == BoundaryKind::Robin || spec.right.kind == BoundaryKind::Robin) {
    throw DomainError("radial assembly supports Dirichlet or zero-flux ends only");
  }
  const double h = grid.h();
  const int n = grid.n;
  std::vector<double> weight(static_cast<std::size_t>(n));
  std::vector<double> flux(static_cast<std::size_t>(n - 1));  // between i and i+1
  for (int i = 0; i < n; ++i) {
    const double r = grid.node(i);
    if (i == 0) {
      weight[0] = 0.5 * h * (r + 0.25 * h);
    } else if (i == n - 1) {
      weight[static_cast<std::size_t>(i)] = 0.5 * h * (r - 0.25 * h);
    } else {
      weight[static_cast<std::size_t>(i)] = r * h;
    }
    if (i + 1 < n) flux[static_cast<std::size_t>(i)] = (r + 0.5 * h) / h;
  }

  const int first = spec.left.kind == BoundaryKind::Dirichlet ? 1 : 0;
  const int last = spec.right.kind == BoundaryKind::Dirichlet ? n - 2 : n - 1;
  SymmetricTridiagonal t;
  for (int i = first; i <= last; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    double k = potential_at(spec, grid.node(i)) * weight[iu];
    if (i > 0) k += flux[iu - 1];
    if (i < n - 1) k += flux[iu];
    t.diag.push_back(k / weight[iu]);
    if (i < last) t.off.push_back(-flux[iu] / std::sqrt(weight[iu] * weight[iu + 1]));
  }
  return t;
}

}  // namespace

SymmetricTridiagonal assemble(const SturmLiouvilleSpec& spec, const Grid1D& grid) {
  if (grid.n < 64 || !(grid.r_max > grid.r_min)) {
    throw DomainError("grid needs at least 64 nodes on a non-empty interval");
  }
  return spec.measure == Measure::Flat ? assemble_flat(spec, grid) : assemble_radial(spec, grid);
}

int sturm_count(const SymmetricTridiagonal& t, double x) {
  constexpr long double kTiny = 1e-300L;
  int count = 0;
  long double q = static_cast<long double>(t.diag[0]) - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < t.diag.size(); ++i) {
    if (q == 0) q = kTiny;
    const long double e = t.off[i - 1];
    q = static_cast<long double>(t.diag[i]) - x - e * e / q;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> smallest_eigenvalues(const SymmetricTridiagonal& t, int k, double abs_tol) {
  const std::size_t n = t.diag.size();
  if (k < 1 || static_cast<std::size_t>(k) > n) throw DomainError("invalid eigenvalue count");

  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::max(hi, t.diag[i] + radius);
  }
  lo -= 1.0;
  hi += 1.0;

  std::vector<double> values;
  double floor = lo;
  for (int j = 0; j < k; ++j) {
    double a = floor;
    double b = hi;
    int iter = 0;
    while (b - a > abs_tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
      if (++iter > 200) throw BisectionStall("Sturm bisection exceeded 200 steps");
    }
    values.push_back(0.5 * (a + b));
    floor = a;
  }
  return values;
}

std::vector<EigenEstimate> lowest_eigenvalues(const SturmLiouvilleSpec& spec,
                                              const Grid1D& grid, int k) {
  if (k < 1 || k > 10) throw DomainError("lowest_eigenvalues: k must be in 1..10");
  constexpr double kTol = 1e-11;
  const auto coarse = smallest_eigenvalues(assemble(spec, grid), k, kTol);
  const auto fine = smallest_eigenvalues(assemble(spec, grid.refined()), k, kTol);
  std::vector<EigenEstimate> out;
  for (int j = 0; j < k; ++j) {
    const double c = coarse[static_cast<std::size_t>(j)];
    const double f = fine[static_cast<std::size_t>(j)];
    out.push_back({f + (f - c) / 3.0, std::abs(f - c) / 3.0 + kTol, c, f});
  }
  return out;
}

double default_exterior_radius(int m, double b) {
  return std::max(2.0, std::sqrt(2.0 * (40.0 + 2.0 * std::abs(m)) / b));
}

Problem exterior_fibre_spec(int m, double b, double r_max, int n) {
  if (!(b > 0.0)) throw DomainError("exterior_fibre_spec: b must be positive");
  if (r_max <= 0.0) r_max = default_exterior_radius(m, b);
  const double mm = static_cast<double>(m);
  SturmLiouvilleSpec spec;
  spec.potential = [mm, b](double r) {
    return (mm * mm - 0.25) / (r * r) - mm * b + 0.25 * b * b * r * r;
  };
  spec.left = Boundary::robin(0.5);
  spec.right = Boundary::dirichlet();
  return {spec, {1.0, r_max, n}};
}

Problem interior_fibre_spec(int m, double b, int n) {
  if (!(b > 0.0)) throw DomainError("interior_fibre_spec: b must be positive");
  const double mm = static_cast<double>(m);
  SturmLiouvilleSpec spec;
  spec.potential = [mm, b](double r) {
    const double v = (mm == 0.0 ? 0.0 : mm / r) - 0.5 * b * r;
    return v * v;
  };
  spec.measure = Measure::Radial;
  spec.left = m == 0 ? Boundary::neumann() : Boundary::dirichlet();
  spec.right = Boundary::neumann();
  return {spec, {0.0, 1.0, n}};
}

Problem effective_operator_spec(int m, double b, double length, int n) {
  if (m < 1 || !(b > 0.0)) throw DomainError("effective_operator_spec: needs m >= 1, b > 0");
  const double shift = std::sqrt(0.5 * b);
  const double mm = static_cast<double>(m);
  SturmLiouvilleSpec spec;
  spec.potential = [mm, shift](double r) {
    const double s = r + shift;
    return (4.0 * mm * mm - 1.0) / (4.0 * s * s) + s * s - 2.0 * mm;
  };
  spec.left = Boundary::robin(std::sqrt(1.0 / (2.0 * b)));
  spec.right = Boundary::dirichlet();
  return {spec, {0.0, length, n}};
}

Problem effective_star_spec(int m, double length, int n) {
  if (m < 1) throw DomainError("effective_star_spec: needs m >= 1");
  const double mm = static_cast<double>(m);
  SturmLiouvilleSpec spec;
  spec.potential = [mm](double r) {
    return (4.0 * mm * mm - 1.0) / (4.0 * r * r) + r * r - 2.0 * mm;
  };
  spec.left = Boundary::dirichlet();
  spec.right = Boundary::dirichlet();
  return {spec, {0.0, length, n}};
}

}  // namespace magspec::discretize
