#pragma once

#include <functional>
#include <vector>

namespace magspec::discretize {

enum class BoundaryKind { Dirichlet, Neumann, Robin };

/// Boundary row. Robin means u' = coefficient * u at the left end.
struct Boundary {
  BoundaryKind kind = BoundaryKind::Dirichlet;
  double coefficient = 0.0;

  static Boundary dirichlet() { return {BoundaryKind::Dirichlet, 0.0}; }
  static Boundary neumann() { return {BoundaryKind::Neumann, 0.0}; }
  static Boundary robin(double gamma) { return {BoundaryKind::Robin, gamma}; }
};

/// Flat: -u'' + q u on an interval. Radial: -(1/r)(r u')' + q u on [0, R]
/// with measure r dr, discretised by finite volumes (zero flux at r = 0).
enum class Measure { Flat, Radial };

struct Grid1D {
  double r_min = 0.0;
  double r_max = 1.0;
  int n = 4096;
  double h() const { return (r_max - r_min) / (n - 1); }
  double node(int i) const { return r_min + i * h(); }
  /// Same interval with half the spacing.
  Grid1D refined() const { return {r_min, r_max, 2 * n - 1}; }
};

struct SturmLiouvilleSpec {
  std::function<double(double)> potential;
  Boundary left = Boundary::dirichlet();
  Boundary right = Boundary::dirichlet();
  Measure measure = Measure::Flat;
};

struct Problem {
  SturmLiouvilleSpec spec;
  Grid1D grid;
};

struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size diag.size() - 1
};

SymmetricTridiagonal assemble(const SturmLiouvilleSpec& spec, const Grid1D& grid);

/// Number of eigenvalues strictly below x.
int sturm_count(const SymmetricTridiagonal& t, double x);

/// The k smallest eigenvalues, each located by bisection to abs_tol.
std::vector<double> smallest_eigenvalues(const SymmetricTridiagonal& t, int k,
                                         double abs_tol = 1e-10);

struct EigenEstimate {
  double value;   // extrapolated from the two grids
  double error;   // |fine - coarse| / 3
  double coarse;
  double fine;
};

/// k <= 10 lowest eigenvalues on `grid` and on its refinement, combined by
/// Richardson extrapolation for a second-order scheme.
std::vector<EigenEstimate> lowest_eigenvalues(const SturmLiouvilleSpec& spec,
                                              const Grid1D& grid, int k);

inline std::vector<EigenEstimate> lowest_eigenvalues(const Problem& p, int k) {
  return lowest_eigenvalues(p.spec, p.grid, k);
}

inline constexpr int kDefaultNodes = 4096;

/// Default truncation radius: b R^2 / 2 = 40 + 2m.
double default_exterior_radius(int m, double b);

/// Exterior fibre operator after v = r^{1/2} u on [1, r_max]: Robin
/// v'(1) = v(1)/2 from the Neumann condition, Dirichlet at r_max.
Problem exterior_fibre_spec(int m, double b, double r_max = 0.0, int n = kDefaultNodes);

/// Interior fibre operator on [0, 1] in the radial form, Neumann at r = 1.
Problem interior_fibre_spec(int m, double b, int n = kDefaultNodes);

/// Half-line operator whose spectrum, times b/2, is that of the exterior
/// fibre: shifted potential with a Robin condition at 0.
Problem effective_operator_spec(int m, double b, double length = 10.0, int n = kDefaultNodes);

/// Its b -> 0 limit, with Dirichlet at 0. The grid starts one spacing away
/// from the singular origin.
Problem effective_star_spec(int m, double length = 10.0, int n = kDefaultNodes);

}  // namespace magspec::discretize
