#include "magspec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace magspec {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double f_lo, double f_hi, double x_tol, int max_iter) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  RootResult out;
  double a = lo, fa = f_lo;
  double b = hi, fb = f_hi;
  if (fa == 0.0) return {a, a, a, 0, true};
  if (fb == 0.0) return {b, b, b, 0, true};

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iter; ++iter) {
    out.iterations = iter;
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + x_tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) {
      out.root = b;
      out.lo = std::min(b, c);
      out.hi = std::max(b, c);
      out.converged = true;
      return out;
    }
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  out.root = b;
  out.lo = std::min(b, c);
  out.hi = std::max(b, c);
  return out;
}

}  // namespace magspec
