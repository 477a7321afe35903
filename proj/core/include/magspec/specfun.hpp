#pragma once

namespace magspec::specfun {

/// Parameters of Kummer's equation z w'' + (c - z) w' - a w = 0.
struct KummerArgs {
  double a;
  double c;
  double z;
};

/// Parameters of Whittaker's equation. Related to Kummer's by
/// a = mu - kappa + 1/2, c = 1 + 2 mu.
struct WhittakerArgs {
  double kappa;
  double mu;
  double z;
};

inline KummerArgs to_kummer(const WhittakerArgs& w) {
  return {w.mu - w.kappa + 0.5, 1.0 + 2.0 * w.mu, w.z};
}

struct SeriesValue {
  double value;
  double cancellation;  // eps * max|term| / |sum|
  int terms;
};

/// Kummer M(a, c, z) by its power series with compensated summation.
SeriesValue kummer_m_series(const KummerArgs& args);

/// Throws PrecisionLoss when the series loses more than 8 digits.
double kummer_m(const KummerArgs& args);

/// Tricomi U(a, c, z) for a > 0, z > 0 from its Laplace-type integral.
double kummer_u(const KummerArgs& args);

double whittaker_m(const WhittakerArgs& args);

/// W(kappa, mu, z) for mu - kappa + 1/2 > 0.
double whittaker_w(const WhittakerArgs& args);

/// W for any real kappa: values with mu - kappa + 1/2 <= 0 are reached by
/// the upward three-term recurrence in kappa from two directly evaluable
/// neighbours.
double whittaker_w_general(const WhittakerArgs& args);

struct RecurrenceStep {
  double value;
  double cancellation;  // largest term magnitude over |value|
};

/// W(kappa + 1) from W(kappa) and W(kappa - 1). The recurrence is linear,
/// so any common positive factor on the inputs carries to the output.
RecurrenceStep raise_w(double kappa, double mu, double z, double w_kappa,
                       double w_kappa_minus_one);

double whittaker_m_deriv(const WhittakerArgs& args);
double whittaker_w_deriv(const WhittakerArgs& args);

enum class Relation {
  HalfArgument,  // shifts kappa and mu by 1/2
  ThreeTerm,     // kappa - 1, kappa, kappa + 1
};

struct Residual {
  double absolute;
  double scale;  // largest term in the relation
  double relative() const { return scale > 0.0 ? absolute / scale : absolute; }
};

/// Left-minus-right residual of a contiguous relation for M.
Residual contiguous_m(const WhittakerArgs& args, Relation relation);

/// Same for W. Every W involved must satisfy mu - kappa + 1/2 > 0; the
/// three-term and half-argument relations therefore need
/// mu - kappa + 1/2 > 1. Throws DomainError otherwise.
Residual contiguous_w(const WhittakerArgs& args, Relation relation);

/// Gamma(s, x) for integer s >= 1.
double upper_incomplete_gamma(int s, double x);

}  // namespace magspec::specfun
