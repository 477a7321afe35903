#pragma once

namespace magspec::quasimode {

/// Psi(r) = chi(r) f(r) with chi = 1 + B r^{-2m}, f = r^m e^{-b r^2 / 4},
/// B = (m - b/2)/(m + b/2), chosen so that Psi'(1) = 0.
class Quasimode {
 public:
  Quasimode(int m, double b);

  int m() const { return m_; }
  double b() const { return b_; }
  double B() const { return B_; }

  double chi(double r) const;
  double f(double r) const;
  double psi(double r) const;
  double psi_prime(double r) const;
  /// Closed form of (H - b) Psi: -2 b m B r^{-m} e^{-b r^2/4}.
  double residual(double r) const;

 private:
  int m_;
  double b_;
  double B_;
};

struct NormTerms {
  double a1;  // int r^{2m} e^{-br^2/2} r dr, via the incomplete gamma function
  double a2;  // int B^2 r^{-2m} e^{-br^2/2} r dr, by quadrature
  double a3;  // int 2B e^{-br^2/2} r dr = 2B e^{-b/2}/b
  double total() const { return a1 + a2 + a3; }
};

/// int_1^inf r^{1-2m} e^{-b r^2/2} dr.
double inverse_power_integral(int m, double b);

NormTerms quasimode_norm_terms(const Quasimode& q);
double quasimode_norm_sq(const Quasimode& q);
/// ||(H - b) Psi||^2.
double residual_norm_sq(const Quasimode& q);
/// <(H - b) Psi, Psi>.
double temple_inner_product(const Quasimode& q);

struct TempleReport {
  int m;
  double b;
  double norm_sq;
  double inner_product;
  double eta;
  double eps_sq;
  double beta;          // gap parameter actually used
  double beta_nominal;  // 2b
  double gap_fd;        // second FD eigenvalue minus b, lower end of its error bar
  bool gap_verified;    // second FD eigenvalue >= 3b - tol
  double lower;         // eta - eps^2 / (beta - eta)
  double upper;         // eta
};

/// Two-sided bound on lambda_1^(m)(b) - b from Temple's inequality. The
/// gap parameter is 2b unless the finite-difference second eigenvalue shows
/// a smaller gap, in which case the certified gap is used instead.
TempleReport temple_bounds(int m, double b);

/// Same with an explicit gap parameter; no gap verification is attempted.
TempleReport temple_bounds(int m, double b, double beta);

/// b - R^{2k} b^{k+1} / (2^{k-1} (k-1)!).
double asymptotic_prediction(int k, double R, double b);

/// lambda(b, B_R) = R^{-2} lambda(b R^2, B_1) for the exterior of a disk.
double scaled_disk_eigenvalue(int k, double R, double b);

}  // namespace magspec::quasimode
