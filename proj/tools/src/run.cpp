#include "magspec/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "magspec/discretize.hpp"
#include "magspec/domain_io.hpp"
#include "magspec/errors.hpp"
#include "magspec/fibre.hpp"
#include "magspec/geometry.hpp"
#include "magspec/quasimode.hpp"
#include "selftest.hpp"

namespace magspec::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Config: return "config";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::Numerical: return "numerical";
  }
  return "numerical";
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Config: return kConfigError;
    case ErrorKind::Hypothesis: return kHypothesisViolation;
    case ErrorKind::Numerical: return kNumericalFailure;
  }
  return kNumericalFailure;
}

int exit_code_for(const std::string& kind) {
  if (kind == "config") return kConfigError;
  if (kind == "hypothesis") return kHypothesisViolation;
  return kNumericalFailure;
}

std::string context(int m, double b) {
  return "m=" + std::to_string(m) + ",b=" + format_double(b);
}

// Runs one sample; a failure is recorded and the sweep continues.
template <typename F>
void guarded(Report& report, const std::string& ctx, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    report.errors.push_back({ctx, kind_name(e.kind()), e.what()});
  }
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> modes(const RunConfig& c, std::vector<int> fallback) {
  return sorted_unique(c.m.empty() ? std::move(fallback) : c.m);
}

std::vector<double> fields(const RunConfig& c, std::vector<double> fallback) {
  return sorted_unique(c.b.empty() ? std::move(fallback) : c.b);
}

std::vector<double> required_fields(const RunConfig& c) {
  if (c.b.empty()) throw DomainError("this command needs --b or --grid");
  return sorted_unique(c.b);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_positive_fields(const std::vector<double>& bs) {
  for (double b : bs) require(b > 0.0, "field strengths must be positive");
}

geometry::StarShapedDomain load_domain(const RunConfig& c) {
  require(!c.domain.empty(), "this command needs --domain");
  return parse_domain_file(c.domain);
}

Report band_scan(const RunConfig& c) {
  const auto ms = modes(c, {1});
  const auto bs = required_fields(c);
  require_positive_fields(bs);
  for (int m : ms) {
    require(m >= 1, "band-scan needs m >= 1");
    for (double b : bs) {
      if (b > 2.0 * m) throw HypothesisViolated("no band below b for b > 2m at " + context(m, b));
    }
  }
  Report r;
  r.columns = {"m", "b", "lambda", "bracket_lo", "bracket_hi", "fd_check", "fd_err"};
  for (int m : ms) {
    for (double b : bs) {
      guarded(r, context(m, b), [&] {
        const auto s = fibre::solve_band_detailed(m, b);
        const auto fd = discretize::lowest_eigenvalues(discretize::exterior_fibre_spec(m, b), 1)[0];
        r.add_row({static_cast<long long>(m), b, s.lambda, s.bracket_lo, s.bracket_hi, fd.value,
                   fd.error});
      });
    }
  }
  return r;
}

Report crossing(const RunConfig& c) {
  const auto ms = modes(c, {2});
  for (int m : ms) require(m >= 2, "crossing needs m >= 2");
  Report r;
  r.columns = {"m", "b_star", "lambda_star", "formula_value", "abs_diff", "band_gap",
               "ordering_threshold"};
  for (int m : ms) {
    guarded(r, "m=" + std::to_string(m), [&] {
      const auto x = fibre::find_crossing(m);
      r.add_row({static_cast<long long>(m), x.b_star, x.lambda_star, x.formula_value, x.abs_diff,
                 x.band_gap, fibre::ordering_threshold(m)});
    });
  }
  return r;
}

Report temple(const RunConfig& c) {
  const auto ms = modes(c, {1, 2});
  for (int m : ms) require(m >= 1, "temple needs m >= 1");
  Report r;
  r.columns = {"m", "b", "eta", "eps_sq", "beta", "beta_nominal", "lower", "upper",
               "fd_eigenvalue", "fd_err", "fd_shift", "secular_shift", "gap_fd", "gap_verified",
               "contains_fd"};
  for (int m : ms) {
    const auto bs = fields(c, {0.02, 0.05, m / 10.0});
    require_positive_fields(bs);
    for (double b : bs) {
      if (!(b < 2.0 * m)) throw HypothesisViolated("temple needs b < 2m at " + context(m, b));
    }
    for (double b : bs) {
      guarded(r, context(m, b), [&] {
        const auto t = quasimode::temple_bounds(m, b);
        const auto fd = discretize::lowest_eigenvalues(discretize::exterior_fibre_spec(m, b), 1)[0];
        const double fd_shift = fd.value - b;
        const double secular_shift = fibre::solve_band(m, b) - b;
        r.add_row({static_cast<long long>(m), b, t.eta, t.eps_sq, t.beta, t.beta_nominal, t.lower,
                   t.upper, fd.value, fd.error, fd_shift, secular_shift, t.gap_fd, t.gap_verified,
                   t.lower - fd.error <= fd_shift && fd_shift <= t.upper + fd.error});
      });
    }
  }
  return r;
}

Report disk_asymptotics(const RunConfig& c) {
  const auto ks = modes(c, {1, 2});
  const auto bs = fields(c, {0.01, 0.02, 0.04, 0.08});
  const double R = c.R.value_or(1.0);
  require(R > 0.0, "--R must be positive");
  require_positive_fields(bs);
  for (int k : ks) {
    require(k >= 1, "disk-asymptotics needs k >= 1");
    for (double b : bs) {
      if (!(b * R * R < 2.0 * k)) throw HypothesisViolated("needs b R^2 < 2k at " + context(k, b));
    }
  }
  Report r;
  r.columns = {"k", "R", "b", "lambda", "asymptotic", "ratio", "deviation_over_sqrt_b"};
  for (int k : ks) {
    for (double b : bs) {
      guarded(r, context(k, b), [&] {
        const double lambda = quasimode::scaled_disk_eigenvalue(k, R, b);
        const double predicted = quasimode::asymptotic_prediction(k, R, b);
        const double ratio = (b - lambda) / (b - predicted);
        r.add_row({static_cast<long long>(k), R, b, lambda, predicted, ratio,
                   std::abs(ratio - 1.0) / std::sqrt(b)});
      });
    }
  }
  return r;
}

Report effective(const RunConfig& c) {
  const auto ms = modes(c, {1, 2, 3});
  const auto bs = fields(c, {0.05, 0.1, 0.2, 0.4});
  require_positive_fields(bs);
  for (int m : ms) require(m >= 1, "effective needs m >= 1");
  Report r;
  r.columns = {"m", "operator", "b", "mu1", "mu1_err", "mu2", "mu2_err", "scaled_lambda1",
               "secular_lambda1"};
  for (int m : ms) {
    guarded(r, "m=" + std::to_string(m) + ",star", [&] {
      const auto mu = discretize::lowest_eigenvalues(discretize::effective_star_spec(m), 2);
      r.add_row({static_cast<long long>(m), std::string("star"), 0.0, mu[0].value, mu[0].error,
                 mu[1].value, mu[1].error, kNaN, kNaN});
    });
    for (double b : bs) {
      guarded(r, context(m, b), [&] {
        const auto mu = discretize::lowest_eigenvalues(discretize::effective_operator_spec(m, b), 2);
        const double secular = b < 2.0 * m ? fibre::solve_band(m, b) : kNaN;
        r.add_row({static_cast<long long>(m), std::string("scaled"), b, mu[0].value, mu[0].error,
                   mu[1].value, mu[1].error, 0.5 * b * mu[0].value, secular});
      });
    }
  }
  return r;
}

Report domain_moments(const RunConfig& c) {
  const auto d = load_domain(c);
  const double p = c.p.value_or(4.0);
  require(p > 2.0, "--p must exceed 2");
  Report r;
  r.columns = {"order", "min_radius", "max_radius", "area", "p", "I_p", "I_4", "G",
               "R_star", "area_I4_minus_pi_sq"};
  const double I4 = geometry::moment_Ip(d, 4.0);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  r.add_row({static_cast<long long>(d.order()), d.min_radius(), d.max_radius(), geometry::area(d),
             p, geometry::moment_Ip(d, p), I4, geometry::weak_field_bound_G(d),
             geometry::matched_disk_radius(d), geometry::area(d) * I4 - pi2});
  return r;
}

Report domain_bound(const RunConfig& c) {
  const auto d = load_domain(c);
  const auto bs = required_fields(c);
  require_positive_fields(bs);
  for (double b : bs) {
    if (!(b < 5.0 - std::sqrt(17.0))) {
      throw HypothesisViolated("domain-bound needs b < 5 - sqrt(17), got " + format_double(b));
    }
  }
  Report r;
  r.columns = {"b", "disk_eigenvalue", "boundary_term", "exterior_norm_sq", "bound",
               "bound_minus_disk"};
  for (double b : bs) {
    guarded(r, "b=" + format_double(b), [&] {
      const auto t = geometry::upper_bound_minmax(d, b);
      r.add_row({b, t.disk_eigenvalue, t.boundary_term, t.exterior_norm_sq, t.bound,
                 t.bound - t.disk_eigenvalue});
    });
  }
  return r;
}

Report local_opt(const RunConfig& c) {
  const auto d = load_domain(c);
  const auto bs = required_fields(c);
  require_positive_fields(bs);
  require(c.p.has_value(), "local-opt needs --p");
  const double p = *c.p;
  const double R = c.R.value_or(1.0);
  require(p > 2.0, "--p must exceed 2");
  require(R > 0.0, "--R must be positive");
  for (double b : bs) {
    const double bu = b * R * R;
    if (!(bu < 4.0 - 2.0 * std::sqrt(3.0))) {
      throw HypothesisViolated("local-opt needs b R^2 < 4 - 2 sqrt(3)");
    }
    if (!(p > geometry::p_star(bu))) {
      throw HypothesisViolated("local-opt needs p > p_star(b R^2) = " +
                               format_double(geometry::p_star(bu)));
    }
  }
  Report r;
  r.columns = {"b", "p", "R", "p_star", "alpha", "scale", "moment", "disk_eigenvalue",
               "boundary_term", "exterior_norm_sq", "bound", "jensen_rhs", "jensen_margin",
               "jensen_ok", "inequality_holds", "window_x_lo", "window_x_hi", "window_rho_lo",
               "window_rho_hi", "rho_min", "rho_max"};
  for (double b : bs) {
    guarded(r, "b=" + format_double(b), [&] {
      const auto v = geometry::local_optimality_check(d, b, p, R);
      r.add_row({v.b, v.p, v.R, v.p_star, v.alpha, v.scale, v.moment, v.disk_eigenvalue,
                 v.boundary_term, v.exterior_norm_sq, v.bound, v.jensen_rhs, v.jensen_margin,
                 v.jensen_ok, v.inequality_holds, v.window.x_lo, v.window.x_hi, v.window.rho_lo,
                 v.window.rho_hi, v.rho_min, v.rho_max});
    });
  }
  return r;
}

Report weak_field(const RunConfig& c) {
  const auto d = load_domain(c);
  const auto bs = fields(c, {0.01, 0.05, 0.1});
  require_positive_fields(bs);
  const double G = geometry::weak_field_bound_G(d);
  const double R_star = geometry::matched_disk_radius(d);
  const double c_opt = geometry::optimal_trial_parameter(d);
  Report r;
  r.columns = {"area", "I_4", "G", "R_star", "G_disk", "G_margin", "c_opt", "b", "trial_bound",
               "regime"};
  for (double b : bs) {
    r.add_row({geometry::area(d), geometry::moment_Ip(d, 4.0), G, R_star, R_star * R_star,
               G - R_star * R_star, c_opt, b, geometry::weak_field_trial_bound(d, b, c_opt),
               std::string(b > 0.1 ? "outside-weak-field" : "weak-field")});
  }
  return r;
}

}  // namespace

Report execute(const RunConfig& config) {
  switch (config.command) {
    case Command::BandScan: return band_scan(config);
    case Command::Crossing: return crossing(config);
    case Command::Temple: return temple(config);
    case Command::DiskAsymptotics: return disk_asymptotics(config);
    case Command::Effective: return effective(config);
    case Command::DomainMoments: return domain_moments(config);
    case Command::DomainBound: return domain_bound(config);
    case Command::LocalOpt: return local_opt(config);
    case Command::WeakFieldG: return weak_field(config);
    case Command::SpecfunSelftest: return specfun_selftest();
  }
  throw DomainError("unknown command");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.out << '\n';
      return kConfigError;
    }
  }
  std::ostream& sink = config.out.empty() ? out : file;

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = execute(config);
  } catch (const Error& e) {
    err << "error (" << kind_name(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (config.format == Format::Json) {
    write_json(report, config, wall, sink);
  } else {
    write_csv(report, sink);
    if (!report.errors.empty()) {
      if (config.out.empty()) {
        write_error_csv(report, err);
      } else {
        std::ofstream manifest(config.out + ".errors.csv", std::ios::binary);
        write_error_csv(report, manifest);
      }
    }
  }

  int code = kSuccess;
  for (const auto& e : report.errors) code = std::max(code, exit_code_for(e.kind));
  for (const auto& e : report.errors) err << "failed " << e.context << ": " << e.message << '\n';
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  std::string help;
  try {
    config = parse_command_line(argc, argv, &help);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  if (!config) {
    out << help;
    return kSuccess;
  }
  return run(*config, out, err);
}

}  // namespace magspec::cli
