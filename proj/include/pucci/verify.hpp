#pragma once

/**
 * @file verify.hpp
 * @brief Verification suites tying the closed forms to the grid solver.
 *
 * Every suite is deterministic for a fixed seed: point sets come from
 * sampling.hpp, reductions are order independent, and the grid solver is
 * single-valued for fixed (h, W, tolerances).
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pucci/domain.hpp"
#include "pucci/eigenfunction.hpp"
#include "pucci/error.hpp"
#include "pucci/grid_fd.hpp"
#include "pucci/parallel.hpp"
#include "pucci/pucci_core.hpp"
#include "pucci/sampling.hpp"

namespace pucci {

// ---------------------------------------------------------------------------
// Supersolution certificates

struct Certificate {
  DomainSpec spec = DomainSpec::square(1.0);
  double mu_lower = 0.0;
  std::string witness;
  double min_slack = 0.0;  ///< min of -M+(D^2 phi) - mu_lower phi over the samples
  double max_slack = 0.0;
  std::size_t n_samples = 0;
  double scale = 1.0;  ///< slack tolerance unit: max(1, mu_lower) * ||phi||_inf
  bool passes = false;

  bool operator==(const Certificate&) const = default;
};

inline constexpr double certificate_tolerance = 1e-11;

/// Evaluates the closed-form witness of `spec` against level mu on `points`.
inline Certificate certify_lower_bound(const DomainSpec& spec, const EllipticityPair& ell, double mu,
                                       const std::vector<Point>& points) {
  if (spec.get_if<Square>()) throw UnsupportedError("certify_lower_bound: no closed-form witness for a square");
  if (points.empty()) throw InvalidInput("certify_lower_bound: empty sample set");
  detail::check_finite(mu, "mu");
  const PiecewiseEigenfunction u(spec, ell);

  std::vector<double> slack(points.size());
  parallel_for(points.size(), [&](std::size_t i) { slack[i] = -u.residual(mu, points[i]); });

  Certificate c{spec, mu, "", 0.0, 0.0, points.size(), 1.0, false};
  c.witness = "closed-form eigenfunction u on " + spec.describe() + ", sup norm " + detail::fmt_num(u.sup_norm());
  c.min_slack = *std::min_element(slack.begin(), slack.end());
  c.max_slack = *std::max_element(slack.begin(), slack.end());
  c.scale = std::max(1.0, mu) * u.sup_norm();
  c.passes = c.min_slack >= -certificate_tolerance * c.scale;
  return c;
}

/// max |M+(D^2 u) + lambda u| / ||u||_inf for the closed form on Omega(omega, gamma).
inline double closed_form_residual(const EllipticityPair& ell, double gamma, std::size_t n, std::uint64_t seed) {
  const DomainSpec spec = DomainSpec::omega_gamma(ell.omega(), gamma);
  const PiecewiseEigenfunction u(spec, ell);
  const std::vector<Point> pts = domain_samples(spec, n, seed);
  std::vector<double> r(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { r[i] = std::abs(u.residual(ell.lambda(), pts[i])); });
  return *std::max_element(r.begin(), r.end()) / u.sup_norm();
}

/// Endpoints 1/sqrt(omega), 1, sqrt(omega) and the midpoints between them;
/// just {1} when omega == 1.
inline std::vector<double> gamma_test_values(double omega) {
  const double r = std::sqrt(omega);
  if (r == 1.0) return {1.0};
  return {1.0 / r, 0.5 * (1.0 / r + 1.0), 1.0, 0.5 * (1.0 + r), r};
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepRow {
  double value = 0.0;  ///< gamma or a
  double area = 0.0;
  double normalized = 0.0;  ///< |Omega| mu: closed form if known, else numerical
  std::optional<double> bound;  ///< closed-form lower bound on mu
  std::optional<double> mu_h;  ///< coarse grid
  std::optional<double> mu_fine;  ///< grid h/2
  std::optional<double> margin;  ///< |mu_fine - mu_h|, order-1 Richardson estimate
  std::optional<double> normalized_numeric;
  std::string strictness;  ///< "confirmed", "indeterminate", "equality" or empty
  bool bound_ok = true;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::string parameter;  ///< "gamma" or "a"
  double lambda = 0.0, Lambda = 0.0;
  std::optional<double> gamma;  ///< fixed gamma of a shear sweep
  double h = 0.0;
  int W = 0;
  std::vector<SweepRow> rows;
  std::size_t argmin = 0;
  std::optional<std::size_t> argmin_numeric;

  bool operator==(const SweepResult&) const = default;
};

namespace detail {

inline std::size_t argmin_of(const std::vector<SweepRow>& rows, double SweepRow::*field) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].*field < rows[k].*field) k = i;
  return k;
}

inline double solve_mu(const DomainSpec& spec, const EllipticityPair& ell, double h, int W) {
  const SolveReport r = principal_eigen(spec, ell, h, W);
  if (!r.converged)
    throw IterationError("eigenvalue iteration did not converge on " + spec.describe() + " at h=" + fmt_num(h));
  return r.mu;
}

}  // namespace detail

/// n_gamma log-spaced values from 1/sqrt(omega) to sqrt(omega) (odd n, so
/// gamma = 1 is included). With `numerical`, mu is also computed at h and h/2.
inline SweepResult gamma_sweep(const EllipticityPair& ell, int n_gamma, bool numerical = false, double h = pi / 16,
                               int W = 2) {
  const double omega = ell.omega(), r = std::sqrt(omega);
  SweepResult res;
  res.parameter = "gamma";
  res.lambda = ell.lambda();
  res.Lambda = ell.Lambda();
  res.h = numerical ? h : 0.0;
  res.W = numerical ? W : 0;

  std::vector<double> gs;
  if (r == 1.0) {
    gs = {1.0};
  } else {
    if (n_gamma < 3 || n_gamma % 2 == 0) throw ParameterError("gamma_sweep: n_gamma must be odd and >= 3");
    const int mid = (n_gamma - 1) / 2;
    for (int i = 0; i < n_gamma; ++i) {
      if (i == 0) gs.push_back(1.0 / r);
      else if (i == n_gamma - 1) gs.push_back(r);
      else if (i == mid) gs.push_back(1.0);
      else gs.push_back(std::pow(omega, 0.5 * double(i - mid) / mid));
    }
  }

  for (double g : gs) {
    SweepRow row;
    row.value = g;
    row.area = area_omega_gamma(omega, g);
    row.normalized = ell.lambda() * row.area;
    row.bound = ell.lambda();
    if (numerical) {
      const DomainSpec spec = DomainSpec::omega_gamma(omega, g);
      row.mu_h = detail::solve_mu(spec, ell, h, W);
      row.mu_fine = detail::solve_mu(spec, ell, 0.5 * h, W);
      row.margin = std::abs(*row.mu_fine - *row.mu_h);
      row.normalized_numeric = *row.mu_fine * row.area;
    }
    res.rows.push_back(row);
  }
  res.argmin = detail::argmin_of(res.rows, &SweepRow::normalized);
  if (numerical) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < res.rows.size(); ++i)
      if (*res.rows[i].normalized_numeric < *res.rows[k].normalized_numeric) k = i;
    res.argmin_numeric = k;
  }
  return res;
}

/// Shear sweep on Omega(omega, gamma): mu at h and h/2 for each a against
/// the bound lambda pi^2 / (pi^2 - a^2).
inline SweepResult shear_sweep(const EllipticityPair& ell, double gamma, const std::vector<double>& a_values,
                               double h = pi / 32, int W = 3) {
  if (a_values.empty()) throw ParameterError("shear_sweep: no shear values");
  for (double a : a_values)
    if (!std::isfinite(a) || !(std::abs(a) < pi)) throw ParameterError("shear_sweep: need |a| < pi");
  const double omega = ell.omega();
  detail::check_omega_gamma(omega, gamma);

  SweepResult res;
  res.parameter = "a";
  res.lambda = ell.lambda();
  res.Lambda = ell.Lambda();
  res.gamma = gamma;
  res.h = h;
  res.W = W;

  std::vector<double> as = a_values;
  std::sort(as.begin(), as.end());
  for (double a : as) {
    const DomainSpec spec = DomainSpec::sheared(omega, gamma, a);
    SweepRow row;
    row.value = a;
    row.area = area(spec);
    row.bound = ell.lambda() * pi * pi / (pi * pi - a * a);
    row.mu_h = detail::solve_mu(spec, ell, h, W);
    row.mu_fine = detail::solve_mu(spec, ell, 0.5 * h, W);
    row.margin = std::abs(*row.mu_fine - *row.mu_h);
    row.normalized = *row.mu_fine * row.area;
    row.normalized_numeric = row.normalized;
    const double rel = *row.margin / *row.mu_fine;
    row.bound_ok = *row.mu_fine >= *row.bound * (1.0 - rel);
    if (a == 0.0 || omega == 1.0) row.strictness = "equality";
    else if (*row.mu_fine - *row.bound > 2.0 * *row.margin) row.strictness = "confirmed";
    else row.strictness = "indeterminate";
    res.rows.push_back(row);
  }
  res.argmin = detail::argmin_of(res.rows, &SweepRow::normalized);
  res.argmin_numeric = res.argmin;
  return res;
}

// ---------------------------------------------------------------------------
// Separable candidate on the square

struct NonseparabilityReport {
  double lambda = 0.0, Lambda = 0.0;
  bool separable = false;  ///< Lambda == lambda
  double min_formula = 0.0;  ///< min of separable_candidate_residual
  double min_defect = 0.0;  ///< min of separable_candidate_defect
  double max_abs_defect = 0.0;
  double fpp0_expected = 0.0;  ///< -mu / (2 lambda) with mu = lambda
  double fpp0_observed = 0.0;  ///< second difference of cos(x/sqrt2) at 0
  std::vector<std::array<double, 3>> table;  ///< x, formula, defect
  std::string note;

  bool operator==(const NonseparabilityReport&) const = default;
};

inline NonseparabilityReport nonseparability_report(const EllipticityPair& ell, int n_samples) {
  if (n_samples < 1) throw ParameterError("nonseparability_report: need at least one sample");
  NonseparabilityReport rep;
  rep.lambda = ell.lambda();
  rep.Lambda = ell.Lambda();
  rep.separable = ell.Lambda() == ell.lambda();
  const double lo = pi / (2.0 * std::sqrt(2.0)), hi = pi / std::sqrt(2.0);
  rep.min_formula = rep.min_defect = INFINITY;
  for (int i = 0; i < n_samples; ++i) {
    const double x = lo + (hi - lo) * double(i) / n_samples;
    const double f = separable_candidate_residual(ell, x), d = separable_candidate_defect(ell, x);
    rep.table.push_back({x, f, d});
    rep.min_formula = std::min(rep.min_formula, f);
    rep.min_defect = std::min(rep.min_defect, d);
    rep.max_abs_defect = std::max(rep.max_abs_defect, std::abs(d));
  }
  rep.fpp0_expected = -ell.lambda() / (2.0 * ell.lambda());
  const double s = 1e-4, r = std::sqrt(2.0);
  rep.fpp0_observed = (std::cos(s / r) - 2.0 + std::cos(-s / r)) / (s * s);
  rep.note = rep.separable ? "separable case, defect 0" : "candidate is not an eigenfunction";
  return rep;
}

// ---------------------------------------------------------------------------
// Periodic extension

struct GradientJump {
  double probe = 0.0;
  double max_jump = 0.0;
  bool operator==(const GradientJump&) const = default;
};

struct PeriodicReport {
  double omega = 0.0, gamma = 0.0;
  double max_residual = 0.0;  ///< relative to scale
  double scale = 0.0;  ///< max |u| over the samples
  std::array<std::size_t, 4> region_counts{};  ///< central, east-west, north-south, corner
  std::vector<GradientJump> jumps;
  double corner_value = 0.0;  ///< u at (L, L)
  ComponentClass cls{false, NegativeSet::Connected};

  bool operator==(const PeriodicReport&) const = default;
};

inline PeriodicReport periodic_residual_suite(const EllipticityPair& ell, double gamma, std::size_t n_samples,
                                              std::uint64_t seed, std::vector<double> probes = {1e-4, 1e-5}) {
  const PeriodicEigenfunction u(ell, gamma);
  const double L = u.half_period();
  PeriodicReport rep;
  rep.omega = ell.omega();
  rep.gamma = gamma;
  rep.cls = u.classify();

  std::vector<Point> pts;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = -2.0 * L + 4.0 * L * unit_uniform(rng), y = -2.0 * L + 4.0 * L * unit_uniform(rng);
    pts.push_back({x, y});
  }
  for (double d : {1e-2, 1e-4})
    for (double t : {half_pi - d, half_pi + d, L - d, L + d})
      for (double s : {0.3, 1.0, half_pi + 0.5 * d, L - 0.7})
        for (double sg : {-1.0, 1.0}) {
          pts.push_back({sg * t, s});
          pts.push_back({s, sg * t});
        }

  std::vector<double> r(pts.size()), v(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Jet j = u.jet(pts[i]);
    r[i] = std::abs(pucci_plus(j.hess, ell) + ell.lambda() * j.value);
    v[i] = std::abs(j.value);
  });
  rep.scale = *std::max_element(v.begin(), v.end());
  rep.max_residual = *std::max_element(r.begin(), r.end()) / rep.scale;
  for (const Point& p : pts) {
    const RegionTag t = u.region(p);
    if (t != RegionTag::Outside) ++rep.region_counts[std::size_t(t)];
  }

  // one-sided difference quotients across x = +-pi/2, +-L and the same in y
  for (double hp : probes) {
    double jmax = 0.0;
    for (double t : {half_pi, L, -half_pi, -L})
      for (double s : {0.0, 0.4, 1.1, half_pi + 0.3, L - 0.2}) {
        const double ux = u.value({t, s}), uy = u.value({s, t});
        const double dx = (u.value({t + hp, s}) - ux) / hp - (ux - u.value({t - hp, s})) / hp;
        const double dy = (u.value({s, t + hp}) - uy) / hp - (uy - u.value({s, t - hp})) / hp;
        jmax = std::max({jmax, std::abs(dx), std::abs(dy)});
      }
    rep.jumps.push_back({hp, jmax});
  }
  rep.corner_value = u.value({L, L});
  return rep;
}

/// Numerical sign topology of the periodic extension: flood fill of
/// {u < -eps} and {u > eps} on an N x N grid over three periods in each
/// direction, 4-connectivity. Independent of component_class.
inline ComponentClass negative_set_topology(const EllipticityPair& ell, double gamma, int N = 601) {
  const PeriodicEigenfunction u(ell, gamma);
  const double L = u.half_period(), lo = -3.0 * L, step = 6.0 * L / (N - 1);
  std::vector<double> val(std::size_t(N) * N);
  parallel_for(val.size(), [&](std::size_t k) {
    val[k] = u.value({lo + step * double(k % N), lo + step * double(k / N)});
  });
  const double eps = 1e-9 * (gamma + 1.0) * std::sqrt(ell.omega());

  // returns {touches left and right, touches bottom and top} for every
  // component of the sign set; aggregated over components
  auto sweep = [&](int sign, bool& spans_x, bool& spans_y, bool& origin_touches_edge) {
    std::vector<int> label(val.size(), -1);
    spans_x = spans_y = false;
    origin_touches_edge = false;
    int next = 0;
    const std::size_t origin = std::size_t(N / 2) * N + N / 2;
    for (std::size_t s0 = 0; s0 < val.size(); ++s0) {
      if (label[s0] >= 0 || !(sign * val[s0] > eps)) continue;
      bool l = false, r = false, b = false, t = false, has_origin = false;
      std::vector<std::size_t> stack{s0};
      label[s0] = next;
      while (!stack.empty()) {
        const std::size_t k = stack.back();
        stack.pop_back();
        const int i = int(k % N), j = int(k / N);
        l |= i == 0;
        r |= i == N - 1;
        b |= j == 0;
        t |= j == N - 1;
        has_origin |= k == origin;
        for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          const int a = i + di, c = j + dj;
          if (a < 0 || c < 0 || a >= N || c >= N) continue;
          const std::size_t m = std::size_t(c) * N + a;
          if (label[m] < 0 && sign * val[m] > eps) {
            label[m] = next;
            stack.push_back(m);
          }
        }
      }
      spans_x |= l && r;
      spans_y |= b && t;
      if (has_origin) origin_touches_edge = l || r || b || t;
      ++next;
    }
  };

  bool nx, ny, pos_x, pos_y, neg_edge, pos_edge;
  sweep(-1, nx, ny, neg_edge);
  sweep(+1, pos_x, pos_y, pos_edge);
  ComponentClass c{!pos_edge, NegativeSet::Bounded};
  if (nx && ny) c.negative = NegativeSet::Connected;
  else if (nx) c.negative = NegativeSet::HorizontalStripes;
  else if (ny) c.negative = NegativeSet::VerticalStripes;
  return c;
}

// ---------------------------------------------------------------------------
// Cone solution

struct ConeReport {
  double max_continuous = 0.0;  ///< max |M+(D^2 Phi)| over random (lambda, Lambda)
  double max_discrete = 0.0;  ///< max |M+_h Phi| on a grid, boundary data Phi
  CornerReport corner;

  bool operator==(const ConeReport&) const = default;
};

inline ConeReport cone_suite(std::size_t n_pairs, std::uint64_t seed, double omega = 2.0, double h = pi / 16,
                             int W = 2) {
  ConeReport rep;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const double lam = 0.1 + 9.9 * unit_uniform(rng), om = 1.0 + 19.0 * unit_uniform(rng);
    const EllipticityPair e = EllipticityPair::from_omega(lam, om);
    rep.max_continuous = std::max(rep.max_continuous, std::abs(pucci_plus(cone_hessian(e.omega()), e)));
  }
  const EllipticityPair ell = EllipticityPair::from_omega(1.0, omega);
  const auto [g, st] = build_grid(DomainSpec::omega_gamma(omega, 1.0), h, W);
  Field phi(g.n_interior());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = cone_solution(g.points[i].x, g.points[i].y, omega);
  const Field mp =
      discrete_pucci_plus(g, st, phi, ell, [omega](Point p) { return cone_solution(p.x, p.y, omega); });
  rep.max_discrete = detail::sup_norm(mp);
  rep.corner = corner_asymptotics_check(ell, 4);
  return rep;
}

// ---------------------------------------------------------------------------
// Full suite

/// One pass/fail line. Soft checks are reported but never fail the run.
struct Check {
  std::string suite;
  std::string name;
  bool hard = true;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;

  bool operator==(const Check&) const = default;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  double h = pi / 32;  ///< coarse level of the shear sweep; the fine level is h/2
  int W = 3;
  bool numerical_gamma = true;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Check> checks;
  std::vector<Certificate> certificates;
  std::vector<SweepResult> sweeps;
  std::vector<NonseparabilityReport> nonseparability;
  std::vector<PeriodicReport> periodic;
  std::vector<ConeReport> cone;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.hard || c.passed; });
  }
  bool operator==(const VerifyReport&) const = default;
};

namespace detail {

inline void add_le(VerifyReport& r, std::string suite, std::string name, double value, double threshold,
                   std::string detail = {}, bool hard = true) {
  r.checks.push_back({std::move(suite), std::move(name), hard, value <= threshold, value, threshold, std::move(detail)});
}

inline void add_ge(VerifyReport& r, std::string suite, std::string name, double value, double threshold,
                   std::string detail = {}, bool hard = true) {
  r.checks.push_back({std::move(suite), std::move(name), hard, value >= threshold, value, threshold, std::move(detail)});
}

inline void add_bool(VerifyReport& r, std::string suite, std::string name, bool ok, std::string detail = {},
                     bool hard = true) {
  r.checks.push_back({std::move(suite), std::move(name), hard, ok, ok ? 1.0 : 0.0, 1.0, std::move(detail)});
}

}  // namespace detail

inline void verify_closed_form(VerifyReport& rep, const VerifyOptions& opt) {
  for (auto [lam, Lam] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {1.0, 4.0}, {0.5, 3.0}}) {
    const EllipticityPair ell(lam, Lam);
    for (double g : gamma_test_values(ell.omega())) {
      const double r = closed_form_residual(ell, g, opt.samples, opt.seed);
      detail::add_le(rep, "closed_form", "residual lambda=" + detail::fmt_num(lam) + " Lambda=" + detail::fmt_num(Lam) +
                                             " gamma=" + detail::fmt_num(g),
                     r, 1e-11, "max |M+(D^2u)+lambda u| / ||u||");
    }
  }
}

inline void verify_area(VerifyReport& rep, const VerifyOptions& opt) {
  detail::add_le(rep, "area", "area(1,1) = 2 pi^2", std::abs(area_omega_gamma(1.0, 1.0) - 2.0 * pi * pi), 1e-8);
  std::mt19937_64 rng(opt.seed ^ 0xa5a5a5a5ULL);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double omega = 1.0 + 9.0 * unit_uniform(rng), r = std::sqrt(omega);
    const double g = std::pow(r, 2.0 * unit_uniform(rng) - 1.0);
    worst = std::max(worst, std::abs(area_omega_gamma(omega, g) - area_omega_gamma(omega, 1.0 / g)));
  }
  detail::add_le(rep, "area", "area(omega,gamma) = area(omega,1/gamma), 20 random pairs", worst, 1e-9);
  double shear_err = 0.0;
  for (double a : {pi / 4, pi / 2, 3 * pi / 4}) {
    const double want = std::sqrt(pi * pi - a * a) / pi * area_omega_gamma(2.0, 1.0);
    shear_err = std::max(shear_err, std::abs(area(DomainSpec::sheared(2.0, 1.0, a)) - want));
  }
  detail::add_le(rep, "area", "area(sheared) = sqrt(pi^2-a^2)/pi area", shear_err, 1e-9);
}

inline void verify_gamma_sweep(VerifyReport& rep, const VerifyOptions& opt) {
  const EllipticityPair ell(1.0, 4.0);
  SweepResult s = gamma_sweep(ell, 17);
  detail::add_bool(rep, "gamma_sweep", "omega=4, 17 values: argmin at gamma=1", s.rows[s.argmin].value == 1.0,
                   "argmin gamma " + detail::fmt_num(s.rows[s.argmin].value));
  double sym = 0.0;
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    sym = std::max(sym, std::abs(s.rows[i].area - s.rows[s.rows.size() - 1 - i].area));
  detail::add_le(rep, "gamma_sweep", "area row(gamma) = row(1/gamma)", sym, 1e-9);
  rep.sweeps.push_back(std::move(s));

  int changes = 0;
  double at_change = 0.0, prev = 0.0;
  for (int i = 0; i < 16; ++i) {
    const double g = std::pow(2.0, (2.0 * i + 1.0) / 16.0 - 1.0);  // sqrt(omega) = 2
    const double d = area_derivative_gamma(4.0, g);
    if (i > 0 && (d > 0) != (prev > 0)) {
      ++changes;
      at_change = g;
    }
    prev = d;
  }
  detail::add_bool(rep, "gamma_sweep", "area derivative changes sign once, next to gamma=1",
                   changes == 1 && at_change > 1.0 && at_change < std::pow(2.0, 1.0 / 8.0),
                   std::to_string(changes) + " sign changes");
  detail::add_le(rep, "gamma_sweep", "area derivative at gamma=1", std::abs(area_derivative_gamma(4.0, 1.0)), 1e-9);

  const SweepResult one = gamma_sweep(EllipticityPair(1.0, 1.0), 17);
  detail::add_bool(rep, "gamma_sweep", "omega=1: single row gamma=1", one.rows.size() == 1 && one.rows[0].value == 1.0);
  rep.sweeps.push_back(one);

  if (opt.numerical_gamma) {
    SweepResult n = gamma_sweep(EllipticityPair(1.0, 2.0), 5, true, pi / 16, 2);
    for (const SweepRow& r : n.rows)
      detail::add_le(rep, "gamma_sweep", "omega=2 gamma=" + detail::fmt_num(r.value) + ": |mu_h - lambda| within margin",
                     std::abs(*r.mu_fine - 1.0), std::max(*r.margin, 1e-3), "flagged, not asserted", false);
    detail::add_bool(rep, "gamma_sweep", "omega=2 numerical argmin at gamma=1", n.rows[*n.argmin_numeric].value == 1.0,
                     "flagged, not asserted", false);
    rep.sweeps.push_back(std::move(n));
  }
}

inline void verify_shear(VerifyReport& rep, const VerifyOptions& opt) {
  const EllipticityPair ell(1.0, 2.0);
  const std::vector<double> as{0.0, pi / 4, pi / 2, 3 * pi / 4};
  for (double a : as) {
    const DomainSpec spec = DomainSpec::sheared(2.0, 1.0, a);
    const double mu = ell.lambda() * pi * pi / (pi * pi - a * a);
    Certificate c = certify_lower_bound(spec, ell, mu, domain_samples(spec, opt.samples, opt.seed));
    detail::add_ge(rep, "shear", "certificate a=" + detail::fmt_num(a), c.min_slack, -certificate_tolerance * c.scale,
                   "min slack of -M+(D^2u) - mu u");
    rep.certificates.push_back(std::move(c));
  }
  {
    const DomainSpec spec = DomainSpec::sheared(1.0, 1.0, pi / 2);
    const EllipticityPair lap(1.0, 1.0);
    Certificate c = certify_lower_bound(spec, lap, 4.0 / 3.0, domain_samples(spec, opt.samples, opt.seed));
    detail::add_le(rep, "shear", "omega=1 equality: max |slack|",
                   std::max(std::abs(c.min_slack), std::abs(c.max_slack)), certificate_tolerance * c.scale);
    rep.certificates.push_back(std::move(c));
  }

  SweepResult s = shear_sweep(ell, 1.0, as, opt.h, opt.W);
  for (const SweepRow& r : s.rows) {
    detail::add_bool(rep, "shear", "mu_h >= bound (1 - margin) a=" + detail::fmt_num(r.value), r.bound_ok,
                     "mu_h " + detail::fmt_num(*r.mu_fine) + ", bound " + detail::fmt_num(*r.bound) + ", margin " +
                         detail::fmt_num(*r.margin));
    if (r.strictness != "equality")
      detail::add_bool(rep, "shear", "strict gap a=" + detail::fmt_num(r.value), r.strictness == "confirmed",
                       r.strictness, false);
  }
  detail::add_bool(rep, "shear", "normalized mu_h minimal at a=0", s.rows[s.argmin].value == 0.0);
  rep.sweeps.push_back(std::move(s));
}

inline void verify_nonseparability(VerifyReport& rep, const VerifyOptions&) {
  for (auto [lam, Lam] : {std::pair{1.0, 2.0}, {1.0, 4.0}, {1.0, 1.0}}) {
    const EllipticityPair ell(lam, Lam);
    NonseparabilityReport n = nonseparability_report(ell, 1000);
    const std::string tag = " lambda=" + detail::fmt_num(lam) + " Lambda=" + detail::fmt_num(Lam);
    if (n.separable) {
      detail::add_le(rep, "nonseparability", "defect vanishes" + tag,
                     std::max(std::abs(n.min_formula), n.max_abs_defect), 1e-12);
    } else {
      detail::add_ge(rep, "nonseparability", "formula minimum" + tag, n.min_formula, 0.5 * (Lam - lam) - 1e-12);
      detail::add_ge(rep, "nonseparability", "direct defect nonzero" + tag, n.max_abs_defect, 0.25 * (Lam - lam),
                     "max |-M+(D^2u) - lambda u| on the diagonal");
    }
    detail::add_le(rep, "nonseparability", "f''(0) = -mu/(2 lambda)" + tag, std::abs(n.fpp0_observed - n.fpp0_expected),
                   1e-6);
    rep.nonseparability.push_back(std::move(n));
  }
}

inline void verify_periodic(VerifyReport& rep, const VerifyOptions& opt) {
  const EllipticityPair ell(1.0, 2.0);
  for (double g : {0.5, 1.0, std::sqrt(2.0), 3.0}) {
    PeriodicReport p = periodic_residual_suite(ell, g, opt.samples, opt.seed);
    const std::string tag = " gamma=" + detail::fmt_num(g);
    detail::add_le(rep, "periodic", "residual" + tag, p.max_residual, 1e-11);
    detail::add_bool(rep, "periodic", "all four branches sampled" + tag,
                     std::all_of(p.region_counts.begin(), p.region_counts.end(), [](std::size_t c) { return c > 0; }));
    for (const GradientJump& j : p.jumps)
      detail::add_le(rep, "periodic", "gradient jump probe=" + detail::fmt_num(j.probe) + tag, j.max_jump,
                     10.0 * j.probe);
    detail::add_le(rep, "periodic", "u < 0 at corner center" + tag, p.corner_value, -1e-12);
    rep.periodic.push_back(std::move(p));
  }
  const double r2 = std::sqrt(2.0);
  const std::vector<std::pair<double, double>> pairs{{1.0, 1.0}, {2.0, 0.5},    {2.0, 1.0 / r2}, {2.0, 1.0},
                                                     {2.0, r2},  {2.0, 2.0},    {4.0, 0.3},      {4.0, 0.5},
                                                     {4.0, 1.2}, {4.0, 2.0},    {9.0, 1.0},      {9.0, 5.0}};
  int agree = 0;
  std::string bad;
  for (auto [om, g] : pairs) {
    const ComponentClass c = component_class(om, g), n = negative_set_topology(EllipticityPair(1.0, om), g);
    if (c == n) ++agree;
    else bad += " (" + detail::fmt_num(om) + "," + detail::fmt_num(g) + ")";
  }
  detail::add_ge(rep, "periodic", "component classes match flood fill, 12 pairs", agree, 12.0,
                 bad.empty() ? "" : "mismatch:" + bad);
}

inline void verify_cone(VerifyReport& rep, const VerifyOptions& opt) {
  ConeReport c = cone_suite(1000, opt.seed);
  detail::add_le(rep, "cone", "M+(D^2 Phi) = 0, 1000 random pairs", c.max_continuous, 1e-12);
  detail::add_le(rep, "cone", "discrete M+_h Phi = 0", c.max_discrete, 1e-10);
  detail::add_le(rep, "cone", "corner ratio stabilization 1e-3 -> 1e-4", c.corner.stabilization, 0.05);
  rep.cone.push_back(std::move(c));
}

/// Runs every suite.
inline VerifyReport verify_all(const VerifyOptions& opt = {}) {
  VerifyReport rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  verify_closed_form(rep, opt);
  verify_area(rep, opt);
  verify_gamma_sweep(rep, opt);
  verify_shear(rep, opt);
  verify_nonseparability(rep, opt);
  verify_periodic(rep, opt);
  verify_cone(rep, opt);
  return rep;
}

}  // namespace pucci
