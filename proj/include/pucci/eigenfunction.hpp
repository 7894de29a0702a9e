#pragma once

/**
 * @file eigenfunction.hpp
 * @brief Closed-form eigenfunctions of M+ on the explicit domains, their
 *        periodic sign-changing extension, and related pointwise checks.
 *
 * On Omega(omega, gamma), with s(t) = (|t| - pi/2) / sqrt(omega):
 *
 *   u = gamma cos x + cos y                       |x|, |y| <= pi/2
 *   u = -gamma sqrt(omega) sin s(x) + cos y       |x| > pi/2
 *   u = gamma cos x - sqrt(omega) sin s(y)        |y| > pi/2
 *
 * and M+(D^2 u) + lambda u = 0. On a sheared domain C_a(Omega) the function
 * u o C_a^{-1} is a positive supersolution for lambda pi^2 / (pi^2 - a^2).
 */

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "pucci/domain.hpp"
#include "pucci/error.hpp"
#include "pucci/pucci_core.hpp"

namespace pucci {

enum class RegionTag { CentralSquare, EastWest, NorthSouth, Corner, Outside };

inline const char* to_string(RegionTag r) {
  switch (r) {
    case RegionTag::CentralSquare: return "CentralSquare";
    case RegionTag::EastWest: return "EastWest";
    case RegionTag::NorthSouth: return "NorthSouth";
    case RegionTag::Corner: return "Corner";
    case RegionTag::Outside: return "Outside";
  }
  return "?";
}

/// Value, gradient and Hessian of a field at one point, plus the branch used.
struct Jet {
  double value = 0.0;
  std::array<double, 2> grad{0.0, 0.0};
  Sym2 hess;
  RegionTag region = RegionTag::Outside;
};

namespace detail {

inline RegionTag classify_cell(double ax, double ay) {
  // interface points |x| = pi/2 or |y| = pi/2 belong to the central branch
  const bool cx = ax <= half_pi, cy = ay <= half_pi;
  if (cx && cy) return RegionTag::CentralSquare;
  if (!cx && cy) return RegionTag::EastWest;
  if (cx && !cy) return RegionTag::NorthSouth;
  return RegionTag::Corner;
}

/// The four-branch formula on the cell |x|, |y| <= (1 + sqrt(omega)) pi/2.
/// Branches one to three coincide with the bounded-domain eigenfunction.
inline Jet cell_jet(double omega, double gamma, Point p) {
  const double r = std::sqrt(omega);
  const double ax = std::abs(p.x), ay = std::abs(p.y);
  const double sgx = p.x < 0.0 ? -1.0 : 1.0, sgy = p.y < 0.0 ? -1.0 : 1.0;
  Jet j;
  j.region = classify_cell(ax, ay);

  // x part: gamma * X(x), y part: Y(y)
  double xv, xd, xdd, yv, yd, ydd;
  if (ax <= half_pi) {
    xv = gamma * std::cos(p.x);
    xd = -gamma * std::sin(p.x);
    xdd = -gamma * std::cos(p.x);
  } else {
    const double s = (ax - half_pi) / r;
    xv = -gamma * r * std::sin(s);
    xd = -gamma * std::cos(s) * sgx;
    xdd = gamma / r * std::sin(s);
  }
  if (ay <= half_pi) {
    yv = std::cos(p.y);
    yd = -std::sin(p.y);
    ydd = -std::cos(p.y);
  } else {
    const double s = (ay - half_pi) / r;
    yv = -r * std::sin(s);
    yd = -std::cos(s) * sgy;
    ydd = std::sin(s) / r;
  }
  j.value = xv + yv;
  j.grad = {xd, yd};
  j.hess = Sym2::diag(xdd, ydd);
  return j;
}

}  // namespace detail

/**
 * Closed-form principal eigenfunction of M+ on an OmegaGamma or Sheared
 * domain, or a dilation of one, multiplied by a positive normalization.
 *
 * Sheared domains are always evaluated by pulling the point back through
 * C_a^{-1}; dilations through 1/delta.
 */
class PiecewiseEigenfunction {
 public:
  PiecewiseEigenfunction(DomainSpec spec, EllipticityPair ell, double normalization = 1.0)
      : spec_(std::move(spec)), ell_(ell), normalization_(normalization) {
    if (!std::isfinite(normalization) || !(normalization > 0.0))
      throw ParameterError("normalization must be positive");
    const double omega = reference_omega(spec_);
    if (std::abs(omega - ell_.omega()) > 1e-12 * omega)
      throw ParameterError("domain omega does not match Lambda/lambda");
  }

  const DomainSpec& spec() const noexcept { return spec_; }
  const EllipticityPair& ellipticity() const noexcept { return ell_; }
  double normalization() const noexcept { return normalization_; }

  /// Sup norm over the domain; attained at the origin.
  double sup_norm() const { return value({0.0, 0.0}); }

  /// Eigenvalue lambda * rho, where rho = 1 for OmegaGamma, pi^2/(pi^2 - a^2)
  /// for the supersolution bound on Sheared, divided by delta^2 per dilation.
  double eigenvalue_bound() const { return ell_.lambda() * bound_factor(spec_); }

  /// Full jet at a point of the closure. Throws DomainError outside.
  Jet jet(Point p) const {
    Jet j = jet_impl(spec_, p);
    j.value *= normalization_;
    j.grad = {j.grad[0] * normalization_, j.grad[1] * normalization_};
    j.hess = normalization_ * j.hess;
    return j;
  }

  double value(Point p) const { return jet(p).value; }
  std::array<double, 2> gradient(Point p) const { return jet(p).grad; }
  Sym2 hessian(Point p) const { return jet(p).hess; }

  /// Branch of the reference formula used at p; Outside beyond the closure.
  RegionTag region(Point p) const {
    if (!closure_contains(spec_, p, boundary_slack())) return RegionTag::Outside;
    return jet_impl(spec_, p).region;
  }

  /// M+(D^2 u(p)) + mu u(p); zero for a genuine eigenpair, <= 0 for a
  /// supersolution at level mu.
  double residual(double mu, Point p) const {
    const Jet j = jet(p);
    return pucci_plus(j.hess, ell_) + mu * j.value;
  }

  /// Point in the reference domain Omega(omega, gamma) that p pulls back to.
  Point pullback(Point p) const { return pullback_impl(spec_, p); }

 private:
  static double reference_omega(const DomainSpec& s) {
    if (auto d = s.get_if<OmegaGamma>()) return d->omega;
    if (auto d = s.get_if<Sheared>()) return d->omega;
    if (auto d = s.get_if<Scaled>()) return reference_omega(*d->base);
    throw UnsupportedError("no closed-form eigenfunction for " + s.describe());
  }

  static double bound_factor(const DomainSpec& s) {
    if (s.get_if<OmegaGamma>()) return 1.0;
    if (auto d = s.get_if<Sheared>()) return pi * pi / (pi * pi - d->a * d->a);
    const auto* d = s.get_if<Scaled>();
    return bound_factor(*d->base) / (d->delta * d->delta);
  }

  static Point pullback_impl(const DomainSpec& s, Point p) {
    if (s.get_if<OmegaGamma>()) return p;
    if (auto d = s.get_if<Sheared>()) return shear_matrix(d->a).inverse.apply(p);
    const auto* d = s.get_if<Scaled>();
    return pullback_impl(*d->base, {p.x / d->delta, p.y / d->delta});
  }

  // absolute, in the frame of each nested domain
  static constexpr double boundary_slack() { return 1e-12; }

  Jet jet_impl(const DomainSpec& s, Point p) const {
    if (!closure_contains(s, p, boundary_slack()))
      throw DomainError("eigenfunction evaluated outside the domain closure");
    if (auto d = s.get_if<OmegaGamma>()) return detail::cell_jet(d->omega, d->gamma, p);
    if (auto d = s.get_if<Sheared>()) {
      const Mat2 inv = shear_matrix(d->a).inverse;
      Jet j = detail::cell_jet(d->omega, d->gamma, inv.apply(p));
      // grad u = inv^T grad u_ref, D^2 u = inv^T D^2 u_ref inv
      j.grad = {inv.a11 * j.grad[0] + inv.a21 * j.grad[1], inv.a12 * j.grad[0] + inv.a22 * j.grad[1]};
      j.hess = congruence(inv, j.hess);
      return j;
    }
    const auto* d = s.get_if<Scaled>();
    Jet j = jet_impl(*d->base, {p.x / d->delta, p.y / d->delta});
    j.grad = {j.grad[0] / d->delta, j.grad[1] / d->delta};
    j.hess = (1.0 / (d->delta * d->delta)) * j.hess;
    return j;
  }

  DomainSpec spec_;
  EllipticityPair ell_;
  double normalization_;
};

// ---------------------------------------------------------------------------
// Periodic extension to the plane

/// Shape of the negativity set {u < 0} of the periodic extension.
enum class NegativeSet { Connected, HorizontalStripes, VerticalStripes, Bounded };

inline const char* to_string(NegativeSet n) {
  switch (n) {
    case NegativeSet::Connected: return "ConnectedNegative";
    case NegativeSet::HorizontalStripes: return "HorizontalStripes";
    case NegativeSet::VerticalStripes: return "VerticalStripes";
    case NegativeSet::Bounded: return "BoundedNegative";
  }
  return "?";
}

struct ComponentClass {
  bool positive_bounded;  ///< positive components are translates of Omega(omega, gamma)
  NegativeSet negative;
  bool operator==(const ComponentClass&) const = default;
};

/// Sign structure of the periodic eigenfunction for any gamma > 0.
inline ComponentClass component_class(double omega, double gamma) {
  detail::check_finite(omega, "omega");
  detail::check_finite(gamma, "gamma");
  if (!(omega >= 1.0)) throw ParameterError("omega must be >= 1");
  if (!(gamma > 0.0)) throw ParameterError("gamma must be positive");
  const double r = std::sqrt(omega);
  const bool bounded = detail::gamma_admissible(omega, gamma);
  // omega = gamma = 1: cos x + cos y, a checkerboard
  if (gamma <= 1.0 / r && gamma >= r) return {bounded, NegativeSet::Bounded};
  if (gamma <= 1.0 / r) return {bounded, NegativeSet::HorizontalStripes};
  if (gamma >= r) return {bounded, NegativeSet::VerticalStripes};
  return {bounded, NegativeSet::Connected};
}

/**
 * Sign-changing eigenfunction on the whole plane: the four-branch formula on
 * the cell |x|, |y| <= L = (1 + sqrt(omega)) pi/2, extended with period 2L in
 * each variable. Every branch is even and has zero normal derivative at
 * |x| = L (resp. |y| = L), so the extension is C^1 across cell edges.
 */
class PeriodicEigenfunction {
 public:
  PeriodicEigenfunction(EllipticityPair ell, double gamma) : ell_(ell), gamma_(gamma) {
    detail::check_finite(gamma, "gamma");
    if (!(gamma > 0.0)) throw ParameterError("gamma must be positive");
  }

  double gamma() const noexcept { return gamma_; }
  const EllipticityPair& ellipticity() const noexcept { return ell_; }

  /// Half-width L of the fundamental cell.
  double half_period() const { return (1.0 + std::sqrt(ell_.omega())) * half_pi; }
  double period() const { return 2.0 * half_period(); }

  /// Representative of p in the fundamental cell [-L, L]^2.
  Point reduce(Point p) const {
    const double per = period();
    return {p.x - per * std::round(p.x / per), p.y - per * std::round(p.y / per)};
  }

  Jet jet(Point p) const {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidInput("non-finite point");
    return detail::cell_jet(ell_.omega(), gamma_, reduce(p));
  }
  double value(Point p) const { return jet(p).value; }
  RegionTag region(Point p) const { return jet(p).region; }

  double residual(Point p) const {
    const Jet j = jet(p);
    return pucci_plus(j.hess, ell_) + ell_.lambda() * j.value;
  }

  ComponentClass classify() const { return component_class(ell_.omega(), gamma_); }

 private:
  EllipticityPair ell_;
  double gamma_;
};

// ---------------------------------------------------------------------------
// Separable candidate on the square (-pi/sqrt2, pi/sqrt2)^2

namespace detail {

inline void check_separable_band(double x) {
  check_finite(x, "x");
  const double ax = std::abs(x);
  const double lo = pi / (2.0 * std::sqrt(2.0)), hi = pi / std::sqrt(2.0);
  if (!(ax >= lo * (1.0 - 1e-15) && ax < hi))
    throw DomainError("separable candidate: need pi/(2 sqrt2) <= |x| < pi/sqrt2");
}

}  // namespace detail

/**
 * Closed-form diagonal expression Lambda c^2 + (Lambda - lambda)/2 - lambda c^2,
 * c = cos(x / sqrt2), for the candidate u = cos(x/sqrt2) cos(y/sqrt2) on the
 * diagonal y = x.
 *
 * This is the textbook expression. The defect computed directly from the
 * Hessian, -M+(D^2 u) - lambda u, is (Lambda - lambda)(c^2 - 1/2); see
 * separable_candidate_defect. Both vanish identically iff Lambda == lambda.
 */
inline double separable_candidate_residual(const EllipticityPair& ell, double x) {
  detail::check_separable_band(x);
  const double c = std::cos(x / std::sqrt(2.0));
  const double c2 = c * c;
  return ell.Lambda() * c2 + 0.5 * (ell.Lambda() - ell.lambda()) - ell.lambda() * c2;
}

/// Hessian of cos(x/sqrt2) cos(y/sqrt2) at (x, y).
inline Sym2 separable_candidate_hessian(double x, double y) {
  const double r = std::sqrt(2.0);
  const double cx = std::cos(x / r), sx = std::sin(x / r), cy = std::cos(y / r), sy = std::sin(y / r);
  return {-0.5 * cx * cy, 0.5 * sx * sy, -0.5 * cx * cy};
}

/// -M+(D^2 u)(x, x) - lambda u(x, x) for u = cos(x/sqrt2) cos(y/sqrt2),
/// evaluated through pucci_plus.
inline double separable_candidate_defect(const EllipticityPair& ell, double x) {
  detail::check_separable_band(x);
  const double c = std::cos(x / std::sqrt(2.0));
  return -pucci_plus(separable_candidate_hessian(x, x), ell) - ell.lambda() * c * c;
}

// ---------------------------------------------------------------------------
// Corner of Omega(omega, sqrt(omega))

/// u / Phi at the point (x, L - t) near the singular corner (0, L),
/// L = (1 + sqrt(omega)) pi/2, with x = theta * t / sqrt(omega), |theta| < 1
/// so that the point lies inside the tangent cone.
inline double corner_ratio(const EllipticityPair& ell, double t, double theta) {
  if (!(t > 0.0)) throw ParameterError("corner_ratio: distance must be positive");
  if (!(std::abs(theta) < 1.0)) throw ParameterError("corner_ratio: |theta| must be < 1");
  const double omega = ell.omega(), r = std::sqrt(omega);
  const double L = (1.0 + r) * half_pi;
  const Point p{theta * t / r, L - t};
  const PiecewiseEigenfunction u(DomainSpec::omega_gamma(omega, r), ell);
  return u.value(p) / cone_solution(p.x, t, omega);
}

struct CornerReport {
  std::vector<double> distances;
  std::vector<double> ratios;  ///< min over rays at each distance
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  /// relative change of the ratio between the two smallest distances
  double stabilization = 0.0;

  bool operator==(const CornerReport&) const = default;
};

/// Ratio u / Phi on `samples` distances geometrically spaced from 1e-1 down
/// to 1e-4, minimized over a fan of rays inside the corner's tangent cone.
inline CornerReport corner_asymptotics_check(const EllipticityPair& ell, int samples) {
  if (samples < 2) throw ParameterError("corner_asymptotics_check: need at least 2 samples");
  CornerReport rep;
  rep.min_ratio = INFINITY;
  rep.max_ratio = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = std::pow(10.0, -1.0 - 3.0 * i / (samples - 1));
    double m = INFINITY;
    for (double theta : {0.0, 0.5, -0.5, 0.9, -0.9}) m = std::min(m, corner_ratio(ell, t, theta));
    rep.distances.push_back(t);
    rep.ratios.push_back(m);
    rep.min_ratio = std::min(rep.min_ratio, m);
    rep.max_ratio = std::max(rep.max_ratio, m);
  }
  const double a = rep.ratios[samples - 2], b = rep.ratios[samples - 1];
  rep.stabilization = std::abs(a - b) / std::abs(b);
  return rep;
}

}  // namespace pucci
