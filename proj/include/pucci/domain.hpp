#pragma once

/**
 * @file domain.hpp
 * @brief Boundary profiles, shears and the explicit planar domains.
 *
 * Omega(omega, gamma) = { |y| < phi(omega, gamma, x) } for
 * 1/sqrt(omega) <= gamma <= sqrt(omega). Sheared domains are images under the
 * linear map C_a, scaled domains are dilations delta * base.
 */

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <memory>
#include <string>
#include <variant>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pucci/error.hpp"
#include "pucci/pucci_core.hpp"

namespace pucci {

inline constexpr double half_pi = 0.5 * pi;

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

/// Axis-aligned rectangle.
struct Box {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
};

/// Dense 2x2 matrix [[a11, a12], [a21, a22]].
struct Mat2 {
  double a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;

  Point apply(Point p) const { return {a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  double det() const { return a11 * a22 - a12 * a21; }
};

/// M^T S M for symmetric S.
inline Sym2 congruence(const Mat2& m, const Sym2& s) {
  // S M
  const double b11 = s.xx * m.a11 + s.xy * m.a21, b12 = s.xx * m.a12 + s.xy * m.a22;
  const double b21 = s.xy * m.a11 + s.yy * m.a21, b22 = s.xy * m.a12 + s.yy * m.a22;
  return {m.a11 * b11 + m.a21 * b21, m.a11 * b12 + m.a21 * b22, m.a12 * b12 + m.a22 * b22};
}

namespace detail {

inline void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidInput(std::string(what) + " must be finite");
}

inline bool gamma_admissible(double omega, double gamma) {
  const double r = std::sqrt(omega);
  constexpr double slack = 1e-14;
  return gamma >= (1.0 / r) * (1.0 - slack) && gamma <= r * (1.0 + slack);
}

inline void check_omega_gamma(double omega, double gamma) {
  check_finite(omega, "omega");
  check_finite(gamma, "gamma");
  if (!(omega >= 1.0)) throw ParameterError("omega must be >= 1");
  if (!gamma_admissible(omega, gamma))
    throw ParameterError("gamma must lie in [1/sqrt(omega), sqrt(omega)]");
}

inline double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace detail

/// Right endpoint of the support of phi(omega, gamma, .).
inline double phi_support(double omega, double gamma) {
  detail::check_omega_gamma(omega, gamma);
  const double r = std::sqrt(omega);
  return half_pi + r * std::asin(detail::clamp_unit(1.0 / (gamma * r)));
}

/// Half-width phi^omega_gamma(x) of Omega(omega, gamma) at abscissa x.
inline double phi(double omega, double gamma, double x) {
  detail::check_finite(x, "x");
  const double xmax = phi_support(omega, gamma);
  const double ax = std::abs(x);
  if (ax > xmax * (1.0 + 1e-15)) throw DomainError("phi: x outside the support");
  const double r = std::sqrt(omega);
  if (ax <= half_pi) return half_pi + r * std::asin(detail::clamp_unit(gamma / r * std::cos(ax)));
  return std::acos(detail::clamp_unit(gamma * r * std::sin((ax - half_pi) / r)));
}

/// max_x | phi(omega, 1/gamma, phi(omega, gamma, x)) - |x| | over `samples`
/// cell midpoints of [0, support].
///
/// Midpoints keep away from x = 0, where the outer profile is evaluated at
/// the end of its support and the composition loses about half the digits.
inline double phi_inverse_identity_check(double omega, double gamma, int samples) {
  if (samples <= 0) throw ParameterError("samples must be positive");
  const double xmax = phi_support(omega, gamma);
  double dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = xmax * (i + 0.5) / samples;
    const double back = phi(omega, 1.0 / gamma, phi(omega, gamma, x));
    dev = std::max(dev, std::abs(back - x));
  }
  return dev;
}

/// The shear C_a = [[sqrt(1 - (a/pi)^2), 0], [a/pi, 1]] and its inverse.
struct Shear {
  Mat2 forward;
  Mat2 inverse;
};

inline Shear shear_matrix(double a) {
  detail::check_finite(a, "a");
  if (!(std::abs(a) < pi)) throw ParameterError("shear: |a| must be < pi");
  const double root = std::sqrt(pi * pi - a * a);
  return {Mat2{root / pi, 0.0, a / pi, 1.0}, Mat2{pi / root, 0.0, -a / root, 1.0}};
}

// ---------------------------------------------------------------------------

class DomainSpec;

struct OmegaGamma {
  double omega;
  double gamma;
};

struct Sheared {
  double omega;
  double gamma;
  double a;
};

/// Axis-aligned square (-halfside, halfside)^2.
struct Square {
  double halfside;
};

/// delta * base.
struct Scaled {
  std::shared_ptr<const DomainSpec> base;
  double delta;
};

/// Tagged shape descriptor. Construct through the named factories, which
/// validate the parameters; the value is immutable afterwards.
class DomainSpec {
 public:
  using Variant = std::variant<OmegaGamma, Sheared, Square, Scaled>;

  static DomainSpec omega_gamma(double omega, double gamma) {
    detail::check_omega_gamma(omega, gamma);
    return DomainSpec(OmegaGamma{omega, gamma});
  }

  static DomainSpec sheared(double omega, double gamma, double a) {
    detail::check_omega_gamma(omega, gamma);
    shear_matrix(a);
    return DomainSpec(Sheared{omega, gamma, a});
  }

  static DomainSpec square(double halfside) {
    detail::check_finite(halfside, "halfside");
    if (!(halfside > 0.0)) throw ParameterError("square: halfside must be positive");
    return DomainSpec(Square{halfside});
  }

  static DomainSpec scaled(const DomainSpec& base, double delta) {
    detail::check_finite(delta, "delta");
    if (!(delta > 0.0)) throw ParameterError("scaled: delta must be positive");
    return DomainSpec(Scaled{std::make_shared<const DomainSpec>(base), delta});
  }

  const Variant& variant() const noexcept { return v_; }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&v_);
  }

  /// Short human-readable description, e.g. "Sheared(omega=2, gamma=1, a=1.5)".
  std::string describe() const;

  /// Structural equality; describe() prints every parameter exactly.
  friend bool operator==(const DomainSpec& a, const DomainSpec& b) { return a.describe() == b.describe(); }

 private:
  explicit DomainSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

namespace detail {

inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::string DomainSpec::describe() const {
  using detail::fmt_num;
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OmegaGamma>)
          return "OmegaGamma(omega=" + fmt_num(d.omega) + ", gamma=" + fmt_num(d.gamma) + ")";
        else if constexpr (std::is_same_v<T, Sheared>)
          return "Sheared(omega=" + fmt_num(d.omega) + ", gamma=" + fmt_num(d.gamma) +
                 ", a=" + fmt_num(d.a) + ")";
        else if constexpr (std::is_same_v<T, Square>)
          return "Square(halfside=" + fmt_num(d.halfside) + ")";
        else
          return "Scaled(" + d.base->describe() + ", delta=" + fmt_num(d.delta) + ")";
      },
      v_);
}

namespace detail {

/// |y| <= phi(x) + slack, with points beyond the support rejected.
inline bool in_profile(double omega, double gamma, Point p, double slack, bool strict) {
  const double xmax = phi_support(omega, gamma);
  const double ax = std::abs(p.x);
  if (strict ? !(ax < xmax) : ax > xmax + slack) return false;
  const double w = phi(omega, gamma, strict ? ax : std::clamp(ax - slack, 0.0, xmax));
  return strict ? std::abs(p.y) < w : std::abs(p.y) <= w + slack;
}

inline bool membership(const DomainSpec& spec, Point p, double slack, bool strict) {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OmegaGamma>) {
          return in_profile(d.omega, d.gamma, p, slack, strict);
        } else if constexpr (std::is_same_v<T, Sheared>) {
          return in_profile(d.omega, d.gamma, shear_matrix(d.a).inverse.apply(p), slack, strict);
        } else if constexpr (std::is_same_v<T, Square>) {
          if (strict) return std::abs(p.x) < d.halfside && std::abs(p.y) < d.halfside;
          return std::abs(p.x) <= d.halfside + slack && std::abs(p.y) <= d.halfside + slack;
        } else {
          return membership(*d.base, {p.x / d.delta, p.y / d.delta}, slack / d.delta, strict);
        }
      },
      spec.variant());
}

}  // namespace detail

/// Strict interior membership.
inline bool contains(const DomainSpec& spec, Point p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  return detail::membership(spec, p, 0.0, true);
}

/// Membership in the closure, widened by `slack` (absolute, in the base frame).
inline bool closure_contains(const DomainSpec& spec, Point p, double slack = 0.0) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  return detail::membership(spec, p, slack, false);
}

/// Bounding box of the domain closure (exact except for sheared domains).
inline Box bounding_box(const DomainSpec& spec) {
  return std::visit(
      [](const auto& d) -> Box {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OmegaGamma>) {
          const double xm = phi_support(d.omega, d.gamma), ym = phi(d.omega, d.gamma, 0.0);
          return {-xm, xm, -ym, ym};
        } else if constexpr (std::is_same_v<T, Sheared>) {
          const double xm = phi_support(d.omega, d.gamma), ym = phi(d.omega, d.gamma, 0.0);
          const Mat2 c = shear_matrix(d.a).forward;
          // C_a maps the reference rectangle onto a parallelogram containing the domain
          Box b{0.0, 0.0, 0.0, 0.0};
          for (double sx : {-1.0, 1.0})
            for (double sy : {-1.0, 1.0}) {
              const Point q = c.apply({sx * xm, sy * ym});
              b.xmin = std::min(b.xmin, q.x);
              b.xmax = std::max(b.xmax, q.x);
              b.ymin = std::min(b.ymin, q.y);
              b.ymax = std::max(b.ymax, q.y);
            }
          return b;
        } else if constexpr (std::is_same_v<T, Square>) {
          return {-d.halfside, d.halfside, -d.halfside, d.halfside};
        } else {
          const Box b = bounding_box(*d.base);
          return {d.delta * b.xmin, d.delta * b.xmax, d.delta * b.ymin, d.delta * b.ymax};
        }
      },
      spec.variant());
}

// ---------------------------------------------------------------------------
// Areas

namespace detail {

template <class F>
double integrate(F f, double a, double b, const char* what) {
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, 1e-13, &err);
  if (!(err <= 1e-10))
    throw NumericError(std::string(what) + ": quadrature did not converge", err);
  return v;
}

}  // namespace detail

/// |Omega(omega, gamma)| = pi^2 + 4 sqrt(omega) int_0^{pi/2} [asin(g/sqrt(w) cos x)
///                                                          + asin(cos x/(g sqrt(w)))] dx
inline double area_omega_gamma(double omega, double gamma) {
  detail::check_omega_gamma(omega, gamma);
  const double r = std::sqrt(omega);
  const double k1 = gamma / r, k2 = 1.0 / (gamma * r);
  const double integral = detail::integrate(
      [&](double x) {
        const double c = std::cos(x);
        return std::asin(detail::clamp_unit(k1 * c)) + std::asin(detail::clamp_unit(k2 * c));
      },
      0.0, half_pi, "area");
  return pi * pi + 4.0 * r * integral;
}

inline double area(const DomainSpec& spec) {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OmegaGamma>)
          return area_omega_gamma(d.omega, d.gamma);
        else if constexpr (std::is_same_v<T, Sheared>)
          return std::abs(shear_matrix(d.a).forward.det()) * area_omega_gamma(d.omega, d.gamma);
        else if constexpr (std::is_same_v<T, Square>)
          return 4.0 * d.halfside * d.halfside;
        else
          return d.delta * d.delta * area(*d.base);
      },
      spec.variant());
}

/// d|Omega(omega, gamma)|/d gamma, for gamma strictly inside the admissible
/// range. The endpoints are rejected: the integrand blows up at x = 0 there.
inline double area_derivative_gamma(double omega, double gamma) {
  detail::check_omega_gamma(omega, gamma);
  const double r = std::sqrt(omega);
  if (!(gamma > 1.0 / r && gamma < r))
    throw ParameterError("area_derivative_gamma: gamma must be strictly inside (1/sqrt(omega), sqrt(omega))");
  const double p = omega / (gamma * gamma), q = omega * gamma * gamma;
  const double integral = detail::integrate(
      [&](double x) {
        const double c = std::cos(x);
        return (1.0 / std::sqrt(p - c * c) - 1.0 / std::sqrt(q - c * c)) * c;
      },
      0.0, half_pi, "area_derivative_gamma");
  return 4.0 * r / gamma * integral;
}

}  // namespace pucci
