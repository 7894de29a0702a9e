#pragma once

/**
 * @file pucci_core.hpp
 * @brief Pucci extremal operators on symmetric 2x2 matrices.
 *
 * For ellipticity constants 0 < lambda <= Lambda the sup-operator is
 *
 *   M+(X) = lambda * sum_{e_i < 0} e_i + Lambda * sum_{e_i > 0} e_i
 *
 * where e_i are the eigenvalues of X, and M-(X) = -M+(-X).
 */

#include <algorithm>
#include <cmath>
#include <utility>

#include "pucci/error.hpp"

namespace pucci {

inline constexpr double pi = 3.14159265358979323846;

/// Ellipticity constants (lambda, Lambda) with ratio omega = Lambda / lambda.
class EllipticityPair {
 public:
  EllipticityPair(double lambda, double Lambda) : lambda_(lambda), Lambda_(Lambda) {
    if (!std::isfinite(lambda) || !std::isfinite(Lambda))
      throw InvalidInput("ellipticity constants must be finite");
    if (!(lambda > 0.0) || !(Lambda >= lambda))
      throw ParameterError("ellipticity constants must satisfy 0 < lambda <= Lambda");
  }

  /// Pair with lower constant `lambda` and ratio `omega`.
  static EllipticityPair from_omega(double lambda, double omega) {
    return EllipticityPair(lambda, lambda * omega);
  }

  double lambda() const noexcept { return lambda_; }
  double Lambda() const noexcept { return Lambda_; }
  double omega() const noexcept { return Lambda_ / lambda_; }

  bool operator==(const EllipticityPair&) const = default;

 private:
  double lambda_;
  double Lambda_;
};

/// Symmetric 2x2 matrix [[xx, xy], [xy, yy]].
struct Sym2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  static constexpr Sym2 diag(double a, double b) { return {a, 0.0, b}; }

  constexpr double trace() const { return xx + yy; }
  constexpr double det() const { return xx * yy - xy * xy; }

  constexpr Sym2 operator-() const { return {-xx, -xy, -yy}; }
  constexpr Sym2 operator+(const Sym2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
  constexpr Sym2 operator-(const Sym2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
  friend constexpr Sym2 operator*(double t, const Sym2& m) { return {t * m.xx, t * m.xy, t * m.yy}; }

  /// Second directional derivative along the unit vector (cos t, sin t).
  double directional(double theta) const {
    const double c = std::cos(theta), s = std::sin(theta);
    return xx * c * c + 2.0 * xy * c * s + yy * s * s;
  }

  bool operator==(const Sym2&) const = default;
};

/// Eigenvalues (e+, e-) of a symmetric 2x2 matrix, e+ >= e-.
///
/// The larger-magnitude root comes from the trace and the (nonnegative)
/// discriminant; the other one from det / root so that e+ * e- keeps full
/// relative precision.
inline std::pair<double, double> eigenvalues(const Sym2& m) {
  if (!std::isfinite(m.xx) || !std::isfinite(m.xy) || !std::isfinite(m.yy))
    throw InvalidInput("eigenvalues: non-finite matrix entry");
  const double tr = m.trace();
  const double d = m.xx - m.yy;
  // (xx - yy)^2 + 4 xy^2 == tr^2 - 4 det, without the cancellation
  const double disc = std::max(d * d + 4.0 * m.xy * m.xy, 0.0);
  const double root = std::sqrt(disc);
  const double big = 0.5 * (tr + std::copysign(root, tr));
  if (big == 0.0) return {0.0, 0.0};
  const double small = m.det() / big;
  return big >= small ? std::pair{big, small} : std::pair{small, big};
}

/// Sup Pucci operator M+_{lambda,Lambda}(m).
inline double pucci_plus(const Sym2& m, const EllipticityPair& ell) {
  const auto [ep, em] = eigenvalues(m);
  double v = 0.0;
  for (double e : {ep, em}) {
    if (e > 0.0)
      v += ell.Lambda() * e;
    else if (e < 0.0)
      v += ell.lambda() * e;
  }
  return v;
}

/// Inf Pucci operator M-_{lambda,Lambda}(m) = -M+(-m).
inline double pucci_minus(const Sym2& m, const EllipticityPair& ell) {
  const auto [ep, em] = eigenvalues(m);
  double v = 0.0;
  for (double e : {ep, em}) {
    if (e > 0.0)
      v += ell.lambda() * e;
    else if (e < 0.0)
      v += ell.Lambda() * e;
  }
  return v;
}

/// Degree-2 homogeneous solution y^2 - omega x^2 of M+(D^2 Phi) = 0 in the
/// cone { y > sqrt(omega) |x| }.
inline double cone_solution(double x, double y, double omega) {
  if (!(omega >= 1.0)) throw ParameterError("cone_solution: omega must be >= 1");
  return y * y - omega * x * x;
}

/// Hessian of cone_solution; constant.
inline Sym2 cone_hessian(double omega) {
  if (!(omega >= 1.0)) throw ParameterError("cone_hessian: omega must be >= 1");
  return Sym2::diag(-2.0 * omega, 2.0);
}

}  // namespace pucci
