#pragma once

/**
 * @file sampling.hpp
 * @brief Deterministic interior point sets for pointwise checks.
 *
 * Tensor grid + shifted Halton points + explicit points next to the branch
 * interfaces and the corners, all inside the reference domain
 * Omega(omega, gamma) and then mapped forward for sheared or scaled domains.
 */

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pucci/domain.hpp"

namespace pucci {

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

/// Radical inverse of i in the given base.
inline double halton(std::uint64_t i, unsigned base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * double(i % base);
    i /= base;
  }
  return r;
}

namespace detail {

inline bool on_interface(Point p) { return std::abs(p.x) == half_pi || std::abs(p.y) == half_pi; }

/// Forward map from the reference domain of `spec` into `spec`.
inline Point push_forward(const DomainSpec& spec, Point p) {
  if (spec.get_if<OmegaGamma>()) return p;
  if (auto d = spec.get_if<Sheared>()) return shear_matrix(d->a).forward.apply(p);
  if (auto d = spec.get_if<Scaled>()) {
    const Point q = push_forward(*d->base, p);
    return {d->delta * q.x, d->delta * q.y};
  }
  throw UnsupportedError("no reference domain for " + spec.describe());
}

inline std::pair<double, double> reference_params(const DomainSpec& spec) {
  if (auto d = spec.get_if<OmegaGamma>()) return {d->omega, d->gamma};
  if (auto d = spec.get_if<Sheared>()) return {d->omega, d->gamma};
  if (auto d = spec.get_if<Scaled>()) return reference_params(*d->base);
  throw UnsupportedError("no reference domain for " + spec.describe());
}

}  // namespace detail

/// About `n` strict interior points of Omega(omega, gamma), off the interfaces.
inline std::vector<Point> reference_samples(double omega, double gamma, std::size_t n, std::uint64_t seed) {
  const DomainSpec ref = DomainSpec::omega_gamma(omega, gamma);
  const double xm = phi_support(omega, gamma), ym = phi(omega, gamma, 0.0);
  std::vector<Point> out;
  out.reserve(n + 64);
  auto take = [&](Point p) {
    if (contains(ref, p) && !detail::on_interface(p) && std::abs(p.y) < phi(omega, gamma, std::abs(p.x)) - 1e-10 * ym)
      out.push_back(p);
  };

  // near-interface and near-corner points
  for (double d : {1e-2, 1e-4}) {
    for (double s : {-1.0, 1.0})
      for (double y : {-1.2, -0.6, 0.0, 0.6, 1.2}) {
        take({s * (half_pi - d), y});
        take({s * (half_pi + d), y});
        take({y, s * (half_pi - d)});
        take({y, s * (half_pi + d)});
      }
    for (double sx : {-1.0, 1.0})
      for (double sy : {-1.0, 1.0}) {
        take({sx * (half_pi - d), sy * (half_pi - d)});
        take({sx * (half_pi + d), sy * (half_pi - 2 * d)});
        take({sx * (half_pi - 2 * d), sy * (half_pi + d)});
      }
    for (double s : {-1.0, 1.0}) {
      take({s * (xm - d), 0.0});
      take({0.0, s * (ym - d)});
    }
    for (double x : {0.3, 1.0, 1.4, 1.8, 2.2}) {
      if (x >= xm) continue;
      take({x, phi(omega, gamma, x) - d});
      take({-x, -(phi(omega, gamma, x) - d)});
    }
  }

  // tensor grid on a quarter of the budget
  const std::size_t fixed = out.size();
  const std::size_t want_tensor = n > fixed ? (n - fixed) / 4 : 0;
  const double frac = area_omega_gamma(omega, gamma) / (4.0 * xm * ym);
  const auto m = std::size_t(std::ceil(std::sqrt(double(want_tensor) / frac)));
  for (std::size_t i = 0; i < m && out.size() < fixed + want_tensor; ++i)
    for (std::size_t j = 0; j < m && out.size() < fixed + want_tensor; ++j)
      take({-xm + 2.0 * xm * (i + 0.5) / m, -ym + 2.0 * ym * (j + 0.5) / m});

  // shifted Halton for the rest
  std::mt19937_64 rng(seed);
  const double sx = unit_uniform(rng), sy = unit_uniform(rng);
  for (std::uint64_t k = 1; out.size() < n && k < 64 * n + 1024; ++k) {
    const double u = std::fmod(halton(k, 2) + sx, 1.0), v = std::fmod(halton(k, 3) + sy, 1.0);
    take({-xm + 2.0 * xm * u, -ym + 2.0 * ym * v});
  }
  return out;
}

/// Samples of an OmegaGamma, Sheared or Scaled domain, generated in the
/// reference frame and mapped forward.
inline std::vector<Point> domain_samples(const DomainSpec& spec, std::size_t n, std::uint64_t seed) {
  const auto [omega, gamma] = detail::reference_params(spec);
  std::vector<Point> pts = reference_samples(omega, gamma, n, seed);
  for (Point& p : pts) p = detail::push_forward(spec, p);
  return pts;
}

/// Analytic boundary points (x, +-phi(x)) of the reference domain, mapped forward.
inline std::vector<Point> boundary_samples(const DomainSpec& spec, std::size_t n) {
  const auto [omega, gamma] = detail::reference_params(spec);
  const double xm = phi_support(omega, gamma);
  std::vector<Point> out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -xm + 2.0 * xm * double(i) / double(n > 1 ? n - 1 : 1);
    const double w = phi(omega, gamma, x);
    out.push_back(detail::push_forward(spec, {x, w}));
    out.push_back(detail::push_forward(spec, {x, -w}));
  }
  return out;
}

}  // namespace pucci
