#pragma once

/**
 * @file grid_fd.hpp
 * @brief Monotone wide-stencil discretization of M+ and its principal
 *        eigenvalue by Howard policy iteration and inverse power iteration.
 *
 * The operator is discretized in Bellman form
 *
 *   M+_h u(x) = max_k [ max(lambda D_v u, Lambda D_v u) + max(lambda D_w u, Lambda D_w u) ]
 *
 * over orthogonal lattice pairs (v, w = v^perp), where D_v is a second
 * difference along v. Legs that leave the domain are cut at the boundary and
 * use the nonuniform three-point formula with the Dirichlet value there, so
 * every frozen policy gives an M-matrix.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "pucci/domain.hpp"
#include "pucci/error.hpp"
#include "pucci/parallel.hpp"
#include "pucci/pucci_core.hpp"

namespace pucci {

using Field = std::vector<double>;

/// Lattice vector (p, q).
struct Direction {
  int p = 0;
  int q = 0;
  double norm() const { return std::hypot(double(p), double(q)); }
  double angle() const { return std::atan2(double(q), double(p)); }
};

/// Orthogonal pairs (v, v^perp) with v = (p, q), p > 0, q >= 0, gcd(p, q) = 1
/// and max(p, q) <= width, sorted by angle. Width 1 is the axis pair alone
/// (the five-point stencil).
inline std::vector<std::pair<Direction, Direction>> stencil_pairs(int width) {
  if (width < 1) throw ParameterError("stencil width must be >= 1");
  if (width == 1) return {{{1, 0}, {0, 1}}};
  std::vector<std::pair<Direction, Direction>> out;
  for (int p = 1; p <= width; ++p)
    for (int q = 0; q <= width; ++q)
      if (std::gcd(p, q) == 1) out.push_back({{p, q}, {-q, p}});
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.angle() < b.first.angle(); });
  return out;
}

/// Lattice discretization of a domain.
struct Grid {
  double h = 0.0;
  Box bbox;
  int i0 = 0, j0 = 0;  ///< lattice index of the lower-left corner
  int nx = 0, ny = 0;
  std::vector<int> id;  ///< nx * ny entries: interior index or -1
  std::vector<Point> points;
  std::vector<std::array<int, 2>> lattice;
  bool connected = true;

  std::size_t n_interior() const { return points.size(); }
  Point coord(int i, int j) const { return {i * h, j * h}; }
  /// Interior index of lattice node (i, j), or -1.
  int index(int i, int j) const {
    const int a = i - i0, b = j - j0;
    if (a < 0 || b < 0 || a >= nx || b >= ny) return -1;
    return id[std::size_t(b) * nx + a];
  }
};

/// One leg pair of a direction at a point: neighbor indices (-1 when cut) and
/// the fractions of a full step at which the legs end.
struct Leg {
  int fwd = -1, bwd = -1;
  double s_fwd = 1.0, s_bwd = 1.0;
  double c_fwd = 0.0, c_bwd = 0.0;  ///< second-difference weights of the neighbors
};

struct StencilSet {
  int width = 1;
  std::vector<Direction> dirs;  ///< dirs[2k] = v_k, dirs[2k + 1] = v_k^perp
  std::vector<Leg> legs;        ///< n_interior * dirs.size(), point-major
  bool certified_monotone = false;

  std::size_t n_pairs() const { return dirs.size() / 2; }
  const Leg& leg(std::size_t point, std::size_t dir) const { return legs[point * dirs.size() + dir]; }
  /// Largest angular gap between consecutive directions modulo pi.
  double max_angular_gap() const {
    std::vector<double> a;
    for (const auto& d : dirs) {
      double t = d.angle();
      if (t < 0) t += pi;
      if (t >= pi) t -= pi;
      a.push_back(t);
    }
    std::sort(a.begin(), a.end());
    double gap = a.front() + pi - a.back();
    for (std::size_t i = 1; i < a.size(); ++i) gap = std::max(gap, a[i] - a[i - 1]);
    return gap;
  }
};

namespace detail {

/// Fraction s in (0, 1] of the step from p along hv at which the segment
/// first leaves the domain, and whether it stays inside up to s = 1.
inline std::pair<double, bool> leg_exit(const DomainSpec& spec, Point p, Point hv) {
  constexpr int probes = 8;
  auto at = [&](double t) { return Point{p.x + t * hv.x, p.y + t * hv.y}; };
  int k = 1;
  for (; k <= probes; ++k)
    if (!contains(spec, at(double(k) / probes))) break;
  if (k > probes) return {1.0, true};
  double lo = double(k - 1) / probes, hi = double(k) / probes;
  for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (contains(spec, at(mid)) ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), false};
}

}  // namespace detail

/// Lattice h Z^2 restricted to the domain, with cut legs for every stencil
/// direction. Throws GridError when no lattice point is interior.
inline std::pair<Grid, StencilSet> build_grid(const DomainSpec& spec, double h, int W) {
  if (!std::isfinite(h) || !(h > 0.0)) throw ParameterError("build_grid: h must be positive");
  if (W < 1) throw ParameterError("build_grid: W must be >= 1");

  Grid g;
  g.h = h;
  const Box b = bounding_box(spec);
  g.i0 = int(std::floor(b.xmin / h)) - 1;
  g.j0 = int(std::floor(b.ymin / h)) - 1;
  g.nx = int(std::ceil(b.xmax / h)) + 1 - g.i0 + 1;
  g.ny = int(std::ceil(b.ymax / h)) + 1 - g.j0 + 1;
  g.bbox = {g.i0 * h, (g.i0 + g.nx - 1) * h, g.j0 * h, (g.j0 + g.ny - 1) * h};
  g.id.assign(std::size_t(g.nx) * g.ny, -1);
  for (int b2 = 0; b2 < g.ny; ++b2)
    for (int a = 0; a < g.nx; ++a) {
      const int i = g.i0 + a, j = g.j0 + b2;
      const Point p = g.coord(i, j);
      if (contains(spec, p)) {
        g.id[std::size_t(b2) * g.nx + a] = int(g.points.size());
        g.points.push_back(p);
        g.lattice.push_back({i, j});
      }
    }
  if (g.points.empty()) throw GridError("build_grid: no interior lattice points at this h");

  StencilSet st;
  st.width = W;
  for (const auto& [v, w] : stencil_pairs(W)) {
    st.dirs.push_back(v);
    st.dirs.push_back(w);
  }
  const std::size_t nd = st.dirs.size();
  st.legs.resize(g.n_interior() * nd);
  parallel_for(g.n_interior(), [&](std::size_t n) {
    const auto [i, j] = g.lattice[n];
    const Point p = g.points[n];
    for (std::size_t d = 0; d < nd; ++d) {
      const Direction v = st.dirs[d];
      Leg& leg = st.legs[n * nd + d];
      for (int sgn : {1, -1}) {
        const Point hv{sgn * v.p * h, sgn * v.q * h};
        auto [s, full] = detail::leg_exit(spec, p, hv);
        const int nb = full ? g.index(i + sgn * v.p, j + sgn * v.q) : -1;
        if (full && nb < 0) throw GridError("build_grid: interior neighbor missing from lattice");
        (sgn > 0 ? leg.fwd : leg.bwd) = nb;
        (sgn > 0 ? leg.s_fwd : leg.s_bwd) = s;
      }
      const double len = h * v.norm();
      const double df = leg.s_fwd * len, db = leg.s_bwd * len;
      leg.c_fwd = 2.0 / (df * (df + db));
      leg.c_bwd = 2.0 / (db * (df + db));
    }
  });

  // certificate: every leg weight positive and finite, so any frozen policy
  // yields nonpositive off-diagonals and a weakly dominant positive diagonal,
  // strictly dominant on rows with a cut leg
  st.certified_monotone = std::all_of(st.legs.begin(), st.legs.end(), [](const Leg& l) {
    return l.s_fwd > 0.0 && l.s_bwd > 0.0 && l.s_fwd <= 1.0 && l.s_bwd <= 1.0 &&
           std::isfinite(l.c_fwd) && std::isfinite(l.c_bwd) && l.c_fwd > 0.0 && l.c_bwd > 0.0;
  });

  // connectivity through stencil legs
  std::vector<char> seen(g.n_interior(), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!bfs.empty()) {
    const int n = bfs.front();
    bfs.pop();
    for (std::size_t d = 0; d < nd; ++d) {
      const Leg& l = st.legs[std::size_t(n) * nd + d];
      for (int nb : {l.fwd, l.bwd})
        if (nb >= 0 && !seen[nb]) {
          seen[nb] = 1;
          ++reached;
          bfs.push(nb);
        }
    }
  }
  g.connected = reached == g.n_interior();
  return {std::move(g), std::move(st)};
}

// ---------------------------------------------------------------------------

/// Frozen choice per interior point: a direction pair and, for each of its
/// two directions, whether the coefficient is Lambda (bit set) or lambda.
struct PolicyState {
  std::vector<std::uint16_t> pair;
  std::vector<std::uint8_t> coef;
  bool operator==(const PolicyState&) const = default;
};

namespace detail {

struct ZeroBoundary {
  double operator()(Point) const { return 0.0; }
};

template <class G>
double second_difference(const Grid& g, const StencilSet& st, const Field& u, std::size_t n,
                         std::size_t d, const G& boundary) {
  const Leg& l = st.leg(n, d);
  const Direction v = st.dirs[d];
  const Point p = g.points[n];
  const double uf = l.fwd >= 0 ? u[l.fwd]
                               : boundary(Point{p.x + l.s_fwd * g.h * v.p, p.y + l.s_fwd * g.h * v.q});
  const double ub = l.bwd >= 0 ? u[l.bwd]
                               : boundary(Point{p.x - l.s_bwd * g.h * v.p, p.y - l.s_bwd * g.h * v.q});
  return l.c_fwd * (uf - u[n]) + l.c_bwd * (ub - u[n]);
}

inline double best_coef(double D, const EllipticityPair& ell, std::uint8_t& bit) {
  // max(lambda D, Lambda D); ties (D == 0) go to lambda
  bit = D > 0.0 ? 1 : 0;
  return (bit ? ell.Lambda() : ell.lambda()) * D;
}

/// Pointwise max over pairs; optionally returns the maximizing policy entry.
template <class G>
double bellman_point(const Grid& g, const StencilSet& st, const Field& u, std::size_t n,
                     const EllipticityPair& ell, const G& boundary, std::uint16_t* arg_pair,
                     std::uint8_t* arg_coef) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < st.n_pairs(); ++k) {
    std::uint8_t b1, b2;
    const double v = best_coef(second_difference(g, st, u, n, 2 * k, boundary), ell, b1) +
                     best_coef(second_difference(g, st, u, n, 2 * k + 1, boundary), ell, b2);
    if (v > best) {  // strict: lowest pair index wins ties
      best = v;
      if (arg_pair) *arg_pair = std::uint16_t(k);
      if (arg_coef) *arg_coef = std::uint8_t(b1 | (b2 << 1));
    }
  }
  return best;
}

template <class G>
double policy_point(const Grid& g, const StencilSet& st, const Field& u, std::size_t n,
                    const EllipticityPair& ell, const G& boundary, std::uint16_t k, std::uint8_t c) {
  const double c1 = (c & 1) ? ell.Lambda() : ell.lambda();
  const double c2 = (c & 2) ? ell.Lambda() : ell.lambda();
  return c1 * second_difference(g, st, u, n, 2 * k, boundary) +
         c2 * second_difference(g, st, u, n, 2 * k + 1, boundary);
}

inline double sup_norm(const Field& f) {
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace detail

/// M+_h u at every interior point; off-grid leg ends take boundary(point).
template <class G>
Field discrete_pucci_plus(const Grid& g, const StencilSet& st, const Field& u,
                          const EllipticityPair& ell, const G& boundary) {
  if (u.size() != g.n_interior()) throw InvalidInput("discrete_pucci_plus: field size mismatch");
  Field out(u.size());
  parallel_for(u.size(), [&](std::size_t n) {
    out[n] = detail::bellman_point(g, st, u, n, ell, boundary, nullptr, nullptr);
  });
  return out;
}

/// M+_h u with homogeneous Dirichlet data at cut points.
inline Field discrete_pucci_plus(const Grid& g, const StencilSet& st, const Field& u,
                                 const EllipticityPair& ell) {
  return discrete_pucci_plus(g, st, u, ell, detail::ZeroBoundary{});
}

/// Maximizing policy of M+_h at u (lowest pair index on ties).
inline PolicyState improve_policy(const Grid& g, const StencilSet& st, const Field& u,
                                  const EllipticityPair& ell) {
  PolicyState pol;
  pol.pair.resize(u.size());
  pol.coef.resize(u.size());
  parallel_for(u.size(), [&](std::size_t n) {
    detail::bellman_point(g, st, u, n, ell, detail::ZeroBoundary{}, &pol.pair[n], &pol.coef[n]);
  });
  return pol;
}

/// Sparse matrix A = -L_policy, homogeneous Dirichlet data.
inline Eigen::SparseMatrix<double, Eigen::RowMajor> assemble_policy_matrix(const Grid& g, const StencilSet& st,
                                                          const EllipticityPair& ell,
                                                          const PolicyState& pol) {
  const std::size_t n = g.n_interior();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(n * 5);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint16_t k = pol.pair[i];
    const std::uint8_t c = pol.coef[i];
    double diag = 0.0;
    for (int t = 0; t < 2; ++t) {
      const double coef = (c >> t) & 1 ? ell.Lambda() : ell.lambda();
      const Leg& l = st.leg(i, 2 * k + t);
      diag += coef * (l.c_fwd + l.c_bwd);
      if (l.fwd >= 0) trip.emplace_back(int(i), l.fwd, -coef * l.c_fwd);
      if (l.bwd >= 0) trip.emplace_back(int(i), l.bwd, -coef * l.c_bwd);
    }
    if (!(diag > 0.0) || !std::isfinite(diag))
      throw MonotonicityError("policy matrix row without positive diagonal");
    trip.emplace_back(int(i), int(i), diag);
  }
  Eigen::SparseMatrix<double, Eigen::RowMajor> A{Eigen::Index(n), Eigen::Index(n)};
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

namespace detail {

/// Solves A x = b to ||A x - b||_inf <= tol ||b||_inf. Jacobi-preconditioned
/// BiCGSTAB from the guess first; sparse LU when that falls short.
inline double solve_m_matrix(const Eigen::SparseMatrix<double, Eigen::RowMajor>& A, const Eigen::VectorXd& b,
                             Eigen::VectorXd& x, double tol) {
  const double bn = b.lpNorm<Eigen::Infinity>();
  Eigen::BiCGSTAB<Eigen::SparseMatrix<double, Eigen::RowMajor>> krylov;
  krylov.setTolerance(1e-3 * tol);
  krylov.setMaxIterations(4 * A.rows() + 100);
  krylov.compute(A);
  Eigen::VectorXd y = krylov.solveWithGuess(b, x);
  double lin = (A * y - b).lpNorm<Eigen::Infinity>() / bn;
  if (y.allFinite() && lin <= tol) {
    x = std::move(y);
    return lin;
  }
  const Eigen::SparseMatrix<double> Ac = A;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(Ac);
  if (lu.info() != Eigen::Success) throw NumericError("sparse factorization failed", lin);
  y = lu.solve(b);
  lin = (A * y - b).lpNorm<Eigen::Infinity>() / bn;
  if (!(lin <= tol)) throw NumericError("linear solve inaccurate", lin);
  x = std::move(y);
  return lin;
}

}  // namespace detail

struct HowardOptions {
  double residual_tol = 1e-9;  ///< nonlinear residual, relative to ||rhs||_inf
  double linear_tol = 1e-10;   ///< linear sub-solve relative residual
  int max_iter = 100;
};

struct HowardResult {
  Field solution;
  PolicyState policy;
  int iterations = 0;
  double residual = 0.0;  ///< ||-M+_h u - rhs||_inf / ||rhs||_inf
};

/**
 * Solves -M+_h(u) = rhs with u = 0 at cut points by policy iteration.
 *
 * Each sweep freezes the maximizing policy of the current iterate, solves the
 * resulting M-matrix system and re-improves; a policy is replaced only where
 * the improvement exceeds roundoff, which rules out cycling between equal
 * maximizers. `warm` seeds the first policy and `warm_start` the first
 * iterate of the linear solver.
 */
inline HowardResult howard_solve(const Grid& g, const StencilSet& st, const EllipticityPair& ell,
                                 const Field& rhs, const PolicyState* warm = nullptr,
                                 const HowardOptions& opt = {}, const Field* warm_start = nullptr) {
  const std::size_t n = g.n_interior();
  if (rhs.size() != n) throw InvalidInput("howard_solve: rhs size mismatch");
  if (!st.certified_monotone) throw MonotonicityError("howard_solve: stencil set is not monotone");
  const double rhs_norm = detail::sup_norm(rhs);
  if (!(rhs_norm > 0.0)) throw InvalidInput("howard_solve: rhs must not vanish identically");
  for (double v : rhs)
    if (!(v >= 0.0)) throw InvalidInput("howard_solve: rhs must be nonnegative");

  HowardResult res;
  if (warm && warm->pair.size() == n) {
    res.policy = *warm;
  } else {
    // start from the Laplacian-like policy: axis pair, lambda on both legs
    res.policy.pair.assign(n, 0);
    res.policy.coef.assign(n, 0);
  }

  const Eigen::Map<const Eigen::VectorXd> b(rhs.data(), Eigen::Index(n));
  const Eigen::VectorXd bv = b;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(Eigen::Index(n));
  if (warm_start && warm_start->size() == n)
    x = Eigen::Map<const Eigen::VectorXd>(warm_start->data(), Eigen::Index(n));
  Field u(n, 0.0);
  double prev_res = std::numeric_limits<double>::infinity();
  int stalls = 0;
  for (int it = 1; it <= opt.max_iter; ++it) {
    const auto A = assemble_policy_matrix(g, st, ell, res.policy);
    detail::solve_m_matrix(A, bv, x, opt.linear_tol);
    for (std::size_t i = 0; i < n; ++i) u[i] = x[Eigen::Index(i)];

    // improvement
    std::vector<double> best(n), cur(n);
    std::vector<std::uint16_t> arg_k(n);
    std::vector<std::uint8_t> arg_c(n);
    parallel_for(n, [&](std::size_t i) {
      best[i] = detail::bellman_point(g, st, u, i, ell, detail::ZeroBoundary{}, &arg_k[i], &arg_c[i]);
      cur[i] = detail::policy_point(g, st, u, i, ell, detail::ZeroBoundary{}, res.policy.pair[i],
                                    res.policy.coef[i]);
    });
    bool changed = false;
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      resid = std::max(resid, std::abs(-best[i] - rhs[i]));
      const double eps = 1e-12 * (std::abs(best[i]) + std::abs(cur[i]) + rhs_norm);
      if (best[i] > cur[i] + eps) {
        res.policy.pair[i] = arg_k[i];
        res.policy.coef[i] = arg_c[i];
        changed = true;
      }
    }
    res.iterations = it;
    res.residual = resid / rhs_norm;
    if (!changed) {
      if (res.residual > opt.residual_tol)
        throw IterationError("howard_solve: stable policy but residual " + std::to_string(res.residual));
      res.solution = std::move(u);
      return res;
    }
    if (res.residual >= prev_res) {
      if (++stalls > 5) throw IterationError("howard_solve: policy cycling without residual decrease");
    } else {
      stalls = 0;
    }
    prev_res = res.residual;
  }
  throw IterationError("howard_solve: iteration budget exhausted, residual " + std::to_string(res.residual));
}

// ---------------------------------------------------------------------------

/// Principal eigenpair estimate on a grid.
struct SolveReport {
  double mu = 0.0;
  Field eigenfield;  ///< interior values, sup norm 1
  int iterations = 0;
  std::vector<double> residual_history;  ///< ||M+_h u_k + mu_k u_k||_inf per iteration
  double h = 0.0;
  int W = 0;
  bool certified_monotone = false;
  bool converged = false;
  double residual = 0.0;  ///< final ||M+_h u + mu u||_inf

  bool operator==(const SolveReport&) const = default;
};

struct EigenOptions {
  double tol = 1e-6;
  int max_iter = 200;
  HowardOptions howard{};
};

/**
 * Normalized inverse power iteration u_{k+1} = S(u_k) / ||S(u_k)||_inf with
 * S the Howard solution operator of -M+_h; mu_k = ||u_k|| / ||S(u_k)||.
 * Stops when |mu_k - mu_{k-1}| <= tol mu_k. When the budget runs out the best
 * estimate is returned with converged = false.
 */
inline SolveReport principal_eigen(const Grid& g, const StencilSet& st, const EllipticityPair& ell,
                                   const EigenOptions& opt = {}) {
  if (!g.connected) throw GridError("principal_eigen: grid interior is disconnected at this h");
  if (!(opt.tol > 0.0) || opt.max_iter < 1) throw ParameterError("principal_eigen: bad tolerance or budget");
  const std::size_t n = g.n_interior();

  SolveReport rep;
  rep.h = g.h;
  rep.W = st.width;
  rep.certified_monotone = st.certified_monotone;

  // indicator smoothed by one Jacobi sweep over the axis neighbors
  Field u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = g.lattice[i];
    int cnt = 1;
    for (auto [da, db] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}})
      if (g.index(a + da, b + db) >= 0) ++cnt;
    u[i] = cnt / 5.0;
  }
  {
    const double m = detail::sup_norm(u);
    for (double& v : u) v /= m;
  }

  PolicyState policy;
  Field guess;
  double mu_prev = 0.0;
  for (int k = 1; k <= opt.max_iter; ++k) {
    HowardResult hr = howard_solve(g, st, ell, u, k > 1 ? &policy : nullptr, opt.howard,
                                   k > 1 ? &guess : nullptr);
    policy = std::move(hr.policy);
    const double w = detail::sup_norm(hr.solution);
    const double mu = detail::sup_norm(u) / w;
    // u_{k+1} ~ u_k / mu, so u_{k+1} / mu is the natural next guess
    guess = hr.solution;
    for (double& v : guess) v /= mu * w;
    for (double& v : hr.solution) v /= w;
    u = std::move(hr.solution);

    const Field mp = discrete_pucci_plus(g, st, u, ell);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(mp[i] + mu * u[i]));
    rep.residual_history.push_back(r);
    rep.mu = mu;
    rep.iterations = k;
    rep.residual = r;
    if (k > 1 && std::abs(mu - mu_prev) <= opt.tol * mu) {
      rep.converged = true;
      break;
    }
    mu_prev = mu;
  }
  rep.eigenfield = std::move(u);
  return rep;
}

inline SolveReport principal_eigen(const DomainSpec& spec, const EllipticityPair& ell, double h, int W,
                                   const EigenOptions& opt = {}) {
  const auto [g, st] = build_grid(spec, h, W);
  return principal_eigen(g, st, ell, opt);
}

/// mu(delta * Omega) = mu(Omega) / delta^2.
inline double rescale_eigenvalue(double mu, double delta) {
  if (!std::isfinite(delta) || !(delta > 0.0)) throw ParameterError("rescale_eigenvalue: delta must be positive");
  return mu / (delta * delta);
}

/// mu(Omega / sqrt|Omega|) = |Omega| mu(Omega).
inline double normalized_eigenvalue(double mu, double area) { return rescale_eigenvalue(mu, 1.0 / std::sqrt(area)); }

}  // namespace pucci
