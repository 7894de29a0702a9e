#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pucci/eigenfunction.hpp"
#include "pucci/grid_fd.hpp"

using namespace pucci;

namespace {

const double square_half = pi / std::sqrt(2.0);

Field sample(const Grid& g, auto&& f) {
  Field u(g.n_interior());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = f(g.points[i]);
  return u;
}

}  // namespace

TEST(Stencil, Pairs) {
  const auto p1 = stencil_pairs(1);
  ASSERT_EQ(p1.size(), 1u);
  EXPECT_EQ(p1[0].first.p, 1);
  EXPECT_EQ(p1[0].first.q, 0);
  EXPECT_EQ(p1[0].second.p, 0);
  EXPECT_EQ(p1[0].second.q, 1);
  for (int W : {2, 3, 4, 6}) {
    const auto pr = stencil_pairs(W);
    std::set<std::pair<int, int>> seen;
    for (const auto& [v, w] : pr) {
      EXPECT_EQ(v.p * w.p + v.q * w.q, 0);
      EXPECT_EQ(std::gcd(v.p, v.q), 1);
      EXPECT_LE(std::max(std::abs(v.p), std::abs(v.q)), W);
      EXPECT_TRUE(seen.insert({v.p, v.q}).second);
    }
    EXPECT_EQ(pr.front().first.p, 1);
    EXPECT_EQ(pr.front().first.q, 0);
  }
  EXPECT_EQ(stencil_pairs(2).size(), 4u);
  EXPECT_THROW(stencil_pairs(0), ParameterError);
}

TEST(Grid, SquareFivePoint) {
  const auto [g, st] = build_grid(DomainSpec::square(square_half), pi / 16, 1);
  const oracle::Line L = oracle::sw_line(square_half, pi / 16);
  EXPECT_EQ(g.n_interior(), L.x.size() * L.x.size());
  EXPECT_EQ(st.dirs.size(), 2u);
  EXPECT_TRUE(st.certified_monotone);
  EXPECT_TRUE(g.connected);
  for (std::size_t n = 0; n < g.n_interior(); ++n) {
    const Point p = g.points[n];
    for (std::size_t d = 0; d < 2; ++d) {
      const Leg& l = st.leg(n, d);
      const double t = d == 0 ? p.x : p.y;
      if (l.fwd < 0) {
        EXPECT_NEAR(l.s_fwd * g.h, square_half - t, 1e-13);
      } else {
        EXPECT_EQ(l.s_fwd, 1.0);
      }
      if (l.bwd < 0) {
        EXPECT_NEAR(l.s_bwd * g.h, square_half + t, 1e-13);
      }
    }
  }
}

TEST(Grid, MonotoneCertificate) {
  for (int W : {1, 2, 3, 4}) {
    const auto [g, st] = build_grid(DomainSpec::omega_gamma(2, 1), pi / 32, W);
    EXPECT_TRUE(st.certified_monotone) << W;
    EXPECT_TRUE(g.connected);
    for (const Leg& l : st.legs) {
      ASSERT_GT(l.c_fwd, 0.0);
      ASSERT_GT(l.c_bwd, 0.0);
    }
  }
  const auto [g, st] = build_grid(DomainSpec::sheared(2, 1, 2.5), pi / 16, 3);
  EXPECT_TRUE(st.certified_monotone);
}

TEST(Grid, ScaledSimilarity) {
  const DomainSpec base = DomainSpec::omega_gamma(2, 1);
  const auto [g1, s1] = build_grid(base, pi / 16, 3);
  const auto [g2, s2] = build_grid(DomainSpec::scaled(base, 2), pi / 8, 3);
  ASSERT_EQ(g1.lattice, g2.lattice);
  ASSERT_EQ(s1.legs.size(), s2.legs.size());
  for (std::size_t i = 0; i < s1.legs.size(); ++i) {
    EXPECT_EQ(s1.legs[i].fwd, s2.legs[i].fwd);
    EXPECT_EQ(s1.legs[i].bwd, s2.legs[i].bwd);
    EXPECT_NEAR(s1.legs[i].s_fwd, s2.legs[i].s_fwd, 1e-12);
  }
}

TEST(Grid, Errors) {
  EXPECT_THROW(build_grid(DomainSpec::square(1), 0.0, 1), ParameterError);
  EXPECT_THROW(build_grid(DomainSpec::square(1), 0.1, 0), ParameterError);
  EXPECT_THROW(build_grid(DomainSpec::square(1), NAN, 1), ParameterError);
}

TEST(DiscreteOperator, ExactOnQuadratics) {
  const EllipticityPair e(1, 3);
  const auto [g, st] = build_grid(DomainSpec::omega_gamma(3, 1.2), pi / 16, 2);
  auto check = [&](double a, double b, double c, double cx, double cy, double want) {
    auto q = [=](Point p) { return a * p.x * p.x + 2 * b * p.x * p.y + c * p.y * p.y + cx * p.x + cy * p.y + 1; };
    const Field mp = discrete_pucci_plus(g, st, sample(g, q), e, q);
    for (double v : mp) ASSERT_NEAR(v, want, 1e-10);
  };
  check(-0.5, 0, -0.5, 0, 0, -2 * e.lambda());
  check(-3, 0, 1, 0.3, -2, pucci_plus(Sym2::diag(-6, 2), e));
  check(2, 0, 5, 0, 0, pucci_plus(Sym2::diag(4, 10), e));
  // eigen-directions (1, 1) and (-1, 1), both in the W = 2 set
  check(1, -2, 1, 0, 0, pucci_plus(Sym2{2, -4, 2}, e));
  // cone solution: zero
  check(-3, 0, 1, 0, 0, 0.0);
}

TEST(DiscreteOperator, HomogeneousBoundaryDefault) {
  const EllipticityPair e(1, 2);
  const auto [g, st] = build_grid(DomainSpec::omega_gamma(2, 1), pi / 16, 2);
  const Field u = sample(g, [](Point p) { return std::sin(p.x) + p.y * p.y; });
  EXPECT_EQ(discrete_pucci_plus(g, st, u, e), discrete_pucci_plus(g, st, u, e, [](Point) { return 0.0; }));
}

TEST(DiscreteOperator, ConsistentWithClosedForm) {
  const EllipticityPair e(1, 2);
  const DomainSpec d = DomainSpec::omega_gamma(2, 1);
  const PiecewiseEigenfunction u(d, e);
  double prev = INFINITY;
  for (auto [h, W] : {std::pair{pi / 16, 2}, {pi / 32, 3}, {pi / 64, 4}}) {
    const auto [g, st] = build_grid(d, h, W);
    const Field f = sample(g, [&](Point p) { return u.value(p); });
    const Field mp = discrete_pucci_plus(g, st, f, e, [&](Point p) { return u.value(p); });
    // away from the boundary the defect is pure truncation error
    double worst = 0.0;
    for (std::size_t i = 0; i < mp.size(); ++i) {
      const Point p = g.points[i];
      if (std::abs(p.x) > 1.2 || std::abs(p.y) > 1.2) continue;
      worst = std::max(worst, std::abs(mp[i] + f[i]));
    }
    EXPECT_LT(worst, prev);
    prev = worst;
  }
  EXPECT_LT(prev, 0.05);
}

TEST(Howard, LaplacianMatchesDirectSolve) {
  const EllipticityPair e(1, 1);
  const double h = pi / 16;
  const auto [g, st] = build_grid(DomainSpec::square(square_half), h, 1);
  const HowardResult r = howard_solve(g, st, e, Field(g.n_interior(), 1.0));
  const oracle::Line L = oracle::sw_line(square_half, h);
  const Eigen::SparseMatrix<double> A = oracle::square_matrix(L);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
  const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(A.rows()));
  const int n = int(L.x.size());
  ASSERT_EQ(g.n_interior(), std::size_t(n * n));
  for (std::size_t k = 0; k < g.n_interior(); ++k) {
    const int i = int(std::lround((g.points[k].x - L.x[0]) / h)), j = int(std::lround((g.points[k].y - L.x[0]) / h));
    EXPECT_NEAR(r.solution[k], x[j * n + i], 1e-9);
  }
}

TEST(Howard, SolvesNonlinearEquation) {
  const EllipticityPair e(1, 4);
  const auto [g, st] = build_grid(DomainSpec::omega_gamma(4, 1), pi / 16, 3);
  const Field rhs = sample(g, [](Point p) { return 1.0 + 0.5 * std::cos(p.x * p.y); });
  const HowardResult r = howard_solve(g, st, e, rhs);
  const Field mp = discrete_pucci_plus(g, st, r.solution, e);
  for (std::size_t i = 0; i < mp.size(); ++i) ASSERT_NEAR(-mp[i], rhs[i], 1e-9 * 1.5);
  for (double v : r.solution) EXPECT_GT(v, 0.0);
  EXPECT_LE(r.residual, 1e-9);
  EXPECT_GE(r.iterations, 1);
}

TEST(Howard, ComparisonPrinciple) {
  const EllipticityPair e(1, 2);
  const auto [g, st] = build_grid(DomainSpec::sheared(2, 1, 1.0), pi / 16, 2);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> U(0, 1);
  for (int trial = 0; trial < 5; ++trial) {
    Field r1(g.n_interior()), r2(g.n_interior());
    for (std::size_t i = 0; i < r1.size(); ++i) {
      r1[i] = U(rng);
      r2[i] = r1[i] + (U(rng) < 0.3 ? U(rng) : 0.0);
    }
    const Field u1 = howard_solve(g, st, e, r1).solution, u2 = howard_solve(g, st, e, r2).solution;
    for (std::size_t i = 0; i < u1.size(); ++i) ASSERT_LE(u1[i], u2[i] + 1e-10);
  }
}

TEST(Howard, Errors) {
  const EllipticityPair e(1, 2);
  const auto [g, st] = build_grid(DomainSpec::omega_gamma(2, 1), pi / 8, 2);
  EXPECT_THROW(howard_solve(g, st, e, Field(g.n_interior(), 0.0)), InvalidInput);
  Field neg(g.n_interior(), 1.0);
  neg[0] = -1.0;
  EXPECT_THROW(howard_solve(g, st, e, neg), InvalidInput);
  EXPECT_THROW(howard_solve(g, st, e, Field(3, 1.0)), InvalidInput);
  StencilSet bad = st;
  bad.certified_monotone = false;
  EXPECT_THROW(howard_solve(g, bad, e, Field(g.n_interior(), 1.0)), MonotonicityError);
  HowardOptions tight;
  tight.max_iter = 1;
  EXPECT_THROW(howard_solve(g, st, e, Field(g.n_interior(), 1.0), nullptr, tight), IterationError);
}

TEST(PolicyMatrix, IsMMatrix) {
  const EllipticityPair e(1, 3);
  const auto [g, st] = build_grid(DomainSpec::omega_gamma(3, 1), pi / 16, 3);
  std::mt19937_64 rng(22);
  PolicyState pol;
  for (std::size_t i = 0; i < g.n_interior(); ++i) {
    pol.pair.push_back(std::uint16_t(rng() % st.n_pairs()));
    pol.coef.push_back(std::uint8_t(rng() % 4));
  }
  const auto A = assemble_policy_matrix(g, st, e, pol);
  for (int r = 0; r < A.outerSize(); ++r) {
    double diag = 0.0, off = 0.0;
    for (decltype(A)::InnerIterator it(A, r); it; ++it) {
      if (it.col() == r) diag = it.value();
      else {
        ASSERT_LE(it.value(), 0.0);
        off += -it.value();
      }
    }
    ASSERT_GE(diag, off * (1 - 1e-12));
  }
}

TEST(Eigen, LaplacianSquareMatchesOracle) {
  const double h = pi / 32;
  EigenOptions opt;
  opt.tol = 1e-13;
  const SolveReport r = principal_eigen(DomainSpec::square(square_half), EllipticityPair(1, 1), h, 1, opt);
  EXPECT_TRUE(r.converged);
  const double o1 = oracle::square_eigenvalue(square_half, h), o2 = oracle::square_eigenvalue_inverse_iteration(square_half, h);
  EXPECT_NEAR(o1, o2, 1e-12);
  EXPECT_NEAR(r.mu, o1, 1e-10);
  EXPECT_NEAR(r.mu, 1.0, 0.03);
}

TEST(Eigen, OmegaGammaReport) {
  EigenOptions opt;
  opt.tol = 1e-10;
  const SolveReport r = principal_eigen(DomainSpec::omega_gamma(2, 1), EllipticityPair(1, 2), pi / 16, 2, opt);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.mu, 1.0, 0.05);
  EXPECT_LE(r.residual, 1e-8);
  EXPECT_EQ(r.residual_history.size(), std::size_t(r.iterations));
  EXPECT_TRUE(r.certified_monotone);
  EXPECT_EQ(r.W, 2);
  EXPECT_DOUBLE_EQ(detail::sup_norm(r.eigenfield), 1.0);
  for (double v : r.eigenfield) EXPECT_GT(v, 0.0);
  // eventually monotone
  EXPECT_LE(r.residual_history.back(), r.residual_history.front());
}

TEST(Eigen, ScalingHomogeneity) {
  const EllipticityPair e(1, 2);
  const DomainSpec base = DomainSpec::omega_gamma(2, 1);
  const double mu = principal_eigen(base, e, pi / 16, 2).mu;
  const double mu2 = principal_eigen(DomainSpec::scaled(base, 2), e, pi / 8, 2).mu;
  EXPECT_NEAR(mu2, rescale_eigenvalue(mu, 2), 1e-8);
  EXPECT_DOUBLE_EQ(rescale_eigenvalue(1, 2), 0.25);
  EXPECT_DOUBLE_EQ(normalized_eigenvalue(1, 2 * pi * pi), 2 * pi * pi);
  EXPECT_THROW(rescale_eigenvalue(1, 0), ParameterError);
}

TEST(Eigen, ShearedAboveBound) {
  const EllipticityPair e(1, 2);
  const SolveReport r = principal_eigen(DomainSpec::sheared(2, 1, pi / 2), e, pi / 32, 3);
  EXPECT_TRUE(r.converged);
  EXPECT_GT(r.mu, 4.0 / 3.0 * (1 - 0.02));
}

TEST(Eigen, BudgetExhaustedIsFlagged) {
  EigenOptions opt;
  opt.max_iter = 2;
  opt.tol = 1e-14;
  const SolveReport r = principal_eigen(DomainSpec::omega_gamma(2, 1), EllipticityPair(1, 2), pi / 16, 2, opt);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 2);
  EXPECT_GT(r.mu, 0.0);
}

TEST(Eigen, DeterministicAcrossThreadCounts) {
  const EllipticityPair e(1, 2);
  const DomainSpec d = DomainSpec::omega_gamma(2, 1);
  setenv("PUCCI_EIG_THREADS", "1", 1);
  const SolveReport a = principal_eigen(d, e, pi / 32, 3);
  setenv("PUCCI_EIG_THREADS", "4", 1);
  const SolveReport b = principal_eigen(d, e, pi / 32, 3);
  unsetenv("PUCCI_EIG_THREADS");
  EXPECT_EQ(a, b);
}
