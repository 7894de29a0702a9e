#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "pucci/verify.hpp"

using namespace pucci;

TEST(Sampling, DeterministicAndInterior) {
  const DomainSpec d = DomainSpec::sheared(2, 0.8, 1.0);
  const auto a = domain_samples(d, 2000, 7), b = domain_samples(d, 2000, 7), c = domain_samples(d, 2000, 8);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].y, b[i].y);
    EXPECT_TRUE(contains(d, a[i]));
  }
  EXPECT_GE(a.size(), 1500u);
  bool differs = a.size() != c.size();
  for (std::size_t i = 0; !differs && i < a.size(); ++i) differs = a[i].x != c[i].x;
  EXPECT_TRUE(differs);
}

TEST(Sampling, BoundaryPointsOnBoundary) {
  for (const DomainSpec& d : {DomainSpec::omega_gamma(2, 1), DomainSpec::omega_gamma(4, 0.6), DomainSpec::sheared(2, 1, 2.0)}) {
    const PiecewiseEigenfunction u(d, EllipticityPair::from_omega(1, std::get<0>(detail::reference_params(d))));
    for (Point p : boundary_samples(d, 101)) {
      EXPECT_TRUE(closure_contains(d, p, 1e-12));
      EXPECT_NEAR(u.value(p), 0.0, 1e-12);
    }
  }
}

TEST(Sampling, Halton) {
  EXPECT_EQ(halton(1, 2), 0.5);
  EXPECT_EQ(halton(2, 2), 0.25);
  EXPECT_EQ(halton(3, 2), 0.75);
  EXPECT_DOUBLE_EQ(halton(1, 3), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(halton(4, 3), 4.0 / 9.0);
}

TEST(ClosedFormResidual, Small) {
  for (auto [l, L] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {1.0, 4.0}, {0.5, 3.0}}) {
    const EllipticityPair e(l, L);
    for (double g : gamma_test_values(e.omega())) EXPECT_LE(closed_form_residual(e, g, 10000, 42), 1e-11);
  }
}

TEST(GammaValues, EndpointsAndMidpoints) {
  const auto v = gamma_test_values(4);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.front(), 0.5);
  EXPECT_EQ(v[1], 0.75);
  EXPECT_EQ(v[2], 1.0);
  EXPECT_EQ(v[3], 1.5);
  EXPECT_EQ(v.back(), 2.0);
  EXPECT_EQ(gamma_test_values(1), std::vector<double>{1.0});
}

TEST(Certificate, ShearedLowerBound) {
  const EllipticityPair e(1, 2);
  for (double a : {0.0, pi / 4, pi / 2, 3 * pi / 4}) {
    const DomainSpec d = DomainSpec::sheared(2, 1, a);
    const double mu = pi * pi / (pi * pi - a * a);
    const Certificate c = certify_lower_bound(d, e, mu, domain_samples(d, 4000, 3));
    EXPECT_TRUE(c.passes) << a;
    EXPECT_GE(c.min_slack, -certificate_tolerance * c.scale);
    EXPECT_EQ(c.n_samples, domain_samples(d, 4000, 3).size());
    if (a > 0) {
      EXPECT_GT(c.max_slack, 1e-3) << a;
    }
  }
}

TEST(Certificate, EqualityWhenLaplacian) {
  const DomainSpec d = DomainSpec::sheared(1, 1, pi / 2);
  const Certificate c = certify_lower_bound(d, EllipticityPair(1, 1), 4.0 / 3.0, domain_samples(d, 4000, 3));
  EXPECT_TRUE(c.passes);
  EXPECT_LE(std::abs(c.min_slack), 1e-11 * c.scale);
  EXPECT_LE(std::abs(c.max_slack), 1e-11 * c.scale);
}

TEST(Certificate, RejectsTooLargeMu) {
  const DomainSpec d = DomainSpec::omega_gamma(2, 1);
  const Certificate c = certify_lower_bound(d, EllipticityPair(1, 2), 1.01, domain_samples(d, 1000, 3));
  EXPECT_FALSE(c.passes);
  EXPECT_THROW(certify_lower_bound(DomainSpec::square(1), EllipticityPair(1, 1), 1, {}), UnsupportedError);
}

TEST(GammaSweep, SymmetricMinimum) {
  for (int n : {9, 17}) {
    const SweepResult s = gamma_sweep(EllipticityPair(1, 4), n);
    ASSERT_EQ(s.rows.size(), std::size_t(n));
    EXPECT_EQ(s.parameter, "gamma");
    EXPECT_EQ(s.rows.front().value, 0.5);
    EXPECT_EQ(s.rows.back().value, 2.0);
    EXPECT_EQ(s.rows[s.argmin].value, 1.0);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      EXPECT_NEAR(s.rows[i].area, s.rows[s.rows.size() - 1 - i].area, 1e-9);
      EXPECT_DOUBLE_EQ(s.rows[i].normalized, s.rows[i].area);
      EXPECT_FALSE(s.rows[i].mu_h);
    }
  }
  const SweepResult one = gamma_sweep(EllipticityPair(2, 2), 9);
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_EQ(one.rows[0].value, 1.0);
  EXPECT_NEAR(one.rows[0].normalized, 4 * pi * pi, 1e-8);
  EXPECT_THROW(gamma_sweep(EllipticityPair(1, 4), 8), ParameterError);
  EXPECT_THROW(gamma_sweep(EllipticityPair(1, 4), 1), ParameterError);
}

TEST(GammaSweep, Numerical) {
  const SweepResult s = gamma_sweep(EllipticityPair(1, 2), 3, true, pi / 8, 2);
  ASSERT_EQ(s.rows.size(), 3u);
  for (const SweepRow& r : s.rows) {
    ASSERT_TRUE(r.mu_h && r.mu_fine && r.margin && r.normalized_numeric);
    EXPECT_NEAR(*r.mu_fine, 1.0, 0.1);
    EXPECT_NEAR(*r.margin, std::abs(*r.mu_fine - *r.mu_h), 1e-15);
  }
  ASSERT_TRUE(s.argmin_numeric);
}

TEST(ShearSweep, BoundHolds) {
  const SweepResult s = shear_sweep(EllipticityPair(1, 2), 1, {pi / 2, 0.0}, pi / 16, 2);
  ASSERT_EQ(s.rows.size(), 2u);
  EXPECT_EQ(s.parameter, "a");
  ASSERT_TRUE(s.gamma);
  EXPECT_EQ(s.rows[0].value, 0.0);
  EXPECT_EQ(s.rows[0].strictness, "equality");
  EXPECT_DOUBLE_EQ(*s.rows[1].bound, 4.0 / 3.0);
  for (const SweepRow& r : s.rows) {
    EXPECT_TRUE(r.bound_ok);
    EXPECT_TRUE(r.strictness == "equality" || r.strictness == "confirmed" || r.strictness == "indeterminate");
  }
  EXPECT_EQ(s.rows[s.argmin].value, 0.0);
}

TEST(Nonseparability, Examples) {
  const NonseparabilityReport a = nonseparability_report(EllipticityPair(1, 2), 1000);
  EXPECT_FALSE(a.separable);
  EXPECT_GE(a.min_formula, 0.5 - 1e-12);
  EXPECT_GT(a.max_abs_defect, 0.25);
  EXPECT_NEAR(a.fpp0_observed, a.fpp0_expected, 1e-6);
  EXPECT_EQ(a.table.size(), 1000u);
  const NonseparabilityReport b = nonseparability_report(EllipticityPair(1, 4), 1000);
  EXPECT_GE(b.min_formula, 1.5 - 1e-12);
  const NonseparabilityReport c = nonseparability_report(EllipticityPair(3, 3), 1000);
  EXPECT_TRUE(c.separable);
  EXPECT_LE(c.max_abs_defect, 1e-12);
}

TEST(Periodic, Suite) {
  for (double g : {0.5, 1.0, std::sqrt(2.0), 3.0}) {
    const PeriodicReport p = periodic_residual_suite(EllipticityPair(1, 2), g, 4000, 5);
    EXPECT_LE(p.max_residual, 1e-11);
    for (std::size_t c : p.region_counts) EXPECT_GT(c, 0u);
    ASSERT_EQ(p.jumps.size(), 2u);
    for (const GradientJump& j : p.jumps) EXPECT_LE(j.max_jump, 10 * j.probe);
    EXPECT_LT(p.corner_value, 0.0);
  }
}

TEST(Periodic, FloodFillMatchesClassification) {
  const double r2 = std::sqrt(2.0);
  for (auto [om, g] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {2.0, 1 / r2}, {2.0, 1.0}, {2.0, r2}, {2.0, 2.0}, {4.0, 0.3},
                       {4.0, 1.2}, {4.0, 2.0}, {9.0, 5.0}})
    EXPECT_EQ(negative_set_topology(EllipticityPair(1, om), g, 401), component_class(om, g)) << om << " " << g;
}

TEST(Cone, Suite) {
  const ConeReport c = cone_suite(200, 9);
  EXPECT_LE(c.max_continuous, 1e-12);
  EXPECT_LE(c.max_discrete, 1e-10);
  EXPECT_LE(c.corner.stabilization, 0.05);
}

TEST(VerifyAll, CheapSuitesDeterministic) {
  VerifyOptions o;
  o.samples = 2000;
  VerifyReport a, b;
  for (VerifyReport* r : {&a, &b}) {
    verify_closed_form(*r, o);
    verify_area(*r, o);
    verify_nonseparability(*r, o);
    verify_cone(*r, o);
  }
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.passed());
  std::set<std::string> suites;
  for (const Check& c : a.checks) suites.insert(c.suite);
  EXPECT_EQ(suites, (std::set<std::string>{"area", "closed_form", "cone", "nonseparability"}));
}
