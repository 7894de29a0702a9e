// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "pucci/report_io.hpp"

using namespace pucci;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome suite_outcome(const VerifyReport& r) {
  int hard = 0, soft_flags = 0;
  std::string failed;
  for (const Check& c : r.checks) {
    if (c.hard) {
      ++hard;
      if (!c.passed) failed += " [" + c.name + ": " + num(c.value) + "]";
    } else if (!c.passed) {
      ++soft_flags;
    }
  }
  std::string d = std::to_string(hard) + " hard checks";
  if (soft_flags) d += ", " + std::to_string(soft_flags) + " flagged";
  if (!failed.empty()) d += ", failed:" + failed;
  return {r.passed(), d};
}

Outcome run_suite(void (*suite)(VerifyReport&, const VerifyOptions&), const VerifyOptions& opt = {}) {
  VerifyReport r;
  suite(r, opt);
  return suite_outcome(r);
}

Outcome numerical_recovery() {
  const EllipticityPair e(1, 2);
  const DomainSpec d = DomainSpec::omega_gamma(2, 1);
  double prev = INFINITY, last = 0.0;
  bool monotone = true;
  std::string d_str;
  for (auto [h, W] : {std::pair{pi / 16, 2}, {pi / 32, 3}, {pi / 64, 4}}) {
    const SolveReport r = principal_eigen(d, e, h, W);
    if (!r.converged) return {false, "no convergence at W=" + std::to_string(W)};
    const double err = std::abs(r.mu - 1.0);
    monotone = monotone && err < prev;
    prev = err;
    last = r.mu;
    d_str += " W" + std::to_string(W) + ":" + num(err);
  }
  return {monotone && std::abs(last - 1.0) <= 0.05, "mu_h=" + std::to_string(last) + ", errors" + d_str};
}

Outcome laplacian_square() {
  const double a = pi / std::sqrt(2.0), h = pi / 64;
  EigenOptions opt;
  opt.tol = 1e-13;
  const SolveReport r = principal_eigen(DomainSpec::square(a), EllipticityPair(1, 1), h, 1, opt);
  const double o = oracle::square_eigenvalue(a, h);
  const double diff = std::abs(r.mu - o);
  return {r.converged && std::abs(r.mu - 1.0) <= 0.03 && diff <= 1e-10,
          "mu_h=" + std::to_string(r.mu) + ", |mu_h - oracle|=" + num(diff)};
}

Outcome gamma_minimum() {
  VerifyOptions o;
  o.numerical_gamma = false;
  return run_suite(verify_gamma_sweep, o);
}

Outcome shear_bound() {
  VerifyReport r;
  verify_shear(r, VerifyOptions{});
  Outcome out = suite_outcome(r);
  for (const SweepRow& row : r.sweeps.back().rows)
    out.detail += "; a=" + num(row.value) + " " + row.strictness;
  return out;
}

Outcome determinism() {
  const std::string a = to_json(verify_all({})).dump(2), b = to_json(verify_all({})).dump(2);
  return {a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const Criterion criteria[] = {
      {"closed-form eigenpair residual", [] { return run_suite(verify_closed_form); }, 5},
      {"numerical eigenvalue recovers 1", numerical_recovery, 120},
      {"Laplacian square vs 5-point oracle", laplacian_square, 0},
      {"area identities", [] { return run_suite(verify_area); }, 0},
      {"symmetric domain minimizes", gamma_minimum, 10},
      {"shear lower bound", shear_bound, 0},
      {"non-separability", [] { return run_suite(verify_nonseparability); }, 0},
      {"cone solution", [] { return run_suite(verify_cone); }, 0},
      {"periodic extension", [] { return run_suite(verify_periodic); }, 0},
      {"determinism of verify --all --seed 42", determinism, 0},
  };
  int failures = 0, k = 0;
  for (const Criterion& c : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && s >= c.budget_s) {
      o.ok = false;
      o.detail += ", over time budget " + num(c.budget_s) + " s";
    }
    std::printf("%s %2d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", k, c.name, o.detail.c_str(), s);
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
