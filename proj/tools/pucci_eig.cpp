// pucci_eig: command-line front end for the pucci library.
//
//   pucci_eig eig          principal eigenvalue on a grid
//   pucci_eig verify       verification suites
//   pucci_eig area         domain area
//   pucci_eig sweep-gamma  |Omega| mu over gamma
//   pucci_eig sweep-shear  mu over the shear parameter a
//   pucci_eig render       boundary and eigenfunction samples for plotting
//
// Exit codes: 0 success, 1 usage error, 2 numerical non-convergence,
// 3 verification failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pucci/report_io.hpp"

using namespace pucci;

namespace {

enum Exit { ok = 0, usage = 1, nonconvergence = 2, verify_failed = 3 };

struct RunConfig {
  std::string command;
  std::optional<double> lambda, Lambda, omega;
  double gamma = 1.0;
  double a = 0.0;
  std::optional<double> delta;
  bool square = false;
  double h = pi / 32;
  int W = 3;
  double tol = 1e-6;
  int max_iter = 200;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  std::string out;
  std::string format;

  // command specific
  int n = 17;
  bool numerical = false;
  std::vector<double> a_values{0.0, pi / 4, pi / 2, 3 * pi / 4};
  bool all = false;
  std::vector<std::string> suites;
  bool field = false;
  bool periodic = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EllipticityPair ellipticity(const RunConfig& c) {
  const int given = int(c.lambda.has_value()) + int(c.Lambda.has_value()) + int(c.omega.has_value());
  if (given == 3) {
    const EllipticityPair e(*c.lambda, *c.Lambda);
    if (std::abs(e.omega() - *c.omega) > 1e-12 * *c.omega)
      throw UsageError("--lambda, --Lambda and --omega are inconsistent");
    return e;
  }
  if (c.lambda && c.Lambda) return EllipticityPair(*c.lambda, *c.Lambda);
  if (c.omega && c.Lambda) return EllipticityPair(*c.Lambda / *c.omega, *c.Lambda);
  const double lam = c.lambda.value_or(1.0);
  if (c.omega) return EllipticityPair::from_omega(lam, *c.omega);
  if (c.Lambda) return EllipticityPair(lam, *c.Lambda);
  return EllipticityPair(lam, 2.0 * lam);
}

DomainSpec domain(const RunConfig& c, const EllipticityPair& e) {
  DomainSpec d = c.square ? DomainSpec::square(pi / std::sqrt(2.0))
                 : c.a != 0.0 ? DomainSpec::sheared(e.omega(), c.gamma, c.a)
                              : DomainSpec::omega_gamma(e.omega(), c.gamma);
  if (c.delta) d = DomainSpec::scaled(d, *c.delta);
  return d;
}

std::string format_of(const RunConfig& c, const char* fallback) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) std::cout << text << std::flush;
  else write_atomic(c.out, text);
}

Json header(const RunConfig& c, const EllipticityPair& e) {
  return {{"schema", schema_version}, {"command", c.command}, {"lambda", e.lambda()}, {"Lambda", e.Lambda()}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int cmd_eig(const RunConfig& c) {
  const EllipticityPair e = ellipticity(c);
  const DomainSpec spec = domain(c, e);
  EigenOptions opt;
  opt.tol = c.tol;
  opt.max_iter = c.max_iter;
  const auto [g, st] = build_grid(spec, c.h, c.W);
  const SolveReport r = principal_eigen(g, st, e, opt);

  if (format_of(c, "json") == "csv") {
    std::ostringstream os;
    os << "x,y,u\n";
    for (std::size_t i = 0; i < g.n_interior(); ++i)
      os << csv_num(g.points[i].x) << ',' << csv_num(g.points[i].y) << ',' << csv_num(r.eigenfield[i]) << '\n';
    emit(c, os.str());
  } else {
    Json j = header(c, e);
    j["domain"] = to_json(spec);
    j["n_interior"] = g.n_interior();
    j.update(to_json(r, c.field));
    emit(c, dump(j));
  }
  if (!r.converged) {
    std::cerr << "eig: not converged after " << r.iterations << " iterations\n";
    return nonconvergence;
  }
  return ok;
}

int cmd_area(const RunConfig& c) {
  const EllipticityPair e = ellipticity(c);
  const DomainSpec spec = domain(c, e);
  const double A = area(spec);
  std::optional<double> dA;
  if (auto og = spec.get_if<OmegaGamma>()) {
    const double r = std::sqrt(og->omega);
    if (og->gamma > 1.0 / r && og->gamma < r) dA = area_derivative_gamma(og->omega, og->gamma);
  }
  if (format_of(c, "json") == "csv") {
    emit(c, "area,area_derivative_gamma\n" + csv_num(A) + "," + csv_opt(dA) + "\n");
  } else {
    Json j = header(c, e);
    j["domain"] = to_json(spec);
    j["area"] = A;
    j["area_derivative_gamma"] = detail::opt_json(dA);
    emit(c, dump(j));
  }
  return ok;
}

int cmd_sweep_gamma(const RunConfig& c) {
  const EllipticityPair e = ellipticity(c);
  const SweepResult s = gamma_sweep(e, c.n, c.numerical, c.h, c.W);
  if (format_of(c, "csv") == "csv") {
    emit(c, sweep_csv(s));
  } else {
    Json j = header(c, e);
    j["sweep"] = to_json(s);
    emit(c, dump(j));
  }
  return ok;
}

int cmd_sweep_shear(const RunConfig& c) {
  const EllipticityPair e = ellipticity(c);
  const SweepResult s = shear_sweep(e, c.gamma, c.a_values, c.h, c.W);
  if (format_of(c, "csv") == "csv") {
    emit(c, sweep_csv(s));
  } else {
    Json j = header(c, e);
    j["sweep"] = to_json(s);
    emit(c, dump(j));
  }
  return ok;
}

int cmd_render(const RunConfig& c) {
  const EllipticityPair e = ellipticity(c);
  const std::string fmt = format_of(c, "csv");
  if (fmt != "csv") throw UsageError("render writes csv only");
  std::ostringstream os;
  os << "kind,x,y,u,region,concave\n";
  auto concave = [](const Sym2& H) { return eigenvalues(H).first <= 0.0 ? 1 : 0; };
  const auto m = std::size_t(std::ceil(std::sqrt(double(c.samples))));

  if (c.periodic) {
    const PeriodicEigenfunction u(e, c.gamma);
    const double L = u.half_period();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        const Point p{-2 * L + 4 * L * (i + 0.5) / m, -2 * L + 4 * L * (k + 0.5) / m};
        const Jet j = u.jet(p);
        os << "sample," << csv_num(p.x) << ',' << csv_num(p.y) << ',' << csv_num(j.value) << ','
           << to_string(j.region) << ',' << concave(j.hess) << '\n';
      }
    emit(c, os.str());
    return ok;
  }

  const DomainSpec spec = domain(c, e);
  const PiecewiseEigenfunction u(spec, e);
  for (const Point& p : boundary_samples(spec, 401))
    os << "boundary," << csv_num(p.x) << ',' << csv_num(p.y) << ',' << csv_num(u.value(p)) << ",boundary,\n";
  const Box b = bounding_box(spec);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const Point p{b.xmin + (b.xmax - b.xmin) * (i + 0.5) / m, b.ymin + (b.ymax - b.ymin) * (k + 0.5) / m};
      if (!contains(spec, p)) continue;
      const Jet j = u.jet(p);
      os << "sample," << csv_num(p.x) << ',' << csv_num(p.y) << ',' << csv_num(j.value) << ','
         << to_string(j.region) << ',' << concave(j.hess) << '\n';
    }
  emit(c, os.str());
  return ok;
}

int cmd_verify(const RunConfig& c) {
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.samples = c.samples;
  opt.h = c.h;
  opt.W = c.W;
  VerifyReport rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;

  std::vector<std::string> suites = c.suites;
  if (c.all || suites.empty())
    suites = {"closed_form", "area", "gamma_sweep", "shear", "nonseparability", "periodic", "cone"};
  for (const std::string& s : suites) {
    if (s == "closed_form") verify_closed_form(rep, opt);
    else if (s == "area") verify_area(rep, opt);
    else if (s == "gamma_sweep") verify_gamma_sweep(rep, opt);
    else if (s == "shear") verify_shear(rep, opt);
    else if (s == "nonseparability") verify_nonseparability(rep, opt);
    else if (s == "periodic") verify_periodic(rep, opt);
    else if (s == "cone") verify_cone(rep, opt);
    else throw UsageError("unknown suite: " + s);
  }

  emit(c, format_of(c, "json") == "csv" ? checks_csv(rep) : dump(to_json(rep)));
  for (const Check& k : rep.checks)
    if (!k.passed)
      std::cerr << (k.hard ? "FAIL " : "flag ") << k.suite << ": " << k.name << " (" << k.detail << ")\n";
  return rep.passed() ? ok : verify_failed;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--lambda", c.lambda, "lower ellipticity constant (default 1)");
  sub->add_option("--Lambda", c.Lambda, "upper ellipticity constant (default 2 lambda)");
  sub->add_option("--omega", c.omega, "Lambda / lambda; give any two of lambda, Lambda, omega");
  sub->add_option("--gamma", c.gamma, "domain parameter, 1/sqrt(omega) <= gamma <= sqrt(omega)")->capture_default_str();
  sub->add_option("--out", c.out, "output file (written atomically); stdout if omitted");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_domain(CLI::App* sub, RunConfig& c) {
  sub->add_option("--a", c.a, "shear parameter, |a| < pi")->capture_default_str();
  sub->add_option("--delta", c.delta, "dilation factor");
  sub->add_flag("--square", c.square, "square of side sqrt(2) pi instead of Omega");
}

void add_grid(CLI::App* sub, RunConfig& c) {
  sub->add_option("--h", c.h, "grid spacing")->capture_default_str();
  sub->add_option("--W", c.W, "stencil width")->capture_default_str()->check(CLI::Range(1, 12));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal eigenvalues of the Pucci operator M+ on plane domains.\n"
               "Environment: PUCCI_EIG_THREADS caps worker threads."};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  RunConfig c;

  auto* eig = app.add_subcommand("eig", "principal eigenvalue on a grid; json {mu, h, W, iterations, residual, "
                                        "monotone_certificate, ...}, csv columns x,y,u");
  add_common(eig, c);
  add_domain(eig, c);
  add_grid(eig, c);
  eig->add_option("--tol", c.tol, "relative eigenvalue tolerance")->capture_default_str();
  eig->add_option("--max-iter", c.max_iter, "power iteration budget")->capture_default_str();
  eig->add_flag("--field", c.field, "include the eigenfield in json output");

  auto* ver = app.add_subcommand("verify", "verification suites; json report or csv columns "
                                           "suite,name,hard,passed,value,threshold,detail");
  add_common(ver, c);
  add_grid(ver, c);
  ver->add_flag("--all", c.all, "run every suite (default)");
  ver->add_option("--suite", c.suites,
                  "closed_form, area, gamma_sweep, shear, nonseparability, periodic, cone");
  ver->add_option("--samples", c.samples, "interior sample points per case")->capture_default_str();
  ver->add_option("--seed", c.seed, "sampler seed")->capture_default_str();

  auto* ar = app.add_subcommand("area", "domain area; csv columns area,area_derivative_gamma");
  add_common(ar, c);
  add_domain(ar, c);

  auto* sg = app.add_subcommand("sweep-gamma", "lambda |Omega| over gamma; csv columns gamma,area,normalized,bound,"
                                               "mu_h,mu_fine,margin,normalized_numeric,strictness,bound_ok,argmin");
  add_common(sg, c);
  add_grid(sg, c);
  sg->add_option("--n", c.n, "number of gamma values (odd)")->capture_default_str();
  sg->add_flag("--numerical", c.numerical, "also solve on grids h and h/2");

  auto* ss = app.add_subcommand("sweep-shear", "mu over a against lambda pi^2/(pi^2-a^2); csv columns "
                                               "a,area,normalized,bound,mu_h,mu_fine,margin,normalized_numeric,"
                                               "strictness,bound_ok,argmin");
  add_common(ss, c);
  add_grid(ss, c);
  ss->add_option("--a", c.a_values, "shear values")->delimiter(',');

  auto* rd = app.add_subcommand("render", "csv columns kind,x,y,u,region,concave: boundary polyline and "
                                          "region-classified eigenfunction samples");
  add_common(rd, c);
  add_domain(rd, c);
  rd->add_option("--samples", c.samples, "approximate number of samples")->capture_default_str();
  rd->add_flag("--periodic", c.periodic, "periodic extension on [-2L, 2L]^2 instead of the domain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    if (c.command == "eig") return cmd_eig(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "area") return cmd_area(c);
    if (c.command == "sweep-gamma") return cmd_sweep_gamma(c);
    if (c.command == "sweep-shear") return cmd_sweep_shear(c);
    if (c.command == "render") return cmd_render(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const GridError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return nonconvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
