#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pucci/report_io.hpp"

using namespace pucci;

namespace {

template <class T, class F>
void round_trip(const T& v, F from) {
  const Json j = to_json(v);
  const T back = from(Json::parse(j.dump()));
  EXPECT_EQ(back, v);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

}  // namespace

TEST(Json, DomainRoundTrip) {
  for (const DomainSpec& d : {DomainSpec::omega_gamma(2, 1), DomainSpec::sheared(4, 0.7, -1.25), DomainSpec::square(0.3),
                              DomainSpec::scaled(DomainSpec::scaled(DomainSpec::omega_gamma(3, 1.5), 2), 0.1)})
    round_trip(d, domain_from_json);
  EXPECT_THROW(domain_from_json(Json{{"type", "Disk"}}), InvalidInput);
}

TEST(Json, DoublesSurviveExactly) {
  const DomainSpec d = DomainSpec::sheared(2, 1, pi / 3);
  const DomainSpec back = domain_from_json(Json::parse(to_json(d).dump()));
  EXPECT_EQ(back.get_if<Sheared>()->a, pi / 3);
}

TEST(Json, SolveReport) {
  const SolveReport r = principal_eigen(DomainSpec::omega_gamma(2, 1), EllipticityPair(1, 2), pi / 8, 2);
  const Json j = to_json(r, true);
  EXPECT_EQ(solve_report_from_json(Json::parse(j.dump())), r);
  EXPECT_FALSE(to_json(r).contains("eigenfield"));
  EXPECT_EQ(j.at("eigenfield").size(), r.eigenfield.size());
}

TEST(Json, VerifyPieces) {
  const EllipticityPair e(1, 2);
  const DomainSpec d = DomainSpec::sheared(2, 1, 1.0);
  round_trip(certify_lower_bound(d, e, 1.1, domain_samples(d, 300, 1)), certificate_from_json);
  round_trip(gamma_sweep(EllipticityPair(1, 4), 5), sweep_from_json);
  round_trip(gamma_sweep(e, 3, true, pi / 8, 2), sweep_from_json);
  round_trip(nonseparability_report(e, 20), nonseparability_from_json);
  round_trip(component_class(2, 0.5), component_class_from_json);
  round_trip(component_class(1, 1), component_class_from_json);
  round_trip(periodic_residual_suite(e, 1.2, 200, 3), periodic_from_json);
  round_trip(cone_suite(10, 3), cone_from_json);
  round_trip(Check{"s", "n", false, true, 1.5, 2.0, "d"}, check_from_json);
}

TEST(Json, VerifyReport) {
  VerifyReport r;
  r.seed = 9;
  r.samples = 500;
  VerifyOptions o;
  o.samples = 500;
  verify_area(r, o);
  verify_nonseparability(r, o);
  verify_cone(r, o);
  const Json j = to_json(r);
  EXPECT_EQ(j.at("schema").get<std::string>(), schema_version);
  EXPECT_EQ(j.begin().key(), "schema");
  EXPECT_EQ(verify_report_from_json(Json::parse(j.dump())), r);
  Json bad = j;
  bad["schema"] = "other/0";
  EXPECT_THROW(verify_report_from_json(bad), InvalidInput);
}

TEST(Csv, Format) {
  EXPECT_EQ(csv_num(0.1), "0.10000000000000001");
  EXPECT_EQ(csv_num(2), "2");
  EXPECT_EQ(csv_opt(std::nullopt), "");
  const SweepResult s = gamma_sweep(EllipticityPair(1, 4), 3);
  std::istringstream in(sweep_csv(s));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "gamma,area,normalized,bound,mu_h,mu_fine,margin,normalized_numeric,strictness,bound_ok,argmin");
  int rows = 0, argmins = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 10);
    argmins += line.back() == '1';
  }
  EXPECT_EQ(rows, 3);
  EXPECT_EQ(argmins, 1);
  VerifyReport r;
  r.checks.push_back({"a", "b", true, false, 1, 2, ""});
  EXPECT_EQ(checks_csv(r), "suite,name,hard,passed,value,threshold,detail\na,\"b\",1,0,1,2,\"\"\n");
}

TEST(Files, WriteAtomic) {
  const auto dir = std::filesystem::temp_directory_path() / "pucci_io_test";
  std::filesystem::create_directories(dir);
  const auto p = dir / "out.json";
  write_atomic(p, "first");
  write_atomic(p, "second\n");
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "second\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  EXPECT_THROW(write_atomic(dir / "missing" / "x.json", "x"), Error);
  std::filesystem::remove_all(dir);
}
