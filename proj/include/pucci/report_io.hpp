#pragma once

/**
 * @file report_io.hpp
 * @brief JSON ("schema": "pucci-eig/1") and CSV encodings of the reports.
 *
 * JSON numbers are written in shortest round-trip form, so every report
 * parses back to an equal value. CSV uses %.17g.
 */

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pucci/domain.hpp"
#include "pucci/eigenfunction.hpp"
#include "pucci/error.hpp"
#include "pucci/grid_fd.hpp"
#include "pucci/verify.hpp"

namespace pucci {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "pucci-eig/1";

namespace detail {

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> opt_get(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

inline NegativeSet negative_set_from(const std::string& s) {
  for (NegativeSet n : {NegativeSet::Connected, NegativeSet::HorizontalStripes, NegativeSet::VerticalStripes,
                        NegativeSet::Bounded})
    if (s == to_string(n)) return n;
  throw InvalidInput("unknown negative set class: " + s);
}

}  // namespace detail

// --- DomainSpec

inline Json to_json(const DomainSpec& spec) {
  return std::visit(
      [](const auto& d) -> Json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, OmegaGamma>)
          return {{"type", "OmegaGamma"}, {"omega", d.omega}, {"gamma", d.gamma}};
        else if constexpr (std::is_same_v<T, Sheared>)
          return {{"type", "Sheared"}, {"omega", d.omega}, {"gamma", d.gamma}, {"a", d.a}};
        else if constexpr (std::is_same_v<T, Square>)
          return {{"type", "Square"}, {"halfside", d.halfside}};
        else
          return {{"type", "Scaled"}, {"base", to_json(*d.base)}, {"delta", d.delta}};
      },
      spec.variant());
}

inline DomainSpec domain_from_json(const Json& j) {
  const std::string t = j.at("type").get<std::string>();
  if (t == "OmegaGamma") return DomainSpec::omega_gamma(j.at("omega"), j.at("gamma"));
  if (t == "Sheared") return DomainSpec::sheared(j.at("omega"), j.at("gamma"), j.at("a"));
  if (t == "Square") return DomainSpec::square(j.at("halfside"));
  if (t == "Scaled") return DomainSpec::scaled(domain_from_json(j.at("base")), j.at("delta"));
  throw InvalidInput("unknown domain type: " + t);
}

// --- SolveReport

inline Json to_json(const SolveReport& r, bool with_field = false) {
  Json j{{"mu", r.mu},
         {"h", r.h},
         {"W", r.W},
         {"iterations", r.iterations},
         {"residual", r.residual},
         {"monotone_certificate", r.certified_monotone},
         {"converged", r.converged},
         {"residual_history", r.residual_history}};
  if (with_field) j["eigenfield"] = r.eigenfield;
  return j;
}

inline SolveReport solve_report_from_json(const Json& j) {
  SolveReport r;
  r.mu = j.at("mu");
  r.h = j.at("h");
  r.W = j.at("W");
  r.iterations = j.at("iterations");
  r.residual = j.at("residual");
  r.certified_monotone = j.at("monotone_certificate");
  r.converged = j.at("converged");
  r.residual_history = j.at("residual_history").get<std::vector<double>>();
  if (j.contains("eigenfield")) r.eigenfield = j.at("eigenfield").get<Field>();
  return r;
}

// --- Certificate

inline Json to_json(const Certificate& c) {
  return {{"spec", to_json(c.spec)},         {"mu_lower", c.mu_lower},   {"witness", c.witness},
          {"min_slack", c.min_slack},        {"max_slack", c.max_slack}, {"n_samples", c.n_samples},
          {"scale", c.scale},                {"passes", c.passes}};
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.spec = domain_from_json(j.at("spec"));
  c.mu_lower = j.at("mu_lower");
  c.witness = j.at("witness");
  c.min_slack = j.at("min_slack");
  c.max_slack = j.at("max_slack");
  c.n_samples = j.at("n_samples");
  c.scale = j.at("scale");
  c.passes = j.at("passes");
  return c;
}

// --- SweepResult

inline Json to_json(const SweepRow& r) {
  using detail::opt_json;
  return {{"value", r.value},
          {"area", r.area},
          {"normalized", r.normalized},
          {"bound", opt_json(r.bound)},
          {"mu_h", opt_json(r.mu_h)},
          {"mu_fine", opt_json(r.mu_fine)},
          {"margin", opt_json(r.margin)},
          {"normalized_numeric", opt_json(r.normalized_numeric)},
          {"strictness", r.strictness},
          {"bound_ok", r.bound_ok}};
}

inline SweepRow sweep_row_from_json(const Json& j) {
  using detail::opt_get;
  SweepRow r;
  r.value = j.at("value");
  r.area = j.at("area");
  r.normalized = j.at("normalized");
  r.bound = opt_get<double>(j, "bound");
  r.mu_h = opt_get<double>(j, "mu_h");
  r.mu_fine = opt_get<double>(j, "mu_fine");
  r.margin = opt_get<double>(j, "margin");
  r.normalized_numeric = opt_get<double>(j, "normalized_numeric");
  r.strictness = j.at("strictness");
  r.bound_ok = j.at("bound_ok");
  return r;
}

inline Json to_json(const SweepResult& s) {
  Json rows = Json::array();
  for (const SweepRow& r : s.rows) rows.push_back(to_json(r));
  return {{"parameter", s.parameter},
          {"lambda", s.lambda},
          {"Lambda", s.Lambda},
          {"gamma", detail::opt_json(s.gamma)},
          {"h", s.h},
          {"W", s.W},
          {"argmin", s.argmin},
          {"argmin_numeric", detail::opt_json(s.argmin_numeric)},
          {"rows", rows}};
}

inline SweepResult sweep_from_json(const Json& j) {
  SweepResult s;
  s.parameter = j.at("parameter");
  s.lambda = j.at("lambda");
  s.Lambda = j.at("Lambda");
  s.gamma = detail::opt_get<double>(j, "gamma");
  s.h = j.at("h");
  s.W = j.at("W");
  s.argmin = j.at("argmin");
  s.argmin_numeric = detail::opt_get<std::size_t>(j, "argmin_numeric");
  for (const Json& r : j.at("rows")) s.rows.push_back(sweep_row_from_json(r));
  return s;
}

// --- Nonseparability, periodic, cone

inline Json to_json(const NonseparabilityReport& n) {
  return {{"lambda", n.lambda},           {"Lambda", n.Lambda},
          {"separable", n.separable},     {"min_formula", n.min_formula},
          {"min_defect", n.min_defect},   {"max_abs_defect", n.max_abs_defect},
          {"fpp0_expected", n.fpp0_expected}, {"fpp0_observed", n.fpp0_observed},
          {"note", n.note},               {"table", n.table}};
}

inline NonseparabilityReport nonseparability_from_json(const Json& j) {
  NonseparabilityReport n;
  n.lambda = j.at("lambda");
  n.Lambda = j.at("Lambda");
  n.separable = j.at("separable");
  n.min_formula = j.at("min_formula");
  n.min_defect = j.at("min_defect");
  n.max_abs_defect = j.at("max_abs_defect");
  n.fpp0_expected = j.at("fpp0_expected");
  n.fpp0_observed = j.at("fpp0_observed");
  n.note = j.at("note");
  n.table = j.at("table").get<std::vector<std::array<double, 3>>>();
  return n;
}

inline Json to_json(const ComponentClass& c) {
  return {{"positive_bounded", c.positive_bounded}, {"negative", to_string(c.negative)}};
}

inline ComponentClass component_class_from_json(const Json& j) {
  return {j.at("positive_bounded").get<bool>(), detail::negative_set_from(j.at("negative"))};
}

inline Json to_json(const PeriodicReport& p) {
  Json jumps = Json::array();
  for (const GradientJump& g : p.jumps) jumps.push_back({{"probe", g.probe}, {"max_jump", g.max_jump}});
  return {{"omega", p.omega},
          {"gamma", p.gamma},
          {"max_residual", p.max_residual},
          {"scale", p.scale},
          {"region_counts", p.region_counts},
          {"gradient_jumps", jumps},
          {"corner_value", p.corner_value},
          {"component_class", to_json(p.cls)}};
}

inline PeriodicReport periodic_from_json(const Json& j) {
  PeriodicReport p;
  p.omega = j.at("omega");
  p.gamma = j.at("gamma");
  p.max_residual = j.at("max_residual");
  p.scale = j.at("scale");
  p.region_counts = j.at("region_counts").get<std::array<std::size_t, 4>>();
  for (const Json& g : j.at("gradient_jumps")) p.jumps.push_back({g.at("probe"), g.at("max_jump")});
  p.corner_value = j.at("corner_value");
  p.cls = component_class_from_json(j.at("component_class"));
  return p;
}

inline Json to_json(const ConeReport& c) {
  return {{"max_continuous", c.max_continuous},
          {"max_discrete", c.max_discrete},
          {"corner",
           {{"distances", c.corner.distances},
            {"ratios", c.corner.ratios},
            {"min_ratio", c.corner.min_ratio},
            {"max_ratio", c.corner.max_ratio},
            {"stabilization", c.corner.stabilization}}}};
}

inline ConeReport cone_from_json(const Json& j) {
  ConeReport c;
  c.max_continuous = j.at("max_continuous");
  c.max_discrete = j.at("max_discrete");
  const Json& k = j.at("corner");
  c.corner.distances = k.at("distances").get<std::vector<double>>();
  c.corner.ratios = k.at("ratios").get<std::vector<double>>();
  c.corner.min_ratio = k.at("min_ratio");
  c.corner.max_ratio = k.at("max_ratio");
  c.corner.stabilization = k.at("stabilization");
  return c;
}

// --- VerifyReport

inline Json to_json(const Check& c) {
  return {{"suite", c.suite}, {"name", c.name},           {"hard", c.hard},    {"passed", c.passed},
          {"value", c.value}, {"threshold", c.threshold}, {"detail", c.detail}};
}

inline Check check_from_json(const Json& j) {
  return {j.at("suite"), j.at("name"), j.at("hard"), j.at("passed"), j.at("value"), j.at("threshold"),
          j.at("detail")};
}

template <class T, class F>
Json json_list(const std::vector<T>& v, F&& f) {
  Json a = Json::array();
  for (const T& x : v) a.push_back(f(x));
  return a;
}

inline Json to_json(const VerifyReport& r) {
  auto enc = [](const auto& x) { return to_json(x); };
  return {{"schema", schema_version},
          {"command", "verify"},
          {"seed", r.seed},
          {"samples", r.samples},
          {"passed", r.passed()},
          {"checks", json_list(r.checks, enc)},
          {"certificates", json_list(r.certificates, enc)},
          {"sweeps", json_list(r.sweeps, enc)},
          {"nonseparability", json_list(r.nonseparability, enc)},
          {"periodic", json_list(r.periodic, enc)},
          {"cone", json_list(r.cone, enc)}};
}

inline VerifyReport verify_report_from_json(const Json& j) {
  if (j.at("schema") != schema_version) throw InvalidInput("unsupported report schema");
  VerifyReport r;
  r.seed = j.at("seed");
  r.samples = j.at("samples");
  for (const Json& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  for (const Json& c : j.at("certificates")) r.certificates.push_back(certificate_from_json(c));
  for (const Json& c : j.at("sweeps")) r.sweeps.push_back(sweep_from_json(c));
  for (const Json& c : j.at("nonseparability")) r.nonseparability.push_back(nonseparability_from_json(c));
  for (const Json& c : j.at("periodic")) r.periodic.push_back(periodic_from_json(c));
  for (const Json& c : j.at("cone")) r.cone.push_back(cone_from_json(c));
  return r;
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_num(double v) { return detail::fmt_num(v); }

inline std::string csv_opt(const std::optional<double>& v) { return v ? csv_num(*v) : std::string(); }

inline std::string sweep_csv(const SweepResult& s) {
  std::ostringstream os;
  os << s.parameter << ",area,normalized,bound,mu_h,mu_fine,margin,normalized_numeric,strictness,bound_ok,argmin\n";
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const SweepRow& r = s.rows[i];
    os << csv_num(r.value) << ',' << csv_num(r.area) << ',' << csv_num(r.normalized) << ',' << csv_opt(r.bound) << ','
       << csv_opt(r.mu_h) << ',' << csv_opt(r.mu_fine) << ',' << csv_opt(r.margin) << ','
       << csv_opt(r.normalized_numeric) << ',' << r.strictness << ',' << (r.bound_ok ? 1 : 0) << ','
       << (i == s.argmin ? 1 : 0) << '\n';
  }
  return os.str();
}

inline std::string checks_csv(const VerifyReport& r) {
  std::ostringstream os;
  os << "suite,name,hard,passed,value,threshold,detail\n";
  for (const Check& c : r.checks)
    os << c.suite << ",\"" << c.name << "\"," << (c.hard ? 1 : 0) << ',' << (c.passed ? 1 : 0) << ','
       << csv_num(c.value) << ',' << csv_num(c.threshold) << ",\"" << c.detail << "\"\n";
  return os.str();
}

/// Writes `text` to `path` through a temporary file in the same directory
/// and a rename.
inline void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << text;
    f.flush();
    if (!f) throw Error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace pucci
