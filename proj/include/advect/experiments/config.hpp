#pragma once

// Experiment configuration, its JSON form and step-count resolution.

#include "advect/io.hpp"
#include "advect/scalar.hpp"
#include "advect/schemes.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace advect {

struct MetricSet {
  bool linf = false;
  bool l1 = false;
  bool plateau = false;
  bool halpha = false;
  bool extremity = false;
  bool heaviside = false;
  bool staircase = false;
  bool fiveconfig = false;

  friend bool operator==(const MetricSet&, const MetricSet&) = default;
};

inline MetricSet parse_metrics(std::string_view list) {
  MetricSet m;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t next = std::min(list.find(',', pos), list.size());
    const std::string name(list.substr(pos, next - pos));
    pos = next + 1;
    if (name.empty()) continue;
    if (name == "linf") m.linf = true;
    else if (name == "l1") m.l1 = true;
    else if (name == "plateau") m.plateau = true;
    else if (name == "halpha") m.halpha = true;
    else if (name == "extremity") m.extremity = true;
    else if (name == "heaviside") m.heaviside = true;
    else if (name == "staircase") m.staircase = true;
    else if (name == "fiveconfig") m.fiveconfig = true;
    else throw std::invalid_argument("unknown metric '" + name + "'");
  }
  return m;
}

inline std::string to_string(const MetricSet& m) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(m.linf, "linf");
  add(m.l1, "l1");
  add(m.plateau, "plateau");
  add(m.halpha, "halpha");
  add(m.extremity, "extremity");
  add(m.heaviside, "heaviside");
  add(m.staircase, "staircase");
  add(m.fiveconfig, "fiveconfig");
  return out;
}

enum class InitMode { automatic, average, pointwise };

inline const char* to_string(InitMode m) {
  switch (m) {
    case InitMode::automatic: return "auto";
    case InitMode::average: return "average";
    case InitMode::pointwise: return "pointwise";
  }
  return "?";
}

inline InitMode parse_init_mode(std::string_view s) {
  if (s == "auto") return InitMode::automatic;
  if (s == "average") return InitMode::average;
  if (s == "pointwise") return InitMode::pointwise;
  throw std::invalid_argument("unknown init mode '" + std::string(s) + "'");
}

struct ExperimentConfig {
  SchemeKind scheme = SchemeKind::dl_fixed;
  Ratio lambda{2, 5};
  Arithmetic arithmetic = Arithmetic::binary64;
  std::string initial = "id1";
  InitMode init = InitMode::automatic;  ///< auto: point values for id1, cell averages otherwise
  std::int64_t M = 100;
  std::optional<std::int64_t> n_steps;
  std::optional<Ratio> periods;  ///< final time in datum periods, used when n_steps is unset
  std::optional<MetricSet> metrics;  ///< unset: chosen from the kind of initial data
  std::int64_t stride = 1;
  std::string out;
  bool dump_reconstruction = false;
  bool exact_columns = false;
};

/// n = floor(T / (lambda dx)) with T = periods * datum period and dx = period / M,
/// i.e. floor(periods * M / lambda), computed exactly.
inline std::int64_t steps_for_periods(const Ratio& periods, std::int64_t m, const Ratio& lambda) {
  const Rational n = Rational(mpz_class(static_cast<long>(periods.num)) * m * lambda.den,
                              mpz_class(static_cast<long>(periods.den)) * lambda.num);
  return scalar_traits<Rational>::floor(n);
}

inline json config_to_json(const ExperimentConfig& c) {
  json j = {{"scheme", to_string(c.scheme)},
            {"lambda", c.lambda.to_string()},
            {"arithmetic", to_string(c.arithmetic)},
            {"initial", c.initial},
            {"init", to_string(c.init)},
            {"M", c.M},
            {"stride", c.stride},
            {"out", c.out},
            {"dump_reconstruction", c.dump_reconstruction},
            {"exact_columns", c.exact_columns}};
  if (c.n_steps) j["n_steps"] = *c.n_steps;
  if (c.periods) j["periods"] = c.periods->to_string();
  if (c.metrics) j["metrics"] = to_string(*c.metrics);
  return j;
}

/// Fields absent from `j` keep their value in `base`.
inline ExperimentConfig config_from_json(const json& j, ExperimentConfig base = {}) {
  auto ratio = [](const json& v) { return v.is_string() ? parse_ratio(v.get<std::string>()) : parse_ratio(v.dump()); };
  if (j.contains("scheme")) base.scheme = parse_scheme(j["scheme"].get<std::string>());
  if (j.contains("lambda")) base.lambda = ratio(j["lambda"]);
  if (j.contains("arithmetic")) base.arithmetic = parse_arithmetic(j["arithmetic"].get<std::string>());
  if (j.contains("initial")) base.initial = j["initial"].is_string() ? j["initial"].get<std::string>() : j["initial"].dump();
  if (j.contains("init")) base.init = parse_init_mode(j["init"].get<std::string>());
  if (j.contains("M")) base.M = j["M"].get<std::int64_t>();
  if (j.contains("n_steps")) base.n_steps = j["n_steps"].get<std::int64_t>();
  if (j.contains("periods")) base.periods = ratio(j["periods"]);
  if (j.contains("metrics")) base.metrics = parse_metrics(j["metrics"].get<std::string>());
  if (j.contains("stride")) base.stride = j["stride"].get<std::int64_t>();
  if (j.contains("out")) base.out = j["out"].get<std::string>();
  if (j.contains("dump_reconstruction")) base.dump_reconstruction = j["dump_reconstruction"].get<bool>();
  if (j.contains("exact_columns")) base.exact_columns = j["exact_columns"].get<bool>();
  return base;
}

inline constexpr std::string_view csv_config_prefix = "# config: ";

/// Reads a config from a JSON file or from the header line of a CSV written by run_experiment.
inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string first;
  std::getline(in, first);
  if (first.starts_with(csv_config_prefix)) return config_from_json(json::parse(first.substr(csv_config_prefix.size())));
  return config_from_json(read_json_file(path));
}

}  // namespace advect
