#pragma once

// End-to-end presets that regenerate the data behind the paper-style figures.

#include "advect/experiments/config.hpp"
#include "advect/experiments/runner.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace advect {

struct FigureRequest {
  std::string name;
  std::string out_dir = ".";
  std::vector<std::int64_t> M;  ///< empty: the figure's defaults
  std::int64_t stride = 1;
  bool exact_columns = false;
  bool dump_reconstruction = false;
};

inline std::vector<std::string> figure_names() {
  return {"castest1", "fsin", "fsinstag", "fiveconfig", "escalier", "overcompressive"};
}

namespace detail {

inline std::string lambda_tag(const Ratio& r) {
  // 47/100 -> "047", 1/2 -> "050"
  const std::int64_t hundredths = r.num * 100 / r.den;
  std::string s = std::to_string(hundredths);
  while (s.size() < 3) s.insert(s.begin(), '0');
  return s;
}

}  // namespace detail

/// Expands a figure into the experiment configs it runs.
inline std::vector<ExperimentConfig> figure_configs(const FigureRequest& req) {
  const std::filesystem::path dir(req.out_dir);
  std::vector<ExperimentConfig> out;
  auto base = [&]() {
    ExperimentConfig c;
    c.stride = req.stride;
    c.exact_columns = req.exact_columns;
    c.dump_reconstruction = req.dump_reconstruction;
    return c;
  };
  if (req.name == "castest1") {
    const std::vector<std::int64_t> ms = req.M.empty() ? std::vector<std::int64_t>{100, 600} : req.M;
    for (std::int64_t m : ms) {
      for (SchemeKind k : {SchemeKind::upwind, SchemeKind::lax_wendroff, SchemeKind::dl_fixed}) {
        ExperimentConfig c = base();
        c.scheme = k;
        c.lambda = Ratio{2, 5};
        c.initial = "id1";
        c.M = m;
        c.periods = Ratio{10, 1};
        c.metrics = MetricSet{.linf = true, .l1 = true};
        c.out = (dir / ("castest1_" + std::string(to_string(k)) + "_M" + std::to_string(m) + ".csv")).string();
        out.push_back(c);
      }
    }
  } else if (req.name == "fsin" || req.name == "fsinstag") {
    const bool stag = req.name == "fsinstag";
    const std::vector<std::int64_t> ms = req.M.empty() ? std::vector<std::int64_t>{100} : req.M;
    for (std::int64_t m : ms) {
      for (Ratio lam : {Ratio{47, 100}, Ratio{12, 25}, Ratio{49, 100}, Ratio{1, 2}}) {
        ExperimentConfig c = base();
        c.scheme = stag ? SchemeKind::dl_shifted : SchemeKind::dl_fixed;
        c.lambda = lam;
        c.initial = "id2";
        c.M = m;
        c.periods = Ratio{15, 1};
        c.metrics = MetricSet{.linf = true, .plateau = true};
        std::string file = req.name + "_lam" + detail::lambda_tag(lam);
        if (ms.size() > 1) file += "_M" + std::to_string(m);
        c.out = (dir / (file + ".csv")).string();
        out.push_back(c);
      }
    }
  } else if (req.name == "fiveconfig") {
    ExperimentConfig c = base();
    c.scheme = SchemeKind::dl_shifted;
    c.lambda = Ratio{2, 5};
    c.arithmetic = Arithmetic::rational;
    c.initial = "fiveconfig:7/20,49/100,51/100,17/20";
    c.n_steps = 80;
    c.metrics = MetricSet{.fiveconfig = true};
    c.out = (dir / "fiveconfig.csv").string();
    out.push_back(c);
  } else if (req.name == "escalier") {
    ExperimentConfig c = base();
    c.scheme = SchemeKind::dl_shifted;
    c.lambda = Ratio{1, 2};
    c.arithmetic = Arithmetic::rational;
    c.initial = "staircase:1/2,3/2";
    c.n_steps = 800;
    c.metrics = MetricSet{.staircase = true};
    c.out = (dir / "escalier.csv").string();
    out.push_back(c);
  } else if (req.name == "overcompressive") {
    ExperimentConfig c = base();
    c.scheme = SchemeKind::dl_shifted;
    c.lambda = Ratio{1, 2};
    c.arithmetic = Arithmetic::rational;
    c.initial = "halpha:1/4,1/8,1/8,1/4,1/16,3/16";
    c.n_steps = 400;
    c.metrics = MetricSet{.halpha = true, .extremity = true, .heaviside = true};
    c.out = (dir / "overcompressive.csv").string();
    out.push_back(c);
  } else {
    throw std::invalid_argument("unknown figure '" + req.name + "'");
  }
  return out;
}

/// Runs every config of a figure; returns the written CSV paths.
inline std::vector<std::string> run_figure(const FigureRequest& req) {
  std::vector<std::string> written;
  for (const auto& c : figure_configs(req)) {
    run_and_write(c);
    written.push_back(c.out);
  }
  return written;
}

}  // namespace advect
