#pragma once

// Command-line front end: simulate, classify, verify, figures.
// Exit codes: 0 success, 1 property violation, 2 usage or input error.

#include "advect/analysis/classify.hpp"
#include "advect/analysis/five_config.hpp"
#include "advect/analysis/staircase.hpp"
#include "advect/experiments/config.hpp"
#include "advect/experiments/figures.hpp"
#include "advect/experiments/runner.hpp"
#include "advect/io.hpp"
#include "advect/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace advect {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

namespace detail {

template <Scalar T>
void print_classification(std::ostream& out, const GridState<T>& s, const T& alpha) {
  out << "kind: " << to_string(s.kind()) << '\n';
  out << "arithmetic: " << scalar_traits<T>::name << '\n';
  out << "lambda: " << to_string(s.lambda()) << '\n';
  out << "phase: " << to_string(s.phase()) << '\n';
  out << "window: [" << s.window_start() << ", " << s.window_end() << ")\n";
  out << "nondecreasing: " << (is_nondecreasing(s) ? "yes" : "no") << '\n';
  const auto tv = total_variation(s);
  out << "total_variation: " << (tv.unbounded ? std::string("unbounded") : to_string(tv.value)) << '\n';
  if (s.is_periodic()) return;

  if (const auto h = classify_H_alpha(s, alpha)) {
    out << "H_alpha: M=" << h->M << " j0=" << h->j0 << " alpha=" << to_string(alpha)
        << " min_inner_jump=" << (h->min_inner_jump ? to_string(*h->min_inner_jump) : std::string("-"))
        << " satisfied=" << (h->alpha_satisfied ? "yes" : "no") << '\n';
    out << "extremity: " << to_string(classify_extremities(*h)) << '\n';
  } else {
    out << "H_alpha: no (not a monotone jump pattern with constant tails)\n";
  }
  if (const auto j = is_discrete_heaviside(s)) {
    out << "heaviside: yes j_inf=" << *j << '\n';
  } else {
    out << "heaviside: no\n";
  }
  const auto st = check_Hprime(s);
  if (st.satisfies_Hprime) {
    out << "staircase: yes front=" << st.front << " S_first=" << to_string(st.S_half)
        << " S_second=" << to_string(st.S_three_half) << " case=" << to_string(st.kase)
        << " front_sum=" << to_string(st.front_sum) << '\n';
  } else {
    out << "staircase: no (" << st.reason << ")\n";
  }
  try {
    const auto f = check_five_config_conditions(s, s.lambda());
    out << "five_config: conditions=";
    for (std::size_t i = 0; i < f.conditions.size(); ++i) out << (f.conditions[i] ? '1' : '0');
    out << " epsilon=" << to_string(f.epsilon) << " all_hold=" << (f.all_hold() ? "yes" : "no") << '\n';
  } catch (const std::invalid_argument& e) {
    out << "five_config: n/a (" << e.what() << ")\n";
  }
}

template <Scalar T>
void classify_file(std::ostream& out, const json& j, const std::string& alpha) {
  const GridState<T> s = state_from_json<T>(j);
  print_classification(out, s, scalar_traits<T>::parse(alpha));
}

}  // namespace detail

/// Entry point of the `advect` tool; returns the process exit code.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Finite-volume advection schemes and their long-time analysis"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "run one experiment and write its CSV time series");
  std::string config_path, scheme, lambda, arith, initial, init_mode, metrics, out_path, periods;
  std::int64_t steps = 0, stride = 1, cells = 0;
  bool dump_rec = false, exact_cols = false;
  sim->add_option("--config", config_path, "JSON config or a CSV written by a previous run");
  auto* o_scheme = sim->add_option("--scheme", scheme, "upwind | lax_wendroff | dl_fixed | dl_shifted");
  auto* o_lambda = sim->add_option("--lambda", lambda, "CFL number p/q");
  auto* o_arith = sim->add_option("--arith", arith, "rational | binary64");
  auto* o_steps = sim->add_option("--steps", steps, "number of time steps");
  auto* o_periods = sim->add_option("--periods", periods, "final time in datum periods (when --steps is absent)");
  auto* o_initial = sim->add_option("--initial", initial, "preset, inline JSON or @file");
  auto* o_init = sim->add_option("--init", init_mode, "auto | average | pointwise");
  auto* o_cells = sim->add_option("--M", cells, "cells per period for periodic data");
  auto* o_metrics = sim->add_option("--metrics", metrics, "comma-separated metric list");
  auto* o_out = sim->add_option("--out", out_path, "CSV path (stdout when absent)");
  auto* o_stride = sim->add_option("--stride", stride, "sample every k steps");
  auto* o_dump = sim->add_flag("--dump-reconstruction", dump_rec, "write the final reconstruction as JSON");
  auto* o_exact = sim->add_flag("--exact-columns", exact_cols, "add exact p/q columns in rational mode");

  // classify
  auto* cls = app.add_subcommand("classify", "print every applicable report for a state JSON");
  std::string state_path, alpha = "0";
  cls->add_option("state", state_path, "state JSON file")->required();
  cls->add_option("--alpha", alpha, "inner-jump threshold for the H_alpha report");

  // verify
  auto* ver = app.add_subcommand("verify", "run the randomised property suites");
  verify::SuiteOptions vopt;
  std::string suites = "lemmas";
  ver->add_option("--seed", vopt.seed, "base seed");
  ver->add_option("--cases", vopt.cases, "cases per suite");
  ver->add_option("--float-steps", vopt.float_steps, "binary64 steps in the mass suite");
  ver->add_option("--suites", suites, "lemmas | structural | all")
      ->check(CLI::IsMember({"lemmas", "structural", "all"}));

  // figures
  auto* fig = app.add_subcommand("figures", "regenerate the data of a named figure");
  FigureRequest freq;
  fig->add_option("name", freq.name, "figure name")->required()->check(CLI::IsMember(figure_names()));
  fig->add_option("--out", freq.out_dir, "output directory");
  fig->add_option("--M", freq.M, "cell counts overriding the figure defaults");
  fig->add_option("--stride", freq.stride, "sample every k steps");
  fig->add_flag("--exact-columns", freq.exact_columns, "add exact p/q columns in rational mode");
  fig->add_flag("--dump-reconstruction", freq.dump_reconstruction, "write final reconstructions as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sim->parsed()) {
      ExperimentConfig c = config_path.empty() ? ExperimentConfig{} : load_config(config_path);
      if (!config_path.empty()) c.out.clear();  // never overwrite the source run implicitly
      if (o_scheme->count()) c.scheme = parse_scheme(scheme);
      if (o_lambda->count()) c.lambda = parse_ratio(lambda);
      if (o_arith->count()) c.arithmetic = parse_arithmetic(arith);
      if (o_steps->count()) c.n_steps = steps;
      if (o_periods->count()) {
        c.periods = parse_ratio(periods);
        if (!o_steps->count()) c.n_steps.reset();
      }
      if (o_initial->count()) c.initial = initial;
      if (o_init->count()) c.init = parse_init_mode(init_mode);
      if (o_cells->count()) c.M = cells;
      if (o_metrics->count()) c.metrics = parse_metrics(metrics);
      if (o_out->count()) c.out = out_path;
      if (o_stride->count()) c.stride = stride;
      if (o_dump->count()) c.dump_reconstruction = dump_rec;
      if (o_exact->count()) c.exact_columns = exact_cols;
      out << run_and_write(c);
      return exit_ok;
    }
    if (cls->parsed()) {
      const json j = read_json_file(state_path);
      const std::string a = j.value("arithmetic", std::string("rational"));
      if (parse_arithmetic(a) == Arithmetic::rational) {
        detail::classify_file<Rational>(out, j, alpha);
      } else {
        detail::classify_file<double>(out, j, alpha);
      }
      return exit_ok;
    }
    if (ver->parsed()) {
      std::vector<verify::SuiteResult> results;
      if (suites == "lemmas") results = verify::run_lemma_suites(vopt);
      else if (suites == "structural") results = verify::run_structural_suites(vopt);
      else results = verify::run_all(vopt);
      out << verify::format_table(results);
      for (const auto& r : results) {
        if (!r.ok()) return exit_violation;
      }
      return exit_ok;
    }
    if (fig->parsed()) {
      for (const auto& path : run_figure(freq)) out << path << '\n';
      return exit_ok;
    }
  } catch (const std::exception& e) {  // bad arguments, unreadable files, incompatible metrics
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace advect
