#pragma once

// Runs one configured experiment, sampling metrics along the trajectory, and
// writes the CSV time series, the final state and optional debug dumps.

#include "advect/analysis/classify.hpp"
#include "advect/analysis/five_config.hpp"
#include "advect/analysis/metrics.hpp"
#include "advect/analysis/sample.hpp"
#include "advect/analysis/staircase.hpp"
#include "advect/experiments/config.hpp"
#include "advect/experiments/presets.hpp"
#include "advect/io.hpp"
#include "advect/schemes.hpp"

#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace advect {

template <Scalar T>
struct TimeSeries {
  ExperimentConfig config;  ///< fully resolved (step count, metrics)
  std::vector<MetricsSample<T>> rows;
  GridState<T> final_state;
};

/// Computes the requested metrics for each sampled state. The staircase
/// tracker must see every step, sampled or not.
template <Scalar T>
class MetricsSampler {
 public:
  MetricsSampler(MetricSet metrics, const SchemeParams<T>& params, std::optional<PiecewiseDatum<T>> datum,
                 const GridState<T>& initial)
      : metrics_(metrics), params_(params), datum_(std::move(datum)) {
    const bool periodic = initial.is_periodic();
    if ((metrics_.linf || metrics_.l1) && !(periodic && datum_)) {
      throw std::invalid_argument("linf/l1 errors need a periodic datum as initial data");
    }
    if (metrics_.plateau && !periodic) throw std::invalid_argument("plateau metric needs a periodic state");
    if ((metrics_.halpha || metrics_.extremity || metrics_.heaviside || metrics_.staircase || metrics_.fiveconfig) &&
        periodic) {
      throw std::invalid_argument("jump-pattern metrics need an infinite state");
    }
    if (metrics_.staircase) {
      tracker_.emplace(initial);
      if (!tracker_->report().satisfies_Hprime) {
        throw std::invalid_argument("staircase metric: initial state fails the staircase hypothesis (" +
                                    tracker_->report().reason + ")");
      }
    }
    if (datum_) dx_ = T(*datum_->period() / from_int<T>(initial.size()));
  }

  void observe(const GridState<T>& previous, const GridState<T>& next) {
    if (tracker_ && tracker_->report().satisfies_Hprime) tracker_->advance(previous, next);
  }

  [[nodiscard]] MetricsSample<T> sample(std::int64_t n, const GridState<T>& s) const {
    MetricsSample<T> row;
    row.step = n;
    const T t = T(exact_travel(params_, n) * dx_);
    if (metrics_.linf) row.linf_err = linf_error_pointwise(s, *datum_, t);
    if (metrics_.l1) row.l1_err = l1_error_cell_averaged(s, *datum_, t);
    if (metrics_.plateau) row.plateau_I = plateau_metric_I(s);
    if (metrics_.halpha || metrics_.extremity) {
      if (const auto r = classify_H_alpha(s, T(0))) {
        if (metrics_.halpha) row.M_count = r->M;
        if (metrics_.extremity) row.extremity = classify_extremities(*r);
      }
    }
    if (metrics_.heaviside) row.heaviside_j = is_discrete_heaviside(s);
    if (tracker_ && tracker_->report().satisfies_Hprime) {
      row.front_sum = tracker_->report().front_sum;
      row.staircase_case = tracker_->report().kase;
    }
    if (metrics_.fiveconfig && s.phase() == Phase::integer_grid) {
      try {
        const auto v = detail::five_config_values(s);
        row.epsilon = T(v.second[2] - v.second[1]);
      } catch (const std::invalid_argument&) {
        // not a five-cell configuration any more
      }
    }
    return row;
  }

 private:
  MetricSet metrics_;
  SchemeParams<T> params_;
  std::optional<PiecewiseDatum<T>> datum_;
  std::optional<StaircaseTracker<T>> tracker_;
  T dx_ = T(1);
};

namespace detail {

template <Scalar T>
MetricSet default_metrics(const Initial<T>& initial) {
  if (std::holds_alternative<PiecewiseDatum<T>>(initial)) return {.linf = true, .l1 = true, .plateau = true};
  const auto& s = std::get<GridState<T>>(initial);
  if (s.is_periodic()) return {.plateau = true};
  return {.halpha = true, .extremity = true, .heaviside = true};
}

}  // namespace detail

template <Scalar T>
TimeSeries<T> run_experiment(ExperimentConfig config) {
  if (config.stride < 1) throw std::invalid_argument("stride must be at least 1");
  const SchemeParams<T> params(config.scheme, config.lambda);
  const Initial<T> initial = build_initial<T>(config.initial, params.lambda());
  std::optional<PiecewiseDatum<T>> datum;
  GridState<T> state = GridState<T>::periodic({T(0), T(0), T(0), T(0)}, params.lambda());
  if (std::holds_alternative<PiecewiseDatum<T>>(initial)) {
    datum = std::get<PiecewiseDatum<T>>(initial);
    const bool pointwise =
        config.init == InitMode::pointwise || (config.init == InitMode::automatic && datum->name() == "id1");
    state = pointwise ? init_pointwise_state(*datum, config.M, params.lambda())
                      : init_periodic_state(*datum, config.M, params.lambda());
  } else {
    state = std::get<GridState<T>>(initial);
    if (state.is_periodic()) config.M = state.size();
  }
  if (!config.n_steps) {
    if (config.periods && datum) {
      config.n_steps = steps_for_periods(*config.periods, config.M, config.lambda);
    } else if (config.periods) {
      throw std::invalid_argument("a final time in periods needs a periodic datum");
    } else {
      config.n_steps = 100;
    }
  }
  if (!config.metrics) config.metrics = detail::default_metrics(initial);

  MetricsSampler<T> sampler(*config.metrics, params, datum, state);
  TimeSeries<T> ts{config, {}, state};
  ts.rows.push_back(sampler.sample(0, state));
  const std::int64_t n_steps = *config.n_steps;
  GridState<T> previous = state;  // the staircase tracker compares consecutive states
  ts.final_state = run(std::move(state), params, n_steps, [&](std::int64_t n, const GridState<T>& s) {
    sampler.observe(previous, s);
    if (n % config.stride == 0 || n == n_steps) ts.rows.push_back(sampler.sample(n, s));
    previous = s;
  });
  return ts;
}

namespace detail {

template <Scalar T>
std::string csv_scalar(const std::optional<T>& v) {
  return v ? scalar_traits<T>::to_decimal(*v) : std::string();
}

template <Scalar T>
std::string csv_exact(const std::optional<T>& v) {
  return v ? to_string(*v) : std::string();
}

inline std::string csv_int(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace detail

/// CSV with a "# config: {...}" first line. Base columns are always present;
/// heaviside_j, front_sum/case and epsilon follow when requested. With
/// exact_columns in rational mode, each scalar column gets a "p/q" twin.
template <Scalar T>
std::string format_csv(const TimeSeries<T>& ts) {
  const MetricSet m = ts.config.metrics.value_or(MetricSet{});
  const bool exact = is_exact_v<T> && ts.config.exact_columns;
  std::ostringstream out;
  out << csv_config_prefix << config_to_json(ts.config).dump() << '\n';
  out << "step,linf_err,l1_err,plateau_I,M_count,extremity";
  if (m.heaviside) out << ",heaviside_j";
  if (m.staircase) out << ",front_sum,case";
  if (m.fiveconfig) out << ",epsilon";
  if (exact) {
    out << ",linf_err_exact,l1_err_exact,plateau_I_exact";
    if (m.staircase) out << ",front_sum_exact";
    if (m.fiveconfig) out << ",epsilon_exact";
  }
  out << '\n';
  for (const auto& r : ts.rows) {
    out << r.step << ',' << detail::csv_scalar(r.linf_err) << ',' << detail::csv_scalar(r.l1_err) << ','
        << detail::csv_scalar(r.plateau_I) << ',' << detail::csv_int(r.M_count) << ','
        << (r.extremity ? to_string(*r.extremity) : "");
    if (m.heaviside) out << ',' << detail::csv_int(r.heaviside_j);
    if (m.staircase) out << ',' << detail::csv_scalar(r.front_sum) << ',' << (r.staircase_case ? to_string(*r.staircase_case) : "");
    if (m.fiveconfig) out << ',' << detail::csv_scalar(r.epsilon);
    if (exact) {
      out << ',' << detail::csv_exact(r.linf_err) << ',' << detail::csv_exact(r.l1_err) << ','
          << detail::csv_exact(r.plateau_I);
      if (m.staircase) out << ',' << detail::csv_exact(r.front_sum);
      if (m.fiveconfig) out << ',' << detail::csv_exact(r.epsilon);
    }
    out << '\n';
  }
  return out.str();
}

/// Convention used by the scheme's next reconstruction of `s`.
template <Scalar T>
Convention next_convention(SchemeKind kind, const GridState<T>& s) {
  if (kind == SchemeKind::dl_shifted && s.phase() == Phase::integer_grid) return Convention::from_right;
  return Convention::from_left;
}

/// Paths written next to the CSV: <stem>.final.json and <stem>.reconstruction.json.
inline std::string sibling_path(const std::string& csv_path, const std::string& suffix) {
  std::filesystem::path p(csv_path);
  p.replace_extension();
  return p.string() + suffix;
}

/// Writes the CSV (stdout text is returned instead when config.out is empty)
/// plus the final state and the optional reconstruction dump.
template <Scalar T>
std::string write_outputs(const TimeSeries<T>& ts) {
  const std::string csv = format_csv(ts);
  if (ts.config.out.empty()) return csv;
  const std::filesystem::path out(ts.config.out);
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
  write_text_file(ts.config.out, csv);
  write_text_file(sibling_path(ts.config.out, ".final.json"), state_to_json(ts.final_state).dump(2) + "\n");
  if (ts.config.dump_reconstruction) {
    const auto profile = reconstruct(ts.final_state, next_convention(ts.config.scheme, ts.final_state));
    write_text_file(sibling_path(ts.config.out, ".reconstruction.json"),
                    reconstruction_to_json(profile).dump(2) + "\n");
  }
  return {};
}

/// Runs a config in its arithmetic mode and writes its outputs.
inline std::string run_and_write(const ExperimentConfig& config) {
  if (config.arithmetic == Arithmetic::rational) return write_outputs(run_experiment<Rational>(config));
  return write_outputs(run_experiment<double>(config));
}

}  // namespace advect
