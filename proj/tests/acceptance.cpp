// Acceptance checks, one per criterion. Usage: acceptance [c1 ... c9 | all]
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.

#include "advect/analysis/classify.hpp"
#include "advect/analysis/metrics.hpp"
#include "advect/analysis/periodicity.hpp"
#include "advect/experiments/presets.hpp"
#include "advect/experiments/runner.hpp"
#include "advect/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

using namespace advect;
using Q = Rational;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

constexpr std::uint64_t kSeed = 20240611;

// ---- c1 -------------------------------------------------------------------

Outcome exact_plateau_advection() {
  // periodic plateaus of width >= 3 cells, interfaces on cell edges (dx = 1)
  const std::vector<std::vector<std::pair<std::int64_t, Q>>> layouts = {
      {{3, Q(0)}, {4, Q(1)}, {3, Q(-1, 2)}, {5, Q(2)}, {5, Q(1, 3)}}};
  const Ratio lam{2, 5};
  const SchemeParams<Q> p(SchemeKind::dl_fixed, lam);
  Q worst(0);
  std::int64_t checks = 0;
  for (const auto& layout : layouts) {
    std::vector<Piece<Q>> pieces;
    Q x(0);
    for (const auto& [w, h] : layout) {
      pieces.push_back(Piece<Q>{x, Q(x + w), expr::Constant<Q>{h}});
      x += w;
    }
    const PiecewiseDatum<Q> datum(pieces, Extension::periodic, "plateaus");
    const auto m = static_cast<std::int64_t>(scalar_traits<Q>::floor(x));
    const GridState<Q> s0 = init_periodic_state(datum, m, from_ratio<Q>(lam));
    run(s0, p, 1000, [&](std::int64_t n, const GridState<Q>& s) {
      worst = std::max(worst, l1_error_cell_averaged(s, datum, exact_travel(p, n)));
      ++checks;
    });
  }
  return {worst == 0 && checks == 1000 * static_cast<std::int64_t>(layouts.size()),
          std::to_string(checks) + " steps checked, max l1 error " + worst.get_str()};
}

// ---- c2 / c3 --------------------------------------------------------------

struct OvercompressiveRun {
  std::int64_t onset_stream = -1;           // first n with u(n+2) == u(n)
  std::optional<std::int64_t> onset_detect;  // detect_two_periodicity on the stored trajectory
  std::int64_t M_at_onset = -1;
  bool heaviside_after = false;
  bool strictly_increasing = false;
};

std::vector<OvercompressiveRun> overcompressive_runs() {
  static std::vector<OvercompressiveRun> cache;
  if (!cache.empty()) return cache;
  verify::Gen g(kSeed + 2);
  const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
  for (int i = 0; i < 200; ++i) {
    const auto h = verify::random_halpha(g);
    std::vector<GridState<Q>> traj{verify::state_from_jumps(h.jumps, verify::half())};
    OvercompressiveRun r;
    r.strictly_increasing = std::all_of(h.jumps.begin(), h.jumps.end(), [](const Q& s) { return s > 0; });
    for (std::int64_t n = 0; n < 10000; ++n) {
      traj.push_back(step(traj.back(), p));
      if (n >= 2 && traj[static_cast<std::size_t>(n)] == traj[static_cast<std::size_t>(n - 2)]) {
        r.onset_stream = n - 2;
        break;
      }
    }
    if (r.onset_stream >= 0) {
      for (int k = 0; k < 6; ++k) traj.push_back(step(traj.back(), p));
      const auto horizon = static_cast<std::int64_t>(traj.size());
      r.onset_detect = detect_two_periodicity<Q>(traj, horizon);
      const std::int64_t onset = r.onset_detect.value_or(r.onset_stream);
      r.M_at_onset = count_positive_jumps(traj[static_cast<std::size_t>(onset)]);
      r.heaviside_after = true;
      for (std::int64_t n = onset; n < horizon; ++n) {
        r.heaviside_after = r.heaviside_after && is_discrete_heaviside(traj[static_cast<std::size_t>(n)]).has_value();
      }
    }
    cache.push_back(r);
  }
  return cache;
}

Outcome overcompressivity() {
  const auto runs = overcompressive_runs();
  std::int64_t ok = 0, max_p = 0;
  for (const auto& r : runs) {
    if (r.onset_detect && r.M_at_onset >= 1 && r.M_at_onset <= 2) ++ok;
    if (r.onset_detect) max_p = std::max(max_p, *r.onset_detect);
  }
  return {ok == static_cast<std::int64_t>(runs.size()),
          std::to_string(ok) + "/" + std::to_string(runs.size()) + " runs 2-periodic in H^1 or H^2, max onset p = " +
              std::to_string(max_p)};
}

Outcome heaviside_limit() {
  const auto runs = overcompressive_runs();
  std::int64_t eligible = 0, ok = 0;
  for (const auto& r : runs) {
    if (!r.strictly_increasing) continue;
    ++eligible;
    if (r.onset_detect && r.heaviside_after) ++ok;
  }
  return {eligible > 0 && ok == eligible,
          std::to_string(ok) + "/" + std::to_string(eligible) + " runs are discrete Heaviside for every n >= p"};
}

// ---- suites ---------------------------------------------------------------

Outcome suites(const std::vector<verify::SuiteResult>& rs) {
  bool pass = true;
  std::string d;
  for (const auto& r : rs) {
    pass = pass && r.ok();
    if (!d.empty()) d += "; ";
    d += r.name + " " + std::to_string(r.violations) + "/" + std::to_string(r.cases);
    if (!r.ok()) d += " [first: " + r.first_failure + "]";
  }
  return {pass, d + " (violations/cases)"};
}

Outcome lemma_suites() {
  const std::uint64_t s = kSeed * 31;
  return suites({verify::half_cell_suite(s + 1, 500), verify::middle_jump_suite(s + 2, 500),
                 verify::extremity_vanish_suite(s + 3, 500), verify::extremity_decay_suite(s + 4, 500),
                 verify::halpha_closure_suite(s + 5, 500), verify::automaton_suite(s + 6, 500)});
}

Outcome staircase() { return suites({verify::staircase_suite(kSeed + 5, 50, 800)}); }

Outcome five_config() { return suites({verify::five_config_suite(kSeed + 6, 200, 40)}); }

Outcome structural() {
  const std::uint64_t s = kSeed * 37;
  return suites({verify::mass_suite(s + 1, 500, 10000), verify::monotonicity_suite(s + 2, 500),
                 verify::decomposition_suite(s + 3, 500), verify::max_principle_suite(s + 4, 500),
                 verify::tail_suite(s + 5, 500)});
}

// ---- c7 -------------------------------------------------------------------

double final_linf(SchemeKind kind, const std::string& initial, std::int64_t m, Ratio lam, Ratio periods) {
  ExperimentConfig c;
  c.scheme = kind;
  c.lambda = lam;
  c.initial = initial;
  c.M = m;
  c.periods = periods;
  c.metrics = MetricSet{.linf = true};
  c.stride = 1 << 30;
  return *run_experiment<double>(c).rows.back().linf_err;
}

Outcome upwind_order() {
  std::vector<double> err;
  for (std::int64_t m : {100, 200, 400}) err.push_back(final_linf(SchemeKind::upwind, "id1", m, {2, 5}, {1, 1}));
  const double r1 = err[0] / err[1];
  const double r2 = err[1] / err[2];
  char buf[200];
  std::snprintf(buf, sizeof buf, "errors %.4g %.4g %.4g, ratios %.3f %.3f (required in [1.6, 2.4])", err[0], err[1],
                err[2], r1, r2);
  return {r1 >= 1.6 && r1 <= 2.4 && r2 >= 1.6 && r2 <= 2.4, buf};
}

// ---- c8 -------------------------------------------------------------------

std::vector<double> plateau_series(Ratio lam) {
  ExperimentConfig c;
  c.scheme = SchemeKind::dl_fixed;
  c.lambda = lam;
  c.initial = "id2";
  c.M = 100;
  c.periods = Ratio{15, 1};
  c.metrics = MetricSet{.plateau = true};
  std::vector<double> out;
  for (const auto& r : run_experiment<double>(c).rows) out.push_back(*r.plateau_I);
  return out;
}

Outcome plateau_collapse() {
  const auto half = plateau_series({1, 2});
  std::int64_t first_zero = -1;
  for (std::size_t n = 0; n < half.size(); ++n) {
    if (half[n] < 1e-10) {
      first_zero = static_cast<std::int64_t>(n);
      break;
    }
  }
  const bool collapse = first_zero >= 0 && first_zero < static_cast<std::int64_t>(half.size()) - 1;

  // lambda = 0.47: positive throughout; after 200 steps the envelope (maxima
  // over consecutive 10-step blocks) never increases.
  const auto off = plateau_series({47, 100});
  const double min_off = *std::min_element(off.begin(), off.end());
  bool envelope = true;
  double prev = INFINITY;
  for (std::size_t b = 200; b + 10 <= off.size(); b += 10) {
    const double mx = *std::max_element(off.begin() + static_cast<std::ptrdiff_t>(b),
                                        off.begin() + static_cast<std::ptrdiff_t>(b + 10));
    envelope = envelope && mx <= prev * (1 + 1e-12);
    prev = mx;
  }
  // largest rebound above the running minimum, to size any violation
  double running_min = INFINITY, rebound = 1;
  std::size_t rebound_at = 0;
  for (std::size_t n = 200; n < off.size(); ++n) {
    running_min = std::min(running_min, off[n]);
    if (off[n] / running_min > rebound) {
      rebound = off[n] / running_min;
      rebound_at = n;
    }
  }
  char buf[400];
  std::snprintf(buf, sizeof buf,
                "lambda=1/2: I < 1e-10 first at step %lld of %zu; lambda=0.47: min I %.3g, 10-step block maxima "
                "nonincreasing after step 200: %s, largest rebound x%.3g over the running minimum at step %zu",
                static_cast<long long>(first_zero), half.size() - 1, min_off, envelope ? "yes" : "no", rebound,
                rebound_at);
  return {collapse && min_off > 0 && envelope, buf};
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> check;
  double max_seconds;  ///< runtime bound, part of the criterion
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"c1", "exact advection of wide plateaus", exact_plateau_advection, 1},
      {"c2", "overcompressivity: 2-periodic within 10000 steps", overcompressivity, 30},
      {"c3", "Heaviside limit after the onset", heaviside_limit, 30},
      {"c4", "lemma suites", lemma_suites, 10},
      {"c5", "staircase dynamics", staircase, 10},
      {"c6", "five-cell exponential convergence", five_config, 20},
      {"c7", "upwind first-order convergence", upwind_order, 5},
      {"c8", "plateau metric collapse", plateau_collapse, 60},
      {"c9", "structural suites", structural, 120},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) {
    wanted.clear();
    for (const auto& c : all) wanted.emplace_back(c.id);
  }
  int failed = 0;
  for (const auto& id : wanted) {
    const auto it = std::find_if(all.begin(), all.end(), [&](const Criterion& c) { return id == c.id; });
    if (it == all.end()) {
      std::fprintf(stderr, "unknown criterion '%s'\n", id.c_str());
      return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = it->check();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= it->max_seconds) {
      o.pass = false;
      o.detail += "; runtime over the " + std::to_string(static_cast<int>(it->max_seconds)) + " s bound";
    }
    std::printf("%s %s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", it->id, it->title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
