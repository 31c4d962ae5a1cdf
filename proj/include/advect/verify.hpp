#pragma once

// Randomised property suites over exact rational data. Each suite draws its
// cases from a seeded generator, checks one family of statements and counts
// violations; the first failing case is kept as a readable message.

#include "advect/analysis/classify.hpp"
#include "advect/analysis/five_config.hpp"
#include "advect/analysis/periodicity.hpp"
#include "advect/analysis/staircase.hpp"
#include "advect/reconstruction.hpp"
#include "advect/scalar.hpp"
#include "advect/schemes.hpp"
#include "advect/state.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace advect::verify {

using Q = Rational;

struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t violations = 0;
  std::string first_failure;
  double seconds = 0;

  [[nodiscard]] bool ok() const { return violations == 0; }

  void fail(const std::string& what) {
    if (violations++ == 0) first_failure = what;
  }
};

/// Seeded source of the random rationals and shapes used by the suites.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin() { return integer(0, 1) == 1; }

  /// Uniform on the lattice {k / den : lo <= k/den <= hi} for a random den <= max_den.
  Q rational(const Q& lo, const Q& hi, std::int64_t max_den = 64) {
    const std::int64_t den = integer(1, max_den);
    const Q a = lo * den;
    const Q b = hi * den;
    const std::int64_t k0 = ceil_int(a);
    const std::int64_t k1 = floor_int(b);
    if (k1 < k0) return lo;
    Q q(mpz_class(static_cast<long>(integer(k0, k1))), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
  }

  /// Strictly positive jumps k/64 with k in [1, 64].
  Q positive_jump() {
    Q q(mpz_class(static_cast<long>(integer(1, 64))), 64);
    q.canonicalize();
    return q;
  }

  /// CFL number p/q with q <= 12, in (0, 1] or (0, 1/2] when `shifted`.
  Ratio lambda(bool shifted) {
    const std::int64_t q = integer(2, 12);
    const std::int64_t p = integer(1, shifted ? q / 2 : q);
    return make_ratio(p, q);
  }

  SchemeKind scheme(std::initializer_list<SchemeKind> choices) {
    std::vector<SchemeKind> v(choices);
    return v[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  static std::int64_t floor_int(const Q& x) { return scalar_traits<Q>::floor(x); }
  static std::int64_t ceil_int(const Q& x) { return -scalar_traits<Q>::floor(Q(-x)); }

  std::mt19937_64 rng_;
};

/// A random H_alpha^M instance: tails 0 and 1, M positive jumps, alpha half the
/// smallest inner jump (or 1/4 when there are no inner jumps).
struct HAlphaInstance {
  std::vector<Q> jumps;
  Q alpha;
};

inline HAlphaInstance random_halpha(Gen& g, std::int64_t m_min = 1, std::int64_t m_max = 10) {
  const std::int64_t m = g.integer(m_min, m_max);
  std::vector<Q> raw;
  Q total(0);
  for (std::int64_t i = 0; i < m; ++i) {
    raw.push_back(g.positive_jump());
    total += raw.back();
  }
  HAlphaInstance h;
  for (auto& s : raw) h.jumps.push_back(Q(s / total));
  h.alpha = Q(1, 4);
  if (m >= 3) {
    Q smallest = h.jumps[1];
    for (std::int64_t i = 1; i + 1 < m; ++i) smallest = std::min(smallest, h.jumps[static_cast<std::size_t>(i)]);
    h.alpha = Q(smallest / 2);
  }
  return h;
}

inline GridState<Q> state_from_jumps(const std::vector<Q>& jumps, const Q& lambda, std::int64_t start = 0) {
  std::vector<Q> v{Q(0)};
  for (const auto& s : jumps) v.push_back(Q(v.back() + s));
  return GridState<Q>::infinite(start, std::move(v), Q(0), Q(0), lambda);
}

inline const Q& half() {
  static const Q h(1, 2);
  return h;
}

namespace detail {

inline std::string str(const Q& q) { return q.get_str(); }

template <class F>
SuiteResult timed(const std::string& name, F&& body) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Raw index in `s` of the interface at phase-normalised position `pos`.
inline std::int64_t raw_at(const GridState<Q>& s, const Q& pos) { return jumps(s).raw_index_at(pos); }

inline std::int64_t lo_index(const GridState<Q>& a, const GridState<Q>& b) {
  return std::min(a.window_start(), b.window_start());
}
inline std::int64_t hi_index(const GridState<Q>& a, const GridState<Q>& b) {
  return std::max(a.window_end(), b.window_end());
}

}  // namespace detail

// ---- lemma suites ---------------------------------------------------------

/// Closed-form half-cell integrals against the reconstruction, plus their bounds.
inline SuiteResult half_cell_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("half-cell integrals", [&](SuiteResult& r) {
    Gen g(seed);
    for (std::int64_t i = 0; i < cases; ++i) {
      std::vector<Q> abc{g.rational(-2, 2), g.rational(-2, 2), g.rational(-2, 2)};
      std::sort(abc.begin(), abc.end());
      const Q &a = abc[0], &b = abc[1], &c = abc[2];
      const auto h = half_cell_integrals(a, b, c);
      ++r.cases;
      const auto s = GridState<Q>::infinite(-1, {a, b, c}, Q(0), Q(0), half());
      for (Convention conv : {Convention::from_right, Convention::from_left}) {
        const auto p = reconstruct(s, conv);
        const Q left = integrate_reconstruction(p, Q(-half()), Q(0));
        const Q right = integrate_reconstruction(p, Q(0), half());
        if (left != h.left || right != h.right) {
          r.fail("(" + detail::str(a) + "," + detail::str(b) + "," + detail::str(c) + "): closed form (" +
                 detail::str(h.left) + "," + detail::str(h.right) + ") vs reconstruction (" + detail::str(left) +
                 "," + detail::str(right) + ")");
        }
      }
      if (!(a / 2 <= h.left && h.left <= b / 2 && b / 2 <= h.right && h.right <= c / 2)) {
        r.fail("bounds a/2 <= left <= b/2 <= right <= c/2 fail for (" + detail::str(a) + "," + detail::str(b) + "," +
               detail::str(c) + ")");
      }
    }
  });
}

/// One lambda = 1/2 step: each new jump is at least the smaller of the two old
/// jumps it sits between (nonnegative jumps, both phases).
inline SuiteResult middle_jump_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("middle jump lower bound", [&](SuiteResult& r) {
    Gen g(seed);
    const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
    for (std::int64_t i = 0; i < cases; ++i) {
      std::vector<Q> js;
      const std::int64_t n = g.integer(1, 12);
      for (std::int64_t k = 0; k < n; ++k) js.push_back(g.integer(0, 3) == 0 ? Q(0) : g.positive_jump());
      GridState<Q> s = state_from_jumps(js, half(), g.integer(-5, 5));
      ++r.cases;
      for (int phase_step = 0; phase_step < 2; ++phase_step) {
        const GridState<Q> next = step(s, p);
        const auto old_j = jumps(s);
        const auto new_j = jumps(next);
        for (std::int64_t k = new_j.first() - 2; k <= new_j.end() + 2; ++k) {
          const Q pos = new_j.position(k);
          const Q lo = std::min(old_j.at(old_j.raw_index_at(Q(pos - half()))), old_j.at(old_j.raw_index_at(Q(pos + half()))));
          if (new_j.at(k) < lo) {
            r.fail("jump at " + detail::str(pos) + " is " + detail::str(new_j.at(k)) + " < " + detail::str(lo));
          }
        }
        s = next;
      }
    }
  });
}

/// First jump <= second jump: the jump just outside the left extremity stays 0
/// after one step (mirrored at the right extremity).
inline SuiteResult extremity_vanish_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("extremity: small outer jump vanishes", [&](SuiteResult& r) {
    Gen g(seed);
    const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
    for (std::int64_t i = 0; i < cases; ++i) {
      auto h = random_halpha(g, 2, 10);
      auto& j = h.jumps;
      if (j[0] > j[1]) std::swap(j[0], j[1]);
      const GridState<Q> s = state_from_jumps(j, half());
      const GridState<Q> next = step(s, p);
      const auto sj = jumps(s);
      const auto nj = jumps(next);
      const std::int64_t first = s.window_start();
      const std::int64_t last = first + static_cast<std::int64_t>(j.size()) - 1;
      ++r.cases;
      const Q left_pos = Q(sj.position(first) - half());
      if (nj.at(nj.raw_index_at(left_pos)) != 0) r.fail("left: new jump at " + detail::str(left_pos) + " is not 0");
      if (j.back() <= j[j.size() - 2]) {
        const Q right_pos = Q(sj.position(last) + half());
        if (nj.at(nj.raw_index_at(right_pos)) != 0) {
          r.fail("right: new jump at " + detail::str(right_pos) + " is not 0");
        }
      }
    }
  });
}

/// First jump > second jump and third jump >= alpha: two steps later the jump
/// at the first position has lost at least alpha/4 (mirrored on the right).
inline SuiteResult extremity_decay_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("extremity: large outer jump decays by alpha/4", [&](SuiteResult& r) {
    Gen g(seed);
    const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
    while (r.cases < cases) {
      auto h = random_halpha(g, 3, 10);
      auto& j = h.jumps;
      if (j[0] == j[1]) continue;
      if (j[0] < j[1]) std::swap(j[0], j[1]);
      // alpha from the inner jumps after the swap
      Q smallest = j[1];
      for (std::size_t k = 1; k + 1 < j.size(); ++k) smallest = std::min(smallest, j[k]);
      h.alpha = Q(smallest / 2);
      if (j[2] < h.alpha) continue;
      const GridState<Q> s = state_from_jumps(j, half());
      const GridState<Q> s2 = step(step(s, p), p);
      const auto sj = jumps(s);
      const auto nj = jumps(s2);
      const std::int64_t first = s.window_start();
      const std::int64_t last = first + static_cast<std::int64_t>(j.size()) - 1;
      ++r.cases;
      if (nj.at(first) > j[0] - h.alpha / 4) {
        r.fail("left: " + detail::str(nj.at(first)) + " > " + detail::str(j[0]) + " - " + detail::str(h.alpha) + "/4");
      }
      const std::size_t m = j.size();
      if (j[m - 1] > j[m - 2] && j[m - 3] >= h.alpha && nj.at(last) > j[m - 1] - h.alpha / 4) {
        r.fail("right: " + detail::str(nj.at(last)) + " > " + detail::str(j[m - 1]) + " - alpha/4");
      }
      (void)sj;
    }
  });
}

/// One lambda = 1/2 step keeps H_alpha data in H_alpha (from both phases).
inline SuiteResult halpha_closure_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("H_alpha closure", [&](SuiteResult& r) {
    Gen g(seed);
    const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
    for (std::int64_t i = 0; i < cases; ++i) {
      const auto h = random_halpha(g);
      GridState<Q> s = state_from_jumps(h.jumps, half());
      ++r.cases;
      for (int k = 0; k < 2; ++k) {
        s = step(s, p);
        const auto rep = classify_H_alpha(s, h.alpha);
        if (!rep || !rep->alpha_satisfied) {
          r.fail("instance with M=" + std::to_string(h.jumps.size()) + ", alpha=" + detail::str(h.alpha) +
                 " leaves H_alpha after step " + std::to_string(k + 1));
          break;
        }
      }
    }
  });
}

/// Extremity-class transitions along whole lambda = 1/2 trajectories follow the
/// automaton, with the matching change of the jump count.
inline SuiteResult automaton_suite(std::uint64_t seed, std::int64_t cases, std::int64_t max_steps = 10000) {
  return detail::timed("extremity automaton", [&](SuiteResult& r) {
    Gen g(seed);
    const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
    for (std::int64_t i = 0; i < cases; ++i) {
      const auto h = random_halpha(g);
      GridState<Q> s = state_from_jumps(h.jumps, half());
      auto rep = classify_H_alpha(s, Q(0));
      ++r.cases;
      std::int64_t settled = 0;
      for (std::int64_t n = 1; n <= max_steps && settled < 4; ++n) {
        GridState<Q> next = step(s, p);
        const auto nrep = classify_H_alpha(next, Q(0));
        if (!nrep) {
          r.fail("trajectory leaves the jump pattern at step " + std::to_string(n));
          break;
        }
        const auto from = classify_extremities(*rep);
        const auto to = classify_extremities(*nrep);
        if (!automaton_transition_allowed(from, rep->M, to, nrep->M)) {
          r.fail(std::string(to_string(from)) + " (M=" + std::to_string(rep->M) + ") -> " + to_string(to) +
                 " (M=" + std::to_string(nrep->M) + ") at step " + std::to_string(n));
          break;
        }
        settled = nrep->M <= 2 ? settled + 1 : 0;
        s = std::move(next);
        rep = nrep;
      }
    }
  });
}

/// Staircase states at lambda = 1/2: shape preserved, front jumps as predicted,
/// front sum moves by -1/2 (case i) or +1/2 (case ii), case i is followed by
/// case ii, and the front sum at even steps never decreases. Runs of at least
/// 500 steps must also gain 5 on the initial front sum by step 500.
inline SuiteResult staircase_suite(std::uint64_t seed, std::int64_t cases, std::int64_t steps = 40) {
  return detail::timed("staircase dynamics", [&](SuiteResult& r) {
    Gen g(seed);
    const SchemeParams<Q> p(SchemeKind::dl_shifted, Ratio{1, 2});
    for (std::int64_t i = 0; i < cases; ++i) {
      const Q a = g.rational(0, 4);
      const Q b = g.rational(1, 4);
      GridState<Q> s = GridState<Q>::infinite(0, {Q(0), a, Q(a + b)}, Q(0), Q(1), half());
      StaircaseTracker<Q> tracker(s);
      ++r.cases;
      const Q tracker_start = tracker.report().front_sum;
      Q last_even_sum = tracker_start;
      for (std::int64_t n = 1; n <= steps; ++n) {
        const auto before = tracker.report();
        const auto predicted = staircase_predicted_next(before, s);
        GridState<Q> next = step(s, p);
        const auto& now = tracker.advance(s, next);
        const std::string where = "S=(" + detail::str(a) + "," + detail::str(b) + ") step " + std::to_string(n);
        if (!now.satisfies_Hprime) {
          r.fail(where + ": staircase shape lost (" + now.reason + ")");
          break;
        }
        if (now.S_half != predicted.first || now.S_three_half != predicted.second) {
          r.fail(where + ": front jumps differ from the closed form");
          break;
        }
        const Q change = Q(now.front_sum - before.front_sum);
        if (change != (before.kase == StaircaseCase::i ? Q(-half()) : half())) {
          r.fail(where + ": front sum changed by " + detail::str(change));
          break;
        }
        if (before.kase == StaircaseCase::i && now.kase != StaircaseCase::ii) {
          r.fail(where + ": case (i) not followed by case (ii)");
          break;
        }
        if (next.phase() == Phase::integer_grid) {
          if (now.front_sum < last_even_sum) {
            r.fail(where + ": even-step front sum decreased");
            break;
          }
          last_even_sum = now.front_sum;
        }
        if (n == 500 && now.front_sum < tracker_start + 5) {
          r.fail(where + ": front sum gained only " + detail::str(Q(now.front_sum - tracker_start)));
          break;
        }
        s = std::move(next);
      }
    }
  });
}

/// A five-cell configuration from the open-set construction: v_2 = v_3 split
/// with ratios in (lambda + 1/20, 19/20), then eps shrunk until (a)-(e) hold.
inline std::optional<GridState<Q>> random_five_config(Gen& g, const Ratio& lam) {
  const Q l = from_ratio<Q>(lam);
  const Q v2 = g.rational(Q(1, 5), Q(4, 5), 40);
  const Q r1 = g.rational(Q(l + Q(1, 20)), Q(19, 20), 100);
  const Q r4 = g.rational(Q(l + Q(1, 20)), Q(19, 20), 100);
  const Q v1 = Q(r1 * v2);
  const Q v4 = Q(v2 + r4 * (1 - v2));
  Q eps(1, static_cast<long>(g.integer(50, 400)));
  for (int tries = 0; tries < 40; ++tries, eps /= 2) {
    auto s = GridState<Q>::infinite(0, {Q(0), v1, v2, Q(v2 + eps), v4, Q(1)}, Q(0), Q(0), l);
    if (check_five_config_conditions(s, l).all_hold()) return s;
  }
  return std::nullopt;
}

/// Five-cell configurations: eps contracts exactly by 4 lambda^2 per double
/// step, the values stay inside the sandwich bounds, and the closed-form double
/// step equals two scheme steps.
inline SuiteResult five_config_suite(std::uint64_t seed, std::int64_t cases, std::int64_t double_steps = 40,
                                     std::vector<Ratio> lambdas = {{1, 5}, {3, 10}, {2, 5}, {9, 20}}) {
  return detail::timed("five-cell convergence", [&](SuiteResult& r) {
    Gen g(seed);
    for (std::int64_t i = 0; i < cases; ++i) {
      const Ratio lam = lambdas[static_cast<std::size_t>(i % static_cast<std::int64_t>(lambdas.size()))];
      const Q l = from_ratio<Q>(lam);
      const SchemeParams<Q> p(SchemeKind::dl_shifted, lam);
      const auto init = random_five_config(g, lam);
      ++r.cases;
      if (!init) {
        r.fail("generator found no configuration for lambda=" + lam.to_string());
        continue;
      }
      const auto rep0 = check_five_config_conditions(*init, l);
      const Q rate = Q(4 * l * l);
      Q expected_eps = rep0.epsilon;
      GridState<Q> s = *init;
      for (std::int64_t n = 1; n <= double_steps; ++n) {
        const GridState<Q> predicted = n == 1 ? five_config_predicted_even_step(s, l) : five_config_recurrence(s, l);
        s = step(step(s, p), p);
        expected_eps *= rate;
        const std::string where = "lambda=" + lam.to_string() + " double step " + std::to_string(n);
        if (!(s == predicted)) {
          r.fail(where + ": scheme differs from the closed-form double step");
          break;
        }
        const auto u = advect::detail::five_config_values(s).second;
        if (Q(u[2] - u[1]) != expected_eps) {
          r.fail(where + ": eps is " + detail::str(Q(u[2] - u[1])) + ", expected " + detail::str(expected_eps));
          break;
        }
        const auto& lim = rep0.limits;
        const auto& u0 = rep0.u;
        if (!(lim[0] <= u[0] && u[0] <= u0[0] && u0[1] <= u[1] && u[1] <= lim[1] && lim[2] <= u[2] &&
              u[2] <= u0[2] && u0[3] <= u[3] && u[3] <= lim[3])) {
          r.fail(where + ": sandwich bounds violated");
          break;
        }
      }
    }
  });
}

// ---- structural suites ----------------------------------------------------

inline GridState<Q> random_periodic(Gen& g, const Q& lambda) {
  std::vector<Q> v;
  const std::int64_t m = g.integer(4, 16);
  for (std::int64_t k = 0; k < m; ++k) v.push_back(g.rational(-2, 2));
  return GridState<Q>::periodic(std::move(v), lambda);
}

/// Infinite state with random window values; tails constant unless `arithmetic_tails`.
inline GridState<Q> random_infinite(Gen& g, const Q& lambda, bool arithmetic_tails) {
  std::vector<Q> v;
  const std::int64_t n = g.integer(1, 12);
  for (std::int64_t k = 0; k < n; ++k) v.push_back(g.rational(-2, 2));
  const Q ls = arithmetic_tails ? g.rational(-1, 1, 8) : Q(0);
  const Q rs = arithmetic_tails ? g.rational(-1, 1, 8) : Q(0);
  return GridState<Q>::infinite(g.integer(-5, 5), std::move(v), ls, rs, lambda);
}

inline GridState<Q> random_nondecreasing(Gen& g, const Q& lambda) {
  std::vector<Q> js;
  const std::int64_t n = g.integer(1, 12);
  for (std::int64_t k = 0; k < n; ++k) js.push_back(g.integer(0, 3) == 0 ? Q(0) : g.positive_jump());
  auto s = state_from_jumps(js, lambda, g.integer(-5, 5));
  const Q ls = g.coin() ? Q(0) : g.rational(0, 1, 8);
  const Q rs = g.coin() ? Q(0) : g.rational(0, 1, 8);
  return GridState<Q>::infinite(s.window_start(), std::vector<Q>(s.values().begin(), s.values().end()), Q(-ls), rs,
                                lambda);
}

/// Sum of cell values is invariant on periodic grids: exact in rational mode,
/// relative drift (against the sum of |u|) at most 1e-12 over 10^4 binary64 steps.
inline SuiteResult mass_suite(std::uint64_t seed, std::int64_t cases, std::int64_t float_steps = 10000) {
  return detail::timed("mass conservation", [&](SuiteResult& r) {
    Gen g(seed);
    for (std::int64_t i = 0; i < cases; ++i) {
      const SchemeKind kind =
          g.scheme({SchemeKind::upwind, SchemeKind::lax_wendroff, SchemeKind::dl_fixed, SchemeKind::dl_shifted});
      const Ratio lam = g.lambda(kind == SchemeKind::dl_shifted);
      const SchemeParams<Q> p(kind, lam);
      const GridState<Q> s0 = random_periodic(g, p.lambda());
      ++r.cases;
      Q mass0(0);
      for (const auto& v : s0.values()) mass0 += v;
      const GridState<Q> s = run(s0, p, 20);
      Q mass(0);
      for (const auto& v : s.values()) mass += v;
      if (mass != mass0) r.fail(std::string(to_string(kind)) + " lambda=" + lam.to_string() + ": exact mass changed");

      const SchemeParams<double> pd(kind, lam);
      std::vector<double> dv;
      double abs_mass = 0;
      double mass_d0 = 0;
      for (const auto& v : s0.values()) {
        dv.push_back(v.get_d());
        abs_mass += std::abs(dv.back());
        mass_d0 += dv.back();
      }
      if (abs_mass == 0) continue;
      const GridState<double> sd = run(GridState<double>::periodic(dv, pd.lambda()), pd, float_steps);
      double mass_d = 0;
      for (double v : sd.values()) mass_d += v;
      const double drift = std::abs(mass_d - mass_d0) / abs_mass;
      if (drift > 1e-12) {
        r.fail(std::string(to_string(kind)) + " lambda=" + lam.to_string() + ": binary64 drift " + std::to_string(drift));
      }
    }
  });
}

/// Nondecreasing data stays nondecreasing under upwind and both antidiffusive
/// schemes; each shifted-step value lies between the two cells it straddles.
inline SuiteResult monotonicity_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("monotonicity preservation", [&](SuiteResult& r) {
    Gen g(seed);
    for (std::int64_t i = 0; i < cases; ++i) {
      const SchemeKind kind = g.scheme({SchemeKind::upwind, SchemeKind::dl_fixed, SchemeKind::dl_shifted});
      const Ratio lam = g.lambda(kind == SchemeKind::dl_shifted);
      const SchemeParams<Q> p(kind, lam);
      GridState<Q> s = random_nondecreasing(g, p.lambda());
      ++r.cases;
      for (int n = 1; n <= 8; ++n) {
        GridState<Q> next = step(s, p);
        if (!is_nondecreasing(next)) {
          r.fail(std::string(to_string(kind)) + " lambda=" + lam.to_string() + ": monotonicity lost at step " +
                 std::to_string(n));
          break;
        }
        if (kind == SchemeKind::dl_shifted) {
          // new cell j straddles old cells (j-1, j) going left, (j, j+1) going right
          const std::int64_t shift = s.phase() == Phase::integer_grid ? -1 : 1;
          bool ok = true;
          for (std::int64_t j = next.window_start() - 2; j < next.window_end() + 2 && ok; ++j) {
            const Q a = s.cell_value(shift < 0 ? j - 1 : j);
            const Q b = s.cell_value(shift < 0 ? j : j + 1);
            const Q x = next.cell_value(j);
            ok = std::min(a, b) <= x && x <= std::max(a, b);
          }
          if (!ok) {
            r.fail("shifted step value outside its source cells at lambda=" + lam.to_string());
            break;
          }
        }
        s = std::move(next);
      }
    }
  });
}

/// The shifted process commutes with the monotone decomposition:
/// u^n = v^n + w^n + u(anchor) cellwise, exactly, for n <= steps.
/// The identity survives one step; from the second step on it fails for data
/// with a local extremum, e.g. (0, 1, 0) at lambda = 1/2.
inline SuiteResult decomposition_suite(std::uint64_t seed, std::int64_t cases, std::int64_t steps = 8) {
  const std::string name = steps <= 1 ? "decomposition linearity (one step)" : "decomposition linearity";
  return detail::timed(name, [&](SuiteResult& r) {
    Gen g(seed);
    for (std::int64_t i = 0; i < cases; ++i) {
      const Ratio lam = g.lambda(true);
      const SchemeParams<Q> p(SchemeKind::dl_shifted, lam);
      GridState<Q> u = random_infinite(g, p.lambda(), g.coin());
      const auto d = monotone_decomposition(u);
      GridState<Q> v = d.increasing;
      GridState<Q> w = d.decreasing;
      ++r.cases;
      for (std::int64_t n = 0; n <= steps; ++n) {
        bool ok = is_nondecreasing(v);
        for (std::int64_t j = detail::lo_index(u, v) - 3; j < detail::hi_index(u, w) + 3 && ok; ++j) {
          ok = u.cell_value(j) == v.cell_value(j) + w.cell_value(j) + d.offset;
        }
        if (!ok) {
          r.fail("lambda=" + lam.to_string() + ": u != v + w + offset after " + std::to_string(n) + " steps");
          break;
        }
        u = step(u, p);
        v = step(v, p);
        w = step(w, p);
      }
    }
  });
}

/// min and max of the data never widen under upwind and both antidiffusive schemes.
inline SuiteResult max_principle_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("maximum principle", [&](SuiteResult& r) {
    Gen g(seed);
    auto range = [](const GridState<Q>& s) {
      Q lo = s.values()[0];
      Q hi = lo;
      for (const auto& x : s.values()) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
      return std::pair{lo, hi};
    };
    for (std::int64_t i = 0; i < cases; ++i) {
      const SchemeKind kind = g.scheme({SchemeKind::upwind, SchemeKind::dl_fixed, SchemeKind::dl_shifted});
      const Ratio lam = g.lambda(kind == SchemeKind::dl_shifted);
      const SchemeParams<Q> p(kind, lam);
      GridState<Q> s = g.coin() ? random_periodic(g, p.lambda()) : random_infinite(g, p.lambda(), false);
      const auto [lo, hi] = range(s);
      ++r.cases;
      for (int n = 1; n <= 10; ++n) {
        s = step(s, p);
        const auto [a, b] = range(s);
        if (a < lo || b > hi) {
          r.fail(std::string(to_string(kind)) + " lambda=" + lam.to_string() + ": range widened at step " +
                 std::to_string(n));
          break;
        }
      }
    }
  });
}

/// Arithmetic tails keep their step, and the result does not depend on how far
/// the stored window extends into the tails.
inline SuiteResult tail_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("tail preservation", [&](SuiteResult& r) {
    Gen g(seed);
    for (std::int64_t i = 0; i < cases; ++i) {
      const SchemeKind kind =
          g.scheme({SchemeKind::upwind, SchemeKind::lax_wendroff, SchemeKind::dl_fixed, SchemeKind::dl_shifted});
      const Ratio lam = g.lambda(kind == SchemeKind::dl_shifted);
      const SchemeParams<Q> p(kind, lam);
      GridState<Q> s = random_infinite(g, p.lambda(), true);
      ++r.cases;
      for (int n = 1; n <= 4; ++n) {
        const GridState<Q> next = step(s, p);
        const GridState<Q> wide = step(s.padded(6), p);
        if (next.left_tail().step != s.left_tail().step || next.right_tail().step != s.right_tail().step) {
          r.fail(std::string(to_string(kind)) + ": tail step changed");
          break;
        }
        if (!(next == wide)) {
          r.fail(std::string(to_string(kind)) + ": result depends on the stored window");
          break;
        }
        s = next;
      }
    }
  });
}

/// Integrating the reconstruction over a whole cell gives back the cell value.
inline SuiteResult reconstruction_mass_suite(std::uint64_t seed, std::int64_t cases) {
  return detail::timed("reconstruction mass identity", [&](SuiteResult& r) {
    Gen g(seed);
    for (std::int64_t i = 0; i < cases; ++i) {
      const Q lam = from_ratio<Q>(g.lambda(true));
      GridState<Q> s = g.coin() ? random_periodic(g, lam) : random_infinite(g, lam, g.coin());
      if (g.coin()) s = GridState<Q>::infinite(0, {Q(0)}, Q(0), Q(0), lam);
      const Convention conv = g.coin() ? Convention::from_left : Convention::from_right;
      const auto prof = reconstruct(s, conv);
      ++r.cases;
      for (std::int64_t j = s.window_start() - 2; j < s.window_end() + 2; ++j) {
        const Q a = prof.cell_left_edge(j);
        if (integrate_reconstruction(prof, a, Q(a + 1)) != s.cell_value(j)) {
          r.fail("cell " + std::to_string(j) + " integral differs from its average");
          break;
        }
      }
    }
  });
}

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::int64_t cases = 500;
  std::int64_t float_steps = 10000;
};

/// Lemma, automaton and closure suites; each gets its own seed derived from options.seed.
inline std::vector<SuiteResult> run_lemma_suites(const SuiteOptions& o) {
  const std::uint64_t s = o.seed * 1000003ULL;
  return {half_cell_suite(s + 1, o.cases),
          middle_jump_suite(s + 2, o.cases),
          extremity_vanish_suite(s + 3, o.cases),
          extremity_decay_suite(s + 4, o.cases),
          halpha_closure_suite(s + 5, o.cases),
          automaton_suite(s + 6, o.cases),
          staircase_suite(s + 7, o.cases),
          five_config_suite(s + 8, std::max<std::int64_t>(4, o.cases / 10))};
}

/// Conservation, monotonicity, decomposition, range and tail suites.
inline std::vector<SuiteResult> run_structural_suites(const SuiteOptions& o) {
  const std::uint64_t s = o.seed * 1000003ULL;
  return {mass_suite(s + 9, o.cases, o.float_steps),
          monotonicity_suite(s + 10, o.cases),
          decomposition_suite(s + 11, o.cases, 1),
          decomposition_suite(s + 11, o.cases),
          max_principle_suite(s + 12, o.cases),
          tail_suite(s + 13, o.cases),
          reconstruction_mass_suite(s + 14, o.cases)};
}

inline std::vector<SuiteResult> run_all(const SuiteOptions& o) {
  auto out = run_lemma_suites(o);
  for (auto& r : run_structural_suites(o)) out.push_back(std::move(r));
  return out;
}

inline std::string format_table(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  out << "suite                                          cases  violations  seconds\n";
  for (const auto& r : results) {
    std::string name = r.name;
    name.resize(46, ' ');
    char line[160];
    std::snprintf(line, sizeof line, "%s %6lld  %10lld  %7.2f\n", name.c_str(), static_cast<long long>(r.cases),
                  static_cast<long long>(r.violations), r.seconds);
    out << line;
    if (!r.ok()) out << "    first failure: " << r.first_failure << '\n';
  }
  return out.str();
}

}  // namespace advect::verify
