#pragma once

// Staircase states: constant left tail, a two-jump front, then unit jumps
// forever. At lambda = 1/2 the shifted process maps such states to states of
// the same shape and moves the front by half a cell per step.

#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace advect {

enum class StaircaseCase { none, i, ii };

inline const char* to_string(StaircaseCase c) {
  switch (c) {
    case StaircaseCase::i: return "i";
    case StaircaseCase::ii: return "ii";
    case StaircaseCase::none: return "";
  }
  return "";
}

template <Scalar T>
struct StaircaseReport {
  bool satisfies_Hprime = false;
  std::string reason;  ///< first failed test, empty when satisfied
  std::int64_t front = 0;  ///< raw index of the first front jump
  T S_half{};          ///< first front jump
  T S_three_half{};    ///< second front jump
  StaircaseCase kase = StaircaseCase::none;
  T front_sum{};
};

/// Tests the staircase hypothesis with the front at raw jump index p: jumps
/// vanish before p, S_p >= 0, S_{p+1} >= 1 and every later jump equals 1.
template <Scalar T>
StaircaseReport<T> check_Hprime_at(const GridState<T>& state, std::int64_t p) {
  StaircaseReport<T> r;
  r.front = p;
  auto fail = [&](std::string why) {
    r.reason = std::move(why);
    return r;
  };
  if (state.is_periodic()) return fail("periodic state");
  if (!state.left_tail().is_constant()) return fail("left tail is not constant");
  if (!(state.right_tail().step == 1)) return fail("right tail step is not 1");
  const auto s = jumps(state);
  for (std::int64_t k = std::min(s.first(), p) - 1; k < p; ++k) {
    if (!(s.at(k) == 0)) return fail("nonzero jump left of the front");
  }
  for (std::int64_t k = p + 2; k <= std::max(s.end(), p + 2); ++k) {
    if (!(s.at(k) == 1)) return fail("jump right of the front differs from 1");
  }
  r.S_half = s.at(p);
  r.S_three_half = s.at(p + 1);
  r.front_sum = T(r.S_half + r.S_three_half);
  if (!(r.S_three_half >= 1)) return fail("second front jump below 1");
  if (r.S_half < 0) return fail("first front jump negative");
  r.satisfies_Hprime = true;
  r.kase = r.S_half >= r.S_three_half ? StaircaseCase::i : StaircaseCase::ii;
  return r;
}

/// Staircase check with the front placed at the largest admissible index:
/// the first nonzero jump, or the interface just before it.
template <Scalar T>
StaircaseReport<T> check_Hprime(const GridState<T>& state) {
  if (state.is_periodic()) return check_Hprime_at(state, 0);
  const auto s = jumps(state.trimmed());
  std::int64_t f = s.end();
  for (std::int64_t k = s.first(); k < s.end(); ++k) {
    if (!(s.at(k) == 0)) {
      f = k;
      break;
    }
  }
  auto r = check_Hprime_at(state, f);
  if (!r.satisfies_Hprime) r = check_Hprime_at(state, f - 1);
  return r;
}

template <Scalar T>
struct StaircasePrediction {
  std::int64_t front = 0;  ///< raw index of the first front jump after the step
  T first{};
  T second{};
  T front_sum{};
};

/// Front jumps after one shifted step at lambda = 1/2. Case (i) moves the front
/// half a cell left, case (ii) half a cell right.
template <Scalar T>
StaircasePrediction<T> staircase_predicted_next(const StaircaseReport<T>& report, const GridState<T>& state) {
  if (!report.satisfies_Hprime) throw std::invalid_argument("staircase_predicted_next: state fails the staircase hypothesis");
  if (!(state.lambda() == from_ratio<T>(Ratio{1, 2}))) {
    throw std::invalid_argument("staircase_predicted_next needs lambda = 1/2");
  }
  const T& a = report.S_half;
  const T& b = report.S_three_half;
  StaircasePrediction<T> p;
  const bool even = state.phase() == Phase::integer_grid;
  if (report.kase == StaircaseCase::i) {
    p.front = even ? report.front : report.front - 1;
    p.first = T((a - b) / 2);
    p.second = T((3 * b + a - 1) / 2);
  } else {
    p.front = even ? report.front + 1 : report.front;
    p.first = T((3 * a + b - 1) / 2);
    p.second = T((b - a) / 2 + 1);
  }
  p.front_sum = T(p.first + p.second);
  return p;
}

/// Follows the front through a lambda = 1/2 trajectory. The front position is
/// carried over from the previous step rather than re-derived, since a zero
/// first jump makes the canonical choice ambiguous.
template <Scalar T>
class StaircaseTracker {
 public:
  explicit StaircaseTracker(const GridState<T>& initial) : report_(check_Hprime(initial)) {}

  [[nodiscard]] const StaircaseReport<T>& report() const { return report_; }

  /// Records the state after the next step; returns its report.
  const StaircaseReport<T>& advance(const GridState<T>& previous, const GridState<T>& next) {
    if (!report_.satisfies_Hprime) throw std::logic_error("staircase tracker lost the staircase shape");
    report_ = check_Hprime_at(next, staircase_predicted_next(report_, previous).front);
    return report_;
  }

 private:
  StaircaseReport<T> report_;
};

}  // namespace advect
