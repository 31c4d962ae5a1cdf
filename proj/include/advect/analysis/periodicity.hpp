#pragma once

// Detection of eventual 2-periodicity along a trajectory of the shifted process.

#include "advect/scalar.hpp"
#include "advect/schemes.hpp"
#include "advect/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

namespace advect {

/// Componentwise comparison of two states: exact for rationals, absolute
/// tolerance `tol` for binary64. Phase, kind and tail steps must match.
template <Scalar T>
bool states_match(const GridState<T>& a, const GridState<T>& b, double tol = 1e-10) {
  if constexpr (is_exact_v<T>) {
    (void)tol;
    return a == b;
  } else {
    if (a.kind() != b.kind() || a.phase() != b.phase()) return false;
    if (a.is_periodic()) {
      if (a.size() != b.size()) return false;
    } else if (std::abs(a.left_tail().step - b.left_tail().step) > tol ||
               std::abs(a.right_tail().step - b.right_tail().step) > tol) {
      return false;
    }
    const std::int64_t lo = std::min(a.window_start(), b.window_start());
    const std::int64_t hi = std::max(a.window_end(), b.window_end());
    for (std::int64_t j = lo; j < hi; ++j) {
      if (std::abs(a.cell_value(j) - b.cell_value(j)) > tol) return false;
    }
    return true;
  }
}

/// Smallest p such that state(n + 2) matches state(n) for every p <= n <= horizon - 2,
/// where trajectory[n] is the state after n steps. None when no such p exists.
template <Scalar T>
std::optional<std::int64_t> detect_two_periodicity(std::span<const GridState<T>> trajectory, std::int64_t horizon) {
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  horizon = std::min<std::int64_t>(horizon, static_cast<std::int64_t>(trajectory.size()) - 1);
  if (horizon < 2) return std::nullopt;
  std::int64_t p = horizon - 1;  // no constraint yet
  for (std::int64_t n = horizon - 2; n >= 0; --n) {
    if (!states_match(trajectory[static_cast<std::size_t>(n + 2)], trajectory[static_cast<std::size_t>(n)])) break;
    p = n;
  }
  if (p > horizon - 2) return std::nullopt;
  return p;
}

/// Steps the scheme until state(n + 2) matches state(n) and returns that n.
/// The two-step map is fixed, so a single coincidence persists forever.
template <Scalar T>
std::optional<std::int64_t> find_two_periodic_onset(GridState<T> state, const SchemeParams<T>& params,
                                                    std::int64_t max_steps) {
  GridState<T> s1 = step(state, params);
  GridState<T> s2 = step(s1, params);
  for (std::int64_t n = 0; n + 2 <= max_steps; ++n) {
    if (states_match(s2, state)) return n;
    state = std::move(s1);
    s1 = std::move(s2);
    s2 = step(s1, params);
  }
  return std::nullopt;
}

}  // namespace advect
