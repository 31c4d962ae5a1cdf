#pragma once

// Five-cell configurations: tails 0 and 1 with four intermediate values
// u_1..u_4. Under conditions (a)-(e) the shifted process contracts
// eps = u_3 - u_2 by 4 lambda^2 per double step towards a limit with a
// two-cell plateau u_2 = u_3.

#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace advect {

template <Scalar T>
struct FiveConfigReport {
  std::int64_t first = 0;        ///< raw index of u_1
  std::array<T, 4> u{};          ///< u_1..u_4
  std::array<bool, 5> conditions{};  ///< (a)..(e)
  T epsilon{};
  std::array<T, 4> limits{};     ///< u_1..u_4 at infinity
  [[nodiscard]] bool all_hold() const {
    for (bool c : conditions) {
      if (!c) return false;
    }
    return true;
  }
};

namespace detail {

/// u_1..u_4 and the index of u_1, or an error when the state is not a
/// five-cell configuration on the integer grid.
template <Scalar T>
std::pair<std::int64_t, std::array<T, 4>> five_config_values(const GridState<T>& state) {
  if (state.is_periodic() || state.phase() != Phase::integer_grid) {
    throw std::invalid_argument("five-cell configuration needs an infinite state on the integer grid");
  }
  if (!state.left_tail().is_constant() || !state.right_tail().is_constant()) {
    throw std::invalid_argument("five-cell configuration needs constant tails");
  }
  const GridState<T> s = state.trimmed();
  if (!(s.left_tail().anchor == 0) || !(s.right_tail().anchor == 1) || s.size() != 6) {
    throw std::invalid_argument("not a five-cell configuration (tails 0 and 1, four intermediate values)");
  }
  const auto v = s.values();
  return {s.window_start() + 1, {v[1], v[2], v[3], v[4]}};
}

template <Scalar T>
void require_lambda_off_half(const T& lambda) {
  if (lambda == from_ratio<T>(Ratio{1, 2})) {
    throw std::invalid_argument("five-cell limits are undefined at lambda = 1/2 (1 - 4 lambda^2 = 0)");
  }
}

}  // namespace detail

template <Scalar T>
FiveConfigReport<T> check_five_config_conditions(const GridState<T>& state, const T& lambda) {
  detail::require_lambda_off_half(lambda);
  auto [first, u] = detail::five_config_values(state);
  FiveConfigReport<T> r;
  r.first = first;
  r.u = u;
  const T& l = lambda;
  const T eps = T(u[2] - u[1]);
  const T den = T(1 - 4 * l * l);
  r.epsilon = eps;
  r.limits[0] = T(u[0] - (2 * l - l * l) / den * eps);
  r.limits[1] = T(((1 + l) * u[1] + l * u[2]) / (1 + 2 * l));
  r.limits[2] = r.limits[1];
  r.limits[3] = T(u[3] + (1 - l * l) / den * eps);
  r.conditions[0] = u[1] - u[0] >= 2 * eps;
  r.conditions[1] = r.limits[0] >= l * r.limits[1];
  r.conditions[2] = l * (u[3] - u[2]) >= (1 - l) * eps;
  r.conditions[3] = u[3] - u[2] >= l * (1 - u[2]);
  r.conditions[4] = 1 - r.limits[3] >= (1 - l * l) * eps;
  return r;
}

/// Closed-form state after one double step, without checking (a)-(e).
template <Scalar T>
GridState<T> five_config_recurrence(const GridState<T>& state, const T& lambda) {
  auto [first, u] = detail::five_config_values(state);
  const T& l = lambda;
  const T eps = T(u[2] - u[1]);
  std::vector<T> v{T(0),
                   T(u[0] - (2 * l - l * l) * eps),
                   T(u[1] + (l - 2 * l * l) * eps),
                   T(u[2] - (1 - l - 2 * l * l) * eps),
                   T(u[3] + (1 - l * l) * eps),
                   T(1)};
  return GridState<T>::infinite(first - 1, std::move(v), T(0), T(0), state.lambda(), Phase::integer_grid);
}

/// Predicted state two shifted steps later; requires all five conditions.
template <Scalar T>
GridState<T> five_config_predicted_even_step(const GridState<T>& state, const T& lambda) {
  if (!check_five_config_conditions(state, lambda).all_hold()) {
    throw std::invalid_argument("five_config_predicted_even_step: conditions (a)-(e) do not all hold");
  }
  return five_config_recurrence(state, lambda);
}

}  // namespace advect
