#pragma once

// Error norms against the exact (translated) solution and the plateau metric I(n).

#include "advect/datum.hpp"
#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace advect {

namespace detail {

template <Scalar T>
void require_periodic_pair(const GridState<T>& state, const PiecewiseDatum<T>& datum, const char* who) {
  if (!state.is_periodic()) throw std::invalid_argument(std::string(who) + " needs a periodic state");
  if (!datum.is_periodic()) throw std::invalid_argument(std::string(who) + ": datum period mismatch (datum is not periodic)");
}

/// Physical centre of stored cell k: cells of width dx tile one datum period
/// starting at its first breakpoint.
template <Scalar T>
T physical_center(const GridState<T>& state, const PiecewiseDatum<T>& datum, std::int64_t k, const T& dx) {
  return T(datum.domain_begin() + (from_int<T>(k) + from_ratio<T>(Ratio{1, 2}) - state.center_offset()) * dx);
}

}  // namespace detail

/// max_k |u_k - u0(x_k - t)|, with t in physical units.
template <Scalar T>
T linf_error_pointwise(const GridState<T>& state, const PiecewiseDatum<T>& datum, const T& t) {
  detail::require_periodic_pair(state, datum, "linf_error_pointwise");
  const T dx = T(*datum.period() / from_int<T>(state.size()));
  T worst(0);
  for (std::int64_t k = 0; k < state.size(); ++k) {
    const T x = detail::physical_center(state, datum, k, dx);
    const T e = abs_value(T(state.cell_value(k) - datum.value(T(x - t))));
    if (e > worst) worst = e;
  }
  return worst;
}

/// dx * sum_k |u_k - mean of u0(. - t) over cell k|.
template <Scalar T>
T l1_error_cell_averaged(const GridState<T>& state, const PiecewiseDatum<T>& datum, const T& t) {
  detail::require_periodic_pair(state, datum, "l1_error_cell_averaged");
  const T dx = T(*datum.period() / from_int<T>(state.size()));
  T sum(0);
  for (std::int64_t k = 0; k < state.size(); ++k) {
    const T x = detail::physical_center(state, datum, k, dx);
    sum += abs_value(T(state.cell_value(k) - cell_average(datum, T(x - t), dx)));
  }
  return T(sum * dx);
}

/// I = sum_j min(|u_{j-1} - u_j|, |u_j - u_{j+1}|, |u_{j+1} - u_{j+2}|), periodic wrap.
/// Zero exactly when the state is made of plateaus at least three cells wide
/// (single intermediate cells between plateaus allowed).
template <Scalar T>
T plateau_metric_I(const GridState<T>& state) {
  if (!state.is_periodic()) throw std::invalid_argument("plateau_metric_I needs a periodic state");
  const std::int64_t m = state.size();
  std::vector<T> gap(static_cast<std::size_t>(m));  // gap[k] = |u_{k+1} - u_k|
  for (std::int64_t k = 0; k < m; ++k) gap[static_cast<std::size_t>(k)] = abs_value(T(state.cell_value(k + 1) - state.cell_value(k)));
  auto g = [&](std::int64_t k) -> const T& { return gap[static_cast<std::size_t>(state.wrap(k))]; };
  T sum(0);
  for (std::int64_t j = 0; j < m; ++j) sum += std::min({g(j - 1), g(j), g(j + 1)});
  return sum;
}

}  // namespace advect
