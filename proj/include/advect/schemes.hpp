#pragma once

// Time steppers for u_t + u_x = 0 on unit cells with CFL number lambda:
// upwind, Lax-Wendroff, the fixed-grid antidiffusive (reconstruct, translate,
// average) scheme, and its alternating shifted-grid variant.

#include "advect/reconstruction.hpp"
#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace advect {

enum class SchemeKind { upwind, lax_wendroff, dl_fixed, dl_shifted };

inline const char* to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::upwind: return "upwind";
    case SchemeKind::lax_wendroff: return "lax_wendroff";
    case SchemeKind::dl_fixed: return "dl_fixed";
    case SchemeKind::dl_shifted: return "dl_shifted";
  }
  return "?";
}

inline SchemeKind parse_scheme(std::string_view s) {
  if (s == "upwind") return SchemeKind::upwind;
  if (s == "lax_wendroff" || s == "lw" || s == "lax-wendroff") return SchemeKind::lax_wendroff;
  if (s == "dl_fixed" || s == "dl" || s == "antidiffusive") return SchemeKind::dl_fixed;
  if (s == "dl_shifted" || s == "shifted") return SchemeKind::dl_shifted;
  throw std::invalid_argument("unknown scheme '" + std::string(s) + "'");
}

/// Scheme choice and CFL number. lambda is always given as an exact ratio.
template <Scalar T>
class SchemeParams {
 public:
  SchemeParams(SchemeKind kind, Ratio lambda) : kind_(kind), ratio_(make_ratio(lambda.num, lambda.den)) {
    if (ratio_.num <= 0 || ratio_.num > ratio_.den) throw std::invalid_argument("lambda must lie in (0, 1]");
    if (kind_ == SchemeKind::dl_shifted && 2 * ratio_.num > ratio_.den) {
      throw std::invalid_argument("the shifted-grid scheme needs lambda <= 1/2");
    }
    lambda_ = from_ratio<T>(ratio_);
  }

  [[nodiscard]] SchemeKind kind() const { return kind_; }
  [[nodiscard]] const T& lambda() const { return lambda_; }
  [[nodiscard]] const Ratio& lambda_ratio() const { return ratio_; }

 private:
  SchemeKind kind_;
  Ratio ratio_;
  T lambda_;
};

namespace detail {

/// Cell values over [lo - pad, hi + pad), read through tails or periodicity.
template <Scalar T>
class Stencil {
 public:
  Stencil(const GridState<T>& s, std::int64_t lo, std::int64_t hi, std::int64_t pad) : base_(lo - pad) {
    v_.reserve(static_cast<std::size_t>(hi - lo + 2 * pad));
    for (std::int64_t j = lo - pad; j < hi + pad; ++j) v_.push_back(s.cell_value(j));
  }
  const T& operator[](std::int64_t j) const { return v_[static_cast<std::size_t>(j - base_)]; }

  CellReconstruction<T> rec(std::int64_t j, Convention c) const {
    return reconstruct_cell((*this)[j - 1], (*this)[j], (*this)[j + 1], c, j);
  }

 private:
  std::int64_t base_;
  std::vector<T> v_;
};

template <Scalar T>
void require_integer_grid(const GridState<T>& s, const char* who) {
  if (s.phase() != Phase::integer_grid) {
    throw std::logic_error(std::string(who) + " needs a state on the integer grid");
  }
}

/// Applies `update(stencil, j)` to every cell of the new state. Infinite
/// states grow by two cells per side, keep their tail steps, and are re-trimmed.
template <Scalar T, class Update>
GridState<T> map_cells(const GridState<T>& s, const T& lambda, Phase new_phase, Update update) {
  if (s.is_periodic()) {
    const std::int64_t m = s.size();
    Stencil<T> st(s, 0, m, 4);
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t j = 0; j < m; ++j) out.push_back(update(st, j));
    return GridState<T>::periodic(std::move(out), lambda, new_phase);
  }
  const std::int64_t lo = s.window_start() - 2;
  const std::int64_t hi = s.window_end() + 2;
  Stencil<T> st(s, lo, hi, 4);
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t j = lo; j < hi; ++j) out.push_back(update(st, j));
  return GridState<T>::infinite(lo, std::move(out), s.left_tail().step, s.right_tail().step, lambda, new_phase)
      .trimmed();
}

}  // namespace detail

/// u_j <- u_j - lambda (u_j - u_{j-1})
template <Scalar T>
GridState<T> upwind_step(const GridState<T>& state, const SchemeParams<T>& params) {
  detail::require_integer_grid(state, "upwind_step");
  const T& lam = params.lambda();
  return detail::map_cells(state, lam, Phase::integer_grid, [&](const detail::Stencil<T>& u, std::int64_t j) {
    return T(u[j] - lam * (u[j] - u[j - 1]));
  });
}

/// u_j <- u_j - lambda/2 (u_{j+1} - u_{j-1}) + lambda^2/2 (u_{j+1} - 2u_j + u_{j-1})
template <Scalar T>
GridState<T> lax_wendroff_step(const GridState<T>& state, const SchemeParams<T>& params) {
  detail::require_integer_grid(state, "lax_wendroff_step");
  const T& lam = params.lambda();
  const T half_lam = T(lam / 2);
  const T half_lam2 = T(lam * lam / 2);
  return detail::map_cells(state, lam, Phase::integer_grid, [&](const detail::Stencil<T>& u, std::int64_t j) {
    return T(u[j] - half_lam * (u[j + 1] - u[j - 1]) + half_lam2 * (u[j + 1] - 2 * u[j] + u[j - 1]));
  });
}

/// Reconstruct, translate right by lambda, average back onto the fixed grid.
/// The new cell j collects the last lambda of old cell j-1 and the first
/// 1 - lambda of old cell j.
template <Scalar T>
GridState<T> dl_fixed_step(const GridState<T>& state, const SchemeParams<T>& params) {
  detail::require_integer_grid(state, "dl_fixed_step");
  const T& lam = params.lambda();
  const T split = T(1 - lam);
  return detail::map_cells(state, lam, Phase::integer_grid, [&](const detail::Stencil<T>& u, std::int64_t j) {
    return T(u.rec(j - 1, Convention::from_left).integrate_local(split, T(1)) +
             u.rec(j, Convention::from_left).integrate_local(T(0), split));
  });
}

/// One step of the alternating shifted-grid process. From the integer grid the
/// grid moves lambda to the left (new cell j is C_{j-lambda}); from the
/// shifted grid it moves back to the right onto C_j.
template <Scalar T>
GridState<T> shifted_step(const GridState<T>& state, const SchemeParams<T>& params) {
  const T& lam = params.lambda();
  if (state.phase() == Phase::shifted_left && !(state.lambda() == lam)) {
    throw std::logic_error("shifted_step: state was shifted with a different lambda");
  }
  const T split = T(1 - lam);
  if (state.phase() == Phase::integer_grid) {
    // C_{j-lambda} = last lambda of C_{j-1} + first 1 - lambda of C_j
    return detail::map_cells(state, lam, Phase::shifted_left, [&](const detail::Stencil<T>& u, std::int64_t j) {
      return T(u.rec(j - 1, Convention::from_right).integrate_local(split, T(1)) +
               u.rec(j, Convention::from_right).integrate_local(T(0), split));
    });
  }
  // C_j = last 1 - lambda of C_{j-lambda} + first lambda of C_{j+1-lambda}
  return detail::map_cells(state, lam, Phase::integer_grid, [&](const detail::Stencil<T>& u, std::int64_t j) {
    return T(u.rec(j, Convention::from_left).integrate_local(lam, T(1)) +
             u.rec(j + 1, Convention::from_left).integrate_local(T(0), lam));
  });
}

template <Scalar T>
GridState<T> step(const GridState<T>& state, const SchemeParams<T>& params) {
  switch (params.kind()) {
    case SchemeKind::upwind: return upwind_step(state, params);
    case SchemeKind::lax_wendroff: return lax_wendroff_step(state, params);
    case SchemeKind::dl_fixed: return dl_fixed_step(state, params);
    case SchemeKind::dl_shifted: return shifted_step(state, params);
  }
  throw std::logic_error("unknown scheme");
}

/// Applies the configured stepper n_steps times; observer(n, state) sees the
/// state after step n (n = 1..n_steps).
template <Scalar T, class Observer>
GridState<T> run(GridState<T> state, const SchemeParams<T>& params, std::int64_t n_steps, Observer&& observer) {
  if (n_steps < 0) throw std::invalid_argument("n_steps must be nonnegative");
  for (std::int64_t n = 1; n <= n_steps; ++n) {
    state = step(state, params);
    observer(n, static_cast<const GridState<T>&>(state));
  }
  return state;
}

template <Scalar T>
GridState<T> run(GridState<T> state, const SchemeParams<T>& params, std::int64_t n_steps) {
  return run(std::move(state), params, n_steps, [](std::int64_t, const GridState<T>&) {});
}

/// Distance (in cells) travelled by the exact solution after n steps, as seen
/// by the state's grid. The shifted process moves its grid instead of the
/// solution, so its states stay aligned with the initial datum.
template <Scalar T>
T exact_travel(const SchemeParams<T>& params, std::int64_t n) {
  if (params.kind() == SchemeKind::dl_shifted) return T(0);
  return T(params.lambda() * from_int<T>(n));
}

}  // namespace advect
