#pragma once

// Grid states of the one-dimensional advection schemes.
//
// Unit cells, indexed by integers. A state is either periodic (M stored cells,
// indices taken modulo M) or infinite: a finite window of stored values
// extended on both sides by arithmetic tails. Cell k of a state with
// shifted-left phase is centred at k - lambda instead of k.

#include "advect/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace advect {

enum class GridKind { periodic, infinite };
enum class Phase { integer_grid, shifted_left };

inline const char* to_string(GridKind k) { return k == GridKind::periodic ? "periodic" : "infinite"; }
inline const char* to_string(Phase p) { return p == Phase::integer_grid ? "integer_grid" : "shifted_left"; }

inline Phase toggled(Phase p) {
  return p == Phase::integer_grid ? Phase::shifted_left : Phase::integer_grid;
}

/// Arithmetic extension of a window: the value `d` cells away from the window
/// edge is anchor + step * d. The anchor always equals the edge value.
template <Scalar T>
struct TailSpec {
  T anchor{};
  T step{};

  [[nodiscard]] bool is_constant() const { return step == 0; }
  friend bool operator==(const TailSpec&, const TailSpec&) = default;
};

template <Scalar T>
class GridState {
 public:
  GridState() = default;

  static GridState periodic(std::vector<T> values, T lambda, Phase phase = Phase::integer_grid) {
    if (values.empty()) throw std::invalid_argument("periodic state needs at least one cell");
    GridState s;
    s.kind_ = GridKind::periodic;
    s.values_ = std::move(values);
    s.lambda_ = std::move(lambda);
    s.phase_ = phase;
    s.check_lambda();
    return s;
  }

  /// Infinite state; tail anchors are taken from the window edges. The window
  /// is stored as given (see trimmed() for the canonical form).
  static GridState infinite(std::int64_t window_start, std::vector<T> values, T left_step, T right_step,
                            T lambda, Phase phase = Phase::integer_grid) {
    if (values.empty()) throw std::invalid_argument("infinite state needs a non-empty window");
    GridState s;
    s.kind_ = GridKind::infinite;
    s.start_ = window_start;
    s.left_ = TailSpec<T>{values.front(), std::move(left_step)};
    s.right_ = TailSpec<T>{values.back(), std::move(right_step)};
    s.values_ = std::move(values);
    s.lambda_ = std::move(lambda);
    s.phase_ = phase;
    s.check_lambda();
    return s;
  }

  /// Infinite state with explicit tail specs; rejects anchors that contradict the window.
  static GridState infinite(std::int64_t window_start, std::vector<T> values, TailSpec<T> left, TailSpec<T> right,
                            T lambda, Phase phase = Phase::integer_grid) {
    if (values.empty()) throw std::invalid_argument("infinite state needs a non-empty window");
    if (!(left.anchor == values.front()) || !(right.anchor == values.back())) {
      throw std::invalid_argument("tail anchor contradicts the window edge value");
    }
    return infinite(window_start, std::move(values), std::move(left.step), std::move(right.step),
                    std::move(lambda), phase);
  }

  [[nodiscard]] GridKind kind() const { return kind_; }
  [[nodiscard]] bool is_periodic() const { return kind_ == GridKind::periodic; }
  [[nodiscard]] Phase phase() const { return phase_; }
  [[nodiscard]] const T& lambda() const { return lambda_; }
  [[nodiscard]] std::int64_t window_start() const { return is_periodic() ? 0 : start_; }
  /// One past the last stored index.
  [[nodiscard]] std::int64_t window_end() const { return window_start() + size(); }
  [[nodiscard]] std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  [[nodiscard]] std::span<const T> values() const { return values_; }
  [[nodiscard]] const TailSpec<T>& left_tail() const { return left_; }
  [[nodiscard]] const TailSpec<T>& right_tail() const { return right_; }

  /// Offset of cell centres: cell k is centred at k - center_offset().
  [[nodiscard]] T center_offset() const { return phase_ == Phase::shifted_left ? lambda_ : T(0); }

  /// Value of cell j, extrapolating through the tails or wrapping periodically.
  [[nodiscard]] T cell_value(std::int64_t j) const {
    if (is_periodic()) return values_[static_cast<std::size_t>(wrap(j))];
    if (j < start_) return T(left_.anchor + left_.step * from_int<T>(start_ - j));
    const std::int64_t last = start_ + size() - 1;
    if (j > last) return T(right_.anchor + right_.step * from_int<T>(j - last));
    return values_[static_cast<std::size_t>(j - start_)];
  }

  /// Index modulo M in [0, M).
  [[nodiscard]] std::int64_t wrap(std::int64_t j) const {
    const std::int64_t m = size();
    const std::int64_t r = j % m;
    return r < 0 ? r + m : r;
  }

  /// Same state with the window enlarged by k tail-extrapolated cells per side.
  [[nodiscard]] GridState padded(std::int64_t k) const {
    if (is_periodic() || k <= 0) return *this;
    std::vector<T> v;
    v.reserve(values_.size() + 2 * static_cast<std::size_t>(k));
    for (std::int64_t j = start_ - k; j < start_ + size() + k; ++j) v.push_back(cell_value(j));
    return infinite(start_ - k, std::move(v), left_.step, right_.step, lambda_, phase_);
  }

  /// Smallest window that reproduces the same bi-infinite sequence.
  [[nodiscard]] GridState trimmed() const {
    if (is_periodic()) return *this;
    std::size_t lo = 0;
    std::size_t hi = values_.size();
    // values_[lo] is redundant when it is the left-tail extrapolation of values_[lo+1]
    while (hi - lo > 1 && near(values_[lo], T(values_[lo + 1] + left_.step))) ++lo;
    while (hi - lo > 1 && near(values_[hi - 1], T(values_[hi - 2] + right_.step))) --hi;
    if (lo == 0 && hi == values_.size()) return *this;
    std::vector<T> v(values_.begin() + static_cast<std::ptrdiff_t>(lo),
                     values_.begin() + static_cast<std::ptrdiff_t>(hi));
    return infinite(start_ + static_cast<std::int64_t>(lo), std::move(v), left_.step, right_.step, lambda_, phase_);
  }

  /// Same layout and tails, new window values (anchors follow the new edges).
  [[nodiscard]] GridState with_values(std::int64_t window_start, std::vector<T> values, Phase phase) const {
    if (is_periodic()) return periodic(std::move(values), lambda_, phase);
    return infinite(window_start, std::move(values), left_.step, right_.step, lambda_, phase);
  }

  /// Semantic equality: compares the represented sequences, not the windows.
  friend bool operator==(const GridState& a, const GridState& b) {
    if (a.kind_ != b.kind_ || a.phase_ != b.phase_ || !(a.lambda_ == b.lambda_)) return false;
    if (a.is_periodic()) return a.values_ == b.values_;
    if (!(a.left_.step == b.left_.step) || !(a.right_.step == b.right_.step)) return false;
    // Beyond the union of the windows both sides extrapolate the same values
    // with the same steps. (Trimmed windows are not unique for a pure line.)
    const std::int64_t lo = std::min(a.start_, b.start_);
    const std::int64_t hi = std::max(a.window_end(), b.window_end());
    for (std::int64_t j = lo; j < hi; ++j) {
      if (!(a.cell_value(j) == b.cell_value(j))) return false;
    }
    return true;
  }

 private:
  void check_lambda() const {
    if (!(lambda_ > 0) || lambda_ > 1) throw std::invalid_argument("lambda must lie in (0, 1]");
  }

  GridKind kind_ = GridKind::infinite;
  std::vector<T> values_;
  std::int64_t start_ = 0;
  TailSpec<T> left_{};
  TailSpec<T> right_{};
  Phase phase_ = Phase::integer_grid;
  T lambda_ = T(1);
};

template <Scalar T>
T cell_value(const GridState<T>& state, std::int64_t j) {
  return state.cell_value(j);
}

/// Consecutive differences S_k = u(k+1) - u(k) of a state, in the state's own
/// raw indexing. position(k) gives the phase-normalised location of interface
/// k: k + 1/2 on the integer grid (the S_{j+1/2} of even steps) and
/// k + 1/2 - lambda on the shifted grid (S_j at odd steps when lambda = 1/2).
template <Scalar T>
class JumpSequence {
 public:
  JumpSequence(GridKind kind, std::int64_t first, std::vector<T> jumps, T left_jump, T right_jump, Phase phase,
               T lambda)
      : kind_(kind),
        first_(first),
        jumps_(std::move(jumps)),
        left_jump_(std::move(left_jump)),
        right_jump_(std::move(right_jump)),
        phase_(phase),
        lambda_(std::move(lambda)) {}

  [[nodiscard]] GridKind kind() const { return kind_; }
  [[nodiscard]] Phase phase() const { return phase_; }
  /// Raw index of the first stored interface.
  [[nodiscard]] std::int64_t first() const { return first_; }
  [[nodiscard]] std::int64_t end() const { return first_ + static_cast<std::int64_t>(jumps_.size()); }
  [[nodiscard]] std::span<const T> values() const { return jumps_; }
  /// Constant jump value in the left (resp. right) tail.
  [[nodiscard]] const T& left_tail_jump() const { return left_jump_; }
  [[nodiscard]] const T& right_tail_jump() const { return right_jump_; }

  [[nodiscard]] T at(std::int64_t k) const {
    if (kind_ == GridKind::periodic) {
      const auto m = static_cast<std::int64_t>(jumps_.size());
      const std::int64_t r = ((k % m) + m) % m;
      return jumps_[static_cast<std::size_t>(r)];
    }
    if (k < first_) return left_jump_;
    if (k >= end()) return right_jump_;
    return jumps_[static_cast<std::size_t>(k - first_)];
  }

  [[nodiscard]] T center_offset() const { return phase_ == Phase::shifted_left ? lambda_ : T(0); }

  [[nodiscard]] T position(std::int64_t k) const {
    return T(from_int<T>(k) + from_ratio<T>(Ratio{1, 2}) - center_offset());
  }

  /// Inverse of position(); throws when `pos` is not an interface of this grid.
  [[nodiscard]] std::int64_t raw_index_at(const T& pos) const {
    const T raw = T(pos - from_ratio<T>(Ratio{1, 2}) + center_offset());
    const std::int64_t k = scalar_traits<T>::floor(T(raw + from_ratio<T>(Ratio{1, 2})));
    if (!near(from_int<T>(k), raw)) throw std::invalid_argument("position is not an interface of this grid");
    return k;
  }

 private:
  GridKind kind_;
  std::int64_t first_;
  std::vector<T> jumps_;
  T left_jump_;
  T right_jump_;
  Phase phase_;
  T lambda_;
};

/// Jumps of a state. Infinite states store the interfaces strictly inside the
/// window; outside, the tail steps give the jumps.
template <Scalar T>
JumpSequence<T> jumps(const GridState<T>& state) {
  std::vector<T> out;
  if (state.is_periodic()) {
    const std::int64_t m = state.size();
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) out.push_back(T(state.cell_value(k + 1) - state.cell_value(k)));
    return JumpSequence<T>(GridKind::periodic, 0, std::move(out), T(0), T(0), state.phase(), state.lambda());
  }
  const auto v = state.values();
  out.reserve(v.size());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(T(v[i + 1] - v[i]));
  // moving left the values change by +left.step per cell, so the jump there is -left.step
  return JumpSequence<T>(GridKind::infinite, state.window_start(), std::move(out), T(-state.left_tail().step),
                         state.right_tail().step, state.phase(), state.lambda());
}

template <Scalar T>
bool is_nondecreasing(const GridState<T>& state) {
  const auto s = jumps(state);
  if (state.kind() == GridKind::infinite && (s.left_tail_jump() < 0 || s.right_tail_jump() < 0)) return false;
  return std::all_of(s.values().begin(), s.values().end(), [](const T& x) { return x >= 0; });
}

template <Scalar T>
struct MonotoneDecomposition {
  GridState<T> increasing;  ///< v: collects the positive jumps
  GridState<T> decreasing;  ///< w: collects the nonpositive jumps
  T offset;                 ///< u at the anchor cell; u = v + w + offset
  std::int64_t anchor = 0;
};

/// Splits an infinite state into a nondecreasing and a nonincreasing part,
/// both vanishing at the window's first cell.
template <Scalar T>
MonotoneDecomposition<T> monotone_decomposition(const GridState<T>& state) {
  if (state.is_periodic()) {
    throw std::invalid_argument("monotone decomposition needs an infinite state (v is not periodic)");
  }
  const auto u = state.values();
  std::vector<T> v(u.size());
  std::vector<T> w(u.size());
  v[0] = T(0);
  w[0] = T(0);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const T jump = T(u[i + 1] - u[i]);
    if (jump > 0) {
      v[i + 1] = T(v[i] + jump);
      w[i + 1] = w[i];
    } else {
      v[i + 1] = v[i];
      w[i + 1] = T(w[i] + jump);
    }
  }
  // Tails: the left tail jump is -left.step, the right tail jump is right.step.
  const T left_jump = T(-state.left_tail().step);
  const T right_jump = state.right_tail().step;
  const T v_left_step = left_jump > 0 ? T(-left_jump) : T(0);
  const T w_left_step = left_jump > 0 ? T(0) : T(-left_jump);
  const T v_right_step = right_jump > 0 ? right_jump : T(0);
  const T w_right_step = right_jump > 0 ? T(0) : right_jump;
  const std::int64_t start = state.window_start();
  return MonotoneDecomposition<T>{
      GridState<T>::infinite(start, std::move(v), v_left_step, v_right_step, state.lambda(), state.phase()),
      GridState<T>::infinite(start, std::move(w), w_left_step, w_right_step, state.lambda(), state.phase()),
      u[0], start};
}

template <Scalar T>
struct TotalVariation {
  T value{};
  bool unbounded = false;
};

template <Scalar T>
TotalVariation<T> total_variation(const GridState<T>& state) {
  const auto s = jumps(state);
  T sum(0);
  for (const T& x : s.values()) sum += abs_value(x);
  if (state.kind() == GridKind::infinite && (s.left_tail_jump() != 0 || s.right_tail_jump() != 0)) {
    return {sum, true};
  }
  return {sum, false};
}

}  // namespace advect
