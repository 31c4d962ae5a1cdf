#pragma once

// Discontinuous reconstruction of a cell average: inside cell j the value u_j
// is replaced by u_{j-1} on a left part and u_{j+1} on a right part, with the
// discontinuity placed so that the cell's mass is unchanged. When that is not
// possible (flat or non-monotone stencil) the cell stays constant and d = -1.
//
// Two conventions locate the discontinuity:
//   from_right: d measured from the right interface, d = (u_j - u_{j-1}) / (u_{j+1} - u_{j-1})
//   from_left:  d measured from the left interface,  d = (u_{j+1} - u_j) / (u_{j+1} - u_{j-1})
// Both describe the same function; only the stored d differs.

#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace advect {

enum class Convention { from_left, from_right };

inline const char* to_string(Convention c) { return c == Convention::from_left ? "from_left" : "from_right"; }

template <Scalar T>
struct CellReconstruction {
  std::int64_t j = 0;
  T left_value{};
  T right_value{};
  T d = T(-1);  ///< in (0,1), or the sentinel -1 for a constant cell
  Convention convention = Convention::from_left;

  [[nodiscard]] bool discontinuous() const { return d != -1; }

  /// Width of the part holding left_value, in cell units.
  [[nodiscard]] T left_width() const {
    if (!discontinuous()) return T(1);
    return convention == Convention::from_left ? d : T(1 - d);
  }

  /// Integral over the local sub-interval [x0, x1] of the unit cell.
  [[nodiscard]] T integrate_local(const T& x0, const T& x1) const {
    if (!(x0 < x1)) return T(0);
    if (!discontinuous()) return T(left_value * (x1 - x0));
    const T w = left_width();
    T total(0);
    if (x0 < w) total += T(left_value * ((x1 < w ? x1 : w) - x0));
    if (x1 > w) total += T(right_value * (x1 - (x0 > w ? x0 : w)));
    return total;
  }

  friend bool operator==(const CellReconstruction&, const CellReconstruction&) = default;
};

/// Reconstruction of the middle cell of the stencil (a, b, c).
template <Scalar T>
CellReconstruction<T> reconstruct_cell(const T& a, const T& b, const T& c, Convention convention,
                                       std::int64_t j = 0) {
  CellReconstruction<T> r;
  r.j = j;
  r.convention = convention;
  r.left_value = b;
  r.right_value = b;
  const T den = T(c - a);
  if (den == 0) return r;
  T d = convention == Convention::from_right ? T((b - a) / den) : T((c - b) / den);
  if (d > 0 && d < 1) {
    r.d = std::move(d);
    r.left_value = a;
    r.right_value = c;
  }
  return r;
}

/// Per-cell reconstruction of a state. Cells are computed eagerly over the
/// window (plus a margin) and on demand elsewhere, so tails are covered.
template <Scalar T>
class ReconstructionProfile {
 public:
  ReconstructionProfile(GridState<T> state, Convention convention, std::int64_t first,
                        std::vector<CellReconstruction<T>> cells)
      : state_(std::move(state)), convention_(convention), first_(first), cells_(std::move(cells)) {}

  [[nodiscard]] const GridState<T>& state() const { return state_; }
  [[nodiscard]] Convention convention() const { return convention_; }
  [[nodiscard]] std::int64_t first() const { return first_; }
  [[nodiscard]] const std::vector<CellReconstruction<T>>& cells() const { return cells_; }

  [[nodiscard]] CellReconstruction<T> cell(std::int64_t j) const {
    if (state_.is_periodic()) {
      auto c = cells_[static_cast<std::size_t>(state_.wrap(j))];
      c.j = j;
      return c;
    }
    if (j >= first_ && j < first_ + static_cast<std::int64_t>(cells_.size())) {
      return cells_[static_cast<std::size_t>(j - first_)];
    }
    return reconstruct_cell(state_.cell_value(j - 1), state_.cell_value(j), state_.cell_value(j + 1), convention_, j);
  }

  /// Left edge of cell j in physical coordinates (cell j is centred at j - offset).
  [[nodiscard]] T cell_left_edge(std::int64_t j) const {
    return T(from_int<T>(j) - from_ratio<T>(Ratio{1, 2}) - state_.center_offset());
  }

 private:
  GridState<T> state_;
  Convention convention_;
  std::int64_t first_;
  std::vector<CellReconstruction<T>> cells_;
};

template <Scalar T>
ReconstructionProfile<T> reconstruct(const GridState<T>& state, Convention convention) {
  std::vector<CellReconstruction<T>> cells;
  const std::int64_t margin = state.is_periodic() ? 0 : 3;
  const std::int64_t first = state.window_start() - margin;
  const std::int64_t last = state.window_end() + margin;
  cells.reserve(static_cast<std::size_t>(last - first));
  for (std::int64_t j = first; j < last; ++j) {
    cells.push_back(
        reconstruct_cell(state.cell_value(j - 1), state.cell_value(j), state.cell_value(j + 1), convention, j));
  }
  return ReconstructionProfile<T>(state, convention, first, std::move(cells));
}

/// Exact integral of the reconstructed function over [a, b] (physical coordinates).
template <Scalar T>
T integrate_reconstruction(const ReconstructionProfile<T>& profile, const T& a, const T& b) {
  if (b < a) return T(-integrate_reconstruction(profile, b, a));
  const T half = from_ratio<T>(Ratio{1, 2});
  const T offset = profile.state().center_offset();
  // cell j covers [j - 1/2 - offset, j + 1/2 - offset)
  std::int64_t j = scalar_traits<T>::floor(T(a + half + offset));
  T total(0);
  while (true) {
    const T left = profile.cell_left_edge(j);
    const T right = T(left + 1);
    if (!(left < b)) break;
    const T lo = a > left ? T(a - left) : T(0);
    const T hi = b < right ? T(b - left) : T(1);
    total += profile.cell(j).integrate_local(lo, hi);
    ++j;
  }
  return total;
}

template <Scalar T>
struct HalfCellIntegrals {
  T left;   ///< integral over the left half of the middle cell
  T right;  ///< integral over the right half
};

/// Closed-form half-cell integrals of the reconstruction of a monotone stencil
/// a <= b <= c (unit cells): big-jump/small-jump gives (b - c/2, c/2),
/// small-jump/big-jump gives (a/2, b - a/2).
template <Scalar T>
HalfCellIntegrals<T> half_cell_integrals(const T& a, const T& b, const T& c) {
  if (a > b || b > c) throw std::invalid_argument("half_cell_integrals needs a nondecreasing stencil a <= b <= c");
  if (b - a >= c - b) return {T(b - c / 2), T(c / 2)};
  return {T(a / 2), T(b - a / 2)};
}

}  // namespace advect
