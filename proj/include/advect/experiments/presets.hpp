#pragma once

// Named initial data and grid initialisation.
//
// Preset grammar (CLI --initial):
//   id1 | id2 | heaviside
//   plateaus:W@H,W@H,...      periodic plateaus, W cells at height H
//   halpha:S1,S2,...          infinite monotone state with the given jumps
//   staircase:A,B             0 | A | A+B, then unit steps
//   fiveconfig:U1,U2,U3,U4    0 | U1 U2 U3 U4 | 1
//   {...}                     inline JSON state (has "values") or datum (has "pieces")
//   @path.json                the same, read from a file

#include "advect/datum.hpp"
#include "advect/io.hpp"
#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <array>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace advect {

template <Scalar T>
using Initial = std::variant<PiecewiseDatum<T>, GridState<T>>;

/// cos(2 pi x) sin(10 pi x), 1-periodic.
template <Scalar T>
PiecewiseDatum<T> id1_datum() {
  constexpr double pi = std::numbers::pi;
  return PiecewiseDatum<T>({Piece<T>{T(0), T(1), expr::CosSin{1.0, 2 * pi, 0.0, 10 * pi, 0.0}}}, Extension::periodic,
                           "id1");
}

/// -1 on [-0.3, 0], sin(pi x - pi/2) on [0, 1], 1 on [1, 1.2]; 1.5-periodic.
template <Scalar T>
PiecewiseDatum<T> id2_datum() {
  constexpr double pi = std::numbers::pi;
  const T a = from_ratio<T>(Ratio{-3, 10});
  const T b = from_ratio<T>(Ratio{6, 5});
  return PiecewiseDatum<T>({Piece<T>{a, T(0), expr::Constant<T>{T(-1)}},
                            Piece<T>{T(0), T(1), expr::Sine{1.0, pi, -pi / 2}},
                            Piece<T>{T(1), b, expr::Constant<T>{T(1)}}},
                           Extension::periodic, "id2");
}

namespace detail {

template <Scalar T>
T periodic_cell_width(const PiecewiseDatum<T>& datum, std::int64_t m) {
  if (!datum.is_periodic()) throw std::invalid_argument("periodic initialisation needs a periodic datum");
  if (m < 4) throw std::invalid_argument("periodic grids need at least 4 cells");
  return T(*datum.period() / from_int<T>(m));
}

template <Scalar T>
T cell_center(const PiecewiseDatum<T>& datum, std::int64_t k, const T& dx) {
  return T(datum.domain_begin() + (from_int<T>(k) + from_ratio<T>(Ratio{1, 2})) * dx);
}

}  // namespace detail

/// Cell averages of one datum period on m cells, the first starting at the
/// datum's first breakpoint.
template <Scalar T>
GridState<T> init_periodic_state(const PiecewiseDatum<T>& datum, std::int64_t m, const T& lambda) {
  const T dx = detail::periodic_cell_width(datum, m);
  std::vector<T> v;
  v.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) v.push_back(cell_average(datum, detail::cell_center(datum, k, dx), dx));
  return GridState<T>::periodic(std::move(v), lambda);
}

/// Point values at the cell centres (for smooth data).
template <Scalar T>
GridState<T> init_pointwise_state(const PiecewiseDatum<T>& datum, std::int64_t m, const T& lambda) {
  const T dx = detail::periodic_cell_width(datum, m);
  std::vector<T> v;
  v.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) v.push_back(datum.value(detail::cell_center(datum, k, dx)));
  return GridState<T>::periodic(std::move(v), lambda);
}

/// Periodic state made of plateaus: widths[i] cells at heights[i].
template <Scalar T>
GridState<T> plateau_state(const std::vector<std::int64_t>& widths, const std::vector<T>& heights, const T& lambda) {
  if (widths.size() != heights.size() || widths.empty()) throw std::invalid_argument("plateaus need matching widths and heights");
  std::vector<T> v;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (widths[i] < 1) throw std::invalid_argument("plateau width must be positive");
    for (std::int64_t k = 0; k < widths[i]; ++k) v.push_back(heights[i]);
  }
  return GridState<T>::periodic(std::move(v), lambda);
}

/// Infinite state with constant tails: u = 0 up to cell 0, then the given jumps.
template <Scalar T>
GridState<T> jump_state(const std::vector<T>& jumps, const T& lambda) {
  std::vector<T> v{T(0)};
  for (const auto& s : jumps) v.push_back(T(v.back() + s));
  return GridState<T>::infinite(0, std::move(v), T(0), T(0), lambda);
}

/// 0 up to cell 0, u_1 = a, u_2 = a + b, then unit steps.
template <Scalar T>
GridState<T> staircase_state(const T& a, const T& b, const T& lambda) {
  return GridState<T>::infinite(0, {T(0), a, T(a + b)}, T(0), T(1), lambda);
}

template <Scalar T>
GridState<T> five_config_state(const std::array<T, 4>& u, const T& lambda) {
  return GridState<T>::infinite(0, {T(0), u[0], u[1], u[2], u[3], T(1)}, T(0), T(0), lambda);
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <Scalar T>
std::vector<T> parse_scalars(std::string_view s) {
  std::vector<T> out;
  for (const auto& part : split(s, ',')) out.push_back(scalar_traits<T>::parse(part));
  return out;
}

template <Scalar T>
Initial<T> initial_from_json(const json& j, const T& lambda) {
  if (j.contains("pieces")) return datum_from_json<T>(j);
  if (j.contains("values")) {
    json copy = j;
    if (!copy.contains("lambda")) copy["lambda"] = scalar_to_json(lambda);
    return state_from_json<T>(copy);
  }
  throw std::invalid_argument("inline initial JSON needs \"pieces\" (datum) or \"values\" (state)");
}

}  // namespace detail

template <Scalar T>
Initial<T> build_initial(std::string_view spec, const T& lambda) {
  const std::string text = detail::trim(spec);
  if (text.empty()) throw std::invalid_argument("empty initial-data specification");
  if (text.front() == '{') return detail::initial_from_json<T>(json::parse(text), lambda);
  if (text.front() == '@') return detail::initial_from_json<T>(read_json_file(text.substr(1)), lambda);
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  auto need_args = [&](std::size_t n, bool exact) {
    const auto v = args.empty() ? std::vector<T>{} : detail::parse_scalars<T>(args);
    if (exact ? v.size() != n : v.size() < n) {
      throw std::invalid_argument("preset '" + name + "' expects " + std::to_string(n) + (exact ? "" : "+") +
                                  " comma-separated values");
    }
    return v;
  };
  if (name == "id1" || name == "id2") {
    if constexpr (is_exact_v<T>) {
      throw std::invalid_argument("preset '" + name + "' is trigonometric; use binary64 arithmetic");
    } else {
      return name == "id1" ? id1_datum<T>() : id2_datum<T>();
    }
  }
  if (name == "heaviside") return jump_state<T>({T(1)}, lambda);
  if (name == "halpha") return jump_state<T>(need_args(1, false), lambda);
  if (name == "staircase") {
    const auto v = need_args(2, true);
    return staircase_state<T>(v[0], v[1], lambda);
  }
  if (name == "fiveconfig") {
    const auto v = need_args(4, true);
    return five_config_state<T>({v[0], v[1], v[2], v[3]}, lambda);
  }
  if (name == "plateaus") {
    std::vector<std::int64_t> widths;
    std::vector<T> heights;
    for (const auto& part : detail::split(args, ',')) {
      const std::size_t at = part.find('@');
      if (at == std::string::npos) throw std::invalid_argument("plateaus expects WIDTH@HEIGHT items");
      widths.push_back(detail::parse_int(part.substr(0, at)));
      heights.push_back(scalar_traits<T>::parse(part.substr(at + 1)));
    }
    return plateau_state<T>(widths, heights, lambda);
  }
  throw std::invalid_argument("unknown initial preset '" + name + "'");
}

}  // namespace advect
