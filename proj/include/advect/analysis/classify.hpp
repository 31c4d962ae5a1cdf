#pragma once

// Classifiers on the jump pattern of monotone data with constant tails:
// M-configurations with inner jumps larger than alpha, the left/right
// extremity classes that drive the jump count, and discrete Heaviside states.

#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace advect {

/// H_alpha^M membership report. Jumps are normalised so the tails are 0 and 1.
template <Scalar T>
struct HAlphaReport {
  std::int64_t j0 = 0;  ///< raw index of the first positive jump (= last cell on the left tail)
  std::int64_t M = 0;   ///< number of positive jumps
  std::optional<T> min_inner_jump;  ///< none when M <= 2
  bool alpha_satisfied = false;
  std::vector<T> normalized_jumps;  ///< the M jumps, first to last
};

namespace detail {

template <Scalar T>
struct ConstantTails {
  T low;
  T high;
};

template <Scalar T>
std::optional<ConstantTails<T>> constant_tails(const GridState<T>& s) {
  if (s.is_periodic() || !s.left_tail().is_constant() || !s.right_tail().is_constant()) return std::nullopt;
  return ConstantTails<T>{s.left_tail().anchor, s.right_tail().anchor};
}

}  // namespace detail

/// Matches the pattern: zero jumps, then M contiguous strictly positive jumps,
/// then zero jumps. Returns none when the pattern fails (negative or
/// interleaved zero jumps, non-constant tails, decreasing data).
template <Scalar T>
std::optional<HAlphaReport<T>> classify_H_alpha(const GridState<T>& state, const T& alpha) {
  const auto tails = detail::constant_tails(state);
  if (!tails || !(tails->low < tails->high)) return std::nullopt;
  const T scale = T(tails->high - tails->low);
  const auto s = jumps(state.trimmed());
  const auto v = s.values();
  std::int64_t first = -1;
  std::int64_t last = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return std::nullopt;
    if (v[i] > 0) {
      if (first < 0) first = static_cast<std::int64_t>(i);
      last = static_cast<std::int64_t>(i);
    }
  }
  if (first < 0) return std::nullopt;
  HAlphaReport<T> r;
  r.j0 = s.first() + first;
  r.M = last - first + 1;
  for (std::int64_t i = first; i <= last; ++i) {
    const T& x = v[static_cast<std::size_t>(i)];
    if (x == 0) return std::nullopt;
    r.normalized_jumps.push_back(T(x / scale));
  }
  r.alpha_satisfied = true;
  for (std::int64_t i = 1; i + 1 < r.M; ++i) {
    const T& x = r.normalized_jumps[static_cast<std::size_t>(i)];
    if (!r.min_inner_jump || x < *r.min_inner_jump) r.min_inner_jump = x;
    if (!(x > alpha)) r.alpha_satisfied = false;
  }
  return r;
}

template <Scalar T>
std::int64_t count_positive_jumps(const GridState<T>& state) {
  const auto r = classify_H_alpha(state, T(0));
  if (!r) throw std::invalid_argument("count_positive_jumps: state is not an M-configuration");
  return r->M;
}

/// Extremity classes, written left pair / right pair. Each pair lists the two
/// outermost jumps in spatial order as L (large) or S (small): "LS/SL" has
/// large outer jumps at both ends.
enum class ExtremityClass { ls_sl, sl_ls, sl_sl, ls_ls, not_applicable };

inline const char* to_string(ExtremityClass c) {
  switch (c) {
    case ExtremityClass::ls_sl: return "LS/SL";
    case ExtremityClass::sl_ls: return "SL/LS";
    case ExtremityClass::sl_sl: return "SL/SL";
    case ExtremityClass::ls_ls: return "LS/LS";
    case ExtremityClass::not_applicable: return "n/a";
  }
  return "?";
}

inline ExtremityClass parse_extremity(std::string_view s) {
  for (auto c : {ExtremityClass::ls_sl, ExtremityClass::sl_ls, ExtremityClass::sl_sl, ExtremityClass::ls_ls,
                 ExtremityClass::not_applicable}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown extremity class '" + std::string(s) + "'");
}

/// Left pair is LS when first > second, SL otherwise (ties are SL). Right pair
/// is SL when last > second-to-last, LS otherwise (ties are LS). Needs M >= 3.
template <Scalar T>
ExtremityClass classify_extremities(const HAlphaReport<T>& r) {
  if (r.M < 3) return ExtremityClass::not_applicable;
  const auto& j = r.normalized_jumps;
  const bool left_large = j[0] > j[1];
  const bool right_large = j[j.size() - 1] > j[j.size() - 2];
  if (left_large) return right_large ? ExtremityClass::ls_sl : ExtremityClass::ls_ls;
  return right_large ? ExtremityClass::sl_sl : ExtremityClass::sl_ls;
}

template <Scalar T>
ExtremityClass classify_extremities(const GridState<T>& state) {
  const auto r = classify_H_alpha(state, T(0));
  if (!r) return ExtremityClass::not_applicable;
  return classify_extremities(*r);
}

/// Transition rules of the extremity automaton at lambda = 1/2, with the
/// accompanying change of the jump count. States with M <= 2 stay at M <= 2.
inline bool automaton_transition_allowed(ExtremityClass from, std::int64_t m_from, ExtremityClass to,
                                         std::int64_t m_to) {
  using E = ExtremityClass;
  if (from == E::not_applicable) return m_from <= 2 && m_to <= 2;
  const bool to_ok = [&] {
    switch (from) {
      case E::ls_sl: return to == E::sl_ls;
      case E::sl_ls: return true;
      case E::sl_sl: return to == E::ls_ls || to == E::sl_ls;
      case E::ls_ls: return to == E::sl_sl || to == E::sl_ls;
      default: return false;
    }
  }();
  const std::int64_t expected = from == E::ls_sl ? m_from + 1 : from == E::sl_ls ? m_from - 1 : m_from;
  if (m_to != expected) return false;
  // a class only exists for M >= 3
  return m_to < 3 ? to == E::not_applicable : to_ok;
}

/// Returns the smallest j such that u = low left of j and u = high right of j.
template <Scalar T>
std::optional<std::int64_t> is_discrete_heaviside(const GridState<T>& state) {
  const auto tails = detail::constant_tails(state);
  if (!tails || !(tails->low < tails->high)) return std::nullopt;
  const GridState<T> s = state.trimmed();
  const auto v = s.values();
  // first cell differing from the low tail, last cell differing from the high tail
  std::int64_t first_not_low = s.window_end();
  std::int64_t last_not_high = s.window_start() - 1;
  for (std::int64_t k = s.window_start(); k < s.window_end(); ++k) {
    const T& x = v[static_cast<std::size_t>(k - s.window_start())];
    if (!(x == tails->low) && first_not_low == s.window_end()) first_not_low = k;
    if (!(x == tails->high)) last_not_high = k;
  }
  if (last_not_high > first_not_low) return std::nullopt;
  return last_not_high;
}

}  // namespace advect
