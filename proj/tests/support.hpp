#pragma once

#include "advect/scalar.hpp"
#include "advect/state.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace advect::testing {

using Q = Rational;

inline Q q(const char* s) { return scalar_traits<Q>::parse(s); }

inline GridState<Q> infinite_q(std::vector<Q> v, std::int64_t start = 0, Q left_step = Q(0), Q right_step = Q(0),
                               Q lambda = Q(1, 2), Phase phase = Phase::integer_grid) {
  return GridState<Q>::infinite(start, std::move(v), left_step, right_step, lambda, phase);
}

inline std::vector<Q> window(const GridState<Q>& s, std::int64_t lo, std::int64_t hi) {
  std::vector<Q> out;
  for (std::int64_t j = lo; j < hi; ++j) out.push_back(s.cell_value(j));
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace advect::testing
