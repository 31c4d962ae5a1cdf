#pragma once

#include "advect/analysis/classify.hpp"
#include "advect/analysis/staircase.hpp"
#include "advect/scalar.hpp"

#include <cstdint>
#include <optional>

namespace advect {

/// One row of a metrics time series; every entry comes from the same state.
template <Scalar T>
struct MetricsSample {
  std::int64_t step = 0;
  std::optional<T> linf_err;
  std::optional<T> l1_err;
  std::optional<T> plateau_I;
  std::optional<std::int64_t> M_count;
  std::optional<ExtremityClass> extremity;
  std::optional<std::int64_t> heaviside_j;
  std::optional<T> front_sum;
  std::optional<StaircaseCase> staircase_case;
  std::optional<T> epsilon;
};

}  // namespace advect
