// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/special.hpp"

#include <cmath>

namespace qcbound {

double sinc(double x) {
  if (std::abs(x) < kSeriesSwitch) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double versine_over(double x) {
  // 2 sin^2(x/2)/x rewritten without the division by x.
  const double half = 0.5 * x;
  return std::sin(half) * sinc(half);
}

double x_cot_half(double x) {
  if (std::abs(x) < kSeriesSwitch) return 2.0 - x * x / 6.0;
  return 2.0 * std::cos(0.5 * x) / sinc(0.5 * x);
}

double x_cot(double x) {
  if (std::abs(x) < kSeriesSwitch) return 1.0 - x * x / 3.0;
  return std::cos(x) / sinc(x);
}

}  // namespace qcbound
