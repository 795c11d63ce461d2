// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace qcbound {

// Below this magnitude the removable singularities switch to their series.
inline constexpr double kSeriesSwitch = 1e-8;

/// sin(x)/x, equal to 1 at x = 0.
double sinc(double x);

/// (1 - cos x)/x, equal to 0 at x = 0.
double versine_over(double x);

/// x cot(x/2), equal to 2 at x = 0.
double x_cot_half(double x);

/// x cot(x), equal to 1 at x = 0.
double x_cot(double x);

}  // namespace qcbound
