// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qcbound/boundary_match.hpp"
#include "qcbound/euler_arnold.hpp"

namespace qcbound {

struct BoundResult {
  /// Bound value; +infinity when the match diverges.
  double value = 0.0;
  bool divergent = false;
  /// Location of the divergence, empty otherwise.
  std::string location;
  std::string formula_id;
  std::optional<Eigen::VectorXd> v0;
  long branch = 0;
  std::vector<std::string> caveats;
};

/// Geodesic length: integral over [0, 1] of sqrt(sum_I G_II V^I(s)^2).
/// Exact for constant-speed closed forms and for the anharmonic closed form;
/// adaptive Gauss-Kronrod (relative tolerance 1e-10) otherwise.
double length(const VelocitySolution& sol, const PenaltyMatrix& g);

/// Squared speed of the anharmonic closed form,
///   A + B cos(4 s v1) + C sin(4 s v1).
struct AnharmonicSpeed {
  double a;
  double b;
  double c;
};

/// v0 in (M1, M4, M5, M6, M7) order; weights diag(g11, p, p, p, p).
AnharmonicSpeed anharmonic_speed(const Eigen::VectorXd& v0, double g11, double p);

/// Length through incomplete elliptic integrals of the second kind.
/// Throws Error when A < sqrt(B^2 + C^2) (negative squared speed).
double anharmonic_length_elliptic(const Eigen::VectorXd& v0, double g11, double p);

/// Same length by adaptive Gauss-Kronrod quadrature of the raw integrand.
double anharmonic_length_quadrature(const Eigen::VectorXd& v0, double g11, double p,
                                    double rel_tol = 1e-12);

struct BoundOptions {
  /// coupled only: use the unreduced (omega1 - omega2) t inside the coupling
  /// factors instead of the reduced v1 - v2. Diagnostic.
  bool coupled_raw_difference = false;
};

/// match + periodicity reduction + the per-system closed form.
BoundResult bound(const TargetSpec& target, const BoundOptions& options = {});

/// Evaluates bound() at every t in `t_grid` with the other parameters of
/// `base` held fixed. Throws Unsupported for targets without a time.
std::vector<std::pair<double, BoundResult>> bound_curve(const TargetSpec& base,
                                                        const std::vector<double>& t_grid,
                                                        const BoundOptions& options = {});

/// `base` with its time replaced by t.
TargetSpec with_time(const TargetSpec& base, double t);

}  // namespace qcbound
