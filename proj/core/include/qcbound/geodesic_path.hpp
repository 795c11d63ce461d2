// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qcbound/euler_arnold.hpp"

namespace qcbound {

/// c_I(s) with U(s) ~ exp(-i sum_I c_I(s) O_I), keeping only the first Dyson
/// term: c_I(s) is the integral of V^I over [0, s].
struct ExponentCoefficients {
  std::string algebra;
  std::function<Eigen::VectorXd(double)> coeffs;

  Eigen::VectorXd operator()(double s) const { return coeffs(s); }
};

/// Closed-form families integrate analytically. Numeric solutions integrate
/// the integrator's cubic Hermite interpolant exactly, so the result is
/// consistent with VelocitySolution::operator().
ExponentCoefficients leading_order_coeffs(const VelocitySolution& sol);

/// (alpha1, alpha2, alpha3, alpha4) with
/// U(s) = exp(-i a1 E) exp(-i a2 P) exp(-i a3 Q) exp(-i a4 H).
struct ProductFormCoefficients {
  std::function<std::array<double, 4>(double)> coeffs;

  std::array<double, 4> operator()(double s) const { return coeffs(s); }
};

/// Disentangled ho4 solution for v_E = 0; throws UnsupportedCenterVelocity
/// otherwise. v0 is in (E, P, Q, H) order.
ProductFormCoefficients product_form_coeffs_ho4(const Eigen::VectorXd& v0);

/// Max absolute residual of the product-form ODE system
///   a1' = a2 vP sin(s vQ) + a2 vQ cos(s vQ) + a2^2 vQ/2 - a3^2 vQ/2
///   a2' = vP cos(s vQ) - vQ sin(s vQ) - a3 vQ
///   a3' = vP sin(s vQ) + vQ cos(s vQ) + a2 vQ
///   a4' = vH
/// over `s_grid`, with derivatives from a five-point central difference.
double residual_product_form(const ProductFormCoefficients& coeffs,
                             const VelocitySolution& sol,
                             const std::vector<double>& s_grid);

}  // namespace qcbound
