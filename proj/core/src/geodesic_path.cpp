// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/geodesic_path.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "qcbound/errors.hpp"
#include "qcbound/special.hpp"

namespace qcbound {
namespace {

// Integrals over [0, s] of cos(r s') and sin(r s'), regular at r = 0.
struct RotationIntegrals {
  double cos_int;
  double sin_int;
};

RotationIntegrals rotation_integrals(double r, double s) {
  return {s * sinc(r * s), s * versine_over(r * s)};
}

Eigen::VectorXd closed_form_coeffs(const ClosedFormFamily& fam, const Eigen::VectorXd& v,
                                   double s) {
  Eigen::VectorXd c = s * v;
  const double r = rotation_rate(fam, v);
  switch (fam.tag) {
    case ClosedFormTag::ho4_equal_penalty: {
      const auto [ci, si] = rotation_integrals(r, s);
      c[1] = v[1] * ci - v[2] * si;
      c[2] = v[2] * ci + v[1] * si;
      break;
    }
    case ClosedFormTag::sp2_J_equal_penalty: {
      const auto [ci, si] = rotation_integrals(r, s);
      c[0] = v[0] * ci - v[1] * si;
      c[1] = v[1] * ci + v[0] * si;
      break;
    }
    case ClosedFormTag::coupled_pq: {
      const auto [ci, si] = rotation_integrals(r, s);
      c[2] = v[2] * ci + v[3] * si;
      c[3] = v[3] * ci - v[2] * si;
      break;
    }
    case ClosedFormTag::anharm_p: {
      const auto [ca, sa] = rotation_integrals(r, s);
      const auto [cb, sb] = rotation_integrals(3.0 * r, s);
      const double v4 = v[1], v5 = v[2], v6 = v[3], v7 = v[4];
      c[1] = 0.25 * (v4 * (3 * ca + cb) + v5 * (3 * sa - sb) + v6 * (sa + sb) + v7 * (ca - cb));
      c[2] = 0.25 * (v4 * (sb - 3 * sa) + v5 * (3 * ca + cb) + v6 * (ca - cb) - v7 * (sa + sb));
      c[3] = 0.25 * (v4 * (-3 * sa - 3 * sb) + v5 * (3 * ca - 3 * cb) + v6 * (ca + 3 * cb) +
                     v7 * (3 * sb - sa));
      c[4] = 0.25 * (v4 * (3 * ca - 3 * cb) + v5 * (3 * sa + 3 * sb) + v6 * (sa - 3 * sb) +
                     v7 * (ca + 3 * cb));
      break;
    }
  }
  return c;
}

// Exact integral of the piecewise cubic Hermite interpolant. `nodes[k]` holds
// the integral over [0, k h].
struct HermiteIntegral {
  NumericKind num;
  std::vector<Eigen::VectorXd> nodes;

  explicit HermiteIntegral(NumericKind n) : num(std::move(n)) {
    const double h = num.h;
    nodes.reserve(num.states.size());
    nodes.push_back(Eigen::VectorXd::Zero(num.states.front().size()));
    for (std::size_t k = 0; k + 1 < num.states.size(); ++k) {
      nodes.push_back(nodes.back() + 0.5 * h * (num.states[k] + num.states[k + 1]) +
                      h * h / 12.0 * (num.derivatives[k] - num.derivatives[k + 1]));
    }
  }

  Eigen::VectorXd operator()(double s) const {
    const std::size_t n = num.states.size() - 1;
    const double h = num.h;
    if (s <= 0.0) return nodes.front();
    std::size_t k = std::min(static_cast<std::size_t>(s / h), n - 1);
    const double t = std::min((s - static_cast<double>(k) * h) / h, 1.0);
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    const double i00 = t4 / 2 - t3 + t;
    const double i10 = t4 / 4 - 2 * t3 / 3 + t2 / 2;
    const double i01 = -t4 / 2 + t3;
    const double i11 = t4 / 4 - t3 / 3;
    return nodes[k] + h * (i00 * num.states[k] + i10 * h * num.derivatives[k] +
                           i01 * num.states[k + 1] + i11 * h * num.derivatives[k + 1]);
  }
};

}  // namespace

ExponentCoefficients leading_order_coeffs(const VelocitySolution& sol) {
  if (sol.closed_form()) {
    return {sol.algebra(), [fam = sol.family(), v = sol.v0()](double s) {
              return closed_form_coeffs(fam, v, s);
            }};
  }
  auto integral = std::make_shared<const HermiteIntegral>(sol.numeric());
  return {sol.algebra(), [integral](double s) { return (*integral)(s); }};
}

ProductFormCoefficients product_form_coeffs_ho4(const Eigen::VectorXd& v0) {
  if (v0.size() != 4) throw DimMismatch("product form needs (E, P, Q, H) velocities");
  if (v0[0] != 0.0) {
    throw UnsupportedCenterVelocity("product form is only available for v_E = 0");
  }
  const double vp = v0[1], vq = v0[2], vh = v0[3];
  return {[vp, vq, vh](double s) {
    const double c1 = std::cos(s * vq), s1 = std::sin(s * vq);
    const double c2 = std::cos(2 * s * vq), s2 = std::sin(2 * s * vq);
    return std::array<double, 4>{
        s * s * ((vp * vp - vq * vq) * s2 + 2 * vp * vq * c2) / 4,
        s * (vp * c1 - vq * s1),
        s * (vp * s1 + vq * c1),
        s * vh,
    };
  }};
}

double residual_product_form(const ProductFormCoefficients& coeffs,
                             const VelocitySolution& sol,
                             const std::vector<double>& s_grid) {
  if (sol.algebra() != "ho4" || sol.dim() != 4) {
    throw FamilyMismatch("product form residual is defined for ho4 only");
  }
  const double vp = sol.v0()[1], vq = sol.v0()[2], vh = sol.v0()[3];
  constexpr double h = 1e-3;
  double worst = 0.0;
  for (double s : s_grid) {
    const auto a = coeffs(s);
    const auto m2 = coeffs(s - 2 * h), m1 = coeffs(s - h);
    const auto p1 = coeffs(s + h), p2 = coeffs(s + 2 * h);
    std::array<double, 4> d{};
    for (int i = 0; i < 4; ++i) d[i] = (m2[i] - 8 * m1[i] + 8 * p1[i] - p2[i]) / (12 * h);

    const double c = std::cos(s * vq), sn = std::sin(s * vq);
    const std::array<double, 4> expected{
        a[1] * vp * sn + a[1] * vq * c + a[1] * a[1] * vq / 2 - a[2] * a[2] * vq / 2,
        vp * c - vq * sn - a[2] * vq,
        vp * sn + vq * c + a[1] * vq,
        vh,
    };
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(d[i] - expected[i]));
  }
  return worst;
}

}  // namespace qcbound
