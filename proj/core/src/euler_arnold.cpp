// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/euler_arnold.hpp"

#include <cmath>
#include <string>

#include "qcbound/errors.hpp"

namespace qcbound {

PenaltyMatrix PenaltyMatrix::identity(int dim) {
  return {std::vector<double>(static_cast<std::size_t>(dim), 1.0)};
}

PenaltyMatrix PenaltyMatrix::diagonal(std::vector<double> w) { return {std::move(w)}; }

void PenaltyMatrix::check(int dim) const {
  if (this->dim() != dim) {
    throw DimMismatch("penalty matrix has " + std::to_string(this->dim()) +
                      " weights, algebra has dim " + std::to_string(dim));
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw Error("penalty weights must be positive");
  }
}

Eigen::VectorXd rhs(const LieAlgebraSpec& algebra, const PenaltyMatrix& g,
                    const Eigen::VectorXd& v) {
  const int n = algebra.dim();
  if (v.size() != n) {
    throw DimMismatch("velocity has length " + std::to_string(v.size()) +
                      ", algebra has dim " + std::to_string(n));
  }
  g.check(n);
  const bool truncated = algebra.truncated();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const bool light = truncated && !algebra.heavy(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        const double f = algebra.f(i, j, k);
        if (f == 0.0) continue;
        if (light && algebra.heavy(j) && algebra.heavy(k)) continue;
        acc += f * v[j] * g[k] * v[k];
      }
    }
    out[i] = acc / g[i];
  }
  return out;
}

ClosedFormFamily ClosedFormFamily::ho4(double g_e, double g_pq, double g_h) {
  ClosedFormFamily f;
  f.tag = ClosedFormTag::ho4_equal_penalty;
  f.g_e = g_e;
  f.g_pq = g_pq;
  f.g_h = g_h;
  return f;
}

ClosedFormFamily ClosedFormFamily::sp2_j() {
  ClosedFormFamily f;
  f.tag = ClosedFormTag::sp2_J_equal_penalty;
  return f;
}

ClosedFormFamily ClosedFormFamily::coupled(double q, double p) {
  ClosedFormFamily f;
  f.tag = ClosedFormTag::coupled_pq;
  f.q = q;
  f.p = p;
  return f;
}

ClosedFormFamily ClosedFormFamily::anharm(double g11, double p) {
  ClosedFormFamily f;
  f.tag = ClosedFormTag::anharm_p;
  f.g11 = g11;
  f.p = p;
  return f;
}

std::string ClosedFormFamily::algebra() const {
  switch (tag) {
    case ClosedFormTag::ho4_equal_penalty: return "ho4";
    case ClosedFormTag::sp2_J_equal_penalty: return "sp2_J";
    case ClosedFormTag::coupled_pq: return "coupled_M4";
    case ClosedFormTag::anharm_p: return "anharm5";
  }
  return {};
}

int ClosedFormFamily::dim() const {
  switch (tag) {
    case ClosedFormTag::ho4_equal_penalty: return 4;
    case ClosedFormTag::sp2_J_equal_penalty: return 3;
    case ClosedFormTag::coupled_pq: return 4;
    case ClosedFormTag::anharm_p: return 5;
  }
  return 0;
}

PenaltyMatrix ClosedFormFamily::penalty() const {
  switch (tag) {
    case ClosedFormTag::ho4_equal_penalty: return PenaltyMatrix::diagonal({g_e, g_pq, g_pq, g_h});
    case ClosedFormTag::sp2_J_equal_penalty: return PenaltyMatrix::identity(3);
    case ClosedFormTag::coupled_pq: return PenaltyMatrix::diagonal({q, q, p, p});
    case ClosedFormTag::anharm_p: return PenaltyMatrix::diagonal({g11, p, p, p, p});
  }
  return {};
}

std::string to_string(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::ho4_equal_penalty: return "ho4_equal_penalty";
    case ClosedFormTag::sp2_J_equal_penalty: return "sp2_J_equal_penalty";
    case ClosedFormTag::coupled_pq: return "coupled_pq";
    case ClosedFormTag::anharm_p: return "anharm_p";
  }
  return {};
}

double rotation_rate(const ClosedFormFamily& family, const Eigen::VectorXd& v) {
  switch (family.tag) {
    case ClosedFormTag::ho4_equal_penalty: return v[3] + family.g_e / family.g_pq * v[0];
    case ClosedFormTag::sp2_J_equal_penalty: return 4.0 * v[2];
    case ClosedFormTag::coupled_pq:
      return (family.p - 2.0 * family.q) * (v[0] - v[1]) / family.p;
    case ClosedFormTag::anharm_p: return v[0];
  }
  return 0.0;
}

namespace {

Eigen::VectorXd eval_closed_form(const ClosedFormFamily& fam, const Eigen::VectorXd& v,
                                 double s) {
  Eigen::VectorXd out = v;
  const double r = rotation_rate(fam, v);
  switch (fam.tag) {
    case ClosedFormTag::ho4_equal_penalty: {
      const double c = std::cos(r * s), sn = std::sin(r * s);
      out[1] = v[1] * c - v[2] * sn;
      out[2] = v[2] * c + v[1] * sn;
      break;
    }
    case ClosedFormTag::sp2_J_equal_penalty: {
      const double c = std::cos(r * s), sn = std::sin(r * s);
      out[0] = v[0] * c - v[1] * sn;
      out[1] = v[1] * c + v[0] * sn;
      break;
    }
    case ClosedFormTag::coupled_pq: {
      const double c = std::cos(r * s), sn = std::sin(r * s);
      out[2] = v[2] * c + v[3] * sn;
      out[3] = v[3] * c - v[2] * sn;
      break;
    }
    case ClosedFormTag::anharm_p: {
      const double ca = std::cos(r * s), sa = std::sin(r * s);
      const double cb = std::cos(3 * r * s), sb = std::sin(3 * r * s);
      const double v4 = v[1], v5 = v[2], v6 = v[3], v7 = v[4];
      out[1] = 0.25 * (v4 * (3 * ca + cb) + v5 * (3 * sa - sb) + v6 * (sa + sb) + v7 * (ca - cb));
      out[2] = 0.25 * (v4 * (sb - 3 * sa) + v5 * (3 * ca + cb) + v6 * (ca - cb) - v7 * (sa + sb));
      out[3] = 0.25 * (v4 * (-3 * sa - 3 * sb) + v5 * (3 * ca - 3 * cb) + v6 * (ca + 3 * cb) +
                       v7 * (3 * sb - sa));
      out[4] = 0.25 * (v4 * (3 * ca - 3 * cb) + v5 * (3 * sa + 3 * sb) + v6 * (sa - 3 * sb) +
                       v7 * (ca + 3 * cb));
      break;
    }
  }
  return out;
}

Eigen::VectorXd eval_hermite(const NumericKind& num, double s) {
  const std::size_t n = num.states.size() - 1;
  if (s <= 0.0) return num.states.front();
  if (s >= 1.0) return num.states.back();
  std::size_t k = static_cast<std::size_t>(s / num.h);
  if (k >= n) k = n - 1;
  const double t = (s - static_cast<double>(k) * num.h) / num.h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * num.states[k] + h10 * num.h * num.derivatives[k] +
         h01 * num.states[k + 1] + h11 * num.h * num.derivatives[k + 1];
}

}  // namespace

VelocitySolution::VelocitySolution(std::string algebra, Eigen::VectorXd v0,
                                   PenaltyMatrix g,
                                   std::variant<ClosedFormKind, NumericKind> kind)
    : algebra_(std::move(algebra)),
      v0_(std::move(v0)),
      g_(std::move(g)),
      kind_(std::move(kind)) {}

Eigen::VectorXd VelocitySolution::operator()(double s) const {
  if (closed_form()) return eval_closed_form(family(), v0_, s);
  return eval_hermite(numeric(), s);
}

double VelocitySolution::speed_squared(double s) const {
  const Eigen::VectorXd v = (*this)(s);
  double acc = 0.0;
  for (int i = 0; i < v.size(); ++i) acc += g_[i] * v[i] * v[i];
  return acc;
}

VelocitySolution solve_numeric(const LieAlgebraSpec& algebra, const PenaltyMatrix& g,
                               const Eigen::VectorXd& v0, double h) {
  if (!(h > 0.0) || h > 1.0) throw Error("step size must lie in (0, 1]");
  if (v0.size() != algebra.dim()) {
    throw DimMismatch("initial velocity has length " + std::to_string(v0.size()) +
                      ", algebra has dim " + std::to_string(algebra.dim()));
  }
  g.check(algebra.dim());

  const auto steps = static_cast<std::size_t>(std::ceil(1.0 / h - 1e-12));
  NumericKind num;
  num.h = 1.0 / static_cast<double>(steps);
  num.states.reserve(steps + 1);
  num.derivatives.reserve(steps + 1);

  Eigen::VectorXd y = v0;
  Eigen::VectorXd k1 = rhs(algebra, g, y);
  num.states.push_back(y);
  num.derivatives.push_back(k1);
  const double dt = num.h;
  for (std::size_t i = 0; i < steps; ++i) {
    const Eigen::VectorXd k2 = rhs(algebra, g, y + 0.5 * dt * k1);
    const Eigen::VectorXd k3 = rhs(algebra, g, y + 0.5 * dt * k2);
    const Eigen::VectorXd k4 = rhs(algebra, g, y + dt * k3);
    y += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!y.allFinite()) {
      throw NumericBlowup("integration left the finite range",
                          static_cast<double>(i) * dt);
    }
    k1 = rhs(algebra, g, y);
    num.states.push_back(y);
    num.derivatives.push_back(k1);
  }
  return VelocitySolution(algebra.name(), v0, g, std::move(num));
}

VelocitySolution solve_closed_form(const LieAlgebraSpec& algebra,
                                   const ClosedFormFamily& family,
                                   const Eigen::VectorXd& v0) {
  if (algebra.name() != family.algebra()) {
    throw FamilyMismatch("family " + to_string(family.tag) + " solves " +
                         family.algebra() + ", not " + algebra.name());
  }
  return solve_closed_form(family, v0);
}

VelocitySolution solve_closed_form(const ClosedFormFamily& family,
                                   const Eigen::VectorXd& v0) {
  if (v0.size() != family.dim()) {
    throw DimMismatch("family " + to_string(family.tag) + " expects " +
                      std::to_string(family.dim()) + " velocities, got " +
                      std::to_string(v0.size()));
  }
  PenaltyMatrix g = family.penalty();
  g.check(family.dim());
  return VelocitySolution(family.algebra(), v0, std::move(g), ClosedFormKind{family});
}

}  // namespace qcbound
