// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "qcbound/errors.hpp"

namespace qcbound {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

Eigen::MatrixXcd annihilation(int n) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
  return a;
}

Eigen::MatrixXcd number_plus_half(int n) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) h(k, k) = k + 0.5;
  return h;
}

}  // namespace

const Eigen::MatrixXcd& MatrixRep::by_label(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw NotRegistered("no generator '" + label + "' in representation");
  return matrices[static_cast<std::size_t>(it - labels.begin())];
}

MatrixRep sp2_j_matrix_rep() {
  Eigen::MatrixXcd sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -kI, kI, 0;
  sz << 1, 0, 0, -1;
  return {"sp2_J", {"J1", "J2", "J3"}, {kI * sx, kI * sy, sz}, 2};
}

MatrixRep fock_rep_ho4(int levels) {
  if (levels < 4) throw Error("Fock truncation needs at least 4 levels");
  const int n = levels;
  const Eigen::MatrixXcd a = annihilation(n);
  const Eigen::MatrixXcd ad = a.adjoint();
  const double r = std::sqrt(2.0);
  return {"ho4",
          {"E", "P", "Q", "H"},
          {Eigen::MatrixXcd::Identity(n, n), kI * (ad - a) / r, (a + ad) / r,
           number_plus_half(n)},
          n - 2};
}

MatrixRep fock_rep_sp2_j(int levels) {
  if (levels < 4) throw Error("Fock truncation needs at least 4 levels");
  // Quadratics are formed in a larger space so the cropped matrices are exact.
  const int big = levels + 4;
  const Eigen::MatrixXcd a = annihilation(big);
  const Eigen::MatrixXcd ad = a.adjoint();
  const double r = std::sqrt(2.0);
  const Eigen::MatrixXcd q = (a + ad) / r;
  const Eigen::MatrixXcd p = kI * (ad - a) / r;
  const Eigen::MatrixXcd k1 = 0.5 * q * q;
  const Eigen::MatrixXcd k2 = 0.5 * p * p;
  const Eigen::MatrixXcd k3 = 0.5 * (q * p + p * q);
  auto crop = [levels](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd {
    return m.topLeftCorner(levels, levels);
  };
  return {"sp2_J", {"J1", "J2", "J3"}, {crop(k3), crop(k1 - k2), crop(k1 + k2)}, levels - 2};
}

double block_norm(const MatrixRep& rep, const Eigen::MatrixXcd& m) {
  const int v = std::min<int>(rep.valid, static_cast<int>(m.rows()));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.topLeftCorner(v, v));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double commutator_residual(const MatrixRep& rep, const LieAlgebraSpec& algebra) {
  const int n = algebra.dim();
  if (static_cast<int>(rep.matrices.size()) != n) {
    throw DimMismatch("representation has " + std::to_string(rep.matrices.size()) +
                      " matrices, algebra has dim " + std::to_string(n));
  }
  const int v = rep.valid;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& mi = rep.matrices[i];
      const auto& mj = rep.matrices[j];
      Eigen::MatrixXcd diff = mi * mj - mj * mi;
      for (int k = 0; k < n; ++k) {
        const double f = algebra.f(i, j, k);
        if (f != 0.0) diff -= kI * f * rep.matrices[k];
      }
      worst = std::max(worst, diff.topLeftCorner(v, v).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

Eigen::MatrixXcd exp_generator(const MatrixRep& rep, const Eigen::VectorXd& c) {
  if (c.size() != static_cast<int>(rep.matrices.size())) {
    throw DimMismatch("coefficient vector does not match the representation");
  }
  const int d = rep.size();
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < c.size(); ++i) x += c[i] * rep.matrices[i];
  return (-kI * x).exp();
}

Eigen::MatrixXcd path_ordered_exponential(const MatrixRep& rep, const VelocitySolution& sol,
                                          int steps) {
  if (steps < 1) throw Error("path-ordered exponential needs at least one step");
  if (sol.dim() != static_cast<int>(rep.matrices.size())) {
    throw DimMismatch("solution does not match the representation");
  }
  const double ds = 1.0 / steps;
  const int d = rep.size();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  for (int k = 0; k < steps; ++k) {
    const double s = (k + 0.5) * ds;
    u = exp_generator(rep, sol(s) * ds) * u;
    if (!u.allFinite()) throw NumericBlowup("path-ordered product is not finite", s);
  }
  return u;
}

double spectrum_period_check(const MatrixRep& rep, double omega, int max_multiple) {
  if (!(omega > 0.0)) throw Error("omega must be positive");
  const auto has = [&](const char* l) {
    return std::find(rep.labels.begin(), rep.labels.end(), l) != rep.labels.end();
  };
  const Eigen::MatrixXcd& h = has("H") ? rep.by_label("H") : rep.by_label("J3");
  const int d = rep.size();
  for (int k = 1; k <= max_multiple; ++k) {
    const double period = k * std::numbers::pi / omega;
    const Eigen::MatrixXcd u = (-kI * omega * period * h).exp();
    if (block_norm(rep, u - Eigen::MatrixXcd::Identity(d, d)) <= 1e-6) return period;
  }
  return 0.0;
}

double line_element_check(const MatrixRep& rep, const Eigen::MatrixXcd& u,
                          const Eigen::MatrixXcd& du, const PenaltyMatrix& g) {
  const int n = static_cast<int>(rep.matrices.size());
  g.check(n);
  const Eigen::MatrixXcd uinv = u.partialPivLu().inverse();
  double ds2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& m = rep.matrices[i];
    const double norm = (m * m.adjoint()).trace().real();
    if (std::abs(norm) < 1e-300) {
      throw DegenerateDirection("generator " + rep.labels[i] + " has zero trace norm");
    }
    const cd t = (kI * uinv * m.adjoint() * du).trace();
    ds2 += g[i] * std::norm(t) / (norm * norm);
  }
  return ds2;
}

}  // namespace qcbound
