// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "qcbound/lie_algebra.hpp"

namespace qcbound {

/// Diagonal penalty weights G_II, aligned with the algebra's generator order.
struct PenaltyMatrix {
  std::vector<double> weights;

  static PenaltyMatrix identity(int dim);
  static PenaltyMatrix diagonal(std::vector<double> w);

  int dim() const noexcept { return static_cast<int>(weights.size()); }
  double operator[](int i) const { return weights[i]; }

  /// Throws DimMismatch on a length mismatch and Error on a non-positive weight.
  void check(int dim) const;
};

/// Euler-Arnold right-hand side
///   dV^I/ds = (1/G_II) sum_{J,K} f_IJ^K V^J G_KK V^K.
///
/// For truncated algebras, terms in the equation of a light generator whose
/// J and K are both heavy are dropped: they are of higher order in the
/// penalty expansion and would otherwise blow up with the penalty.
Eigen::VectorXd rhs(const LieAlgebraSpec& algebra, const PenaltyMatrix& g,
                    const Eigen::VectorXd& v);

enum class ClosedFormTag {
  ho4_equal_penalty,
  sp2_J_equal_penalty,
  coupled_pq,
  anharm_p,
};

/// Analytic solution family. Only the fields relevant to `tag` are read.
struct ClosedFormFamily {
  ClosedFormTag tag = ClosedFormTag::ho4_equal_penalty;
  // ho4: weights of E, P and Q (G_QQ = G_PP), H.
  double g_e = 1.0;
  double g_pq = 1.0;
  double g_h = 1.0;
  // coupled: G = diag(q, q, p, p); anharm: G = diag(g11, p, p, p, p).
  double q = 1.0;
  double p = 1.0;
  double g11 = 1.0;

  static ClosedFormFamily ho4(double g_e = 1.0, double g_pq = 1.0, double g_h = 1.0);
  static ClosedFormFamily sp2_j();
  static ClosedFormFamily coupled(double q, double p);
  static ClosedFormFamily anharm(double g11, double p);

  /// Name of the builtin algebra this family solves.
  std::string algebra() const;
  int dim() const;
  PenaltyMatrix penalty() const;
};

std::string to_string(ClosedFormTag tag);

struct ClosedFormKind {
  ClosedFormFamily family;
};

/// Dense output of the fixed-step integrator: states and derivatives on the
/// uniform grid s_k = k h.
struct NumericKind {
  double h = 0.0;
  std::vector<Eigen::VectorXd> states;
  std::vector<Eigen::VectorXd> derivatives;
};

/// A solution V^I(s) on s in [0, 1].
class VelocitySolution {
 public:
  VelocitySolution(std::string algebra, Eigen::VectorXd v0, PenaltyMatrix g,
                   std::variant<ClosedFormKind, NumericKind> kind);

  const std::string& algebra() const noexcept { return algebra_; }
  const Eigen::VectorXd& v0() const noexcept { return v0_; }
  const PenaltyMatrix& penalty() const noexcept { return g_; }
  int dim() const noexcept { return static_cast<int>(v0_.size()); }

  const std::variant<ClosedFormKind, NumericKind>& kind() const noexcept { return kind_; }
  bool closed_form() const noexcept { return kind_.index() == 0; }
  const ClosedFormFamily& family() const { return std::get<ClosedFormKind>(kind_).family; }
  const NumericKind& numeric() const { return std::get<NumericKind>(kind_); }

  /// V(s). Numeric solutions use cubic Hermite interpolation between nodes.
  Eigen::VectorXd operator()(double s) const;

  /// sum_I G_II V^I(s)^2.
  double speed_squared(double s) const;

 private:
  std::string algebra_;
  Eigen::VectorXd v0_;
  PenaltyMatrix g_;
  std::variant<ClosedFormKind, NumericKind> kind_;
};

inline constexpr double kDefaultStep = 1e-4;

/// Classical RK4 on [0, 1] with ceil(1/h) equal steps.
/// Throws NumericBlowup when the state stops being finite.
VelocitySolution solve_numeric(const LieAlgebraSpec& algebra, const PenaltyMatrix& g,
                               const Eigen::VectorXd& v0, double h = kDefaultStep);

/// Throws FamilyMismatch when `algebra` is not the family's algebra and
/// DimMismatch when v0 has the wrong length.
VelocitySolution solve_closed_form(const LieAlgebraSpec& algebra,
                                   const ClosedFormFamily& family,
                                   const Eigen::VectorXd& v0);

/// Same, using the builtin algebra named by the family.
VelocitySolution solve_closed_form(const ClosedFormFamily& family,
                                   const Eigen::VectorXd& v0);

/// Rotation rate of the family's rotating pair; for anharm the slower of the
/// two frequencies (v1; the other is 3 v1).
double rotation_rate(const ClosedFormFamily& family, const Eigen::VectorXd& v0);

}  // namespace qcbound
