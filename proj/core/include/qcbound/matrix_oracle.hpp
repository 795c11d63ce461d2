// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "qcbound/euler_arnold.hpp"
#include "qcbound/lie_algebra.hpp"

namespace qcbound {

/// Concrete matrices M_I for the generators of an algebra.
///
/// Truncated Fock representations are only faithful on the leading
/// `valid` x `valid` block; every check is restricted to that block.
struct MatrixRep {
  std::string algebra;
  std::vector<std::string> labels;
  std::vector<Eigen::MatrixXcd> matrices;
  int valid = 0;

  int size() const { return matrices.empty() ? 0 : static_cast<int>(matrices.front().rows()); }
  const Eigen::MatrixXcd& by_label(const std::string& label) const;
};

/// 2x2 representation of sp2_J: J1 = i sigma_x, J2 = i sigma_y, J3 = sigma_z.
MatrixRep sp2_j_matrix_rep();

/// N x N truncation of the oscillator Fock space for ho4 (E, P, Q, H) with
/// Q = (a + a^dag)/sqrt(2), P = i(a^dag - a)/sqrt(2), H = a^dag a + 1/2.
/// Valid on indices < N - 2.
MatrixRep fock_rep_ho4(int levels = 32);

/// N x N truncation for sp2_J built from quadratic Fock operators.
/// Valid on indices < N - 2.
MatrixRep fock_rep_sp2_j(int levels = 32);

/// max |[M_I, M_J] - i sum_K f_IJ^K M_K| over the valid block.
double commutator_residual(const MatrixRep& rep, const LieAlgebraSpec& algebra);

/// Product of exp(-i sum_I V^I(s_k) M_I ds) over the midpoints s_k of a
/// uniform grid, later factors multiplied on the left.
/// Throws NumericBlowup on a non-finite product.
Eigen::MatrixXcd path_ordered_exponential(const MatrixRep& rep, const VelocitySolution& sol,
                                          int steps = 4000);

/// exp(-i sum_I c_I M_I).
Eigen::MatrixXcd exp_generator(const MatrixRep& rep, const Eigen::VectorXd& c);

/// Smallest T = k pi / omega, k = 1..max_multiple, with
/// ||exp(-i omega T H) - I|| <= 1e-6 on the valid block, where H is the
/// generator labelled "H" or "J3". Returns 0 when none is found.
double spectrum_period_check(const MatrixRep& rep, double omega, int max_multiple = 16);

/// Trace-normalized line element
///   ds^2 = sum_I G_II |t_I|^2 / Tr(M_I M_I^dag)^2,  t_I = Tr[i U^-1 M_I^dag dU].
/// Throws DegenerateDirection when some Tr(M_I M_I^dag) vanishes.
double line_element_check(const MatrixRep& rep, const Eigen::MatrixXcd& u,
                          const Eigen::MatrixXcd& du, const PenaltyMatrix& g);

/// Operator 2-norm of the valid block of m.
double block_norm(const MatrixRep& rep, const Eigen::MatrixXcd& m);

}  // namespace qcbound
