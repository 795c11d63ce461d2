// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace qcbound {

/// One structure constant: [O_i, O_j] = i * value * O_k (plus other terms).
struct StructureConstant {
  int i;
  int j;
  int k;
  double value;
};

/// Metadata for algebras that only close after dropping higher-order
/// commutators. `heavy` marks the generators carrying prohibitive penalties;
/// `open_pairs` lists the brackets whose right-hand sides were dropped.
struct Truncation {
  std::vector<bool> heavy;
  std::vector<std::pair<int, int>> open_pairs;
};

/// A finite-dimensional real Lie algebra given by its structure constants
/// f^K_IJ, stored densely as f(I, J, K).
///
/// Instances are immutable once built. Entries of the builtin tables are
/// small integers (or halves after a basis change) so they are exactly
/// representable and the Jacobi check needs no tolerance.
class LieAlgebraSpec {
 public:
  /// Builds an antisymmetric table from upper-or-lower triangle entries.
  /// Each entry also sets its antisymmetric partner f(J, I, K) = -value.
  LieAlgebraSpec(std::string name, std::vector<std::string> labels,
                 const std::vector<StructureConstant>& entries,
                 Truncation truncation = {});

  /// Builds a table from raw dense storage with no antisymmetrization.
  /// Used for imported or deliberately malformed tables.
  static LieAlgebraSpec from_dense(std::string name,
                                   std::vector<std::string> labels,
                                   std::vector<double> dense);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of a generator label; throws NotRegistered when absent.
  int index_of(std::string_view label) const;

  double f(int i, int j, int k) const {
    return f_[(static_cast<std::size_t>(i) * labels_.size() + j) *
                  labels_.size() +
              k];
  }

  bool truncated() const noexcept { return !truncation_.open_pairs.empty(); }
  const Truncation& truncation() const noexcept { return truncation_; }

  /// True when generator `i` is marked as penalty-suppressed.
  bool heavy(int i) const {
    return !truncation_.heavy.empty() && truncation_.heavy[i];
  }

  /// Pairs (I, J), I < J, whose commutator is dropped by the truncation.
  bool is_open_pair(int i, int j) const;

  const std::vector<double>& dense() const noexcept { return f_; }

  /// Every nonzero f(I, J, K) with I < J, in lexicographic order.
  std::vector<StructureConstant> upper_entries() const;

  /// Structure constants of [x, y] for algebra elements given by coefficient
  /// vectors: returns z with [x.O, y.O] = i z.O.
  Eigen::VectorXd bracket(const Eigen::VectorXd& x,
                          const Eigen::VectorXd& y) const;

 private:
  LieAlgebraSpec() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<double> f_;
  Truncation truncation_;
};

/// Parameters only used by the `ho4_general` table.
struct BuiltinParams {
  double mass = 1.0;
  double omega = 1.0;
};

/// Names accepted by builtin().
const std::vector<std::string>& builtin_names();

/// Registered algebra tables:
///   ho4          (E, P, Q, H) harmonic oscillator algebra
///   ho4_general  (E, P, Q, H) with H = P^2/2m + m w^2 Q^2/2
///   sp2_K        (K1, K2, K3) = (Q^2/2, P^2/2, (QP+PQ)/2)
///   sp2_J        (J1, J2, J3) = (K3, K1-K2, K1+K2)
///   coupled_M4   (M1, M2, M3, M4) two-oscillator u(1)+su(2) subalgebra
///   sp4_T10      (T1..T10) quadratic two-mode algebra
///   anharm5      (M1, M4, M5, M6, M7) cubic oscillator, quartic terms dropped
LieAlgebraSpec builtin(std::string_view name, const BuiltinParams& params = {});

struct ValidationReport {
  std::vector<std::array<int, 3>> antisymmetry_violations;
  /// Max |Jacobi| over every index triple.
  double max_jacobi_residual = 0.0;
  /// Max |Jacobi| restricted to triples whose three brackets all close.
  double max_jacobi_residual_closed = 0.0;
  /// "closed" or "truncated".
  std::string closure = "closed";
  std::vector<std::pair<int, int>> open_pairs;

  bool ok() const {
    return antisymmetry_violations.empty() && max_jacobi_residual_closed == 0.0;
  }
};

ValidationReport validate(const LieAlgebraSpec& spec);

/// New generators O'_a = sum_b matrix(a, b) O_b.
struct BasisChange {
  std::string from;
  std::string to;
  Eigen::MatrixXd matrix;
};

/// J1 = K3, J2 = K1 - K2, J3 = K1 + K2.
BasisChange k_to_j_basis_change();

/// Transforms structure constants covariantly; throws SingularBasisChange or
/// DimMismatch.
LieAlgebraSpec change_basis(const LieAlgebraSpec& spec, const BasisChange& change);

/// {"name", "labels", "entries": [[I, J, K, value], ...]} with I < J.
std::string to_json(const LieAlgebraSpec& spec);

}  // namespace qcbound
