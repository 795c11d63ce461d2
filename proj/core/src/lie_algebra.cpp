// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/lie_algebra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>
#include <json.hpp>

#include "qcbound/errors.hpp"

namespace qcbound {

LieAlgebraSpec::LieAlgebraSpec(std::string name, std::vector<std::string> labels,
                               const std::vector<StructureConstant>& entries,
                               Truncation truncation)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      truncation_(std::move(truncation)) {
  const std::size_t n = labels_.size();
  f_.assign(n * n * n, 0.0);
  auto at = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * n + j) * n + k;
  };
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= static_cast<int>(n) ||
        e.j >= static_cast<int>(n) || e.k >= static_cast<int>(n)) {
      throw DimMismatch("structure constant index out of range in " + name_);
    }
    f_[at(e.i, e.j, e.k)] = e.value;
    f_[at(e.j, e.i, e.k)] = -e.value;
  }
  if (!truncation_.heavy.empty() && truncation_.heavy.size() != n) {
    throw DimMismatch("truncation mask length differs from dim in " + name_);
  }
  for (auto& p : truncation_.open_pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
  }
}

LieAlgebraSpec LieAlgebraSpec::from_dense(std::string name,
                                          std::vector<std::string> labels,
                                          std::vector<double> dense) {
  const std::size_t n = labels.size();
  if (dense.size() != n * n * n) {
    throw DimMismatch("dense table has " + std::to_string(dense.size()) +
                      " entries, expected " + std::to_string(n * n * n));
  }
  LieAlgebraSpec spec;
  spec.name_ = std::move(name);
  spec.labels_ = std::move(labels);
  spec.f_ = std::move(dense);
  return spec;
}

int LieAlgebraSpec::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw NotRegistered("generator '" + std::string(label) + "' not in " + name_);
  }
  return static_cast<int>(it - labels_.begin());
}

bool LieAlgebraSpec::is_open_pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(truncation_.open_pairs.begin(), truncation_.open_pairs.end(),
                   std::pair{i, j}) != truncation_.open_pairs.end();
}

std::vector<StructureConstant> LieAlgebraSpec::upper_entries() const {
  std::vector<StructureConstant> out;
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (f(i, j, k) != 0.0) out.push_back({i, j, k, f(i, j, k)});
  return out;
}

Eigen::VectorXd LieAlgebraSpec::bracket(const Eigen::VectorXd& x,
                                        const Eigen::VectorXd& y) const {
  const int n = dim();
  if (x.size() != n || y.size() != n) {
    throw DimMismatch("bracket operands must have length " + std::to_string(n));
  }
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0.0) continue;
      for (int k = 0; k < n; ++k) z[k] += x[i] * y[j] * f(i, j, k);
    }
  }
  return z;
}

namespace {

LieAlgebraSpec make_ho4() {
  // E P Q H
  return LieAlgebraSpec("ho4", {"E", "P", "Q", "H"},
                        {{2, 1, 0, 1.0},     // [Q,P] = iE
                         {3, 2, 1, -1.0},    // [H,Q] = -iP
                         {3, 1, 2, 1.0}});   // [H,P] = iQ
}

LieAlgebraSpec make_ho4_general(const BuiltinParams& p) {
  if (!(p.mass > 0.0) || !(p.omega > 0.0)) {
    throw Error("ho4_general needs positive mass and frequency");
  }
  return LieAlgebraSpec("ho4_general", {"E", "P", "Q", "H"},
                        {{2, 1, 0, 1.0},
                         {3, 2, 1, -1.0 / p.mass},
                         {3, 1, 2, p.mass * p.omega * p.omega}});
}

LieAlgebraSpec make_sp2_k() {
  return LieAlgebraSpec("sp2_K", {"K1", "K2", "K3"},
                        {{0, 1, 2, 1.0},    // [K1,K2] = iK3
                         {2, 0, 0, -2.0},   // [K3,K1] = -2iK1
                         {2, 1, 1, 2.0}});  // [K3,K2] = 2iK2
}

LieAlgebraSpec make_sp2_j() {
  return LieAlgebraSpec("sp2_J", {"J1", "J2", "J3"},
                        {{0, 1, 2, -2.0},   // [J1,J2] = -2iJ3
                         {1, 2, 0, 2.0},    // [J2,J3] = 2iJ1
                         {2, 0, 1, 2.0}});  // [J3,J1] = 2iJ2
}

LieAlgebraSpec make_coupled_m4() {
  return LieAlgebraSpec("coupled_M4", {"M1", "M2", "M3", "M4"},
                        {{0, 2, 3, -1.0},
                         {0, 3, 2, 1.0},
                         {1, 2, 3, 1.0},
                         {1, 3, 2, -1.0},
                         {2, 3, 0, -2.0},
                         {2, 3, 1, 2.0}});
}

// T1 = (Q1^2+P1^2)/2, T2 = (Q2^2+P2^2)/2, T3 = (Q1^2-P1^2)/2,
// T4 = (Q2^2-P2^2)/2, T5 = Q1P1+P1Q1, T6 = Q2P2+P2Q2, T7 = Q1Q2+P1P2,
// T8 = Q1P2+P1Q2, T9 = Q1Q2-P1P2, T10 = Q1P2-P1Q2.
// Entries are the commutators of these operators; see README for the
// differences from the commonly quoted table.
LieAlgebraSpec make_sp4_t10() {
  std::vector<StructureConstant> e = {
      {0, 2, 4, -1}, {0, 4, 2, 4},  {0, 6, 9, 1},  {0, 7, 8, 1},
      {0, 8, 7, -1}, {0, 9, 6, -1},

      {1, 3, 5, -1}, {1, 5, 3, 4},  {1, 6, 9, -1}, {1, 7, 8, 1},
      {1, 8, 7, -1}, {1, 9, 6, 1},

      {2, 4, 0, 4},  {2, 6, 7, 1},  {2, 7, 6, 1},  {2, 8, 9, -1},
      {2, 9, 8, -1},

      {3, 5, 1, 4},  {3, 6, 7, 1},  {3, 7, 6, 1},  {3, 8, 9, 1},
      {3, 9, 8, 1},

      {4, 6, 8, -2}, {4, 7, 9, -2}, {4, 8, 6, -2}, {4, 9, 7, -2},
      {5, 6, 8, -2}, {5, 7, 9, 2},  {5, 8, 6, -2}, {5, 9, 7, 2},

      {6, 7, 2, 2},  {6, 7, 3, 2},  {6, 8, 4, -1}, {6, 8, 5, -1},
      {6, 9, 0, 2},  {6, 9, 1, -2}, {7, 8, 0, -2}, {7, 8, 1, -2},
      {7, 9, 4, 1},  {7, 9, 5, -1}, {8, 9, 2, 2},  {8, 9, 3, -2},
  };
  return LieAlgebraSpec("sp4_T10",
                        {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9",
                         "T10"},
                        e);
}

// Generators (M1, M4, M5, M6, M7) = ((Q^2+P^2)/2, Q^3, P^3,
// Q^2P+QPQ+PQ^2, QP^2+PQP+P^2Q). Brackets among the cubic generators are
// quartic and dropped.
LieAlgebraSpec make_anharm5() {
  Truncation t;
  t.heavy = {false, true, true, true, true};
  for (int i = 1; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) t.open_pairs.emplace_back(i, j);
  return LieAlgebraSpec("anharm5", {"M1", "M4", "M5", "M6", "M7"},
                        {{0, 1, 3, -1},   // [M1,M4] = -iM6
                         {0, 2, 4, 1},    // [M1,M5] = iM7
                         {0, 3, 4, -2},   // [M1,M6] = -2iM7 + 3iM4
                         {0, 3, 1, 3},
                         {0, 4, 3, 2},    // [M1,M7] = 2iM6 - 3iM5
                         {0, 4, 2, -3}},
                        std::move(t));
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "ho4", "ho4_general", "sp2_K", "sp2_J", "coupled_M4", "sp4_T10", "anharm5"};
  return names;
}

LieAlgebraSpec builtin(std::string_view name, const BuiltinParams& params) {
  if (name == "ho4") return make_ho4();
  if (name == "ho4_general") return make_ho4_general(params);
  if (name == "sp2_K") return make_sp2_k();
  if (name == "sp2_J") return make_sp2_j();
  if (name == "coupled_M4") return make_coupled_m4();
  if (name == "sp4_T10") return make_sp4_t10();
  if (name == "anharm5") return make_anharm5();
  throw NotRegistered("no builtin algebra named '" + std::string(name) + "'");
}

ValidationReport validate(const LieAlgebraSpec& spec) {
  ValidationReport report;
  const int n = spec.dim();

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (spec.f(i, j, k) != -spec.f(j, i, k))
          report.antisymmetry_violations.push_back({i, j, k});

  // sum_M f_IJ^M f_MK^L + f_JK^M f_MI^L + f_KI^M f_MJ^L
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const bool closed = !spec.is_open_pair(i, j) &&
                            !spec.is_open_pair(j, k) && !spec.is_open_pair(i, k);
        for (int l = 0; l < n; ++l) {
          double r = 0.0;
          for (int m = 0; m < n; ++m) {
            r += spec.f(i, j, m) * spec.f(m, k, l) +
                 spec.f(j, k, m) * spec.f(m, i, l) +
                 spec.f(k, i, m) * spec.f(m, j, l);
          }
          report.max_jacobi_residual = std::max(report.max_jacobi_residual, std::abs(r));
          if (closed) {
            report.max_jacobi_residual_closed =
                std::max(report.max_jacobi_residual_closed, std::abs(r));
          }
        }
      }
    }
  }

  if (spec.truncated()) {
    report.closure = "truncated";
    report.open_pairs = spec.truncation().open_pairs;
  }
  return report;
}

BasisChange k_to_j_basis_change() {
  Eigen::MatrixXd t(3, 3);
  t << 0, 0, 1,   //
      1, -1, 0,   //
      1, 1, 0;
  return {"sp2_K", "sp2_J", t};
}

LieAlgebraSpec change_basis(const LieAlgebraSpec& spec, const BasisChange& change) {
  const int n = spec.dim();
  const Eigen::MatrixXd& t = change.matrix;
  if (t.rows() != n || t.cols() != n) {
    throw DimMismatch("basis change is " + std::to_string(t.rows()) + "x" +
                      std::to_string(t.cols()) + " but algebra has dim " +
                      std::to_string(n));
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(t);
  if (!lu.isInvertible()) {
    throw SingularBasisChange("basis change " + change.from + " -> " + change.to +
                              " is singular");
  }
  const Eigen::MatrixXd inv = lu.inverse();

  // f'_ab^g = sum T_ac T_bd f_cd^e Tinv_eg
  std::vector<double> dense(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t(a, c) == 0.0) continue;
        for (int d = 0; d < n; ++d) {
          if (t(b, d) == 0.0) continue;
          const double w = t(a, c) * t(b, d);
          for (int e = 0; e < n; ++e) {
            const double fe = spec.f(c, d, e);
            if (fe == 0.0) continue;
            for (int g = 0; g < n; ++g) {
              dense[(static_cast<std::size_t>(a) * n + b) * n + g] += w * fe * inv(e, g);
            }
          }
        }
      }
    }
  }
  // Exact cancellations can leave -0.0; normalize so tables compare cleanly.
  for (double& v : dense) {
    if (v == 0.0) v = 0.0;
  }

  std::vector<std::string> labels;
  if (change.to == "sp2_J" && n == 3) {
    labels = {"J1", "J2", "J3"};
  } else {
    for (int i = 0; i < n; ++i) labels.push_back(change.to + "_" + std::to_string(i + 1));
  }
  return LieAlgebraSpec::from_dense(change.to, std::move(labels), std::move(dense));
}

std::string to_json(const LieAlgebraSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name();
  j["labels"] = spec.labels();
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : spec.upper_entries()) {
    entries.push_back({e.i, e.j, e.k, e.value});
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

}  // namespace qcbound
