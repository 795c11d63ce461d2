// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

// Test oracle: structure constants from phase-space polynomials.
//
// For Weyl-ordered generators of degree <= 2 the operator commutator is
// exactly i times the Poisson bracket, and the same holds for a quadratic
// against any polynomial. That covers every table the library registers.

#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qcbound::testing {

// Exponents of (q1, p1, q2, p2).
using Monomial = std::array<int, 4>;

class Poly {
 public:
  Poly() = default;
  Poly(double c) {  // NOLINT(google-explicit-constructor)
    if (c != 0.0) terms_[{0, 0, 0, 0}] = c;
  }

  static Poly var(int i) {
    Poly p;
    Monomial m{0, 0, 0, 0};
    m[i] = 1;
    p.terms_[m] = 1.0;
    return p;
  }

  const std::map<Monomial, double>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + o * -1.0; }
  Poly operator*(double s) const {
    Poly r;
    for (const auto& [m, c] : terms_) r.add(m, c * s);
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [a, ca] : terms_) {
      for (const auto& [b, cb] : o.terms_) {
        Monomial m;
        for (int i = 0; i < 4; ++i) m[i] = a[i] + b[i];
        r.add(m, ca * cb);
      }
    }
    return r;
  }

  Poly derivative(int i) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d = m;
      d[i] -= 1;
      r.add(d, c * m[i]);
    }
    return r;
  }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
  }

 private:
  void add(const Monomial& m, double c) {
    const double v = terms_[m] + c;
    if (v == 0.0) {
      terms_.erase(m);
    } else {
      terms_[m] = v;
    }
  }

  std::map<Monomial, double> terms_;
};

inline Poly operator*(double s, const Poly& p) { return p * s; }

// {A, B} = sum over modes of dA/dq dB/dp - dA/dp dB/dq.
inline Poly poisson(const Poly& a, const Poly& b) {
  Poly r;
  for (int mode = 0; mode < 2; ++mode) {
    const int q = 2 * mode, p = 2 * mode + 1;
    r = r + a.derivative(q) * b.derivative(p) - a.derivative(p) * b.derivative(q);
  }
  return r;
}

// Coefficients x with sum_k x_k basis_k == target, or nullopt if target is
// outside the span.
inline std::optional<Eigen::VectorXd> decompose(const std::vector<Poly>& basis,
                                                const Poly& target) {
  std::map<Monomial, int> rows;
  auto row_of = [&](const Monomial& m) {
    auto it = rows.find(m);
    if (it != rows.end()) return it->second;
    const int r = static_cast<int>(rows.size());
    rows[m] = r;
    return r;
  };
  for (const auto& b : basis)
    for (const auto& [m, c] : b.terms()) row_of(m);
  for (const auto& [m, c] : target.terms()) row_of(m);

  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<int>(rows.size()), n);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<int>(rows.size()));
  for (int k = 0; k < n; ++k)
    for (const auto& [m, c] : basis[k].terms()) a(rows.at(m), k) = c;
  for (const auto& [m, c] : target.terms()) y(rows.at(m)) = c;

  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(y);
  if ((a * x - y).cwiseAbs().maxCoeff() > 1e-12) return std::nullopt;
  return x;
}

// Dense f[(i n + j) n + k] from [O_i, O_j] = i {O_i, O_j}. Brackets that
// leave the span are reported through `open` and left at zero.
inline std::vector<double> structure_constants(const std::vector<Poly>& basis,
                                               std::vector<std::pair<int, int>>* open = nullptr) {
  const int n = static_cast<int>(basis.size());
  std::vector<double> f(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto x = decompose(basis, poisson(basis[i], basis[j]));
      if (!x) {
        if (open && i < j) open->emplace_back(i, j);
        continue;
      }
      for (int k = 0; k < n; ++k) {
        const double v = std::abs((*x)[k]) < 1e-13 ? 0.0 : std::round((*x)[k] * 1e9) / 1e9;
        f[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
      }
    }
  }
  return f;
}

inline Poly q1() { return Poly::var(0); }
inline Poly p1() { return Poly::var(1); }
inline Poly q2() { return Poly::var(2); }
inline Poly p2() { return Poly::var(3); }

}  // namespace qcbound::testing
