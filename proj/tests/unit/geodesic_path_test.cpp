// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/geodesic_path.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qcbound/errors.hpp"
#include "qcbound/lie_algebra.hpp"

namespace qcbound {
namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<int>(xs.size()));
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

double max_abs(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }

// Composite Simpson on 1001 equally spaced points of [0, s].
Eigen::VectorXd simpson(const VelocitySolution& sol, double s) {
  constexpr int n = 1000;
  const double h = s / n;
  Eigen::VectorXd acc = sol(0.0) + sol(s);
  for (int k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * sol(k * h);
  return acc * h / 3.0;
}

Eigen::VectorXd random_v0(std::mt19937_64& rng, int dim, double norm) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = u(rng);
  return v * (norm / v.norm());
}

const std::vector<ClosedFormFamily>& families() {
  static const std::vector<ClosedFormFamily> f = {
      ClosedFormFamily::ho4(),          ClosedFormFamily::ho4(0.5, 2.0, 1.5),
      ClosedFormFamily::sp2_j(),        ClosedFormFamily::coupled(1.0, 10.0),
      ClosedFormFamily::coupled(1, 1),  ClosedFormFamily::anharm(1.0, 100.0)};
  return f;
}

TEST(LeadingOrder, Ho4ConstantHamiltonian) {
  const auto c = leading_order_coeffs(solve_closed_form(ClosedFormFamily::ho4(), vec({0, 0, 0, 1.7})));
  for (double s : {0.0, 0.4, 1.0}) EXPECT_LE(max_abs(c(s) - vec({0, 0, 0, 1.7 * s})), 1e-15);
}

TEST(LeadingOrder, Sp2JGammaFormulas) {
  const double v1 = 0.8, v3 = 1.3;
  const auto c = leading_order_coeffs(solve_closed_form(ClosedFormFamily::sp2_j(), vec({v1, 0, v3})));
  for (double s : {0.1, 0.5, 1.0}) {
    const Eigen::VectorXd g = c(s);
    EXPECT_NEAR(g[0], v1 * std::sin(4 * s * v3) / (4 * v3), 1e-15);
    EXPECT_NEAR(g[1], v1 * (1 - std::cos(4 * s * v3)) / (4 * v3), 1e-15);
    EXPECT_NEAR(g[2], s * v3, 1e-15);
  }
}

TEST(LeadingOrder, ZeroVelocityGivesZero) {
  for (const auto& fam : families()) {
    const auto c = leading_order_coeffs(solve_closed_form(fam, Eigen::VectorXd::Zero(fam.dim())));
    for (double s : {0.0, 0.5, 1.0}) EXPECT_EQ(max_abs(c(s)), 0.0) << to_string(fam.tag);
  }
}

TEST(LeadingOrder, ClosedFormMatchesSimpsonOracle) {
  std::mt19937_64 rng(5);
  for (const auto& fam : families()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto sol = solve_closed_form(fam, random_v0(rng, fam.dim(), 3.0));
      const auto c = leading_order_coeffs(sol);
      for (double s : {0.37, 1.0}) {
        EXPECT_LE(max_abs(c(s) - simpson(sol, s)), 1e-9) << to_string(fam.tag);
      }
    }
  }
}

TEST(LeadingOrder, NumericMatchesClosedForm) {
  std::mt19937_64 rng(6);
  for (const auto& fam : families()) {
    const Eigen::VectorXd v0 = random_v0(rng, fam.dim(), 3.0);
    const auto alg = builtin(fam.algebra());
    const auto exact = leading_order_coeffs(solve_closed_form(alg, fam, v0));
    const auto num = leading_order_coeffs(solve_numeric(alg, fam.penalty(), v0));
    for (double s : {0.0, 0.25, 0.61, 1.0}) {
      EXPECT_LE(max_abs(exact(s) - num(s)), 1e-9) << to_string(fam.tag);
    }
  }
}

TEST(LeadingOrder, InitialSlopeIsInitialVelocity) {
  std::mt19937_64 rng(8);
  constexpr double h = 1e-4;
  for (const auto& fam : families()) {
    const Eigen::VectorXd v0 = random_v0(rng, fam.dim(), 2.0);
    const auto alg = builtin(fam.algebra());
    for (const auto& sol : {solve_closed_form(alg, fam, v0), solve_numeric(alg, fam.penalty(), v0)}) {
      const auto c = leading_order_coeffs(sol);
      const Eigen::VectorXd slope = (-3.0 * c(0.0) + 4.0 * c(h) - c(2 * h)) / (2 * h);
      EXPECT_LE(max_abs(slope - v0), 1e-6) << to_string(fam.tag);
    }
  }
}

TEST(ProductForm, PureMomentumVelocity) {
  const auto a = product_form_coeffs_ho4(vec({0, 1.4, 0, 0}));
  for (double s : {0.2, 1.0}) {
    const auto x = a(s);
    EXPECT_EQ(x[0], 0.0);
    EXPECT_NEAR(x[1], 1.4 * s, 1e-15);
    EXPECT_EQ(x[2], 0.0);
    EXPECT_EQ(x[3], 0.0);
  }
}

TEST(ProductForm, ZeroVelocity) {
  const auto a = product_form_coeffs_ho4(Eigen::VectorXd::Zero(4));
  for (double s : {0.0, 0.5, 1.0}) {
    for (double x : a(s)) EXPECT_EQ(x, 0.0);
  }
  const auto sol = solve_closed_form(ClosedFormFamily::ho4(), Eigen::VectorXd::Zero(4));
  EXPECT_EQ(residual_product_form(a, sol, {0.0, 0.5, 1.0}), 0.0);
}

TEST(ProductForm, InitialSlopes) {
  const auto a = product_form_coeffs_ho4(vec({0, 0.9, -0.3, 1.1}));
  constexpr double h = 1e-5;
  EXPECT_NEAR((a(h)[1] - a(0)[1]) / h, 0.9, 1e-4);
  EXPECT_NEAR((a(h)[2] - a(0)[2]) / h, -0.3, 1e-4);
}

TEST(ProductForm, ResidualOfPrintedSolutionIsSmall) {
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(k / 100.0);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd v0 = random_v0(rng, 4, 2.0);
    v0[0] = 0.0;
    const double r = residual_product_form(product_form_coeffs_ho4(v0),
                                           solve_closed_form(ClosedFormFamily::ho4(), v0), grid);
    EXPECT_LE(r, 1e-10);
  }
}

TEST(ProductForm, PerturbationIsDetected) {
  const auto v0 = vec({0, 0.7, -1.1, 0.4});
  const auto exact = product_form_coeffs_ho4(v0);
  const ProductFormCoefficients bumped{[exact](double s) {
    auto x = exact(s);
    x[1] += 0.1;
    return x;
  }};
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(k / 100.0);
  EXPECT_GE(residual_product_form(bumped, solve_closed_form(ClosedFormFamily::ho4(), v0), grid),
            0.05);
}

TEST(ProductForm, AgreesWithSingleExponentialWithoutQ) {
  const auto v0 = vec({0, 1.3, 0, 0});
  const auto single = leading_order_coeffs(solve_closed_form(ClosedFormFamily::ho4(), v0))(1.0);
  const auto prod = product_form_coeffs_ho4(v0)(1.0);
  EXPECT_NEAR(single[1], prod[1], 1e-15);
  EXPECT_NEAR(single[2], prod[2], 1e-15);
}

TEST(ProductForm, Errors) {
  EXPECT_THROW(product_form_coeffs_ho4(vec({0.1, 0, 0, 0})), UnsupportedCenterVelocity);
  const auto sol = solve_closed_form(ClosedFormFamily::sp2_j(), vec({1, 0, 1}));
  EXPECT_THROW(residual_product_form(product_form_coeffs_ho4(Eigen::VectorXd::Zero(4)), sol, {0.5}),
               FamilyMismatch);
}

}  // namespace
}  // namespace qcbound
