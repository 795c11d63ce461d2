// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

// Property suites behind `qc-bound verify`.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <json.hpp>

#include "cli.hpp"
#include "qcbound/errors.hpp"
#include "qcbound/geodesic_path.hpp"
#include "qcbound/lie_algebra.hpp"
#include "qcbound/matrix_oracle.hpp"

namespace qcbound::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20260101;

void add(VerifyReport& r, std::string name, double residual, double tol) {
  const bool pass = std::isfinite(residual) && residual <= tol;
  r.checks.push_back({std::move(name), residual, pass});
}

void algebra_suite(VerifyReport& r) {
  for (const auto& name : builtin_names()) {
    const auto spec = builtin(name, {2.0, 0.5});
    const auto rep = validate(spec);
    add(r, "antisymmetry:" + name, static_cast<double>(rep.antisymmetry_violations.size()), 0.0);
    if (spec.truncated()) {
      add(r, "jacobi_closed:" + name, rep.max_jacobi_residual_closed, 0.0);
    } else {
      add(r, "jacobi:" + name, rep.max_jacobi_residual, 0.0);
    }
  }

  const auto j = change_basis(builtin("sp2_K"), k_to_j_basis_change());
  const auto target_table = builtin("sp2_J");
  const auto& want = target_table.dense();
  double d = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) d = std::max(d, std::abs(j.dense()[i] - want[i]));
  add(r, "basis_change:sp2_K->sp2_J", d, 0.0);

  // M1 + M2 is central; (M1 - M2, M3, M4) close among themselves.
  const auto m = builtin("coupled_M4");
  auto e = [](int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
    v[i] = 1.0;
    return v;
  };
  const Eigen::VectorXd center = e(0) + e(1), diff = e(0) - e(1);
  double res = 0.0;
  for (int i = 0; i < 4; ++i) res = std::max(res, m.bracket(center, e(i)).cwiseAbs().maxCoeff());
  res = std::max(res, (m.bracket(diff, e(2)) + 2.0 * e(3)).cwiseAbs().maxCoeff());
  res = std::max(res, (m.bracket(diff, e(3)) - 2.0 * e(2)).cwiseAbs().maxCoeff());
  res = std::max(res, (m.bracket(e(2), e(3)) + 2.0 * diff).cwiseAbs().maxCoeff());
  add(r, "coupled_M4:su2_decomposition", res, 0.0);
}

Eigen::VectorXd random_velocity(std::mt19937_64& rng, int n, double max_norm) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = u(rng);
  const double scale = std::uniform_real_distribution<double>(0.0, max_norm)(rng);
  return v / v.norm() * scale;
}

void geodesic_suite(VerifyReport& r) {
  std::mt19937_64 rng(kSeed);
  const std::vector<ClosedFormFamily> families = {
      ClosedFormFamily::ho4(), ClosedFormFamily::ho4(0.5, 2.0, 1.5), ClosedFormFamily::sp2_j(),
      ClosedFormFamily::coupled(1.0, 10.0), ClosedFormFamily::anharm(1.0, 100.0)};
  for (const auto& fam : families) {
    const auto spec = builtin(fam.algebra());
    double dev = 0.0, drift = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
      const Eigen::VectorXd v0 = random_velocity(rng, fam.dim(), 10.0);
      const auto exact = solve_closed_form(spec, fam, v0);
      const auto num = solve_numeric(spec, fam.penalty(), v0);
      for (int k = 0; k <= 100; ++k) {
        const double s = k / 100.0;
        dev = std::max(dev, (exact(s) - num(s)).cwiseAbs().maxCoeff());
      }
      if (fam.tag != ClosedFormTag::anharm_p) {
        const double e0 = num.speed_squared(0.0);
        for (const auto& state : num.numeric().states) {
          double e = 0.0;
          for (int i = 0; i < state.size(); ++i) e += fam.penalty()[i] * state[i] * state[i];
          drift = std::max(drift, std::abs(e - e0) / (1.0 + e0));
        }
      }
    }
    const std::string tag = to_string(fam.tag);
    add(r, "closed_vs_numeric:" + tag, dev, 1e-7);
    if (fam.tag != ClosedFormTag::anharm_p) add(r, "speed_drift:" + tag, drift, 1e-9);
  }

  std::uniform_real_distribution<double> w(0.1, 3.0), lam(-0.5, 0.5), tt(0.0, 30.0);
  const std::vector<std::pair<std::string, std::function<TargetSpec()>>> systems = {
      {"displacement", [&] { return target::Displacement{{lam(rng) * 6, lam(rng) * 6}}; }},
      {"ho", [&] { return target::HarmonicOscillator{w(rng), tt(rng)}; }},
      {"ho_linear", [&] { return target::HoLinear{w(rng), lam(rng), tt(rng)}; }},
      {"sp2_ho", [&] { return target::Sp2Oscillator{w(rng), tt(rng)}; }},
      {"iho", [&] { return target::InvertedOscillator{w(rng), tt(rng)}; }},
      {"ho_quadratic", [&] { return target::HoQuadratic{w(rng), lam(rng), tt(rng) / 10}; }},
      {"free_particle", [&] { return target::FreeParticle{w(rng), tt(rng)}; }},
      {"coupled",
       [&] {
         return target::CoupledOscillators{w(rng), w(rng), w(rng), tt(rng) / 10, 1.0,
                                           std::uniform_real_distribution<double>(1.5, 100)(rng)};
       }},
      {"anharm_cubic",
       [&] { return target::AnharmonicCubic{w(rng), lam(rng) / 2, tt(rng) / 3, 1.0, 1e6}; }},
  };
  for (const auto& [name, make] : systems) {
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const TargetSpec t = make();
      const MatchResult m = match(t);
      if (m.divergent()) continue;
      worst = std::max(worst, verify_match(m, t));
    }
    add(r, "round_trip:" + name, worst, 1e-9);
  }

  Eigen::VectorXd v0(4);
  v0 << 0.0, 0.7, -1.1, 0.4;
  std::vector<double> s_grid;
  for (int k = 0; k <= 100; ++k) s_grid.push_back(k / 100.0);
  add(r, "product_form_residual",
      residual_product_form(product_form_coeffs_ho4(v0),
                            solve_closed_form(ClosedFormFamily::ho4(), v0), s_grid),
      1e-10);
}

void oracle_suite(VerifyReport& r) {
  const auto sp2 = builtin("sp2_J");
  const auto two = sp2_j_matrix_rep();
  add(r, "commutator:sp2_J_2x2", commutator_residual(two, sp2), 1e-12);
  add(r, "commutator:fock_ho4", commutator_residual(fock_rep_ho4(32), builtin("ho4")), 1e-10);
  add(r, "commutator:fock_sp2_J", commutator_residual(fock_rep_sp2_j(32), sp2), 1e-10);

  add(r, "period:sp2_J_2x2", std::abs(spectrum_period_check(two, 1.0) - 2 * kPi), 1e-12);
  add(r, "period:fock", std::abs(spectrum_period_check(fock_rep_ho4(16), 1.0) - 4 * kPi), 1e-12);

  const auto fam = ClosedFormFamily::sp2_j();
  Eigen::VectorXd v0(3);
  v0 << 0.1, 0.0, 0.2;
  auto deviation = [&](const Eigen::VectorXd& v) {
    const auto sol = solve_closed_form(fam, v);
    const Eigen::MatrixXcd poe = path_ordered_exponential(two, sol, 4000);
    const Eigen::MatrixXcd lo = exp_generator(two, leading_order_coeffs(sol)(1.0));
    return block_norm(two, poe - lo);
  };
  // The dropped second-order Dyson term alone is about 4e-3 here.
  add(r, "poe_vs_leading_order", deviation(v0), 1e-2);

  Eigen::VectorXd dir(3);
  dir << 1.0, 0.0, 2.0;
  dir /= dir.norm();
  const std::vector<double> norms = {0.02, 0.04, 0.08};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double n : norms) {
    const double x = std::log(n), y = std::log(deviation(dir * n));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(norms.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  add(r, "cubic_scaling_exponent", std::abs(slope - 3.0), 0.5);
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"algebra", "geodesic", "oracle", "all"};
  return names;
}

VerifyReport run_verify(const std::string& suite) {
  VerifyReport r{suite, {}};
  if (suite == "algebra" || suite == "all") algebra_suite(r);
  if (suite == "geodesic" || suite == "all") geodesic_suite(r);
  if (suite == "oracle" || suite == "all") oracle_suite(r);
  if (r.checks.empty()) throw Unsupported("unknown suite '" + suite + "'");
  return r;
}

std::string to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  }
  return j.dump();
}

}  // namespace qcbound::cli
