// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qcbound/errors.hpp"
#include "qcbound/special.hpp"

namespace qcbound {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class F>
double gk_integrate(F&& f, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 20, rel_tol);
}

double weighted_norm(const Eigen::VectorXd& v, const PenaltyMatrix& g) {
  double acc = 0.0;
  for (int i = 0; i < v.size(); ++i) acc += g[i] * v[i] * v[i];
  return std::sqrt(acc);
}

// Indices of the pair rotated by each family; the speed is constant when the
// two weights agree.
std::pair<int, int> rotating_pair(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::ho4_equal_penalty: return {1, 2};
    case ClosedFormTag::sp2_J_equal_penalty: return {0, 1};
    case ClosedFormTag::coupled_pq: return {2, 3};
    case ClosedFormTag::anharm_p: return {-1, -1};
  }
  return {-1, -1};
}

// Antiderivative of sqrt(a + r sin y).
double sqrt_sine_primitive(double a, double r, double y) {
  const double k = std::min(1.0, std::sqrt(2.0 * r / (a + r)));
  return -2.0 * std::sqrt(a + r) * std::ellint_2(k, (std::numbers::pi - 2.0 * y) / 4.0);
}

double unit_norm(const Eigen::VectorXd& v) { return v.norm(); }

std::string formula_id(const TargetSpec& target) {
  return std::visit(Overloaded{
                        [](const target::Displacement&) { return "displacement_norm"; },
                        [](const target::HarmonicOscillator&) { return "ho_periodic"; },
                        [](const target::HoLinear&) { return "ho_linear"; },
                        [](const target::Sp2Oscillator&) { return "sp2_periodic"; },
                        [](const target::InvertedOscillator&) { return "iho_linear"; },
                        [](const target::HoQuadratic&) { return "ho_quadratic"; },
                        [](const target::FreeParticle&) { return "free_particle"; },
                        [](const target::CoupledOscillators&) { return "coupled_norm"; },
                        [](const target::AnharmonicCubic&) { return "anharm_elliptic"; },
                    },
                    target);
}

}  // namespace

AnharmonicSpeed anharmonic_speed(const Eigen::VectorXd& v, double g11, double p) {
  if (v.size() != 5) throw DimMismatch("anharmonic velocities have 5 components");
  const double v1 = v[0], v4 = v[1], v5 = v[2], v6 = v[3], v7 = v[4];
  return {
      g11 * v1 * v1 + 0.25 * p * (7 * v4 * v4 - 2 * v4 * v7 + 7 * v5 * v5 - 2 * v5 * v6 +
                                  3 * (v6 * v6 + v7 * v7)),
      0.25 * p * (-3 * v4 * v4 + 2 * v4 * v7 - 3 * v5 * v5 + 2 * v5 * v6 + v6 * v6 + v7 * v7),
      p * (v5 * v7 - v4 * v6),
  };
}

double anharmonic_length_elliptic(const Eigen::VectorXd& v0, double g11, double p) {
  const auto [a, b, c] = anharmonic_speed(v0, g11, p);
  const double v1 = v0[0];
  const double r = std::hypot(b, c);
  if (a - r < -1e-12 * std::max(1.0, a)) {
    throw Error("anharmonic integrand is negative: A - sqrt(B^2 + C^2) = " +
                std::to_string(a - r));
  }
  if (v1 == 0.0) return std::sqrt(std::max(0.0, a + b));
  if (r == 0.0) return std::sqrt(a);
  const double phi = std::atan2(b, c);
  const double span = 4.0 * v1;
  return (sqrt_sine_primitive(a, r, phi + span) - sqrt_sine_primitive(a, r, phi)) / span;
}

double anharmonic_length_quadrature(const Eigen::VectorXd& v0, double g11, double p,
                                    double rel_tol) {
  const auto [a, b, c] = anharmonic_speed(v0, g11, p);
  const double w = 4.0 * v0[0];
  return gk_integrate(
      [=](double s) {
        return std::sqrt(std::max(0.0, a + b * std::cos(w * s) + c * std::sin(w * s)));
      },
      rel_tol);
}

double length(const VelocitySolution& sol, const PenaltyMatrix& g) {
  g.check(sol.dim());
  if (sol.closed_form()) {
    const auto& fam = sol.family();
    if (fam.tag == ClosedFormTag::anharm_p) {
      const auto& w = g.weights;
      if (w[1] == w[2] && w[2] == w[3] && w[3] == w[4]) {
        return anharmonic_length_elliptic(sol.v0(), w[0], w[1]);
      }
    } else {
      const auto [i, j] = rotating_pair(fam.tag);
      if (g[i] == g[j]) return weighted_norm(sol.v0(), g);
    }
  }
  return gk_integrate(
      [&](double s) {
        const Eigen::VectorXd v = sol(s);
        return weighted_norm(v, g);
      },
      1e-10);
}

BoundResult bound(const TargetSpec& target, const BoundOptions& options) {
  BoundResult out;
  out.formula_id = formula_id(target);
  out.caveats = {"upper bound only", "leading-order Dyson, truncated group"};

  MatchResult m = match(target);
  out.branch = m.branch;
  for (auto& n : m.notes) out.caveats.push_back(std::move(n));

  if (options.coupled_raw_difference) {
    if (const auto* c = std::get_if<target::CoupledOscillators>(&target); c && !m.divergent()) {
      const double m2t = c->mu * c->mu * c->t;
      const double x = (c->p - 2.0 * c->q) * (c->omega1 - c->omega2) * c->t / (2.0 * c->p);
      out.caveats.push_back("coupling factors use the unreduced (omega1-omega2)t");
      if (m2t != 0.0 && std::abs(x) > kSeriesSwitch &&
          std::abs(std::sin(x)) < kPoleTolerance) {
        m.v0.reset();
        m.divergence = "sin((p-2q)(omega1-omega2)t/(2p)) = 0";
      } else {
        (*m.v0)[2] = m2t * x_cot(x);
        (*m.v0)[3] = m2t * x;
      }
    }
  }

  if (m.divergent()) {
    out.divergent = true;
    out.value = kInf;
    out.location = m.divergence;
    return out;
  }
  out.v0 = m.v0;
  const Eigen::VectorXd& v = *m.v0;

  if (const auto* a = std::get_if<target::AnharmonicCubic>(&target)) {
    out.value = anharmonic_length_elliptic(v, a->G11, a->p);
  } else if (std::holds_alternative<target::CoupledOscillators>(target)) {
    // The coupled bound is quoted with unit weights; q and p enter only
    // through the matched velocities.
    out.value = unit_norm(v);
    out.caveats.push_back("unit-weight norm of the matched velocities");
  } else {
    out.value = weighted_norm(v, m.family.penalty());
  }
  return out;
}

TargetSpec with_time(const TargetSpec& base, double t) {
  return std::visit(
      [t](auto spec) -> TargetSpec {
        if constexpr (std::is_same_v<decltype(spec), target::Displacement>) {
          throw Unsupported("displacement targets have no time parameter");
        } else {
          spec.t = t;
          return spec;
        }
      },
      base);
}

std::vector<std::pair<double, BoundResult>> bound_curve(const TargetSpec& base,
                                                        const std::vector<double>& t_grid,
                                                        const BoundOptions& options) {
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) throw Error("t grid must be sorted");
  std::vector<std::pair<double, BoundResult>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.emplace_back(t, bound(with_time(base, t), options));
  return out;
}

}  // namespace qcbound
