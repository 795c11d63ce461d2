// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "qcbound/euler_arnold.hpp"

namespace qcbound {

/// Targets U = exp(-i sum_I c_I O_I). Frequencies and couplings are in natural
/// units; t is a time.
namespace target {

/// D(alpha) = exp(alpha a^dag - conj(alpha) a) on ho4.
struct Displacement {
  std::complex<double> alpha;
};
/// exp(-i omega t H) on ho4.
struct HarmonicOscillator {
  double omega;
  double t;
};
/// exp(-i (omega H + lambda Q) t) on ho4.
struct HoLinear {
  double omega;
  double lambda;
  double t;
};
/// exp(-i omega t J3) on sp2_J.
struct Sp2Oscillator {
  double omega;
  double t;
};
/// Inverted oscillator (P^2 - Q^2)/2 = -J2, frequency Omega.
struct InvertedOscillator {
  double Omega;
  double t;
};
/// omega (P^2 + Q^2)/2 + lambda Q^2 = (omega + lambda) J3 + lambda J2.
struct HoQuadratic {
  double omega;
  double lambda;
  double t;
};
/// P^2/(2m), i.e. HoQuadratic with omega = 1/m and lambda = -omega/2.
struct FreeParticle {
  double m;
  double t;
};
/// omega1 M1 + omega2 M2 + mu^2 M3 on coupled_M4 with G = diag(q, q, p, p).
struct CoupledOscillators {
  double omega1;
  double omega2;
  double mu;
  double t;
  double q = 1.0;
  double p = 1.0;
};
/// omega M1 + lambda Q^3 on anharm5 with G = diag(G11, p, p, p, p).
struct AnharmonicCubic {
  double omega;
  double lambda;
  double t;
  double G11 = 1.0;
  double p = 1e6;
};

}  // namespace target

using TargetSpec =
    std::variant<target::Displacement, target::HarmonicOscillator, target::HoLinear,
                 target::Sp2Oscillator, target::InvertedOscillator, target::HoQuadratic,
                 target::FreeParticle, target::CoupledOscillators, target::AnharmonicCubic>;

/// Names accepted by make_target().
const std::vector<std::string>& system_names();

/// Builds a target from a system tag and named parameters (omega, t, lambda,
/// Omega, m, re, im, omega1, omega2, mu, q, p, G11); missing parameters take
/// the defaults omega = omega1 = 1, omega2 = 1, lambda = mu = t = 0, q = p = 1,
/// G11 = 1, m = 1 (p = 1e6 for anharm_cubic). Throws Unsupported for an unknown tag.
TargetSpec make_target(std::string_view system, const std::map<std::string, double>& params);

/// Short system tag, e.g. "ho_linear".
std::string system_name(const TargetSpec& target);

/// Closed-form family that solves the target's algebra with its penalties.
ClosedFormFamily family_for(const TargetSpec& target);

/// Target exponent coefficients c_I, in the family's generator order, before
/// any periodicity reduction.
Eigen::VectorXd target_coefficients(const TargetSpec& target);

struct MatchResult {
  /// Empty when the matching equations have no solution.
  std::optional<Eigen::VectorXd> v0;
  /// Where the matching failed, for divergent results.
  std::string divergence;
  /// Winding number removed by the periodicity reduction.
  long branch = 0;
  ClosedFormFamily family;
  std::vector<std::string> notes;

  bool divergent() const noexcept { return !v0.has_value(); }
};

/// |x - period * floor((x + period/2) / period)|, in [0, period/2].
double reduce_periodic(double x, double period);

/// floor((x + period/2) / period).
long periodic_branch(double x, double period);

/// Magnitude below which a pole denominator counts as zero.
inline constexpr double kPoleTolerance = 1e-10;

/// Solves v0 from U(1) = U_target at leading order.
MatchResult match(const TargetSpec& target);

/// Feeds result.v0 through the closed form and leading-order coefficients and
/// returns max |c_I(1) - c_I^target|, compact directions compared after
/// reduction. Throws Error for divergent results.
double verify_match(const MatchResult& result, const TargetSpec& target);

/// Experimental Newton shooter on the leading-order coefficients, using the
/// numeric integrator and a finite-difference Jacobian. Starts from `guess`
/// (or the target coefficients) and returns an empty v0 if it does not
/// converge to `tol`.
MatchResult match_numeric(const LieAlgebraSpec& algebra, const PenaltyMatrix& g,
                          const Eigen::VectorXd& target_coeffs,
                          std::optional<Eigen::VectorXd> guess = std::nullopt,
                          double tol = 1e-10, int max_iter = 50);

/// Displacement matching through the product-form parametrization, which
/// yields imaginary velocities v_P = i sqrt(2) Im(alpha),
/// v_Q = i sqrt(2) Re(alpha).
struct ProductFormDisplacement {
  std::complex<double> v_p;
  std::complex<double> v_q;
  /// sqrt(|v_P|^2 + |v_Q|^2) = sqrt(2) |alpha|.
  double hermitian_norm;
  /// 2 |alpha|, the value this route is usually quoted with.
  double quoted_bound;
};

ProductFormDisplacement displacement_product_form(std::complex<double> alpha);

}  // namespace qcbound
