// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcbound/boundary_match.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/LU>

#include "qcbound/errors.hpp"
#include "qcbound/geodesic_path.hpp"
#include "qcbound/special.hpp"

namespace qcbound {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPeriod = 4.0 * kPi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(std::string(what) + " must be positive and finite");
  }
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(std::string(what) + " must be finite");
}

// |d| small enough that the pole at d = 0 is hit.
bool at_pole(double d) { return std::abs(d) < kPoleTolerance; }

MatchResult divergent(ClosedFormFamily fam, long branch, std::string where) {
  MatchResult r;
  r.family = fam;
  r.branch = branch;
  r.divergence = std::move(where);
  return r;
}

MatchResult finite(ClosedFormFamily fam, long branch, Eigen::VectorXd v0) {
  MatchResult r;
  r.family = fam;
  r.branch = branch;
  r.v0 = std::move(v0);
  return r;
}

MatchResult match_ho_quadratic(double omega, double lambda, double t) {
  const double x = (omega + lambda) * t;
  const double v3 = reduce_periodic(x, kPeriod);
  const long branch = periodic_branch(x, kPeriod);
  const double lt = lambda * t;
  const auto fam = ClosedFormFamily::sp2_j();
  if (lt != 0.0 && v3 > kSeriesSwitch && at_pole(std::sin(2.0 * v3))) {
    return divergent(fam, branch, "sin(2 v3) = 0 at v3 = " + fmt(v3));
  }
  Eigen::VectorXd v(3);
  v << 2.0 * v3 * lt, lt == 0.0 ? 0.0 : lt * x_cot(2.0 * v3), v3;
  auto r = finite(fam, branch, v);
  if (branch != 0 && lambda != 0.0) {
    r.notes.push_back("periodicity reduction in (omega+lambda)t is approximate for large lambda");
  }
  return r;
}

}  // namespace

const std::vector<std::string>& system_names() {
  static const std::vector<std::string> names = {
      "displacement", "ho",           "ho_linear", "sp2_ho",      "iho",
      "ho_quadratic", "free_particle", "coupled",  "anharm_cubic"};
  return names;
}

TargetSpec make_target(std::string_view system, const std::map<std::string, double>& params) {
  auto get = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  const double omega = get("omega", 1.0);
  const double t = get("t", 0.0);
  const double lambda = get("lambda", 0.0);
  if (system == "displacement") return target::Displacement{{get("re", 0.0), get("im", 0.0)}};
  if (system == "ho") return target::HarmonicOscillator{omega, t};
  if (system == "ho_linear") return target::HoLinear{omega, lambda, t};
  if (system == "sp2_ho") return target::Sp2Oscillator{omega, t};
  if (system == "iho") return target::InvertedOscillator{get("Omega", 1.0), t};
  if (system == "ho_quadratic") return target::HoQuadratic{omega, lambda, t};
  if (system == "free_particle") return target::FreeParticle{get("m", 1.0), t};
  if (system == "coupled") {
    return target::CoupledOscillators{get("omega1", 1.0), get("omega2", 1.0), get("mu", 0.0),
                                      t, get("q", 1.0), get("p", 1.0)};
  }
  if (system == "anharm_cubic") {
    return target::AnharmonicCubic{omega, lambda, t, get("G11", 1.0), get("p", 1e6)};
  }
  throw Unsupported("unknown system '" + std::string(system) + "'");
}

std::string system_name(const TargetSpec& target) {
  return std::visit(Overloaded{
                        [](const target::Displacement&) { return "displacement"; },
                        [](const target::HarmonicOscillator&) { return "ho"; },
                        [](const target::HoLinear&) { return "ho_linear"; },
                        [](const target::Sp2Oscillator&) { return "sp2_ho"; },
                        [](const target::InvertedOscillator&) { return "iho"; },
                        [](const target::HoQuadratic&) { return "ho_quadratic"; },
                        [](const target::FreeParticle&) { return "free_particle"; },
                        [](const target::CoupledOscillators&) { return "coupled"; },
                        [](const target::AnharmonicCubic&) { return "anharm_cubic"; },
                    },
                    target);
}

ClosedFormFamily family_for(const TargetSpec& target) {
  return std::visit(
      Overloaded{
          [](const target::Displacement&) { return ClosedFormFamily::ho4(); },
          [](const target::HarmonicOscillator&) { return ClosedFormFamily::ho4(); },
          [](const target::HoLinear&) { return ClosedFormFamily::ho4(); },
          [](const target::Sp2Oscillator&) { return ClosedFormFamily::sp2_j(); },
          [](const target::InvertedOscillator&) { return ClosedFormFamily::sp2_j(); },
          [](const target::HoQuadratic&) { return ClosedFormFamily::sp2_j(); },
          [](const target::FreeParticle&) { return ClosedFormFamily::sp2_j(); },
          [](const target::CoupledOscillators& c) { return ClosedFormFamily::coupled(c.q, c.p); },
          [](const target::AnharmonicCubic& a) { return ClosedFormFamily::anharm(a.G11, a.p); },
      },
      target);
}

Eigen::VectorXd target_coefficients(const TargetSpec& target) {
  return std::visit(
      Overloaded{
          [](const target::Displacement& d) {
            Eigen::VectorXd c(4);
            c << 0.0, std::sqrt(2.0) * d.alpha.real(), -std::sqrt(2.0) * d.alpha.imag(), 0.0;
            return c;
          },
          [](const target::HarmonicOscillator& h) {
            Eigen::VectorXd c(4);
            c << 0.0, 0.0, 0.0, h.omega * h.t;
            return c;
          },
          [](const target::HoLinear& h) {
            Eigen::VectorXd c(4);
            c << 0.0, 0.0, h.lambda * h.t, h.omega * h.t;
            return c;
          },
          [](const target::Sp2Oscillator& h) {
            Eigen::VectorXd c(3);
            c << 0.0, 0.0, h.omega * h.t;
            return c;
          },
          [](const target::InvertedOscillator& h) {
            Eigen::VectorXd c(3);
            c << 0.0, -h.Omega * h.t, 0.0;
            return c;
          },
          [](const target::HoQuadratic& h) {
            Eigen::VectorXd c(3);
            c << 0.0, h.lambda * h.t, (h.omega + h.lambda) * h.t;
            return c;
          },
          [](const target::FreeParticle& f) {
            const double w = 1.0 / f.m;
            Eigen::VectorXd c(3);
            c << 0.0, -0.5 * w * f.t, 0.5 * w * f.t;
            return c;
          },
          [](const target::CoupledOscillators& c) {
            Eigen::VectorXd out(4);
            out << c.omega1 * c.t, c.omega2 * c.t, c.mu * c.mu * c.t, 0.0;
            return out;
          },
          [](const target::AnharmonicCubic& a) {
            Eigen::VectorXd c(5);
            c << a.omega * a.t, a.lambda * a.t, 0.0, 0.0, 0.0;
            return c;
          },
      },
      target);
}

double reduce_periodic(double x, double period) {
  if (!(period > 0.0)) throw Error("period must be positive");
  return std::abs(x - period * std::floor((x + period / 2) / period));
}

long periodic_branch(double x, double period) {
  if (!(period > 0.0)) throw Error("period must be positive");
  return static_cast<long>(std::floor((x + period / 2) / period));
}

MatchResult match(const TargetSpec& target) {
  return std::visit(
      Overloaded{
          [](const target::Displacement& d) {
            require_finite(d.alpha.real(), "Re(alpha)");
            require_finite(d.alpha.imag(), "Im(alpha)");
            auto r = finite(ClosedFormFamily::ho4(), 0, target_coefficients(d));
            return r;
          },
          [](const target::HarmonicOscillator& h) {
            require_positive(h.omega, "omega");
            require_finite(h.t, "t");
            const double x = h.omega * h.t;
            Eigen::VectorXd v(4);
            v << 0.0, 0.0, 0.0, reduce_periodic(x, kPeriod);
            return finite(ClosedFormFamily::ho4(), periodic_branch(x, kPeriod), v);
          },
          [](const target::HoLinear& h) {
            require_positive(h.omega, "omega");
            require_finite(h.lambda, "lambda");
            require_finite(h.t, "t");
            const double x = h.omega * h.t;
            const double vh = reduce_periodic(x, kPeriod);
            const long branch = periodic_branch(x, kPeriod);
            const double lt = h.lambda * h.t;
            const auto fam = ClosedFormFamily::ho4();
            // v_H = 0 is removable: x cot(x/2) -> 2.
            if (lt != 0.0 && vh > kSeriesSwitch && at_pole(std::sin(vh / 2))) {
              return divergent(fam, branch, "no solution at v_H = " + fmt(vh));
            }
            Eigen::VectorXd v(4);
            v << 0.0, 0.5 * vh * lt, lt == 0.0 ? 0.0 : 0.5 * lt * x_cot_half(vh), vh;
            return finite(fam, branch, v);
          },
          [](const target::Sp2Oscillator& h) {
            require_positive(h.omega, "omega");
            require_finite(h.t, "t");
            const double x = h.omega * h.t;
            Eigen::VectorXd v(3);
            v << 0.0, 0.0, reduce_periodic(x, kPeriod);
            return finite(ClosedFormFamily::sp2_j(), periodic_branch(x, kPeriod), v);
          },
          [](const target::InvertedOscillator& h) {
            require_finite(h.Omega, "Omega");
            require_finite(h.t, "t");
            Eigen::VectorXd v(3);
            v << 0.0, -h.Omega * h.t, 0.0;
            return finite(ClosedFormFamily::sp2_j(), 0, v);
          },
          [](const target::HoQuadratic& h) {
            require_positive(h.omega, "omega");
            require_finite(h.lambda, "lambda");
            require_finite(h.t, "t");
            return match_ho_quadratic(h.omega, h.lambda, h.t);
          },
          [](const target::FreeParticle& f) {
            require_positive(f.m, "m");
            require_finite(f.t, "t");
            const double w = 1.0 / f.m;
            auto r = match_ho_quadratic(w, -0.5 * w, f.t);
            r.notes.clear();
            return r;
          },
          [](const target::CoupledOscillators& c) {
            require_finite(c.omega1, "omega1");
            require_finite(c.omega2, "omega2");
            require_finite(c.mu, "mu");
            require_finite(c.t, "t");
            require_positive(c.q, "q");
            require_positive(c.p, "p");
            const auto fam = ClosedFormFamily::coupled(c.q, c.p);
            const double sum_raw = (c.omega1 + c.omega2) * c.t;
            const double diff_raw = (c.omega1 - c.omega2) * c.t;
            const double sum = reduce_periodic(sum_raw, kPeriod);
            const double diff = reduce_periodic(diff_raw, kPeriod);
            const long branch = periodic_branch(sum_raw, kPeriod);
            const double m2t = c.mu * c.mu * c.t;
            const double x = (c.p - 2.0 * c.q) * diff / (2.0 * c.p);

            std::vector<std::string> notes{
                "unreduced v1+v2 = " + fmt(sum_raw) + ", v1-v2 = " + fmt(diff_raw)};
            if (c.p < c.q) notes.push_back("p < q lies outside the studied regime");
            if (m2t != 0.0 && std::abs(x) > kSeriesSwitch && at_pole(std::sin(x))) {
              auto r = divergent(fam, branch, "sin((p-2q)(v1-v2)/(2p)) = 0 at v1-v2 = " + fmt(diff));
              r.notes = std::move(notes);
              return r;
            }
            Eigen::VectorXd v(4);
            v << 0.5 * (sum + diff), 0.5 * (sum - diff), m2t * x_cot(x), m2t * x;
            auto r = finite(fam, branch, v);
            r.notes = std::move(notes);
            return r;
          },
          [](const target::AnharmonicCubic& a) {
            require_positive(a.omega, "omega");
            require_finite(a.lambda, "lambda");
            require_finite(a.t, "t");
            require_positive(a.G11, "G11");
            require_positive(a.p, "p");
            const auto fam = ClosedFormFamily::anharm(a.G11, a.p);
            const double x = a.omega * a.t;
            const double v1 = reduce_periodic(x, kPeriod);
            const long branch = periodic_branch(x, kPeriod);
            const double lt = a.lambda * a.t;
            const double den = 1.0 + 2.0 * std::cos(v1);
            if (lt != 0.0) {
              if (at_pole(den)) return divergent(fam, branch, "1 + 2 cos(v1) = 0 at v1 = " + fmt(v1));
              if (v1 > kSeriesSwitch && at_pole(std::sin(v1 / 2))) {
                return divergent(fam, branch, "sin(v1/2) = 0 at v1 = " + fmt(v1));
              }
            }
            Eigen::VectorXd v = Eigen::VectorXd::Zero(5);
            v[0] = v1;
            if (lt != 0.0) {
              v[1] = 3.0 * lt * std::cos(v1) * x_cot_half(v1) / (2.0 * den);
              v[3] = 1.5 * v1 * lt;
              v[4] = 3.0 * v1 * lt * std::sin(v1) / (2.0 * den);
            }
            return finite(fam, branch, v);
          },
      },
      target);
}

double verify_match(const MatchResult& result, const TargetSpec& target) {
  if (result.divergent()) throw Error("cannot verify a divergent match: " + result.divergence);
  const auto sol = solve_closed_form(result.family, *result.v0);
  const Eigen::VectorXd c = leading_order_coeffs(sol)(1.0);
  const Eigen::VectorXd want = target_coefficients(target);
  if (c.size() != want.size()) throw DimMismatch("match and target dims differ");

  Eigen::VectorXd diff = c - want;
  auto compact = [&](int i) {
    diff[i] = reduce_periodic(c[i], kPeriod) - reduce_periodic(want[i], kPeriod);
  };
  std::visit(Overloaded{
                 [&](const target::HarmonicOscillator&) { compact(3); },
                 [&](const target::HoLinear&) { compact(3); },
                 [&](const target::Sp2Oscillator&) { compact(2); },
                 [&](const target::HoQuadratic&) { compact(2); },
                 [&](const target::FreeParticle&) { compact(2); },
                 [&](const target::AnharmonicCubic&) { compact(0); },
                 [&](const target::CoupledOscillators&) {
                   diff[0] = reduce_periodic(c[0] + c[1], kPeriod) -
                             reduce_periodic(want[0] + want[1], kPeriod);
                   diff[1] = reduce_periodic(c[0] - c[1], kPeriod) -
                             reduce_periodic(want[0] - want[1], kPeriod);
                 },
                 [](const auto&) {},
             },
             target);
  return diff.cwiseAbs().maxCoeff();
}

MatchResult match_numeric(const LieAlgebraSpec& algebra, const PenaltyMatrix& g,
                          const Eigen::VectorXd& target_coeffs,
                          std::optional<Eigen::VectorXd> guess, double tol, int max_iter) {
  const int n = algebra.dim();
  if (target_coeffs.size() != n) throw DimMismatch("target coefficients have the wrong length");
  constexpr double kStep = 1e-3;
  auto residual = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return leading_order_coeffs(solve_numeric(algebra, g, v, kStep))(1.0) - target_coeffs;
  };

  MatchResult out;
  out.notes.push_back("experimental numeric shooting on " + algebra.name());
  Eigen::VectorXd v = guess.value_or(target_coeffs);
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd f;
    try {
      f = residual(v);
    } catch (const NumericBlowup& e) {
      out.divergence = std::string("integration blew up: ") + e.what();
      return out;
    }
    const double err = f.cwiseAbs().maxCoeff();
    if (err <= tol) {
      out.v0 = v;
      out.notes.push_back("converged in " + std::to_string(it) + " iterations, residual " + fmt(err));
      return out;
    }
    Eigen::MatrixXd jac(n, n);
    for (int j = 0; j < n; ++j) {
      const double dh = 1e-6 * std::max(1.0, std::abs(v[j]));
      Eigen::VectorXd vp = v, vm = v;
      vp[j] += dh;
      vm[j] -= dh;
      jac.col(j) = (residual(vp) - residual(vm)) / (2 * dh);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    if (!lu.isInvertible()) {
      out.divergence = "singular Jacobian at iteration " + std::to_string(it);
      return out;
    }
    v -= lu.solve(f);
  }
  out.divergence = "no convergence after " + std::to_string(max_iter) + " iterations";
  return out;
}

ProductFormDisplacement displacement_product_form(std::complex<double> alpha) {
  using namespace std::complex_literals;
  const double r2 = std::sqrt(2.0);
  ProductFormDisplacement d;
  d.v_p = 1.0i * r2 * alpha.imag();
  d.v_q = 1.0i * r2 * alpha.real();
  d.hermitian_norm = std::sqrt(std::norm(d.v_p) + std::norm(d.v_q));
  d.quoted_bound = 2.0 * std::abs(alpha);
  return d;
}

}  // namespace qcbound
