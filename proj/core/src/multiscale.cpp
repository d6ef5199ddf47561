#include "nml/multiscale.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nml/errors.hpp"

namespace nml {

namespace {

constexpr double kBisectionTolerance = 1e-10;
constexpr double kGuardFactor = 100.0 * std::numeric_limits<double>::epsilon();

void require_time(double t) {
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
}

void require_ms1(const MsCoefficients& coeffs) {
  if (coeffs.collapsed_tau) {
    throw UnsupportedError("MS1 needs a nonzero first kernel coefficient (auxiliary scale collapsed)");
  }
}

// Frequency and quadrature weight of the oscillating factor cos(w t) + q sin(w t).
struct Oscillation {
  double frequency;
  double quadrature;
};

Oscillation oscillation(const MsCoefficients& coeffs, double alpha, MsOrder order) {
  if (order == MsOrder::MS0) return {coeffs.omega0, 0.0};
  require_ms1(coeffs);
  return {ms1_frequency(coeffs, alpha), coeffs.c1 * alpha};
}

double oscillating_factor(const Oscillation& osc, double t) {
  return std::cos(osc.frequency * t) + osc.quadrature * std::sin(osc.frequency * t);
}

// Closest zero of cos(w t) + q sin(w t) = sqrt(1 + q^2) cos(w t - atan q).
std::optional<double> nearest_pole(const Oscillation& osc, double t) {
  if (osc.frequency == 0.0) return std::nullopt;
  const double offset = std::atan(osc.quadrature) + 0.5 * std::numbers::pi;
  const double k = std::round((osc.frequency * t - offset) / std::numbers::pi);
  return (offset + k * std::numbers::pi) / osc.frequency;
}

}  // namespace

std::string_view to_string(MsOrder order) noexcept {
  return order == MsOrder::MS0 ? "ms0" : "ms1";
}

MsCoefficients derive_ms_coefficients(const KernelTaylor& taylor, double gamma, double lambda) {
  if (!(gamma > 0.0) || !(lambda > 0.0)) throw DomainError("gamma and lambda must be positive");
  if (taylor.order < 3) throw DomainError("multiple-scale coefficients need at least G0..G2");
  const double g0 = taylor[0];
  const double g1 = taylor[1];
  const double g2 = taylor[2];
  if (!(g0 > 0.0)) {
    throw UnsupportedError("G0 <= 0: the kernel has no oscillatory leading order");
  }
  if (g1 > kCollapseTolerance) {
    throw DomainError("G1 > 0 gives a growing envelope; the kernel definition is unphysical");
  }
  const bool collapsed = std::abs(g1) <= kCollapseTolerance;
  if (!collapsed && taylor.order < 4) {
    throw DomainError("B1/B0 needs G3: pass Taylor data of order 4");
  }

  const double alpha2 = lambda / gamma;
  const double alpha = std::sqrt(alpha2);
  const double g0_2 = g0 * g0;
  const double g0_3 = g0_2 * g0;

  MsCoefficients out;
  out.collapsed_tau = collapsed;
  out.omega0 = std::sqrt(g0) * gamma * alpha;
  out.decay = collapsed ? 0.0 : gamma * alpha2 * g1 / (2.0 * g0);
  out.a1_over_a0 = 0.375 * g1 * g1 / g0_3 - g2 / g0_2;
  if (!collapsed) {
    const double g3 = taylor[3];
    out.b1_over_b0 = -g1 * g1 / g0_3 + 4.0 * g2 / g0_2 - 6.0 * g3 / (g1 * g0);
  }
  out.c1 = collapsed ? 0.0 : -g1 / (2.0 * g0 * std::sqrt(g0));
  return out;
}

double ms1_frequency(const MsCoefficients& coeffs, double alpha) {
  return coeffs.omega0 * (1.0 + coeffs.a1_over_a0 * alpha * alpha);
}

Complex eval_ms0(const MsCoefficients& coeffs, double t) {
  require_time(t);
  return std::exp(coeffs.decay * t) * std::cos(coeffs.omega0 * t);
}

Complex eval_ms0_derivative(const MsCoefficients& coeffs, double t) {
  require_time(t);
  const double w = coeffs.omega0;
  return std::exp(coeffs.decay * t) * (coeffs.decay * std::cos(w * t) - w * std::sin(w * t));
}

Complex eval_ms1(const MsCoefficients& coeffs, double alpha, double t) {
  require_time(t);
  const Oscillation osc = oscillation(coeffs, alpha, MsOrder::MS1);
  return std::exp(coeffs.decay * t) * oscillating_factor(osc, t);
}

Complex eval_ms1_derivative(const MsCoefficients& coeffs, double alpha, double t) {
  require_time(t);
  const Oscillation osc = oscillation(coeffs, alpha, MsOrder::MS1);
  const double w = osc.frequency;
  const double s = std::sin(w * t);
  const double c = std::cos(w * t);
  return std::exp(coeffs.decay * t) *
         (coeffs.decay * (c + osc.quadrature * s) + w * (osc.quadrature * c - s));
}

GammaSplit gamma_split(const MsCoefficients& coeffs, double alpha, MsOrder order, double t) {
  require_time(t);
  const Oscillation osc = oscillation(coeffs, alpha, order);
  if (const auto pole = nearest_pole(osc, t); pole && std::abs(t - *pole) <= kGuardFactor * std::abs(t)) {
    throw SingularityError("dissipator is singular at t = " + std::to_string(*pole), *pole);
  }
  const double w = osc.frequency;
  const double s = std::sin(w * t);
  const double c = std::cos(w * t);
  // -2 d/dt ln(cos + q sin)
  const double primary = -2.0 * w * (osc.quadrature * c - s) / (c + osc.quadrature * s);
  return GammaSplit{primary, -2.0 * coeffs.decay};
}

std::vector<double> ms_singularities(const MsCoefficients& coeffs, double alpha, MsOrder order,
                                     double t_max) {
  if (!(t_max > 0.0)) throw DomainError("t_max must be positive");
  const Oscillation osc = oscillation(coeffs, alpha, order);
  std::vector<double> poles;
  if (osc.frequency == 0.0) return poles;

  const auto f = [&](double t) { return oscillating_factor(osc, t); };
  // Zeros are pi / |w| apart; eight samples per spacing bracket each one.
  const double step = std::numbers::pi / (8.0 * std::abs(osc.frequency));
  double lo = 0.0;
  double f_lo = f(lo);
  while (lo < t_max) {
    const double hi = std::min(lo + step, t_max);
    const double f_hi = f(hi);
    if (f_hi == 0.0) {
      poles.push_back(hi);
    } else if ((f_lo > 0.0) != (f_hi > 0.0) && f_lo != 0.0) {
      double a = lo, b = hi, fa = f_lo;
      while (b - a > kBisectionTolerance) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (fm == 0.0) { a = b = mid; break; }
        if ((fm > 0.0) == (fa > 0.0)) { a = mid; fa = fm; } else { b = mid; }
      }
      poles.push_back(0.5 * (a + b));
    }
    lo = hi;
    f_lo = f_hi;
  }
  return poles;
}

AmplitudeTrajectory ms_trajectory(const MsCoefficients& coeffs, double alpha, MsOrder order,
                                  const TrajectoryParams& params, double dt, double t_max) {
  if (order == MsOrder::MS0) {
    return tabulate(
        "ms0", params, dt, t_max, [&](double t) { return eval_ms0(coeffs, t); },
        [&](double t) { return eval_ms0_derivative(coeffs, t); });
  }
  require_ms1(coeffs);
  return tabulate(
      "ms1", params, dt, t_max, [&](double t) { return eval_ms1(coeffs, alpha, t); },
      [&](double t) { return eval_ms1_derivative(coeffs, alpha, t); });
}

}  // namespace nml
