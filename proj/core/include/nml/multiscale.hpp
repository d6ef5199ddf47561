#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nml/kernels.hpp"
#include "nml/trajectory.hpp"

namespace nml {

/// Two-scale (primary T, auxiliary tau) coefficients derived from the kernel
/// Taylor data with the amplitudes A_0 = B_0 = 1. Frequencies and rates are in
/// physical time units.
struct MsCoefficients {
  double omega0 = 0.0;      ///< sqrt(G0) * gamma * alpha
  double decay = 0.0;       ///< gamma * alpha^2 * G1 / (2 G0), never positive
  double a1_over_a0 = 0.0;  ///< 3/8 G1^2/G0^3 - G2/G0^2
  std::optional<double> b1_over_b0;  ///< -G1^2/G0^3 + 4 G2/G0^2 - 6 G3/(G1 G0); absent if G1 == 0
  double c1 = 0.0;          ///< -G1 / (2 G0^{3/2})
  bool collapsed_tau = false;
};

enum class MsOrder { MS0, MS1 };

std::string_view to_string(MsOrder order) noexcept;

/// Threshold below which |G1| counts as zero.
inline constexpr double kCollapseTolerance = 1e-12;

/// Throws UnsupportedError for G0 <= 0, DomainError for G1 > 0 (growing
/// envelope) or when the Taylor data is too short (order >= 4 needed when
/// G1 != 0, >= 3 otherwise).
MsCoefficients derive_ms_coefficients(const KernelTaylor& taylor, double gamma, double lambda);

/// Corrected primary frequency omega0 * (1 + a1_over_a0 * alpha^2).
double ms1_frequency(const MsCoefficients& coeffs, double alpha);

/// e^{decay t} cos(omega0 t).
Complex eval_ms0(const MsCoefficients& coeffs, double t);
Complex eval_ms0_derivative(const MsCoefficients& coeffs, double t);

/// e^{decay t} [cos(w1 t) + c1 alpha sin(w1 t)], w1 = ms1_frequency.
/// Throws UnsupportedError when the auxiliary scale has collapsed.
Complex eval_ms1(const MsCoefficients& coeffs, double alpha, double t);
Complex eval_ms1_derivative(const MsCoefficients& coeffs, double alpha, double t);

struct GammaSplit {
  double primary_part = 0.0;
  double auxiliary_part = 0.0;
  double total() const noexcept { return primary_part + auxiliary_part; }
};

/// Dissipator -2 Re(C'/C) of the MS0 or MS1 solution split into the constant
/// auxiliary-scale contribution -2 * decay and the oscillating primary-scale
/// remainder. Throws SingularityError within 100 eps |t| of a pole.
GammaSplit gamma_split(const MsCoefficients& coeffs, double alpha, MsOrder order, double t);

/// Poles of the MS dissipator in (0, t_max], ascending, located by bracketing
/// the zeros of the MS amplitude and bisecting to 1e-10.
std::vector<double> ms_singularities(const MsCoefficients& coeffs, double alpha, MsOrder order,
                                     double t_max);

AmplitudeTrajectory ms_trajectory(const MsCoefficients& coeffs, double alpha, MsOrder order,
                                  const TrajectoryParams& params, double dt, double t_max);

}  // namespace nml
