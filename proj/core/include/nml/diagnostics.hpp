#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nml/trajectory.hpp"

namespace nml {

/// Default |C| below which a grid point is treated as a dissipator pole.
inline constexpr double kDefaultSingularityThreshold = 1e-6;

struct Interval {
  double start = 0.0;
  double end = 0.0;
};

/// Time-local master-equation coefficients of a trajectory:
///   Gamma(t) = -2 Re(C'/C),  S(t) = -2 Im(C'/C).
struct MasterEqCoefficients {
  std::vector<double> times;
  std::vector<std::size_t> grid_index;  ///< row in the source trajectory
  std::vector<double> gamma_t;
  std::vector<double> s_t;
  std::vector<Interval> negative_intervals;
  std::vector<double> singularities;
};

/// Uses the stored derivative when present, otherwise fourth-order finite
/// differences. Points with |C| < threshold are dropped from the samples and
/// the zeros of C are located on the cubic Hermite interpolant.
MasterEqCoefficients master_coefficients(const AmplitudeTrajectory& traj,
                                         double singularity_threshold = kDefaultSingularityThreshold);

struct MarkovianVerdict {
  bool markovian = false;
  std::vector<Interval> negative_intervals;  ///< where Gamma < -tol
};

/// Markovian iff Gamma >= -tol everywhere and no singularity was found.
MarkovianVerdict is_markovian(const MasterEqCoefficients& coeffs, double tol);

/// First zero of C (first time the state is orthogonal to the initial one),
/// refined past grid resolution; nullopt if C never vanishes on the grid.
/// Population-only trajectories use the first sign change of the population.
std::optional<double> minimal_evolution_time(
    const AmplitudeTrajectory& traj, double singularity_threshold = kDefaultSingularityThreshold);

struct ComparisonReport {
  double linf_population = 0.0;
  double l2_population = 0.0;  ///< root mean square
  std::optional<double> t_hat_a;
  std::optional<double> t_hat_b;
  std::optional<double> t_hat_rel_error;  ///< |t_a - t_b| / t_b
  std::size_t samples = 0;
};

/// Population errors on the coarser of the two grids over their common time
/// range; the finer trajectory is linearly interpolated. Throws DomainError if
/// the trajectories disagree on gamma or do not overlap.
ComparisonReport compare(const AmplitudeTrajectory& a, const AmplitudeTrajectory& b);

/// Fourth-order finite-difference derivative of uniformly sampled values
/// (second order when fewer than five samples).
std::vector<Complex> estimate_derivative(const std::vector<Complex>& values, double dt);

}  // namespace nml
