#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nml/diagnostics.hpp"
#include "nml/trajectory.hpp"

namespace nml {

/// Header of every trajectory CSV.
inline constexpr std::string_view kTrajectoryCsvHeader = "t,re_c,im_c,population,gamma_t,s_t";

/// Shortest round-trip decimal, capped at 12 significant digits; `.` separator
/// regardless of locale.
std::string format_number(double value);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Sidecar holding method and kernel parameters: `foo.csv` -> `foo.meta.json`.
std::filesystem::path metadata_path(const std::filesystem::path& csv_path);

/// One row per grid point. Amplitude columns are empty for population-only
/// trajectories; gamma_t / s_t are filled only for rows reported in `diagnostics`.
std::string trajectory_csv(const AmplitudeTrajectory& traj,
                           const MasterEqCoefficients* diagnostics = nullptr);

/// Writes the CSV and its metadata sidecar, both atomically.
void write_trajectory(const std::filesystem::path& csv_path, const AmplitudeTrajectory& traj,
                      const MasterEqCoefficients* diagnostics = nullptr);

/// Parses a trajectory CSV (and its sidecar, when present). Derivatives are
/// not stored in the file, so `c_dot` comes back empty.
AmplitudeTrajectory read_trajectory(const std::filesystem::path& csv_path);

}  // namespace nml
