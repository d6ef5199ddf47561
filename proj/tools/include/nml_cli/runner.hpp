#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nml/errors.hpp"
#include "nml/kernels.hpp"
#include "nml/report.hpp"
#include "nml/trajectory.hpp"

namespace nml::cli {

/// Bad flags, unknown names, or parameters outside their domain (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Command { Solve, Perturb, Compare, Diagnose, Sweep, Figure };

struct SweepSpec {
  std::string parameter;  ///< `gamma` or `lambda`
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

/// `name:start:stop:count`
SweepSpec parse_sweep(const std::string& text);

struct RunSpec {
  Command command = Command::Solve;
  KernelKind kernel = KernelKind::Lorentzian;
  double gamma = 1.0;
  double lambda = 0.1;
  std::optional<Method> method;
  std::optional<double> dt;     ///< default 1e-3 / gamma
  std::optional<double> t_max;  ///< default 20 / gamma
  std::filesystem::path out;    ///< empty: derived from NML_OUT_DIR
  std::optional<SweepSpec> sweep;
  double threshold = 1e-6;
  std::vector<std::filesystem::path> inputs;  ///< compare / diagnose operands
  int figure = 0;
};

struct RunResult {
  int exit_code = 0;
  std::vector<std::filesystem::path> files;
  Json summary;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnstable = 3;
inline constexpr int kExitIo = 4;

/// Parses argv (flags override values from `--config`). Throws UsageError.
RunSpec parse_args(int argc, const char* const* argv);

/// Executes a spec. Library errors propagate as exceptions.
RunResult run(const RunSpec& spec);

/// parse_args + run, mapping exceptions to exit codes; prints the summary JSON
/// on `out` and diagnostics on `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Trajectory for one method at the run's parameters. Sets `warning` when
/// MS1 falls back to MS0.
AmplitudeTrajectory produce(const RunSpec& spec, Method method, std::string* warning = nullptr);

/// Tolerance on Gamma used by `diagnose` for the Markovian verdict: the
/// derivative noise of amplitudes stored with 12 significant digits.
double markovian_tolerance(const AmplitudeTrajectory& traj);

/// MS1 is offered for a kernel only if it beats MS0 against the exact solution
/// (L-infinity on the population) on the given grid.
bool ms1_available(KernelKind kind, double gamma, double lambda, double dt, double t_max);

}  // namespace nml::cli
