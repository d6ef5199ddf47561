#include "nml/trajectory.hpp"

#include <array>
#include <cmath>

#include "nml/errors.hpp"

namespace nml {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 9> kMethodNames = {{
    {Method::Exact, "exact"},
    {Method::ClosedForm, "closed-form"},
    {Method::MS0, "ms0"},
    {Method::MS1, "ms1"},
    {Method::ODP2, "odp2"},
    {Method::ODP6, "odp6"},
    {Method::GME2, "gme2"},
    {Method::TCL2, "tcl2"},
    {Method::TCL6, "tcl6"},
}};

}  // namespace

std::string_view to_string(Method method) noexcept {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<Method> method_from_string(std::string_view name) noexcept {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

std::vector<double> uniform_grid(double dt, double t_max) {
  if (!(dt > 0.0) || !(t_max >= dt) || !std::isfinite(t_max)) {
    throw DomainError("grid needs dt > 0 and t_max >= dt");
  }
  const double steps = std::round(t_max / dt);
  if (steps > 1e8) throw DomainError("grid exceeds 1e8 steps");
  const auto n = static_cast<std::size_t>(steps);
  std::vector<double> grid(n + 1);
  for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k) * dt;
  return grid;
}

}  // namespace nml
