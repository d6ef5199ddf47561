#include "nml/baselines.hpp"

#include <cmath>
#include <string>

#include "nml/errors.hpp"

namespace nml {

namespace {

void validate(const BaselineSpec& spec) {
  if (!(spec.gamma > 0.0) || !(spec.lambda > 0.0)) {
    throw DomainError("baseline gamma and lambda must be positive");
  }
}

void require_time(double t) {
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
}

void require(const BaselineSpec& spec, BaselineMethod a, BaselineMethod b, const char* what) {
  validate(spec);
  if (spec.method != a && spec.method != b) {
    throw DomainError(std::string(what) + " is not defined for method " +
                      std::string(to_string(spec.method)));
  }
}

int odp_truncation(BaselineMethod method) { return method == BaselineMethod::ODP2 ? 2 : 6; }

// TCL rate terms with u = lambda t.
double tcl_rate_2(double gamma, double lambda, double t) {
  return -gamma * std::expm1(-lambda * t);
}

double tcl_rate_4(double gamma, double lambda, double t) {
  const double u = lambda * t;
  const double e1 = std::exp(-u);
  return gamma * gamma / (2.0 * lambda) * (1.0 - 2.0 * u * e1 - e1 * e1);
}

double tcl_rate_6(double gamma, double lambda, double t) {
  const double u = lambda * t;
  const double e1 = std::exp(-u);
  const double e2 = e1 * e1;
  return gamma * gamma * gamma / (4.0 * lambda * lambda) *
         (2.0 + e1 - 2.0 * u * e1 - 2.0 * u * u * e1 - 2.0 * e2 - 4.0 * u * e2 - e2 * e1);
}

// Antiderivatives vanishing at t = 0.
double tcl_integral_2(double gamma, double lambda, double t) {
  const double u = lambda * t;
  return gamma / lambda * (u + std::expm1(-u));
}

double tcl_integral_4(double gamma, double lambda, double t) {
  const double u = lambda * t;
  const double e1 = std::exp(-u);
  const double first_moment = 1.0 - e1 * (1.0 + u);  // int_0^u s e^{-s} ds
  return gamma * gamma / (2.0 * lambda * lambda) *
         (u - 2.0 * first_moment + 0.5 * std::expm1(-2.0 * u));
}

double tcl_integral_6(double gamma, double lambda, double t) {
  const double u = lambda * t;
  const double e1 = std::exp(-u);
  const double e2 = e1 * e1;
  const double m1 = 1.0 - e1 * (1.0 + u);               // int s e^{-s}
  const double m2 = 2.0 - e1 * (u * u + 2.0 * u + 2.0);  // int s^2 e^{-s}
  const double m1_double = 1.0 - e2 * (1.0 + 2.0 * u);  // 4 int s e^{-2s}
  const double bracket = 2.0 * u - std::expm1(-u) - 2.0 * m1 - 2.0 * m2 + std::expm1(-2.0 * u) -
                         m1_double + std::expm1(-3.0 * u) / 3.0;
  return gamma * gamma * gamma / (4.0 * lambda * lambda * lambda) * bracket;
}

}  // namespace

std::string_view to_string(BaselineMethod method) noexcept {
  return to_string(to_method(method));
}

Method to_method(BaselineMethod method) noexcept {
  switch (method) {
    case BaselineMethod::ODP2: return Method::ODP2;
    case BaselineMethod::ODP6: return Method::ODP6;
    case BaselineMethod::GME2: return Method::GME2;
    case BaselineMethod::TCL2: return Method::TCL2;
    case BaselineMethod::TCL6: return Method::TCL6;
  }
  return Method::ODP2;
}

std::optional<BaselineMethod> baseline_from_method(Method method) noexcept {
  switch (method) {
    case Method::ODP2: return BaselineMethod::ODP2;
    case Method::ODP6: return BaselineMethod::ODP6;
    case Method::GME2: return BaselineMethod::GME2;
    case Method::TCL2: return BaselineMethod::TCL2;
    case Method::TCL6: return BaselineMethod::TCL6;
    default: return std::nullopt;
  }
}

double Polynomial::operator()(double x) const {
  double value = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * x + *it;
  return value;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (std::size_t k = 1; k < coefficients.size(); ++k) {
    d.coefficients.push_back(static_cast<double>(k) * coefficients[k]);
  }
  return d;
}

Polynomial odp_term(int n) {
  switch (n) {
    case 0: return {{1.0}};
    case 2: return {{0.0, 0.0, -0.25}};
    case 4: return {{0.0, 0.0, 0.0, 8.0 / 96.0, 1.0 / 96.0}};
    case 6: return {{0.0, 0.0, 0.0, 0.0, -120.0 / 5760.0, -24.0 / 5760.0, -1.0 / 5760.0}};
    default: throw DomainError("ODP terms exist for n = 0, 2, 4, 6, got " + std::to_string(n));
  }
}

double odp_amplitude(const BaselineSpec& spec, double t) {
  require(spec, BaselineMethod::ODP2, BaselineMethod::ODP6, "ODP amplitude");
  require_time(t);
  const double s = spec.gamma * t;
  const double a2 = spec.lambda / spec.gamma;
  double sum = 0.0;
  double weight = 1.0;
  for (int n = 0; n <= odp_truncation(spec.method); n += 2) {
    sum += weight * odp_term(n)(s);
    weight *= a2;
  }
  return sum;
}

double odp_amplitude_derivative(const BaselineSpec& spec, double t) {
  require(spec, BaselineMethod::ODP2, BaselineMethod::ODP6, "ODP amplitude");
  require_time(t);
  const double s = spec.gamma * t;
  const double a2 = spec.lambda / spec.gamma;
  double sum = 0.0;
  double weight = 1.0;
  for (int n = 0; n <= odp_truncation(spec.method); n += 2) {
    sum += weight * odp_term(n).derivative()(s);
    weight *= a2;
  }
  return spec.gamma * sum;
}

double odp_population(const BaselineSpec& spec, double t) {
  const double c = odp_amplitude(spec, t);
  return c * c;
}

double gme2_population(const BaselineSpec& spec, double t) {
  require(spec, BaselineMethod::GME2, BaselineMethod::GME2, "GME-2 population");
  require_time(t);
  const double l = spec.lambda;
  const double d2 = 4.0 * spec.gamma * l - l * l;
  const double half = 0.5 * t;
  if (d2 > 0.0) {
    const double d = std::sqrt(d2);
    return std::exp(-l * half) * (std::cos(d * half) + (l / d) * std::sin(d * half));
  }
  if (d2 < 0.0) {
    const double k = std::sqrt(-d2);
    const double grow = std::exp((k - l) * half);
    const double fall = std::exp(-(k + l) * half);
    return 0.5 * (grow + fall) + 0.5 * (l / k) * (grow - fall);
  }
  return std::exp(-l * half) * (1.0 + l * half);
}

double tcl_gamma(const BaselineSpec& spec, double t) {
  require(spec, BaselineMethod::TCL2, BaselineMethod::TCL6, "TCL rate");
  require_time(t);
  const double g = spec.gamma, l = spec.lambda;
  double rate = tcl_rate_2(g, l, t);
  if (spec.method == BaselineMethod::TCL6) rate += tcl_rate_4(g, l, t) + tcl_rate_6(g, l, t);
  return rate;
}

double tcl_integrated_gamma(const BaselineSpec& spec, double t) {
  require(spec, BaselineMethod::TCL2, BaselineMethod::TCL6, "TCL rate");
  require_time(t);
  const double g = spec.gamma, l = spec.lambda;
  double integral = tcl_integral_2(g, l, t);
  if (spec.method == BaselineMethod::TCL6) {
    integral += tcl_integral_4(g, l, t) + tcl_integral_6(g, l, t);
  }
  return integral;
}

double tcl_population(const BaselineSpec& spec, double t) {
  return std::exp(-tcl_integrated_gamma(spec, t));
}

AmplitudeTrajectory baseline_trajectory(const BaselineSpec& spec, double dt, double t_max) {
  validate(spec);
  const TrajectoryParams params{KernelKind::Lorentzian, spec.gamma, spec.lambda};
  const std::string tag(to_string(spec.method));
  switch (spec.method) {
    case BaselineMethod::ODP2:
    case BaselineMethod::ODP6:
      return tabulate(
          tag, params, dt, t_max, [&](double t) { return Complex(odp_amplitude(spec, t)); },
          [&](double t) { return Complex(odp_amplitude_derivative(spec, t)); });
    case BaselineMethod::TCL2:
    case BaselineMethod::TCL6:
      return tabulate(
          tag, params, dt, t_max,
          [&](double t) { return Complex(std::exp(-0.5 * tcl_integrated_gamma(spec, t))); },
          [&](double t) {
            return Complex(-0.5 * tcl_gamma(spec, t) *
                           std::exp(-0.5 * tcl_integrated_gamma(spec, t)));
          });
    case BaselineMethod::GME2: {
      AmplitudeTrajectory traj;
      traj.times = uniform_grid(dt, t_max);
      traj.method_tag = tag;
      traj.params = params;
      traj.population.reserve(traj.times.size());
      for (double t : traj.times) traj.population.push_back(gme2_population(spec, t));
      return traj;
    }
  }
  throw DomainError("unknown baseline method");
}

}  // namespace nml
