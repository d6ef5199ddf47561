#include "nml/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nml/errors.hpp"

namespace nml {

namespace {

constexpr double kRootTolerance = 1e-10;

struct Hermite {
  Complex c0, d0, c1, d1;
  double t0, h;

  Complex operator()(double t) const {
    const double s = (t - t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * c0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * c1 +
           (s3 - s2) * h * d1;
  }
};

template <typename F>
double bisect(F&& f, double a, double b) {
  double fa = f(a);
  while (b - a > kRootTolerance) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

template <typename F>
double golden_minimum(F&& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > kRootTolerance) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a); f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

bool sign_change(double a, double b) { return (a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0); }

std::vector<Complex> derivative_of(const AmplitudeTrajectory& traj) {
  return traj.has_derivative() ? traj.c_dot : estimate_derivative(traj.c, traj.dt());
}

std::vector<double> population_zeros(const AmplitudeTrajectory& traj) {
  std::vector<double> zeros;
  const auto& p = traj.population;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] == 0.0) {
      zeros.push_back(traj.times[i]);
    } else if (sign_change(p[i], p[i + 1])) {
      zeros.push_back(traj.times[i] + (traj.times[i + 1] - traj.times[i]) * p[i] / (p[i] - p[i + 1]));
    }
  }
  return zeros;
}

// Piecewise cubic Hermite interpolant through (t_i, C_i, C'_i).
class HermiteCurve {
 public:
  HermiteCurve(const AmplitudeTrajectory& traj, const std::vector<Complex>& deriv)
      : t_(traj.times), c_(traj.c), d_(deriv) {}

  Complex operator()(double x) const {
    const double h = t_[1] - t_[0];
    const double pos = std::clamp((x - t_.front()) / h, 0.0, static_cast<double>(t_.size() - 2));
    const auto i = static_cast<std::size_t>(pos);
    return Hermite{c_[i], d_[i], c_[i + 1], d_[i + 1], t_[i], t_[i + 1] - t_[i]}(x);
  }

 private:
  const std::vector<double>& t_;
  const std::vector<Complex>& c_;
  const std::vector<Complex>& d_;
};

std::vector<double> amplitude_zeros(const AmplitudeTrajectory& traj,
                                    const std::vector<Complex>& deriv, double threshold) {
  std::vector<double> zeros;
  const auto& c = traj.c;
  const auto& t = traj.times;
  const std::size_t n = c.size();
  if (n < 2) return zeros;
  const HermiteCurve curve(traj, deriv);
  const auto push = [&](double z) {
    if (zeros.empty() || z - zeros.back() > 0.5 * traj.dt()) zeros.push_back(z);
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::optional<double> root;
    if (sign_change(c[i].real(), c[i + 1].real())) {
      root = bisect([&](double x) { return curve(x).real(); }, t[i], t[i + 1]);
    } else if (sign_change(c[i].imag(), c[i + 1].imag())) {
      root = bisect([&](double x) { return curve(x).imag(); }, t[i], t[i + 1]);
    } else if (std::abs(c[i]) < threshold) {
      root = golden_minimum([&](double x) { return std::abs(curve(x)); }, t[i > 0 ? i - 1 : 0],
                            t[i + 1]);
    }
    if (root && std::abs(curve(*root)) < threshold) push(*root);
  }
  if (std::abs(c[n - 1]) < threshold) push(t[n - 1]);
  return zeros;
}

std::vector<double> find_zeros(const AmplitudeTrajectory& traj, double threshold) {
  if (!traj.has_amplitude()) return population_zeros(traj);
  return amplitude_zeros(traj, derivative_of(traj), threshold);
}

// Maximal runs with gamma < level, split at grid gaps only through
// singularities. Boundaries are interpolated linearly between samples.
std::vector<Interval> runs_below(const MasterEqCoefficients& m, double level) {
  std::vector<Interval> runs;
  const auto& tau = m.times;
  const auto& g = m.gamma_t;
  bool open = false;
  double start = 0.0;
  const auto singular_between = [&](double a, double b) -> std::optional<double> {
    auto it = std::upper_bound(m.singularities.begin(), m.singularities.end(), a);
    if (it != m.singularities.end() && *it <= b) return *it;
    return std::nullopt;
  };
  const auto crossing = [&](std::size_t k) {
    const double ga = g[k - 1] - level, gb = g[k] - level;
    return tau[k - 1] + (tau[k] - tau[k - 1]) * ga / (ga - gb);
  };
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const bool below = g[k] < level;
    const auto pole = k > 0 ? singular_between(tau[k - 1], tau[k]) : std::nullopt;
    if (below && !open) {
      if (k == 0) start = tau[0];
      else if (pole) start = *pole;
      else start = g[k - 1] >= level ? crossing(k) : tau[k];
      open = true;
    } else if (!below && open) {
      runs.push_back({start, pole ? *pole : crossing(k)});
      open = false;
    }
  }
  if (open) runs.push_back({start, tau.back()});
  return runs;
}

}  // namespace

std::vector<Complex> estimate_derivative(const std::vector<Complex>& v, double dt) {
  const std::size_t n = v.size();
  if (n < 3) throw DomainError("derivative estimate needs at least 3 samples");
  if (!(dt > 0.0)) throw DomainError("derivative estimate needs dt > 0");
  std::vector<Complex> d(n);
  if (n < 5) {
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * dt);
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dt);
    return d;
  }
  const double w = 12.0 * dt;
  d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) / w;
  d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) / w;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / w;
  }
  d[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4] - v[n - 5]) / w;
  d[n - 1] = (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4] + 3.0 * v[n - 5]) / w;
  return d;
}

MasterEqCoefficients master_coefficients(const AmplitudeTrajectory& traj,
                                         double singularity_threshold) {
  if (traj.size() < 3) throw DomainError("master coefficients need at least 3 grid points");
  if (!(singularity_threshold > 0.0 && singularity_threshold < 1.0)) {
    throw DomainError("singularity threshold must lie in (0, 1)");
  }
  if (!traj.has_amplitude()) {
    throw DomainError("trajectory '" + traj.method_tag + "' has no amplitude to differentiate");
  }
  const std::vector<Complex> deriv = derivative_of(traj);

  MasterEqCoefficients out;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (std::abs(traj.c[i]) < singularity_threshold) continue;
    const Complex ratio = deriv[i] / traj.c[i];
    const double gamma = -2.0 * ratio.real();
    const double shift = -2.0 * ratio.imag();
    if (!std::isfinite(gamma) || !std::isfinite(shift)) continue;
    out.times.push_back(traj.times[i]);
    out.grid_index.push_back(i);
    out.gamma_t.push_back(gamma);
    out.s_t.push_back(shift);
  }
  out.singularities = amplitude_zeros(traj, deriv, singularity_threshold);
  out.negative_intervals = runs_below(out, 0.0);
  return out;
}

MarkovianVerdict is_markovian(const MasterEqCoefficients& coeffs, double tol) {
  if (!(tol >= 0.0)) throw DomainError("tolerance must be nonnegative");
  MarkovianVerdict verdict;
  verdict.negative_intervals = runs_below(coeffs, -tol);
  verdict.markovian = coeffs.singularities.empty() && verdict.negative_intervals.empty();
  return verdict;
}

std::optional<double> minimal_evolution_time(const AmplitudeTrajectory& traj,
                                              double singularity_threshold) {
  if (traj.size() < 2) return std::nullopt;
  const auto zeros = find_zeros(traj, singularity_threshold);
  if (zeros.empty()) return std::nullopt;
  return zeros.front();
}

ComparisonReport compare(const AmplitudeTrajectory& a, const AmplitudeTrajectory& b) {
  if (a.size() < 2 || b.size() < 2) throw DomainError("comparison needs at least 2 grid points");
  const double ga = a.params.gamma, gb = b.params.gamma;
  if (ga > 0.0 && gb > 0.0 && std::abs(ga - gb) > 1e-12 * std::max(ga, gb)) {
    throw DomainError("trajectories have different gamma");
  }
  const bool a_coarse = a.dt() >= b.dt();
  const AmplitudeTrajectory& coarse = a_coarse ? a : b;
  const AmplitudeTrajectory& fine = a_coarse ? b : a;
  const double lo = std::max(a.times.front(), b.times.front());
  const double hi = std::min(a.t_max(), b.t_max());
  const double slack = 1e-9 * std::max(coarse.dt(), fine.dt());

  const auto fine_population = [&](double t) {
    const double pos = (t - fine.times.front()) / fine.dt();
    auto k = static_cast<std::size_t>(std::clamp(std::floor(pos), 0.0,
                                                 static_cast<double>(fine.size() - 1)));
    if (std::abs(pos - std::round(pos)) < 1e-9) {
      k = static_cast<std::size_t>(std::round(pos));
      return fine.population[std::min(k, fine.size() - 1)];
    }
    if (k + 1 >= fine.size()) return fine.population.back();
    const double w = (t - fine.times[k]) / (fine.times[k + 1] - fine.times[k]);
    return (1.0 - w) * fine.population[k] + w * fine.population[k + 1];
  };

  ComparisonReport report;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double t = coarse.times[i];
    if (t < lo - slack || t > hi + slack) continue;
    const double diff = std::abs(coarse.population[i] - fine_population(t));
    report.linf_population = std::max(report.linf_population, diff);
    sum_sq += diff * diff;
    ++report.samples;
  }
  if (report.samples == 0) throw DomainError("trajectories do not overlap in time");
  report.l2_population = std::sqrt(sum_sq / static_cast<double>(report.samples));
  report.t_hat_a = minimal_evolution_time(a);
  report.t_hat_b = minimal_evolution_time(b);
  if (report.t_hat_a && report.t_hat_b) {
    report.t_hat_rel_error = std::abs(*report.t_hat_a - *report.t_hat_b) / *report.t_hat_b;
  }
  return report;
}

}  // namespace nml
