#include "nml/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nml/errors.hpp"

namespace nml {

namespace {

constexpr double kErfcScale = 0.5 * 1.7724538509055160273;  // sqrt(pi) / 2

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

}  // namespace

std::string_view to_string(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::Lorentzian: return "lorentzian";
    case KernelKind::GaussianError: return "gaussian-error";
    case KernelKind::InverseLaw: return "inverse-law";
    case KernelKind::Gaussian: return "gaussian";
  }
  return "unknown";
}

std::optional<KernelKind> kernel_kind_from_string(std::string_view name) noexcept {
  for (KernelKind kind : kAllKernelKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double kernel_profile(KernelKind kind, double x) {
  switch (kind) {
    case KernelKind::Lorentzian: return std::exp(-x);
    case KernelKind::GaussianError: return std::erfc(kErfcScale * x);
    case KernelKind::InverseLaw:
      if (!(x > -1.0)) throw DomainError("inverse-law profile needs x > -1");
      return 1.0 / (1.0 + x);
    case KernelKind::Gaussian: return std::exp(-x * x);
  }
  throw DomainError("unknown kernel kind");
}

ReservoirKernel::ReservoirKernel(KernelKind kind, double gamma, double lambda)
    : kind_(kind), gamma_(gamma), lambda_(lambda) {
  require_positive(gamma, "gamma");
  require_positive(lambda, "lambda");
}

double ReservoirKernel::alpha() const noexcept { return std::sqrt(lambda_ / gamma_); }

double ReservoirKernel::operator()(double dt) const {
  if (!(dt >= 0.0)) throw DomainError("correlation needs a nonnegative separation");
  return 0.5 * gamma_ * lambda_ * kernel_profile(kind_, lambda_ * dt);
}

ReservoirKernel make_kernel(KernelKind kind, double gamma, double lambda) {
  return ReservoirKernel(kind, gamma, lambda);
}

double correlation(const ReservoirKernel& kernel, double dt) { return kernel(dt); }

double spectral_density(const ReservoirKernel& kernel, double detuning) {
  if (kernel.kind() != KernelKind::Lorentzian) {
    throw UnsupportedError("spectral density is only available in closed form for the "
                           "lorentzian kernel, not " +
                           std::string(to_string(kernel.kind())));
  }
  const double l = kernel.lambda();
  return kernel.gamma() * l * l /
         (2.0 * std::numbers::pi * (detuning * detuning + l * l));
}

KernelTaylor taylor_coefficients(const ReservoirKernel& kernel, int order) {
  if (order < 1 || order > 4) {
    throw DomainError("taylor order must be in [1, 4], got " + std::to_string(order));
  }
  // Half the Maclaurin coefficients of the profile.
  std::array<double, 4> all{};
  switch (kernel.kind()) {
    case KernelKind::Lorentzian: all = {0.5, -0.5, 0.25, -1.0 / 12.0}; break;
    case KernelKind::GaussianError: all = {0.5, -0.5, 0.0, std::numbers::pi / 24.0}; break;
    case KernelKind::InverseLaw: all = {0.5, -0.5, 0.5, -0.5}; break;
    case KernelKind::Gaussian: all = {0.5, 0.0, -0.5, 0.0}; break;
  }
  KernelTaylor taylor;
  taylor.order = order;
  for (int n = 0; n < order; ++n) taylor.coefficients[static_cast<std::size_t>(n)] = all[static_cast<std::size_t>(n)];
  return taylor;
}

}  // namespace nml
