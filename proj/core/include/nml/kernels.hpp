#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace nml {

enum class KernelKind { Lorentzian, GaussianError, InverseLaw, Gaussian };

inline constexpr std::array<KernelKind, 4> kAllKernelKinds = {
    KernelKind::Lorentzian, KernelKind::GaussianError, KernelKind::InverseLaw,
    KernelKind::Gaussian};

/// Config/CLI spelling: `lorentzian`, `gaussian-error`, `inverse-law`, `gaussian`.
std::string_view to_string(KernelKind kind) noexcept;
std::optional<KernelKind> kernel_kind_from_string(std::string_view name) noexcept;

/// Dimensionless decay profile f of a kernel family, normalised to f(0) = 1.
/// Every kernel is G(dt) = (gamma * lambda / 2) * f(lambda * dt). The profile
/// is analytic around 0 and may be evaluated at small negative arguments
/// (InverseLaw requires x > -1).
double kernel_profile(KernelKind kind, double x);

/// A stationary, real, on-resonance reservoir correlation function.
///
/// Families (with x = lambda * dt):
///   Lorentzian     f = exp(-x)
///   GaussianError  f = erfc(sqrt(pi) x / 2)
///   InverseLaw     f = 1 / (1 + x)
///   Gaussian       f = exp(-x^2)
/// The erfc scale makes the first Taylor coefficient match the Lorentzian.
class ReservoirKernel {
 public:
  ReservoirKernel(KernelKind kind, double gamma, double lambda);

  KernelKind kind() const noexcept { return kind_; }
  double gamma() const noexcept { return gamma_; }
  double lambda() const noexcept { return lambda_; }
  /// sqrt(lambda / gamma), recomputed on every call.
  double alpha() const noexcept;

  /// G(dt); throws DomainError for dt < 0.
  double operator()(double dt) const;

 private:
  KernelKind kind_;
  double gamma_;
  double lambda_;
};

ReservoirKernel make_kernel(KernelKind kind, double gamma, double lambda);

double correlation(const ReservoirKernel& kernel, double dt);

/// J(omega0 + detuning) for the Lorentzian family; peak gamma / (2 pi).
/// Other families throw UnsupportedError.
double spectral_density(const ReservoirKernel& kernel, double detuning);

/// Coefficients G_n of the rescaled kernel
///   G~(s) = sum_n G_n alpha^(2 + 2n) s^n,  s = gamma * (t - t').
struct KernelTaylor {
  std::array<double, 4> coefficients{};
  int order = 0;

  double operator[](int n) const { return coefficients.at(static_cast<std::size_t>(n)); }
};

/// 1 <= order <= 4; coefficients are exact per family.
KernelTaylor taylor_coefficients(const ReservoirKernel& kernel, int order);

}  // namespace nml
