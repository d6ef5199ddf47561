#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "nml/errors.hpp"
#include "nml/kernels.hpp"
#include "oracles.hpp"

using namespace nml;

TEST_SUITE("kernels") {

TEST_CASE("make_kernel normalises every family to gamma lambda / 2") {
  for (KernelKind kind : kAllKernelKinds) {
    const auto k = make_kernel(kind, 1.0, 0.1);
    CHECK(correlation(k, 0.0) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(k.alpha() == std::sqrt(0.1 / 1.0));
  }
  CHECK(taylor_coefficients(make_kernel(KernelKind::Gaussian, 1.0, 0.1), 4)[1] == 0.0);
}

TEST_CASE("make_kernel rejects degenerate parameters") {
  CHECK_THROWS_AS(make_kernel(KernelKind::Lorentzian, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(make_kernel(KernelKind::Lorentzian, -1.0, 0.1), DomainError);
  CHECK_THROWS_AS(make_kernel(KernelKind::Gaussian, 1.0, std::nan("")), DomainError);
}

TEST_CASE("kind names round-trip") {
  for (KernelKind kind : kAllKernelKinds) {
    CHECK(kernel_kind_from_string(to_string(kind)) == kind);
  }
  CHECK(to_string(KernelKind::GaussianError) == "gaussian-error");
  CHECK(to_string(KernelKind::InverseLaw) == "inverse-law");
  CHECK_FALSE(kernel_kind_from_string("Lorentzian").has_value());
}

TEST_CASE("correlation values and domain") {
  const auto k = make_kernel(KernelKind::Lorentzian, 1.0, 0.1);
  CHECK(correlation(k, 10.0) == doctest::Approx(0.05 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(correlation(k, 10.0) == doctest::Approx(0.018394).epsilon(1e-4));
  CHECK_THROWS_AS(correlation(k, -1e-9), DomainError);

  for (KernelKind kind : kAllKernelKinds) {
    const auto kk = make_kernel(kind, 1.0, 0.1);
    double previous = correlation(kk, 0.0);
    for (int i = 1; i <= 4000; ++i) {
      const double value = correlation(kk, 0.05 * i);
      CHECK(value <= previous);
      previous = value;
    }
    if (kind != KernelKind::InverseLaw) CHECK(correlation(kk, 1e4) < 1e-300);
  }
}

TEST_CASE("correlation depends only on the separation") {
  for (KernelKind kind : kAllKernelKinds) {
    const auto k = make_kernel(kind, 1.3, 0.7);
    for (double shift : {0.0, 1.0, 17.5}) {
      const double t = 3.25 + shift;
      const double tp = 1.0 + shift;
      CHECK(correlation(k, t - tp) == doctest::Approx(correlation(k, 2.25)).epsilon(1e-14));
    }
  }
}

TEST_CASE("spectral density of the Lorentzian") {
  const auto k = make_kernel(KernelKind::Lorentzian, 1.0, 0.1);
  CHECK(spectral_density(k, 0.0) == doctest::Approx(1.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(spectral_density(k, 0.1) == doctest::Approx(0.5 * spectral_density(k, 0.0)).epsilon(1e-15));
  CHECK(spectral_density(k, -0.1) == doctest::Approx(spectral_density(k, 0.1)).epsilon(1e-15));
  const auto k2 = make_kernel(KernelKind::Lorentzian, 2.0, 0.1);
  CHECK(spectral_density(k2, 0.0) == doctest::Approx(2.0 / (2.0 * std::numbers::pi)).epsilon(1e-15));
  for (KernelKind kind : {KernelKind::GaussianError, KernelKind::InverseLaw, KernelKind::Gaussian}) {
    CHECK_THROWS_AS(spectral_density(make_kernel(kind, 1.0, 0.1), 0.0), UnsupportedError);
  }
}

TEST_CASE("Fourier round trip of the Lorentzian spectral density") {
  // G(d) = int J(w) cos(w d) dw = 2 int_0^inf J(w) cos(w d) dw for the even J.
  const double gamma = 1.0;
  const double lambda = 0.1;
  const auto k = make_kernel(KernelKind::Lorentzian, gamma, lambda);
  const auto j = [&](double w) { return spectral_density(k, w); };

  boost::math::quadrature::exp_sinh<double> half_line;
  CHECK(std::abs(2.0 * half_line.integrate(j) - correlation(k, 0.0)) < 1e-4);

  boost::math::quadrature::ooura_fourier_cos<double> cosine;
  double worst = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double d = 20.0 / lambda * i / 200.0;
    const double value = 2.0 * cosine.integrate(j, d).first;
    worst = std::max(worst, std::abs(value - correlation(k, d)));
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("scale invariance G(s gamma, s lambda; d / s) = s^2 G(gamma, lambda; d)") {
  for (KernelKind kind : kAllKernelKinds) {
    const auto base = make_kernel(kind, 0.8, 0.3);
    for (double s : {0.25, 2.0, 7.0}) {
      const auto scaled = make_kernel(kind, s * 0.8, s * 0.3);
      for (double d : {0.0, 0.5, 3.0, 11.0}) {
        CHECK(correlation(scaled, d / s) ==
              doctest::Approx(s * s * correlation(base, d)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("Taylor coefficients per family") {
  const auto lor = taylor_coefficients(make_kernel(KernelKind::Lorentzian, 1.0, 0.1), 4);
  CHECK(lor[0] == 0.5);
  CHECK(lor[1] == -0.5);
  CHECK(lor[2] == 0.25);
  CHECK(lor[3] == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  CHECK(lor.order == 4);

  for (KernelKind kind : kAllKernelKinds) {
    CHECK(taylor_coefficients(make_kernel(kind, 2.0, 0.5), 1)[0] == 0.5);
  }
  const auto k = make_kernel(KernelKind::Lorentzian, 1.0, 0.1);
  CHECK_THROWS_AS(taylor_coefficients(k, 0), DomainError);
  CHECK_THROWS_AS(taylor_coefficients(k, 5), DomainError);
}

TEST_CASE("Taylor coefficients agree with finite differences of the profile") {
  // With s = gamma dt the rescaled kernel is alpha^2 f(alpha^2 s) / 2, so
  // G_n = f^(n)(0) / (2 n!).
  const double factorial[] = {1.0, 1.0, 2.0, 6.0};
  for (KernelKind kind : kAllKernelKinds) {
    const auto k = make_kernel(kind, 1.0, 0.1);
    const auto taylor = taylor_coefficients(k, 4);
    const auto f = [kind](double x) { return kernel_profile(kind, x); };
    CAPTURE(to_string(kind));
    CHECK(taylor[0] == doctest::Approx(f(0.0) / 2.0).epsilon(1e-15));
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      const double fd = nml::testing::central_derivative(f, 0.0, n, 0.05) / (2.0 * factorial[n]);
      if (taylor[n] == 0.0) {
        CHECK(std::abs(fd) < 1e-7);
      } else {
        CHECK(std::abs(fd - taylor[n]) / std::abs(taylor[n]) < 1e-6);
      }
    }
    for (double dt : {0.0, 0.3, 4.0, 25.0}) {
      CHECK(correlation(k, dt) == doctest::Approx(0.05 * f(0.1 * dt)).epsilon(1e-15));
    }
  }
}

TEST_CASE("erfc profile matches a series oracle") {
  // erfc(z) = 1 - 2/sqrt(pi) sum_n (-1)^n z^(2n+1) / (n! (2n+1)), accurate for small z.
  for (double x : {0.0, 0.1, 0.4, 0.9}) {
    const double z = std::sqrt(std::numbers::pi) * x / 2.0;
    double sum = 0.0;
    double term = z;
    for (int n = 0; n < 40; ++n) {
      sum += term / (2 * n + 1);
      term *= -z * z / (n + 1);
    }
    const double expected = 1.0 - 2.0 / std::sqrt(std::numbers::pi) * sum;
    CHECK(kernel_profile(KernelKind::GaussianError, x) == doctest::Approx(expected).epsilon(1e-13));
  }
}

}  // TEST_SUITE
