#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <random>

#include "nml/baselines.hpp"
#include "nml/kernels.hpp"
#include "nml/volterra.hpp"
#include "oracles.hpp"

using namespace nml;

namespace {

// Rate terms written out independently of the library.
double gamma2(double g, double l, double t) { return g * (1.0 - std::exp(-l * t)); }
double gamma4(double g, double l, double t) {
  return g * g / (2.0 * l) * (1.0 - 2.0 * l * t * std::exp(-l * t) - std::exp(-2.0 * l * t));
}
double gamma6(double g, double l, double t) {
  const double e1 = std::exp(-l * t), e2 = std::exp(-2.0 * l * t), e3 = std::exp(-3.0 * l * t);
  return g * g * g / (4.0 * l * l) *
         (2.0 + e1 - 2.0 * l * t * e1 - 2.0 * l * l * t * t * e1 - 2.0 * e2 - 4.0 * l * t * e2 - e3);
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("method names") {
  CHECK(to_string(BaselineMethod::ODP2) == "odp2");
  CHECK(to_string(BaselineMethod::TCL6) == "tcl6");
  for (BaselineMethod m : {BaselineMethod::ODP2, BaselineMethod::ODP6, BaselineMethod::GME2,
                           BaselineMethod::TCL2, BaselineMethod::TCL6}) {
    CHECK(baseline_from_method(to_method(m)) == m);
  }
  CHECK_FALSE(baseline_from_method(Method::MS1).has_value());
}

TEST_CASE("ODP populations") {
  const BaselineSpec odp2{BaselineMethod::ODP2, 1.0, 0.1};
  const BaselineSpec odp6{BaselineMethod::ODP6, 1.0, 0.1};
  CHECK(odp_population(odp2, 0.0) == 1.0);
  CHECK(odp_population(odp6, 0.0) == 1.0);
  CHECK(odp_population(odp2, 2.0) == doctest::Approx(0.81).epsilon(1e-14));
  const double s = 20.0;
  const double amplitude = 1.0 - 0.1 * s * s / 4.0 + 0.01 * (8 * s * s * s + s * s * s * s) / 96.0 -
                           0.001 * (120 * std::pow(s, 4) + 24 * std::pow(s, 5) + std::pow(s, 6)) / 5760.0;
  CHECK(odp_population(odp6, 20.0) == doctest::Approx(amplitude * amplitude).epsilon(1e-12));
  CHECK(odp_population(odp6, 20.0) == doctest::Approx(180.7).epsilon(1e-3));
  CHECK(odp_amplitude_derivative(odp6, 3.0) ==
        doctest::Approx(nml::testing::central_derivative(
                            [&](double t) { return odp_amplitude(odp6, t); }, 3.0, 1, 0.05))
            .epsilon(1e-10));
}

TEST_CASE("ODP terms obey the perturbation recurrence") {
  // C^(n+2)'' = -C^(n)' - C^(n)/2 with vanishing initial value and slope.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 25.0);
  for (int n : {0, 2, 4}) {
    const Polynomial lower = odp_term(n);
    const Polynomial upper = odp_term(n + 2);
    const Polynomial lhs = upper.derivative().derivative();
    const Polynomial dlower = lower.derivative();
    CHECK(upper(0.0) == 0.0);
    CHECK(upper.derivative()(0.0) == 0.0);
    for (int i = 0; i < 20; ++i) {
      const double s = dist(rng);
      const double rhs = -dlower(s) - lower(s) / 2.0;
      CHECK(lhs(s) == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
  CHECK(odp_term(0)(5.0) == 1.0);
  CHECK(odp_term(2)(2.0) == -1.0);
}

TEST_CASE("GME-2 population") {
  const BaselineSpec spec{BaselineMethod::GME2, 1.0, 0.1};
  CHECK(gme2_population(spec, 0.0) == 1.0);
  const double dg = std::sqrt(4.0 * 1.0 * 0.1 - 0.01);
  CHECK(dg == doctest::Approx(0.62450).epsilon(1e-5));
  for (double t : {1.0, 6.0, 13.0}) {
    const double expected =
        std::exp(-0.05 * t) * (std::cos(dg * t / 2.0) + 0.1 / dg * std::sin(dg * t / 2.0));
    CHECK(gme2_population(spec, t) == doctest::Approx(expected).epsilon(1e-13));
  }
  double minimum = 1.0;
  for (int i = 0; i <= 20000; ++i) minimum = std::min(minimum, gme2_population(spec, 1e-3 * i));
  CHECK(minimum < 0.0);
}

TEST_CASE("GME-2 population solves its second-order ODE") {
  // P'' + lambda P' + gamma lambda P = 0, P(0) = 1, P'(0) = 0
  for (auto [g, l] : {std::pair{1.0, 0.1}, std::pair{0.01, 0.1}, std::pair{0.025, 0.1}}) {
    const BaselineSpec spec{BaselineMethod::GME2, g, l};
    const auto p = [&](double t) { return gme2_population(spec, t); };
    for (double t : {1.0, 4.0, 9.0, 18.0}) {
      const double d1 = nml::testing::central_derivative(p, t, 1, 0.02);
      const double d2 = nml::testing::central_derivative(p, t, 2, 0.02);
      CHECK(std::abs(d2 + l * d1 + g * l * p(t)) < 1e-9);
    }
    CHECK(p(0.0) == 1.0);
    CHECK(std::abs(nml::testing::central_derivative(p, 0.1, 1, 0.02) -
                   nml::testing::central_derivative(p, 0.1, 1, 0.04)) < 1e-9);
    const double slope0 = (p(1e-4) - p(0.0)) / 1e-4;
    CHECK(std::abs(slope0) < 1e-4);
  }
}

TEST_CASE("TCL rates") {
  const BaselineSpec tcl2{BaselineMethod::TCL2, 1.0, 0.1};
  const BaselineSpec tcl6{BaselineMethod::TCL6, 1.0, 0.1};
  CHECK(tcl_gamma(tcl2, 0.0) == 0.0);
  CHECK(tcl_gamma(tcl6, 0.0) == 0.0);
  CHECK(tcl_gamma(tcl2, 1e4) == doctest::Approx(1.0).epsilon(1e-15));
  for (double t : {0.5, 3.0, 10.0, 20.0}) {
    CHECK(tcl_gamma(tcl2, t) == doctest::Approx(gamma2(1.0, 0.1, t)).epsilon(1e-13));
    CHECK(tcl_gamma(tcl6, t) ==
          doctest::Approx(gamma2(1.0, 0.1, t) + gamma4(1.0, 0.1, t) + gamma6(1.0, 0.1, t))
              .epsilon(1e-12));
  }
  CHECK(tcl_gamma(tcl6, 10.0) == doctest::Approx(2.14072244838439).epsilon(1e-10));
}

TEST_CASE("TCL integrated rate against adaptive quadrature") {
  using boost::math::quadrature::gauss_kronrod;
  for (auto [g, l] : {std::pair{1.0, 0.1}, std::pair{0.3, 2.0}, std::pair{1.0, 10.0}}) {
    for (BaselineMethod m : {BaselineMethod::TCL2, BaselineMethod::TCL6}) {
      const BaselineSpec spec{m, g, l};
      for (double t : {1e-3, 0.7, 5.0, 20.0}) {
        const double reference = gauss_kronrod<double, 61>::integrate(
            [&](double x) { return tcl_gamma(spec, x); }, 0.0, t, 15, 1e-14);
        CHECK(std::abs(tcl_integrated_gamma(spec, t) - reference) <=
              1e-10 * std::max(1.0, std::abs(reference)));
      }
    }
  }
}

TEST_CASE("TCL populations") {
  const BaselineSpec tcl2{BaselineMethod::TCL2, 1.0, 0.1};
  const BaselineSpec tcl6{BaselineMethod::TCL6, 1.0, 0.1};
  CHECK(tcl_population(tcl2, 0.0) == 1.0);
  CHECK(tcl_population(tcl2, 10.0) ==
        doctest::Approx(std::exp(-10.0 + 10.0 * (1.0 - std::exp(-1.0)))).epsilon(1e-13));
  CHECK(tcl_population(tcl2, 10.0) == doctest::Approx(0.02525).epsilon(1e-3));
  double previous = 1.0;
  for (int i = 0; i <= 20000; ++i) {
    const double p6 = tcl_population(tcl6, 1e-3 * i);
    const double p2 = tcl_population(tcl2, 1e-3 * i);
    CHECK(p6 <= previous);
    CHECK(p6 > 0.0);
    CHECK(p2 > 0.0);
    CHECK(p2 <= 1.0);
    previous = p6;
  }
}

TEST_CASE("baseline trajectories") {
  const auto gme = baseline_trajectory({BaselineMethod::GME2, 1.0, 0.1}, 0.01, 20.0);
  CHECK_FALSE(gme.has_amplitude());
  CHECK(gme.size() == 2001);
  CHECK(gme.method_tag == "gme2");
  const auto tcl = baseline_trajectory({BaselineMethod::TCL6, 1.0, 0.1}, 0.01, 20.0);
  REQUIRE(tcl.has_amplitude());
  CHECK(std::norm(tcl.c[900]) == doctest::Approx(tcl.population[900]).epsilon(1e-14));
  CHECK(tcl.c_dot[900].real() ==
        doctest::Approx(-0.5 * tcl_gamma({BaselineMethod::TCL6, 1.0, 0.1}, 9.0) * tcl.c[900].real()));
  const auto odp = baseline_trajectory({BaselineMethod::ODP6, 1.0, 0.1}, 0.01, 20.0);
  CHECK(odp.population.back() == doctest::Approx(odp_population({BaselineMethod::ODP6, 1.0, 0.1}, 20.0)));
}

}  // TEST_SUITE

TEST_SUITE("baselines-weak-coupling") {

TEST_CASE("every baseline agrees with the exact solve at gamma 1, lambda 10") {
  const auto exact =
      solve_exact(make_kernel(KernelKind::Lorentzian, 1.0, 10.0), SolverConfig{1e-3, 2.0, false});
  for (BaselineMethod m : {BaselineMethod::ODP2, BaselineMethod::ODP6, BaselineMethod::GME2,
                           BaselineMethod::TCL2, BaselineMethod::TCL6}) {
    const auto traj = baseline_trajectory({m, 1.0, 10.0}, 1e-3, 2.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      worst = std::max(worst, std::abs(traj.population[i] - exact.population[i]));
    }
    CAPTURE(to_string(m));
    CAPTURE(worst);
    CHECK(worst < 0.02);
  }
}

}  // TEST_SUITE
