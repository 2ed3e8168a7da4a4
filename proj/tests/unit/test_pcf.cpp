#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "holokrein/error.hpp"
#include "holokrein/pcf.hpp"
#include "holokrein/special.hpp"
#include "support/oracles.hpp"

using namespace holokrein;

namespace {

double hermite_D(int n, double x) {
  return std::pow(2.0, -0.5 * n) * std::exp(-x * x / 4.0) * oracle::hermite(n, x / std::numbers::sqrt2);
}

// D_nu(x) = e^{-x^2/4} / Gamma(-nu) * 2 int_0^inf u^{-2nu-1} e^{-u^4/2 - x u^2} du  (nu < 0),
// by composite Simpson; the integrand is smooth for nu = -1/2, -3/2.
double integral_D(double nu, double x) {
  const int n = 40000;
  const double upper = 8.0, h = upper / n;
  auto g = [&](double u) { return std::pow(u, -2.0 * nu - 1.0) * std::exp(-0.5 * u * u * u * u - x * u * u); };
  double s = g(0.0) + g(upper);
  for (int k = 1; k < n; ++k) s += (k % 2 == 1 ? 4.0 : 2.0) * g(k * h);
  return std::exp(-x * x / 4.0) * 2.0 * s * h / 3.0 / std::tgamma(-nu);
}

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (double x = lo; x <= hi + 1e-12; x += step) g.push_back(x);
  return g;
}

}  // namespace

TEST_CASE("Lanczos gamma against the standard library", "[pcf][special]") {
  for (double x = 0.05; x < 30.0; x += 0.37) {
    CHECK(std::abs(gamma_fn(x) - std::tgamma(x)) <= 1e-12 * std::tgamma(x));
  }
  CHECK(std::abs(gamma_fn(-0.5) + 2.0 * std::sqrt(std::numbers::pi)) < 1e-12);
  CHECK_THROWS_AS(gamma_fn(-2.0), Error);
  CHECK(rgamma(-3.0) == 0.0);
  CHECK(rgamma(0.0) == 0.0);
}

TEST_CASE("D_0 and D_1 closed forms", "[pcf]") {
  for (double x : {0.0, 1.0, 2.0}) {
    CHECK(std::abs(weber_D(0.0, x).value - std::exp(-x * x / 4.0)) < 1e-10);
    CHECK(std::abs(weber_D(1.0, x).value - x * std::exp(-x * x / 4.0)) < 1e-10);
  }
}

TEST_CASE("integer orders agree with Hermite closed forms", "[pcf][oracle]") {
  for (int n = 0; n <= 8; ++n) {
    for (double x : grid(-4.0, 4.0, 0.5)) {
      const PcfValue v = weber_D(n, x);
      REQUIRE(std::abs(v.value - hermite_D(n, x)) < 1e-9);
      REQUIRE(v.error_estimate < 1e-9);
    }
  }
}

TEST_CASE("half-integer orders agree with the integral representation", "[pcf][oracle]") {
  for (double nu : {-0.5, -1.5}) {
    for (double x : grid(-2.0, 3.0, 0.5)) {
      REQUIRE(std::abs(weber_D(nu, x).value - integral_D(nu, x)) < 1e-9);
    }
  }
}

TEST_CASE("derivatives against central differences of the value", "[pcf]") {
  const double h = 1e-5;
  for (double lambda : {-0.7, 0.3, 2.5}) {
    for (double x : {-1.5, 0.2, 2.0}) {
      const PcfValue v = weber_D(lambda, x);
      const cplx fd = (weber_D(lambda, x + h).value - weber_D(lambda, x - h).value) / (2.0 * h);
      const cplx fd2 = (weber_D(lambda, x + h).derivative - weber_D(lambda, x - h).derivative) / (2.0 * h);
      CHECK(std::abs(v.derivative - fd) < 1e-8);
      CHECK(std::abs(v.second_derivative - fd2) < 1e-8);
    }
  }
}

TEST_CASE("Weber equation residual", "[pcf]") {
  for (double lambda : {-0.5, 0.3, 2.7}) {
    for (double x : grid(-3.0, 3.0, 0.25)) REQUIRE(weber_ode_residual(lambda, x) < 1e-7);
  }
}

TEST_CASE("ladder relations", "[pcf]") {
  const auto g = grid(-2.0, 2.0, 0.25);
  const LadderResiduals r = ladder_check(-0.5, g);
  CHECK(r.up < 1e-7);
  CHECK(r.down < 1e-7);
  // lambda = 0: the lowering operator annihilates F_0.
  const LadderResiduals r0 = ladder_check(0.0, g);
  CHECK(r0.down < 1e-12);
  const LadderResiduals r3 = ladder_check(3.0, g);
  CHECK(r3.up < 1e-8);
  CHECK(r3.down < 1e-8);
  for (double z : g) {
    CHECK(std::abs(ladder_function(3.0, z).value - hermite_D(3, std::numbers::sqrt2 * z)) < 1e-9);
  }
}

TEST_CASE("three-term recurrence on random points", "[pcf]") {
  std::mt19937 rng(14);
  std::uniform_real_distribution<double> lam(-5.0, 5.0), xs(-4.0, 4.0);
  for (int k = 0; k < 200; ++k) {
    const double l = lam(rng), x = xs(rng);
    const cplx r = weber_D(l + 1.0, x).value - x * weber_D(l, x).value + l * weber_D(l - 1.0, x).value;
    REQUIRE(std::abs(r) < 1e-7);
  }
}

TEST_CASE("second solution D_{-lambda-1}(ix) solves the same equation", "[pcf]") {
  for (double lambda : {-0.5, 0.3, 1.7}) {
    for (double x : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
      const PcfValue w = weber_D(-lambda - 1.0, cplx(0.0, x));
      // y(x) = D(ix) gives y'' = -D''(ix).
      const cplx r = -w.second_derivative + (lambda + 0.5 - x * x / 4.0) * w.value;
      CHECK(std::abs(r) < 1e-6);
    }
  }
}

TEST_CASE("validity window", "[pcf]") {
  CHECK_THROWS_AS(weber_D(21.0, 1.0), Error);
  CHECK_THROWS_AS(weber_D(0.5, 12.5), Error);
  CHECK_NOTHROW(weber_D(-20.0, 0.0));
}
