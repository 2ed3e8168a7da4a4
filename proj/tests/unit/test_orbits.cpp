#include <catch_amalgamated.hpp>

#include <random>

#include "holokrein/orbits.hpp"
#include "support/oracles.hpp"

using namespace holokrein;

namespace {

double dist(const SlVector& x, const SlVector& y) {
  return std::max({std::abs(x.n3 - y.n3), std::abs(x.nminus - y.nminus), std::abs(x.nplus - y.nplus)});
}

cplx random_c(std::mt19937& rng, double r = 1.0) {
  std::uniform_real_distribution<double> u(-r, r);
  return {u(rng), u(rng)};
}

// P n.sigma P^{-1} computed by plain 2x2 products, read back into coordinates.
SlVector conjugate_oracle(const CMat2& p, const SlVector& n) {
  const CMat2 m{n.n3, n.nminus, n.nplus, -n.n3};
  const CMat2 r = p * m * p.inverse();
  return {r(0, 0), r(0, 1), r(1, 0)};
}

}  // namespace

TEST_CASE("conjugation matrices of the two standard realizations", "[orbits]") {
  CHECK(conjugation_from_V(ExactMat2::identity()) == pauli::sigma1<ExactComplex>());
  CHECK(conjugation_from_V(schroedinger_matrix_exact()) == pauli::sigma3<ExactComplex>());
  CHECK_THROWS_AS(conjugation_from_V(CMat2{2.0, 0.0, 0.0, 1.0}), Error);
}

TEST_CASE("conjugation matrices are involutive for random unimodular V", "[orbits]") {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    const cplx p = random_c(rng) + 1.5, q = random_c(rng), r = random_c(rng);
    const CMat2 v{p, q, r, (1.0 + q * r) / p};
    const CMat2 c = conjugation_from_V(v);
    CHECK(max_abs(c.conj() * c - CMat2::identity()) < 1e-10);
  }
}

TEST_CASE("Bogoliubov test", "[orbits]") {
  const CMat2 s1 = pauli::sigma1<cplx>();
  CHECK(is_bogoliubov(CMat2::identity(), s1));
  CHECK(is_bogoliubov(CMat2::identity(), pauli::sigma3<cplx>()));
  const cplx ph = std::polar(1.0, 0.7);
  CHECK(is_bogoliubov(CMat2{ph, 0.0, 0.0, 1.0 / ph}, s1));
  CHECK_FALSE(is_bogoliubov(CMat2{2.0, 0.0, 0.0, 0.5}, s1));
  CHECK_FALSE(is_bogoliubov(CMat2{2.0, 0.0, 0.0, 1.0}, s1));
}

TEST_CASE("Bogoliubov transformations are exactly those fixing C_K under V -> V T", "[orbits]") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const cplx p = random_c(rng) + 1.5, q = random_c(rng), r = random_c(rng);
    const CMat2 v{p, q, r, (1.0 + q * r) / p};
    const CMat2 c = conjugation_from_V(v);
    // A Bogoliubov T for C = sigma1 conjugated into the frame of V, and a generic T.
    const double t = u(rng), x = u(rng);
    const CMat2 real_rot{std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t)};
    const CMat2 phase{std::polar(1.0, x), 0.0, 0.0, std::polar(1.0, -x)};
    const CMat2 t_bog = v.inverse() * real_rot * phase * v;
    const CMat2 t_gen{p, r, q, (1.0 + q * r) / p};
    for (const CMat2& tt : {t_bog, t_gen}) {
      const bool bog = is_bogoliubov(tt, c, 1e-8);
      const bool fixed = max_abs(conjugation_from_V(v * tt, 1e-8) - c) < 1e-8;
      CHECK(bog == fixed);
    }
    CHECK(is_bogoliubov(t_bog, c, 1e-8));
  }
}

TEST_CASE("adjoint action formula", "[orbits]") {
  const SlVector n{0.0, 1.0, 1.0};
  CHECK(dist(adjoint_action(0.0, 0.0, n), n) == 0.0);
  const cplx a(0.3, -0.2), b(0.7, 0.1);
  CHECK(dist(adjoint_action(a, b, n), SlVector{b, std::exp(2.0 * a) * (1.0 - b * b), std::exp(-2.0 * a)}) < 1e-14);
  CHECK(dist(adjoint_action(a, b, SlVector{0.0, 0.0, 1.0}), SlVector{b, -std::exp(2.0 * a) * b * b, std::exp(-2.0 * a)}) <
        1e-14);
}

TEST_CASE("adjoint action equals matrix conjugation and composes as a group action", "[orbits][oracle]") {
  std::mt19937 rng(13);
  for (int k = 0; k < 1000; ++k) {
    const cplx a1 = random_c(rng), b1 = random_c(rng), a2 = random_c(rng), b2 = random_c(rng);
    const SlVector n{random_c(rng), random_c(rng), random_c(rng)};
    REQUIRE(dist(adjoint_action(a1, b1, n), conjugate_oracle(orbit_group_element(a1, b1), n)) < 1e-10);
    const auto [a12, b12] = orbit_group_parameters(orbit_group_element(a2, b2) * orbit_group_element(a1, b1));
    REQUIRE(dist(adjoint_action(a2, b2, adjoint_action(a1, b1, n)), adjoint_action(a12, b12, n)) < 1e-8);
  }
}

TEST_CASE("q is exactly invariant under the exact adjoint action", "[orbits]") {
  std::mt19937 rng(19);
  for (int k = 0; k < 200; ++k) {
    ExactComplex e2a = oracle::random_gaussian_rational(rng);
    if (e2a.is_zero()) e2a = ExactComplex(3);
    const ExactSlVector n{oracle::random_gaussian_rational(rng), oracle::random_gaussian_rational(rng),
                          oracle::random_gaussian_rational(rng)};
    const ExactSlVector m = adjoint_action_exact(e2a, oracle::random_gaussian_rational(rng), n);
    REQUIRE(m.q() == n.q());
    if (!(n.n3.is_zero() && n.nminus.is_zero() && n.nplus.is_zero())) {
      REQUIRE(classify_orbit(m) == classify_orbit(n));
    }
  }
}

TEST_CASE("classification examples", "[orbits]") {
  CHECK(classify_orbit(SlVector{0.0, 1.0, 0.0}).type == OrbitType::SigmaPlus);
  const auto three = classify_orbit(SlVector{1.0, 5.0, 0.0});
  CHECK(three.type == OrbitType::SigmaThree);
  REQUIRE(three.witness);
  CHECK(dist(adjoint_action(three.witness->a, three.witness->b,
                            SlVector{three.witness->lambda, 0.0, 0.0}),
             SlVector{1.0, 5.0, 0.0}) < 1e-12);
  const auto one = classify_orbit(SlVector{0.0, 1.0, 1.0});
  CHECK(one.type == OrbitType::SigmaOne);
  CHECK(one.q == cplx(1.0));
  const auto minus = classify_orbit(SlVector{1.0, -1.0, 1.0});
  CHECK(minus.type == OrbitType::SigmaMinus);
  REQUIRE(minus.witness);
  CHECK(dist(adjoint_action(minus.witness->a, minus.witness->b, SlVector{0.0, 0.0, 1.0}), SlVector{1.0, -1.0, 1.0}) <
        1e-12);
  CHECK_THROWS_AS(classify_orbit(SlVector{0.0, 0.0, 0.0}), Error);
}

TEST_CASE("canonical elements classify to themselves exactly", "[orbits]") {
  for (OrbitType t : {OrbitType::SigmaPlus, OrbitType::SigmaThree, OrbitType::SigmaOne, OrbitType::SigmaMinus}) {
    CHECK(classify_orbit(canonical_element(t)).type == t);
    const SlVector c = canonical_element(t);
    const ExactSlVector e{ExactComplex(static_cast<long long>(c.n3.real())),
                          ExactComplex(static_cast<long long>(c.nminus.real())),
                          ExactComplex(static_cast<long long>(c.nplus.real()))};
    CHECK(classify_orbit(e) == t);
  }
}

TEST_CASE("classification is stable along orbits and witnesses reproduce the input", "[orbits]") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int k = 0; k < 1000; ++k) {
    const auto t = static_cast<OrbitType>(pick(rng));
    const cplx lambda = random_c(rng) + cplx(1.2, 0.0);
    SlVector base = canonical_element(t);
    base = {lambda * base.n3, lambda * base.nminus, lambda * base.nplus};
    const SlVector n = adjoint_action(random_c(rng, 0.8), random_c(rng, 0.8), base);
    const auto cls = classify_orbit(n);
    REQUIRE(cls.type == t);
    REQUIRE(cls.witness);
    const SlVector canon = canonical_element(t);
    const SlVector rebuilt =
        adjoint_action(cls.witness->a, cls.witness->b,
                       SlVector{cls.witness->lambda * canon.n3, cls.witness->lambda * canon.nminus,
                                cls.witness->lambda * canon.nplus});
    REQUIRE(dist(rebuilt, n) < 1e-8 * std::max(1.0, norm(n)));
  }
}
