#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "holokrein/expr.hpp"
#include "holokrein/krein_rep.hpp"
#include "holokrein/multimode.hpp"
#include "support/oracles.hpp"

using namespace holokrein;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

MultiIndexState random_state(std::mt19937& rng, int modes, int degree, int terms) {
  std::uniform_int_distribution<int> idx(0, degree);
  std::normal_distribution<double> g;
  MultiIndexState f;
  f.modes = modes;
  f.degree_cap = degree;
  while (static_cast<int>(f.coefficients.size()) < terms) {
    MultiIndex n(static_cast<std::size_t>(modes));
    int total = 0;
    for (auto& k : n) {
      k = std::min(idx(rng), degree - total);
      total += k;
    }
    f.add(n, {g(rng), g(rng)});
  }
  return f;
}

AlgebraElement random_element(std::mt19937& rng, const GeneratorSet& alg, int terms, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), bit(0, 1), mode(1, alg.modes());
  AlgebraElement x(alg);
  for (int t = 0; t < terms; ++t) {
    Word w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(Generator{bit(rng) == 1, mode(rng)});
    x.add_term(w, oracle::random_gaussian_rational(rng, 3));
  }
  return x;
}

}  // namespace

TEST_CASE("diagonalizing the eta matrix", "[multimode]") {
  const auto id = diagonalize_eta(Eigen::MatrixXcd::Identity(3, 3));
  CHECK(max_abs(id.l - Eigen::MatrixXcd::Identity(3, 3)) < 1e-14);
  CHECK(id.eta == EtaSignature{1, 1, 1});

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  h(0, 0) = 4.0;
  h(1, 1) = -9.0;
  const auto d = diagonalize_eta(h);
  CHECK(d.eta == EtaSignature{1, -1});
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(2, 2);
  expected(0, 0) = 0.5;
  expected(1, 1) = 1.0 / 3.0;
  CHECK(max_abs(d.l - expected) < 1e-14);

  Eigen::MatrixXcd swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  CHECK(diagonalize_eta(swap).eta == EtaSignature{1, -1});

  Eigen::MatrixXcd nonherm(2, 2);
  nonherm << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(diagonalize_eta(nonherm), Error);
  Eigen::MatrixXcd singular(2, 2);
  singular << 1.0, 1.0, 1.0, 1.0;
  CHECK_THROWS_AS(diagonalize_eta(singular), Error);
}

TEST_CASE("diagonalization is a Sylvester normalization", "[multimode]") {
  std::mt19937 rng(4);
  std::normal_distribution<double> g;
  for (int k = 0; k < 50; ++k) {
    Eigen::MatrixXcd a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = {g(rng), g(rng)};
    const Eigen::MatrixXcd h = a + a.adjoint();
    const auto d = diagonalize_eta(h);
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) target(i, i) = d.eta[i];
    CHECK(max_abs(d.l * h * d.l.adjoint() - target) < 1e-10);
    // The signature is a unitary invariant.
    const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
    const auto du = diagonalize_eta(q * h * q.adjoint());
    CHECK(du.eta == d.eta);
  }
}

TEST_CASE("rho isomorphism", "[multimode]") {
  const EtaSignature eta{1, -1};
  const auto src = GeneratorSet::multimode(eta);
  const auto dst = GeneratorSet::multimode({1, 1});
  CHECK(rho_iso(eta, parse_element("a_1", src)) == parse_element("a_1", dst));
  CHECK(rho_iso(eta, parse_element("a_2", src)) == parse_element("a_2*", dst));
  // *-isomorphism: the image of [a_2, a_2*] = -1 is again -1.
  const AlgebraElement c = commutator(rho_iso(eta, parse_element("a_2", src)), rho_iso(eta, parse_element("a_2*", src)));
  CHECK(c == AlgebraElement::scalar(dst, -1));
}

TEST_CASE("rho preserves commutators on random elements", "[multimode]") {
  std::mt19937 rng(6);
  for (const EtaSignature& eta : {EtaSignature{-1}, EtaSignature{1, -1}, EtaSignature{-1, 1, -1}}) {
    const auto src = GeneratorSet::multimode(eta);
    for (int k = 0; k < 30; ++k) {
      const AlgebraElement x = random_element(rng, src, 2, 2);
      const AlgebraElement y = random_element(rng, src, 2, 2);
      REQUIRE(rho_iso(eta, commutator(x, y)) == commutator(rho_iso(eta, x), rho_iso(eta, y)));
      REQUIRE(rho_iso(eta, x * y) == normal_order(rho_iso(eta, x) * rho_iso(eta, y)));
    }
  }
}

TEST_CASE("rho does not commute with the gauge automorphism", "[multimode]") {
  const EtaSignature eta{-1};
  const auto src = GeneratorSet::multimode(eta);
  const NumericElement a = to_numeric(parse_element("a_1", src));
  const double s = 0.4;
  const NumericElement lhs = rho_iso(eta, gauge_transform(a, s));
  const NumericElement rhs = gauge_transform(rho_iso(eta, a), s);
  const Word astar{Generator{true, 1}};
  CHECK(std::abs(lhs.coefficient(astar) - std::polar(1.0, -s)) < 1e-15);
  CHECK(std::abs(rhs.coefficient(astar) - std::polar(1.0, s)) < 1e-15);
}

TEST_CASE("one-mode positive signature reproduces Fock", "[multimode]") {
  const MultimodeRep m = build_multimode_rep({1}, 6);
  const BasisRep f = build_fock_bargmann(6);
  CHECK(m.gram == f.gram);
  CHECK(max_abs(m.annihilators[0] - f.annihilator_matrix()) == 0.0);
  CHECK(max_abs(m.creators[0] - f.creator_matrix()) == 0.0);
}

TEST_CASE("multimode Gram and relations", "[multimode]") {
  const MultimodeRep rep = build_multimode_rep({1, -1}, 4);
  CHECK(rep.gram[rep.index.at({1, 1})] == -1.0);
  CHECK(rep.gram[rep.index.at({2, 1})] == -2.0);
  CHECK(rep.gram[rep.index.at({0, 2})] == 2.0);

  const MultimodeRep r3 = build_multimode_rep({1, -1, 1}, 6);
  CHECK(r3.size() == 84);
  const auto check = verify_multimode_rep(r3);
  CHECK(check.ccr_max_residual == 0.0);
  CHECK(check.star_property_max_residual == 0.0);
  CHECK(check.gauge_spectrum == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  // Gram sign is (-1)^(n_2) on every monomial.
  for (int j = 0; j < r3.size(); ++j) {
    const auto& n = r3.basis[j];
    CHECK((r3.gram[j] > 0) == (n[1] % 2 == 0));
    CHECK(std::abs(r3.gram[j]) == oracle::factorial(n[0]) * oracle::factorial(n[1]) * oracle::factorial(n[2]));
  }
}

TEST_CASE("spectral support", "[multimode]") {
  const MultimodeRep rep = build_multimode_rep({1, -1}, 4);
  const auto vac = MultiIndexState::vacuum(2, 4);
  CHECK(spectral_condition_check(rep, vac, vac, 8).support == std::vector<int>{0});
  const auto z1z2 = MultiIndexState::monomial({1, 1}, 4);
  CHECK(spectral_condition_check(rep, z1z2, z1z2, 8).support == std::vector<int>{2});
  CHECK_THROWS_AS(spectral_condition_check(rep, vac, vac, 4), Error);

  std::mt19937 rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_state(rng, 2, 4, 4), g = random_state(rng, 2, 4, 4);
    for (int j : spectral_condition_check(rep, f, g, 7).support) REQUIRE((j >= 0 && j <= 4));
  }
}

TEST_CASE("vacuum descent", "[multimode]") {
  const MultimodeRep rep = build_multimode_rep({1, -1}, 4);
  const auto vac = MultiIndexState::vacuum(2, 4);
  const VacuumDescent d0 = vacuum_descent(rep, vac);
  CHECK(d0.steps == 0);
  CHECK(d0.vacuum.coefficients == vac.coefficients);

  MultiIndexState f = MultiIndexState::monomial({2, 0}, 4);
  f.add({0, 1}, 1.0);
  const VacuumDescent d = vacuum_descent(rep, f);
  CHECK(d.lowest_component == 1);
  CHECK(d.steps == 1);
  CHECK(d.path == std::vector<int>{2});
  REQUIRE(d.vacuum.coefficients.size() == 1);
  CHECK(std::abs(d.vacuum.coefficients.at({0, 0}) - 1.0) < 1e-12);

  MultiIndexState zero;
  zero.modes = 2;
  zero.degree_cap = 4;
  CHECK_THROWS_AS(vacuum_descent(rep, zero), Error);
}

TEST_CASE("vacuum descent always lands on the constant ray", "[multimode]") {
  const MultimodeRep rep = build_multimode_rep({1, -1, 1}, 6);
  std::mt19937 rng(10);
  for (int k = 0; k < 100; ++k) {
    const VacuumDescent d = vacuum_descent(rep, random_state(rng, 3, 6, 5));
    REQUIRE(d.vacuum.coefficients.size() == 1);
    REQUIRE(d.vacuum.coefficients.begin()->first == MultiIndex{0, 0, 0});
    REQUIRE(d.steps == d.lowest_component);
    for (int i = 0; i < 3; ++i) {
      REQUIRE((rep.annihilators[i] * rep.to_vector(d.vacuum)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}
